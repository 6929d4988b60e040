#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsym/cli/report.hpp"
#include "qsym/scalar/poly.hpp"

namespace qsym::cli {

struct Config {
  /// built-in group: z<n>, s3, a4
  std::string group;
  /// group JSON {"order", "mul"}; implies a pointed category
  std::string group_file;
  /// fusion ring JSON (index only)
  std::string ring_file;
  /// Vec(G) instead of Rep(G)
  bool pointed = false;
  /// comma separated labels, or "all"; empty means every full subcategory where that makes sense
  std::string sub;
  std::string label;
  int kmax = 8;
  std::optional<Rational> delta;
  /// empty: both signs
  std::optional<int> sgn;
  double tol = 1e-9;
  bool exact = false;
  bool force = false;
  int samples = 100;
  unsigned seed = 1;
};

/// Throws InvalidInput for a non-positive tolerance or an unguarded k range.
void validate(const Config& c, bool enumerates);

Report run_moments(const Config& c);
Report run_riordan(const Config& c);
Report run_index(const Config& c);
Report run_tube_spectrum(const Config& c);
Report run_lemma39(const Config& c);
Report run_markov(const Config& c);
Report run_double(const Config& c);
Report run_tlj(const Config& c);
/// Every check at its default parameters; tasks run concurrently, results keep a fixed order.
std::vector<Report> run_suite(const Config& c);

/// Reads the whole file; InvalidInput when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace qsym::cli
