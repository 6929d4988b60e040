#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qsym::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv, Table };
Format parse_format(const std::string& s);

/// Where an expected value comes from: "reference" (a published number), "derived" (a closed
/// form computed independently of the checked routine) or "identity" (an algebraic identity,
/// expected residual 0).
struct Record {
  std::string check;
  std::string value;
  std::string expected;
  std::string expected_origin;
  std::optional<double> residual;
  bool pass = false;
};

struct Report {
  std::string command;
  std::string category;
  double tol = 1e-9;
  bool exact = false;
  std::vector<Record> records;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  bool ok() const;
  /// Exact comparison of two printed values.
  void expect_equal(const std::string& check, const std::string& value, const std::string& expected,
                    const std::string& origin);
  /// residual <= tol
  void expect_small(const std::string& check, double residual, const std::string& origin,
                    const std::string& value = "", const std::string& expected = "");
  void expect_true(const std::string& check, bool ok, const std::string& origin);
};

std::string render(const std::vector<Report>& reports, Format format);

/// Shortest %g form that round-trips.
std::string fmt_double(double x);

}  // namespace qsym::cli
