#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "qsym/cli/commands.hpp"
#include "qsym/error.hpp"

using namespace qsym;
using namespace qsym::cli;

namespace {

double default_tol() {
  if (const char* env = std::getenv("QSYM_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring QSYM_TOL='" << env << "'\n";
  }
  return 1e-9;
}

Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InvalidInput("not a rational number: '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsym: tube algebras, Temperley-Lieb moments and index computations"};
  app.require_subcommand(1);
  Config cfg;
  cfg.tol = default_tol();
  std::string format = "json";
  std::string delta;
  int sgn = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--tol", cfg.tol, "Tolerance for float residuals (default $QSYM_TOL or 1e-9)");
  };
  auto category = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "Built-in group: z<n>, s3, a4");
    sub->add_option("--group-file", cfg.group_file, "Group JSON {order, mul}; gives Vec(G)");
    sub->add_flag("--pointed", cfg.pointed, "Use Vec(G) instead of Rep(G)");
    sub->add_flag("--exact", cfg.exact, "Exact cyclotomic arithmetic");
  };

  auto* moments = app.add_subcommand("moments", "Temperley-Lieb moment table");
  common(moments);
  moments->add_option("--kmax", cfg.kmax, "Largest k");
  moments->add_option("--delta", delta, "Loop parameter d (rational); symbolic if omitted");
  moments->add_flag("--force", cfg.force, "Allow k > 12");

  auto* riordan = app.add_subcommand("riordan", "Riordan counts against diagram enumeration");
  common(riordan);
  riordan->add_option("--kmax", cfg.kmax, "Largest k")->default_val(10);
  riordan->add_flag("--force", cfg.force, "Allow k > 12");

  auto* index = app.add_subcommand("index", "Index of a tensor subcategory");
  common(index);
  category(index);
  index->add_option("--ring", cfg.ring_file, "Fusion ring JSON");
  index->add_option("--sub", cfg.sub, "Comma separated labels of the subcategory, or 'all'");

  auto* spectrum = app.add_subcommand("tube-spectrum", "Spectrum of the central unitary U_i");
  common(spectrum);
  category(spectrum);
  spectrum->add_option("--label", cfg.label, "Irreducible i")->required();

  auto* lemma = app.add_subcommand("lemma39", "Averaging identity residuals on L2(A)");
  common(lemma);
  category(lemma);
  lemma->add_option("--sub", cfg.sub, "Subcategory; every full subcategory if omitted");

  auto* markov = app.add_subcommand("markov", "Pimsner-Popa basis sums");
  common(markov);
  category(markov);
  markov->add_option("--sub", cfg.sub, "Subcategory; every full subcategory if omitted");

  auto* dbl = app.add_subcommand("double", "Quantum double checks");
  common(dbl);
  dbl->add_option("--group", cfg.group, "Built-in group: z<n>, s3, a4")->required();
  dbl->add_option("--samples", cfg.samples, "Random pairs for the trace check");
  dbl->add_option("--seed", cfg.seed, "Random seed");

  auto* tl = app.add_subcommand("tlj", "Resolution checks in the Temperley-Lieb-Jones tube algebra");
  common(tl);
  tl->add_option("--sgn", sgn, "Sign +1 or -1; both if omitted");
  tl->add_option("--delta", delta, "Numeric d >= 2 for the report");

  auto* suite = app.add_subcommand("suite", "Every check at default parameters");
  common(suite);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!delta.empty()) cfg.delta = parse_rational(delta);
    if (sgn != 0) cfg.sgn = sgn;
    std::vector<Report> reports;
    if (moments->parsed()) reports.push_back(run_moments(cfg));
    else if (riordan->parsed()) reports.push_back(run_riordan(cfg));
    else if (index->parsed()) reports.push_back(run_index(cfg));
    else if (spectrum->parsed()) reports.push_back(run_tube_spectrum(cfg));
    else if (lemma->parsed()) reports.push_back(run_lemma39(cfg));
    else if (markov->parsed()) reports.push_back(run_markov(cfg));
    else if (dbl->parsed()) reports.push_back(run_double(cfg));
    else if (tl->parsed()) reports.push_back(run_tlj(cfg));
    else if (suite->parsed()) reports = run_suite(cfg);
    std::cout << render(reports, parse_format(format));
    for (const auto& r : reports)
      if (!r.ok()) return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
