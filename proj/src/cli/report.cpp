#include "qsym/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "qsym/error.hpp"

namespace qsym::cli {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw InvalidInput("unknown format '" + s + "' (json, csv, table)");
}

std::string fmt_double(double x) {
  char buf[64];
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

bool Report::ok() const {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.pass; });
}

void Report::expect_equal(const std::string& check, const std::string& value, const std::string& expected,
                          const std::string& origin) {
  records.push_back({check, value, expected, origin, std::nullopt, value == expected});
}

void Report::expect_small(const std::string& check, double residual, const std::string& origin,
                          const std::string& value, const std::string& expected) {
  records.push_back({check, value, expected, origin, residual, residual <= tol});
}

void Report::expect_true(const std::string& check, bool ok, const std::string& origin) {
  records.push_back({check, ok ? "true" : "false", "true", origin, std::nullopt, ok});
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json root;
  root["schema_version"] = kSchemaVersion;
  bool all = true;
  auto& arr = root["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    if (!r.category.empty()) j["category"] = r.category;
    j["mode"] = r.exact ? "exact" : "float";
    j["tolerance"] = r.tol;
    j["data"] = r.data;
    auto& checks = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.records) {
      nlohmann::ordered_json x;
      x["check"] = c.check;
      if (!c.value.empty()) x["value"] = c.value;
      if (!c.expected.empty()) x["expected"] = c.expected;
      x["expected_origin"] = c.expected_origin;
      if (c.residual) {
        x["residual"] = *c.residual;
        x["tolerance"] = r.tol;
      }
      x["pass"] = c.pass;
      checks.push_back(std::move(x));
    }
    j["pass"] = r.ok();
    all = all && r.ok();
    arr.push_back(std::move(j));
  }
  root["pass"] = all;
  return root.dump(2) + "\n";
}

std::string render_csv(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "command,category,check,value,expected,expected_origin,residual,tolerance,pass\n";
  for (const auto& r : reports)
    for (const auto& c : r.records)
      os << csv_field(r.command) << ',' << csv_field(r.category) << ',' << csv_field(c.check) << ','
         << csv_field(c.value) << ',' << csv_field(c.expected) << ',' << c.expected_origin << ','
         << (c.residual ? fmt_double(*c.residual) : "") << ',' << (c.residual ? fmt_double(r.tol) : "") << ','
         << (c.pass ? "pass" : "FAIL") << '\n';
  return os.str();
}

std::string render_table(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "== " << r.command;
    if (!r.category.empty()) os << " [" << r.category << "]";
    os << "  mode=" << (r.exact ? "exact" : "float") << " tol=" << fmt_double(r.tol) << '\n';
    std::size_t w = 5;
    for (const auto& c : r.records) w = std::max(w, c.check.size());
    for (const auto& c : r.records) {
      os << "  " << (c.pass ? "pass " : "FAIL ") << c.check << std::string(w - c.check.size() + 2, ' ');
      if (c.residual) os << "residual=" << fmt_double(*c.residual) << " (tol " << fmt_double(r.tol) << ")";
      else os << c.value;
      if (!c.expected.empty()) os << "  expected " << c.expected;
      os << "  [" << c.expected_origin << "]\n";
    }
  }
  bool all = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
  os << (all ? "ALL PASS" : "FAILURES PRESENT") << '\n';
  return os.str();
}

}  // namespace

std::string render(const std::vector<Report>& reports, Format format) {
  switch (format) {
    case Format::Json: return render_json(reports);
    case Format::Csv: return render_csv(reports);
    case Format::Table: return render_table(reports);
  }
  return {};
}

}  // namespace qsym::cli
