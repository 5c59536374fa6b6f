#include "husimi/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace husimi::report {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_text_line(const oracle::VerificationReport& r) {
  std::string line = r.pass ? "PASS " : "FAIL ";
  line += r.name;
  line += " max_abs=" + format_number(r.max_abs_error);
  line += " max_rel=" + format_number(r.max_rel_error);
  line += " points=" + std::to_string(r.points_tested);
  if (!r.notes.empty()) line += " " + r.notes;
  return line;
}

oracle::VerificationReport series_report(const std::string& name, const limits::ConvergenceSeries& s,
                                         double last_threshold) {
  oracle::VerificationReport r;
  r.name = name;
  r.points_tested = static_cast<long>(s.sup_differences.size());
  std::string notes = "series=";
  for (std::size_t i = 0; i < s.sup_differences.size(); ++i) {
    if (i) notes += ";";
    notes += format_number(s.parameters[i]) + ":" + format_number(s.sup_differences[i]);
    r.max_abs_error = std::max(r.max_abs_error, s.sup_differences[i]);
  }
  notes += s.monotone ? " monotone=yes" : " monotone=no";
  r.pass = s.monotone;
  if (std::isfinite(last_threshold) && !s.sup_differences.empty()) {
    notes += " last<" + format_number(last_threshold);
    r.pass = r.pass && s.sup_differences.back() < last_threshold;
  }
  r.max_rel_error = s.sup_differences.empty() ? 0.0 : s.sup_differences.back();
  r.notes = notes;
  return r;
}

void sort_by_name(std::vector<oracle::VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
}

void write_text(std::ostream& os, const std::vector<oracle::VerificationReport>& reports) {
  std::size_t failed = 0;
  for (const auto& r : reports) {
    os << to_text_line(r) << '\n';
    failed += r.pass ? 0 : 1;
  }
  os << "summary checks=" << reports.size() << " failed=" << failed << '\n';
}

namespace {

// Minimal JSON string escaping; names and notes are plain ASCII.
std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
      continue;
    }
    out += c;
  }
  return out + "\"";
}

// JSON has no literal for non-finite numbers.
std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

const char* model_name(ModelKind m) { return m == ModelKind::Hermite ? "hermite" : "semiconfined"; }

}  // namespace

void write_document(std::ostream& os, const std::vector<oracle::VerificationReport>& reports) {
  bool all = true;
  os << "{\n  \"reports\": [";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    all = all && r.pass;
    os << (i ? ",\n" : "\n") << "    {\"name\": " << quote(r.name) << ", \"pass\": " << (r.pass ? "true" : "false")
       << ", \"max_abs_error\": " << json_number(r.max_abs_error)
       << ", \"max_rel_error\": " << json_number(r.max_rel_error) << ", \"points_tested\": " << r.points_tested
       << ", \"notes\": " << quote(r.notes) << "}";
  }
  os << "\n  ],\n  \"pass\": " << (all ? "true" : "false") << "\n}\n";
}

void write_grid_csv(std::ostream& os, const DistributionGrid& grid) {
  os << "x,p,value\n";
  for (int i = 0; i < grid.spec.x_steps; ++i) {
    const std::string x = format_number(grid.spec.x_at(i));
    for (int j = 0; j < grid.spec.p_steps; ++j)
      os << x << ',' << format_number(grid.spec.p_at(j)) << ',' << format_number(grid.at(i, j)) << '\n';
  }
}

void write_grid_document(std::ostream& os, const DistributionGrid& grid) {
  const auto& s = grid.spec;
  const auto& p = grid.params;
  os << "{\n  \"metadata\": {\n"
     << "    \"model\": \"" << model_name(grid.model) << "\",\n"
     << "    \"n\": " << grid.n << ",\n"
     << "    \"params\": {\"m0\": " << json_number(p.m0) << ", \"omega\": " << json_number(p.omega)
     << ", \"hbar\": " << json_number(p.hbar) << ", \"a\": " << json_number(p.a) << ", \"g\": " << json_number(p.g)
     << "},\n"
     << "    \"grid\": {\"x_min\": " << json_number(s.x_min) << ", \"x_max\": " << json_number(s.x_max)
     << ", \"p_min\": " << json_number(s.p_min) << ", \"p_max\": " << json_number(s.p_max)
     << ", \"x_steps\": " << s.x_steps << ", \"p_steps\": " << s.p_steps << "},\n"
     << "    \"layout\": \"row-major, x outer, p inner\",\n"
     << "    \"tolerance\": " << json_number(grid.tolerance) << ",\n"
     << "    \"version\": " << quote(grid.version) << "\n  },\n  \"values\": [";
  for (std::size_t k = 0; k < grid.values.size(); ++k) os << (k ? "," : "") << json_number(grid.values[k]);
  os << "]\n}\n";
}

}  // namespace husimi::report
