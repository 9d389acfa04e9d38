#include "sl2q/report.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sl2q {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string report_json(const Report& r, bool with_timing) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json o;
    o["suite"] = c.suite;
    o["check"] = c.check;
    o["residual"] = c.residual;
    o["tolerance"] = c.tolerance;
    o["pass"] = c.pass;
    o["seconds"] = with_timing ? c.seconds : 0.0;
    if (!c.note.empty()) o["note"] = c.note;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}
}  // namespace

std::string report_csv(const Report& r, bool with_timing) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "suite,check,residual,tolerance,pass,seconds,note\n";
  for (const auto& c : r.checks)
    os << csv_field(c.suite) << ',' << csv_field(c.check) << ',' << c.residual << ',' << c.tolerance << ','
       << (c.pass ? "true" : "false") << ',' << (with_timing ? c.seconds : 0.0) << ',' << csv_field(c.note) << '\n';
  return os.str();
}

Report parse_report_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::runtime_error("report: top level must be an array");
  Report r;
  for (const auto& o : j) {
    Check c;
    c.suite = o.at("suite").get<std::string>();
    c.check = o.at("check").get<std::string>();
    // non-finite residuals serialize as null
    c.residual = o.at("residual").is_null() ? std::numeric_limits<double>::infinity() : o.at("residual").get<double>();
    c.tolerance = o.at("tolerance").get<double>();
    c.pass = o.at("pass").get<bool>();
    c.seconds = o.at("seconds").get<double>();
    if (o.contains("note")) c.note = o.at("note").get<std::string>();
    r.add(c);
  }
  return r;
}

void emit_report(const Report& r, const std::string& path, bool with_timing) {
  bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_report: cannot open " + path);
  out << (csv ? report_csv(r, with_timing) : report_json(r, with_timing));
  if (!out) throw std::runtime_error("emit_report: write failed for " + path);
}

}  // namespace sl2q
