#include "oddzeta/report.hpp"

#include <sstream>

namespace oddzeta {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "indeterminate";
  }
}

Verdict verdict_from(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

Value Value::exact(const ExactRational& x) { return {Kind::exact, x.get_str(), ""}; }
Value Value::exact(const ExactInteger& x) { return {Kind::exact, x.get_str(), ""}; }
Value Value::exact(long x) { return {Kind::exact, std::to_string(x), ""}; }
Value Value::enclosure(const Enclosure& e, int digits) {
  return {Kind::enclosure, e.mid_decimal(digits), e.rad_decimal()};
}
Value Value::text(std::string s) { return {Kind::text, std::move(s), ""}; }

Summary Report::summary() const {
  Summary s;
  for (const auto& c : checks) {
    switch (c.verdict) {
      case Verdict::pass:
        ++s.pass;
        break;
      case Verdict::fail:
        ++s.fail;
        break;
      default:
        ++s.indeterminate;
        break;
    }
  }
  return s;
}

namespace {

nlohmann::ordered_json value_json(const Value& v) {
  nlohmann::ordered_json j;
  switch (v.kind) {
    case Value::Kind::exact:
      j["decimal"] = v.decimal;
      j["radius"] = "0";
      j["exact"] = true;
      break;
    case Value::Kind::enclosure:
      j["decimal"] = v.decimal;
      j["radius"] = v.radius;
      break;
    default:
      j = v.decimal;
      break;
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  j["config"] = r.config;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json payload;
    payload["value"] = value_json(c.value);
    for (const auto& [name, v] : c.extras) payload[name] = value_json(v);
    if (!c.note.empty()) payload["note"] = c.note;
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["subject"] = c.subject;
    cj["verdict"] = to_string(c.verdict);
    cj["payload"] = std::move(payload);
    j["checks"].push_back(std::move(cj));
  }
  const Summary s = r.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"indeterminate", s.indeterminate}};
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_csv(const Report& r) {
  std::ostringstream out;
  out << "id,subject,verdict,payload,radius\n";
  for (const auto& c : r.checks) {
    const std::string radius = c.value.kind == Value::Kind::exact ? "0" : c.value.radius;
    out << csv_field(c.id) << ',' << csv_field(c.subject) << ',' << to_string(c.verdict) << ','
        << csv_field(c.value.decimal) << ',' << csv_field(radius) << '\n';
  }
  return out.str();
}

std::string render_human(const Report& r) {
  std::ostringstream out;
  out << "oddzeta " << r.version << "\n";
  for (const auto& c : r.checks) {
    out << '[' << to_string(c.verdict) << "] " << c.id << " (" << c.subject << "): ";
    std::string shown = c.value.decimal;
    if (shown.size() > 72) shown = shown.substr(0, 69) + "...";
    out << shown;
    if (c.value.kind == Value::Kind::enclosure) out << " +/- " << c.value.radius;
    if (!c.note.empty()) out << "  -- " << c.note;
    out << '\n';
  }
  const Summary s = r.summary();
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.indeterminate
      << " indeterminate\n";
  return out.str();
}

int exit_code(const Summary& s) {
  if (s.fail > 0) return 1;
  if (s.indeterminate > 0) return 3;
  return 0;
}

}  // namespace oddzeta
