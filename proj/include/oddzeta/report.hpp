#pragma once

// Verification records and their JSON / CSV / plain-text renderings.
//
// Numbers are always decimal strings: exact values as "p/q" with radius "0"
// and "exact": true, enclosures as a midpoint plus an upward-rounded radius.

#include "oddzeta/enclosure.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace oddzeta {

enum class Verdict { pass, fail, indeterminate };

std::string to_string(Verdict v);
Verdict verdict_from(bool ok);

/// A payload number: exact, an enclosure, or free text.
struct Value {
  enum class Kind { exact, enclosure, text };
  Kind kind = Kind::text;
  std::string decimal;  // exact "p/q", enclosure midpoint, or text
  std::string radius;   // enclosures only

  static Value exact(const ExactRational& x);
  static Value exact(const ExactInteger& x);
  static Value exact(long x);
  static Value enclosure(const Enclosure& e, int digits);
  static Value text(std::string s);
};

struct Check {
  std::string id;
  std::string subject;
  Verdict verdict = Verdict::pass;
  Value value;
  std::vector<std::pair<std::string, Value>> extras;
  std::string note;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int indeterminate = 0;
};

struct Report {
  std::string version;
  nlohmann::ordered_json config;
  std::vector<Check> checks;

  Summary summary() const;
  void add(Check c) { checks.push_back(std::move(c)); }
};

nlohmann::ordered_json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_csv(const Report& r);
std::string render_human(const Report& r);

/// 0 when every check passed, 1 if any failed, 3 if none failed but some are
/// indeterminate.
int exit_code(const Summary& s);

}  // namespace oddzeta
