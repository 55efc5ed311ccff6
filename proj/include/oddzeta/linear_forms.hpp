#pragma once

// Exact zeta-basis coordinates of r_n = sum_{nu>=1} R_n(nu) and of the
// half-shifted r^_n = sum_{nu>=1} R_n(nu - 1/2), and of 7 r_n - r^_n.

#include "oddzeta/ratfun.hpp"

#include <map>
#include <string>
#include <vector>

namespace oddzeta {

/// r_n   = sum_{odd i>=3} a_i zeta(i) + a0,
/// r^_n  = sum_{odd i>=3} a_i (2^i - 1) zeta(i) + a0hat.
struct ZetaLinearForm {
  FormSpec spec;
  std::map<int, ExactRational> a;  // keys: odd i in 3..s
  ExactRational a0;
  ExactRational a0hat;
};

/// 7 r_n - r^_n = sum_{odd i>=5} c_i zeta(i) + c0. No zeta(3) slot.
struct CombinedForm {
  FormSpec spec;
  std::map<int, ExactRational> c;  // keys: odd i in 5..s
  ExactRational c0;
};

/// Thrown when a table handed to zeta_coefficients has a nonzero column sum
/// where the well-poised structure forces zero.
class TableInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// sum_{l=1}^{k} l^{-i}
ExactRational harmonic(int k, int i);

/// sum_{l=0}^{j} (-1)^i (l + 1/2)^{-i}
ExactRational half_harmonic_signed(int j, int i);

/// sum_{l=1}^{j} (l - 1/2)^{-i}
ExactRational half_harmonic(int j, int i);

/// Rational parts from the two shifted-summation formulas; the zeta slots
/// are the column sums of the table. Requires table.spec().
ZetaLinearForm zeta_coefficients(const PartialFractionTable& table);

/// Coefficient of zeta(i) in 7 r_n - r^_n for odd i >= 3, before the zeta(3)
/// slot is dropped: 7 a_i - (2^i - 1) a_i.
ExactRational combined_coefficient(const ZetaLinearForm& form, int i);

CombinedForm combine(const ZetaLinearForm& form);

struct InclusionVerdict {
  std::string what;  // "a_i", "a0", "a0hat", "H", "Hhalf+", "Hhalf-"
  int i = 0;         // zeta index or power
  int k = -1;        // k for inner-sum checks
  bool pass = true;
};

struct Lemma3Report {
  ExactInteger dn;
  std::vector<InclusionVerdict> coefficients;  // d_n^{s-i} a_i, d_n^s a0, d_n^s a0hat
  std::vector<InclusionVerdict> inner_sums;    // the three helper inclusions
  bool passed = true;
};

Lemma3Report check_lemma3(const ZetaLinearForm& form);

/// d_n^s c0 and d_n^{s-i} c_i are integers.
struct CombinedIntegrality {
  bool c0_integral = true;
  std::vector<InclusionVerdict> slots;
  bool passed = true;
};

CombinedIntegrality check_combined_integrality(const CombinedForm& form);

/// lcm of the denominators of a_i, a0, a0hat (the actual common denominator).
ExactInteger common_denominator(const ZetaLinearForm& form);

}  // namespace oddzeta
