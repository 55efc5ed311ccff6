#pragma once

// Growth data of the series as n -> infinity: the saddle index x0 (unique
// positive root of x (x+2)^q - (x+3)(x+1)^q, q = (s+1)/2), the critical
// point x1 of f(x) = (x+3)/x ((x+1)/(x+2))^q, the constant
// g(x) = 2^6 (x+3)^6 (x+1)^{s+1} / (x+2)^{2(s+1)}, and the decay exponents.

#include "oddzeta/enclosure.hpp"

#include <vector>

namespace oddzeta {

/// Dense integer polynomial, coefficient j multiplies x^j.
struct IntPolynomial {
  std::vector<ExactInteger> coeffs;

  int degree() const;
  ExactRational operator()(const ExactRational& x) const;
  int sign_at(const ExactRational& x) const;
};

/// x (x+2)^q - (x+3)(x+1)^q; rejects even s and s < 7.
IntPolynomial root_polynomial(int s);

struct RootBracket {
  ExactRational lo;  // p(lo) < 0
  ExactRational hi;  // p(hi) > 0
  int steps = 0;
  Enclosure enclosure;
};

/// Bisection on [0, 1] with exact signs until hi - lo <= 2^{-bits}.
RootBracket find_x0(int s, long bits);

/// (-3 + sqrt(9 + 24/(q-3)))/2; rejects q <= 3.
Enclosure critical_x1(int s, mpfr_prec_t prec);

/// Exact sign of f'(x)/f(x) at x > 0: sign of (q-3)x^2 + 3(q-3)x - 6.
int log_derivative_sign(int s, const ExactRational& x);

/// f(x) = (x+3)/x ((x+1)/(x+2))^q; rejects x not certified positive.
Enclosure f_value(const Enclosure& x, int s);

/// log g(x); rejects x not certified positive.
Enclosure g_log(const Enclosure& x, int s);

/// log[(2x+6)^{2x+6} (x+1)^{(s+1)(x+1)} / ((2x)^{2x} (x+2)^{(s+1)(x+2)})],
/// equal to log g(x) exactly when f(x) = 1.
Enclosure saddle_log(const Enclosure& x, int s);

struct GrowthProfile {
  int s = 0;
  int q = 0;
  RootBracket x0;
  Enclosure x1;
  Enclosure gx0_log;
  Enclosure decay_exponent;         // s + log g(x0)
  Enclosure decay_exponent_hanson;  // s log 3 + log g(x0)
};

GrowthProfile decay_exponents(int s, long bits);

struct ScanEntry {
  int s;
  Enclosure decay_exponent;
  Enclosure decay_exponent_hanson;
};

struct ScanResult {
  std::vector<ScanEntry> entries;
  int minimal_s_pnt = -1;     // first s with certified s + log g(x0) < 0
  int minimal_s_hanson = -1;  // first s with certified s log 3 + log g(x0) < 0
};

/// Odd s in [s_from, s_to].
ScanResult scan_decay(int s_from, int s_to, long bits);

}  // namespace oddzeta
