#include "oddzeta/asymptotics.hpp"

#include <stdexcept>

namespace oddzeta {

namespace {

void check_s(int s) {
  if (s < 7 || s % 2 == 0) throw std::invalid_argument("s must be odd and >= 7");
}

// Coefficients of (x + c)^q.
std::vector<ExactInteger> binomial_power(long c, int q) {
  std::vector<ExactInteger> out(q + 1);
  ExactInteger cp = 1;
  for (int j = q; j >= 0; --j) {
    out[j] = binomial(q, j) * cp;
    cp *= c;
  }
  return out;
}

Enclosure constant(long v, mpfr_prec_t prec) { return Enclosure::exact(v, prec); }

}  // namespace

int IntPolynomial::degree() const {
  for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j)
    if (coeffs[j] != 0) return j;
  return -1;
}

ExactRational IntPolynomial::operator()(const ExactRational& x) const {
  ExactRational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + ExactRational(*it);
  return acc;
}

int IntPolynomial::sign_at(const ExactRational& x) const { return sgn((*this)(x)); }

IntPolynomial root_polynomial(int s) {
  check_s(s);
  const int q = (s + 1) / 2;
  IntPolynomial p;
  p.coeffs.assign(q + 2, ExactInteger(0));
  const auto plus2 = binomial_power(2, q);
  const auto plus1 = binomial_power(1, q);
  for (int j = 0; j <= q; ++j) {
    p.coeffs[j + 1] += plus2[j];  // x (x+2)^q
    p.coeffs[j + 1] -= plus1[j];  // - x (x+1)^q
    p.coeffs[j] -= 3 * plus1[j];  // - 3 (x+1)^q
  }
  return p;
}

RootBracket find_x0(int s, long bits) {
  const IntPolynomial p = root_polynomial(s);
  RootBracket b{ExactRational(0), ExactRational(1), 0, Enclosure()};
  if (p.sign_at(b.lo) >= 0 || p.sign_at(b.hi) <= 0)
    throw std::logic_error("find_x0: [0, 1] does not bracket a sign change");
  const ExactRational width = make_rational(1, ExactInteger(1) << static_cast<mp_bitcnt_t>(bits));
  while (b.hi - b.lo > width) {
    ExactRational mid = (b.lo + b.hi) / 2;
    const int sg = p.sign_at(mid);
    if (sg == 0) {
      b.lo = mid;
      b.hi = mid;
      break;
    }
    (sg < 0 ? b.lo : b.hi) = std::move(mid);
    ++b.steps;
  }
  b.enclosure = Enclosure::from_bounds(b.lo, b.hi, bits + 64);
  return b;
}

Enclosure critical_x1(int s, mpfr_prec_t prec) {
  if (s % 2 == 0) throw std::invalid_argument("critical_x1: s must be odd");
  const int q = (s + 1) / 2;
  if (q <= 3) throw std::invalid_argument("critical_x1: q = (s+1)/2 must exceed 3");
  const Enclosure disc = Enclosure::exact(ExactRational(9) + make_rational(24, q - 3), prec);
  return (sqrt(disc) - constant(3, prec)) / constant(2, prec);
}

int log_derivative_sign(int s, const ExactRational& x) {
  const int q = (s + 1) / 2;
  const ExactRational v = (q - 3) * x * x + 3 * (q - 3) * x - 6;
  return sgn(v);
}

Enclosure f_value(const Enclosure& x, int s) {
  if (x.sign() != Sign::positive) throw EnclosureDomainError("f_value: x must be > 0");
  const mpfr_prec_t p = x.precision();
  const int q = (s + 1) / 2;
  return (x + constant(3, p)) / x * pow((x + constant(1, p)) / (x + constant(2, p)), q);
}

Enclosure g_log(const Enclosure& x, int s) {
  if (x.sign() != Sign::positive) throw EnclosureDomainError("g_log: x must be > 0");
  const mpfr_prec_t p = x.precision();
  return constant(6, p) * log2_constant(p) + constant(6, p) * log(x + constant(3, p)) +
         constant(s + 1, p) * log(x + constant(1, p)) -
         constant(2L * (s + 1), p) * log(x + constant(2, p));
}

Enclosure saddle_log(const Enclosure& x, int s) {
  if (x.sign() != Sign::positive) throw EnclosureDomainError("saddle_log: x must be > 0");
  const mpfr_prec_t p = x.precision();
  const Enclosure two_x = constant(2, p) * x;
  const Enclosure a = two_x + constant(6, p);
  const Enclosure b = x + constant(1, p);
  const Enclosure c = x + constant(2, p);
  const Enclosure s1 = constant(s + 1, p);
  return a * log(a) + s1 * b * log(b) - two_x * log(two_x) - s1 * c * log(c);
}

GrowthProfile decay_exponents(int s, long bits) {
  check_s(s);
  GrowthProfile g;
  g.s = s;
  g.q = (s + 1) / 2;
  g.x0 = find_x0(s, bits);
  const mpfr_prec_t p = g.x0.enclosure.precision();
  g.x1 = critical_x1(s, p);
  g.gx0_log = g_log(g.x0.enclosure, s);
  g.decay_exponent = constant(s, p) + g.gx0_log;
  g.decay_exponent_hanson = constant(s, p) * log(constant(3, p)) + g.gx0_log;
  return g;
}

ScanResult scan_decay(int s_from, int s_to, long bits) {
  ScanResult out;
  for (int s = s_from; s <= s_to; s += 2) {
    const GrowthProfile g = decay_exponents(s, bits);
    if (out.minimal_s_pnt < 0 && g.decay_exponent.sign() == Sign::negative) out.minimal_s_pnt = s;
    if (out.minimal_s_hanson < 0 && g.decay_exponent_hanson.sign() == Sign::negative)
      out.minimal_s_hanson = s;
    out.entries.push_back({s, g.decay_exponent, g.decay_exponent_hanson});
  }
  return out;
}

}  // namespace oddzeta
