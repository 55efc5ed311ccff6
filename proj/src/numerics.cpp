#include "oddzeta/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

namespace oddzeta {

namespace {

ExactInteger rising(long base, long count) {
  ExactInteger r = 1;
  for (long j = 0; j < count; ++j) r *= base + j;
  return r;
}

ExactInteger int_pow(const ExactInteger& b, unsigned long e) {
  ExactInteger r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

ExactInteger two_pow(unsigned long e) {
  ExactInteger r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// log2 of the first omitted Euler-Maclaurin term, |B_2j|/(2j)! ~ 2 (2 pi)^{-2j}.
double em_remainder_log2(int i, double log2_cutoff, int corrections) {
  const double j2 = 2.0 * corrections + 2.0;
  const double lg =
      (std::lgamma(i + j2 - 1.0) - std::lgamma(static_cast<double>(i))) / std::log(2.0);
  return 1.0 - j2 * std::log2(2.0 * M_PI) + lg - (i + j2 - 1.0) * log2_cutoff;
}

std::mutex zeta_cache_mu;
std::map<int, Enclosure>& zeta_cache() {
  static std::map<int, Enclosure> cache;
  return cache;
}

}  // namespace

Enclosure zeta_value_em(int i, int cutoff, int corrections, mpfr_prec_t prec) {
  if (i < 2) throw std::invalid_argument("zeta_value: argument must be >= 2");
  if (cutoff < 1 || corrections < 0) throw std::invalid_argument("zeta_value_em: bad parameters");
  const auto bern = bernoulli_cached(2 * corrections + 2);

  Enclosure partial(prec);
  for (int k = 1; k < cutoff; ++k) {
    const ExactInteger kp = int_pow(ExactInteger(k), i);
    partial += Enclosure::exact(make_rational(1, kp), prec);
  }

  const ExactInteger big_n = cutoff;
  ExactRational tail = make_rational(1, int_pow(big_n, i - 1) * (i - 1)) +
                       make_rational(1, 2 * int_pow(big_n, i));
  ExactInteger fac = 1;  // (2j)!
  for (int j = 1; j <= corrections; ++j) {
    fac *= (2L * j - 1) * (2L * j);
    tail += (*bern)[2 * j] * make_rational(rising(i, 2L * j - 1), fac * int_pow(big_n, i + 2 * j - 1));
  }
  const int jr = corrections + 1;
  fac *= (2L * jr - 1) * (2L * jr);
  ExactRational rem =
      (*bern)[2 * jr] * make_rational(rising(i, 2L * jr - 1), fac * int_pow(big_n, i + 2 * jr - 1));
  rem = abs(rem);
  return partial + Enclosure::from_bounds(tail - rem, tail + rem, prec);
}

Enclosure zeta_value(int i, long bits) {
  if (i < 2) throw std::invalid_argument("zeta_value: argument must be >= 2");
  if (bits < 1) throw std::invalid_argument("zeta_value: bits must be positive");
  const mpfr_prec_t want = bits + 32;
  {
    std::lock_guard lock(zeta_cache_mu);
    auto it = zeta_cache().find(i);
    if (it != zeta_cache().end() && it->second.precision() >= want &&
        it->second.radius_at_most(make_rational(1, two_pow(bits))))
      return it->second.with_precision(want);
  }

  // Pick the correction count minimizing cutoff + corrections.
  int best_m = 4;
  double best_cost = std::numeric_limits<double>::infinity();
  long best_n = 2;
  const int max_m = static_cast<int>(std::max(320L, bits / 4));
  for (int m = 4; m <= max_m; m += 4) {
    const double c = em_remainder_log2(i, 0.0, m);
    const double log2n = (c + bits + 4.0) / (i + 2.0 * m + 1.0);
    const double nreq = std::max(2.0, std::ceil(std::exp2(std::max(1.0, log2n))));
    const double cost = nreq + 6.0 * m;
    if (nreq < 1e8 && cost < best_cost) {
      best_cost = cost;
      best_m = m;
      best_n = static_cast<long>(nreq);
    }
  }
  const ExactRational target = make_rational(1, two_pow(bits));
  for (int attempt = 0; attempt < 12; ++attempt) {
    const mpfr_prec_t prec = want + static_cast<mpfr_prec_t>(std::log2(best_n + 1.0)) + 8;
    Enclosure z = zeta_value_em(i, static_cast<int>(best_n), best_m, prec);
    if (z.radius_at_most(target)) {
      std::lock_guard lock(zeta_cache_mu);
      auto [it, fresh] = zeta_cache().try_emplace(i, z);
      if (!fresh && it->second.precision() < z.precision()) it->second = z;
      return z.with_precision(std::max(want, prec));
    }
    best_n *= 2;
  }
  throw PrecisionUnattainable("zeta_value: Euler-Maclaurin did not reach target",
                              zeta_value_em(i, static_cast<int>(best_n), best_m, want));
}

std::map<int, Enclosure> odd_zeta_values(int s, long bits) {
  std::map<int, Enclosure> out;
  for (int i = 3; i <= s; i += 2) out.emplace(i, zeta_value(i, bits));
  return out;
}

SummandSequence::SummandSequence(FormSpec spec, Grid grid) : spec_(spec), grid_(grid) {
  factorial_power_ = int_pow(factorial(spec.n), spec.s - 5);
  leading_ = two_pow(6 * spec.n) * factorial_power_;
}

ExactRational SummandSequence::term(long k) const {
  if (k < 0) throw std::invalid_argument("term: k must be >= 0");
  const long n = spec_.n;
  const unsigned long e = spec_.s + 1;
  ExactInteger num = factorial_power_;
  ExactInteger den = 1;
  if (grid_ == Grid::integer) {
    // n!^{s-5} (6n+2k+2)! (n+k)!^{s+1} / (2 (2k+1)! (2n+k+1)!^{s+1})
    for (long m = 2 * k + 2; m <= 6 * n + 2 * k + 2; ++m) num *= m;
    ExactInteger q = 1;
    for (long j = n + k + 1; j <= 2 * n + k + 1; ++j) q *= j;
    den = 2 * int_pow(q, e);
  } else {
    // n!^{s-5} 2^{(n+1)(s+1)-1} prod_{j=0}^{6n} (2k+1+j) / prod_{j=0}^{n} (2n+2k+1+2j)^{s+1}
    num *= two_pow((n + 1) * e - 1);
    for (long j = 0; j <= 6 * n; ++j) num *= 2 * k + 1 + j;
    ExactInteger q = 1;
    for (long j = 0; j <= n; ++j) q *= 2 * n + 2 * k + 1 + 2 * j;
    den = int_pow(q, e);
  }
  return make_rational(num, den);
}

ExactRational SummandSequence::tail_bound(long k) const {
  // For t > n every numerator factor (t - n + j/2) lies in (0, t + 2n] and
  // every denominator factor (t + j) is >= t, so
  //   R_n(t) <= A (1 + 2n/t)^{6n+1} t^{-E},  E = (n+1)(s+1) - 6n - 1,
  // a decreasing bound; the grid sum from t0 is below its integral from t0 - 1.
  const long n = spec_.n;
  const long big_e = (n + 1) * (spec_.s + 1) - 6 * n - 1;
  const ExactRational t0 = (grid_ == Grid::integer) ? ExactRational(n + 1 + k)
                                                    : make_rational(2 * (n + k) + 1, 2);
  const ExactRational lo = t0 - 1;
  const ExactRational spread = pow(1 + ExactRational(2 * n) / lo, 6 * n + 1);
  return ExactRational(leading_) * spread * pow(lo, 1 - big_e) / ExactRational(big_e - 1);
}

ExactRational consecutive_ratio_closed(const FormSpec& spec, long k) {
  const long n = spec.n;
  const ExactRational front =
      make_rational((2 * k + 6 * n + 3) * (k + 3 * n + 2), (k + 1) * (2 * k + 3));
  return front * pow(make_rational(k + n + 1, k + 2 * n + 2), spec.s + 1);
}

ExactRational cross_ratio_closed(const FormSpec& spec, long k) {
  const long n = spec.n;
  const ExactRational inner = make_rational(binomial(4 * n + 2 * k + 2, 2 * n + k + 1),
                                            two_pow(2 * (n + 1)) * binomial(2 * n + 2 * k, n + k));
  return make_rational(6 * n + 2 * k + 2, 2 * k + 1) * pow(inner, spec.s + 1);
}

SeriesSum sum_series(const SummandSequence& seq, int digits, long max_cutoff) {
  const long target_bits = static_cast<long>(bits_for_digits(digits)) + 2;
  const mpfr_prec_t prec = target_bits + 64;
  Enclosure running(prec);
  long k = 0;
  long next = 16;
  for (;;) {
    next = std::min(next, max_cutoff);
    for (; k < next; ++k) running += Enclosure::exact(seq.term(k), prec);
    ExactRational tail = seq.tail_bound(k);
    Enclosure value = running + Enclosure::from_bounds(0, tail, prec);
    if (value.relative_radius_at_most(target_bits))
      return SeriesSum{std::move(value), k, std::move(tail)};
    if (k >= max_cutoff)
      throw PrecisionUnattainable("sum_series: precision not reached within max cutoff", value);
    next *= 2;
  }
}

namespace {

struct BasisTerm {
  ExactRational coeff;
  int zeta_index;
};

Enclosure evaluate_basis(const std::vector<BasisTerm>& terms, const ExactRational& constant,
                         int s, int digits) {
  const long target_bits = static_cast<long>(bits_for_digits(digits)) + 2;
  long biggest = constant == 0 ? 0 : log2_estimate(abs(constant));
  for (const auto& t : terms)
    if (t.coeff != 0) biggest = std::max(biggest, log2_estimate(abs(t.coeff)));
  long bits = std::max(64L, biggest) + target_bits + 64;

  std::optional<Enclosure> last;
  for (int attempt = 0; attempt < 10; ++attempt) {
    const auto zetas = odd_zeta_values(s, bits);
    const mpfr_prec_t prec = bits + 32;
    Enclosure total = Enclosure::exact(constant, prec);
    for (const auto& t : terms) {
      if (t.coeff == 0) continue;
      total += Enclosure::exact(t.coeff, prec) * zetas.at(t.zeta_index);
    }
    if (total.relative_radius_at_most(target_bits)) return total;
    const double err = total.relative_error_log2();
    bits = (err > 1e6) ? 2 * bits : bits + static_cast<long>(std::ceil(err)) + target_bits + 32;
    last = std::move(total);
  }
  throw PrecisionUnattainable("zeta-basis evaluation: cancellation not resolved", *last);
}

}  // namespace

Enclosure evaluate_r_basis(const ZetaLinearForm& form, int digits) {
  std::vector<BasisTerm> terms;
  for (const auto& [i, ai] : form.a) terms.push_back({ai, i});
  return evaluate_basis(terms, form.a0, form.spec.s, digits);
}

Enclosure evaluate_rhat_basis(const ZetaLinearForm& form, int digits) {
  std::vector<BasisTerm> terms;
  for (const auto& [i, ai] : form.a) terms.push_back({ai * ExactRational(two_pow(i) - 1), i});
  return evaluate_basis(terms, form.a0hat, form.spec.s, digits);
}

Enclosure evaluate_delta_basis(const CombinedForm& form, int digits) {
  std::vector<BasisTerm> terms;
  for (const auto& [i, ci] : form.c) terms.push_back({ci, i});
  return evaluate_basis(terms, form.c0, form.spec.s, digits);
}

Enclosure evaluate_delta_basis(const CombinedForm& form, int digits,
                               const ExactRational& zeta3_coeff, const Enclosure& zeta3) {
  const Enclosure base = evaluate_delta_basis(form, digits);
  if (zeta3_coeff == 0) return base;
  return base + Enclosure::exact(zeta3_coeff, base.precision()) * zeta3;
}

const Enclosure& DeltaEvaluation::value() const {
  if (basis) return *basis;
  if (direct) return *direct;
  throw std::logic_error("DeltaEvaluation: no route evaluated");
}

bool DeltaEvaluation::routes_agree() const { return basis && direct && basis->overlaps(*direct); }

namespace {

void fill_direct(DeltaEvaluation& out, const FormSpec& spec, const DeltaOptions& options) {
  const SummandSequence ints(spec, Grid::integer);
  const SummandSequence halves(spec, Grid::half);
  int digits = options.digits + 2;
  for (int attempt = 0; attempt < 6; ++attempt) {
    SeriesSum r = sum_series(ints, digits, options.max_cutoff);
    SeriesSum rhat = sum_series(halves, digits, options.max_cutoff);
    Enclosure d = Enclosure::exact(7L, r.value.precision()) * r.value - rhat.value;
    const long target_bits = static_cast<long>(bits_for_digits(options.digits));
    const bool done = d.relative_radius_at_most(target_bits);
    out.r_direct = std::move(r.value);
    out.rhat_direct = std::move(rhat.value);
    out.direct = std::move(d);
    if (done) return;
    const double err = out.direct->relative_error_log2();
    digits += (err > 1e6) ? digits : static_cast<int>(std::ceil((err + target_bits) / 3.3)) + 2;
  }
}

}  // namespace

DeltaEvaluation delta(const CombinedForm& form, const DeltaOptions& options) {
  DeltaEvaluation out{form.spec, {}, {}, {}, {}};
  if (options.use_basis) out.basis = evaluate_delta_basis(form, options.digits);
  if (options.use_direct) fill_direct(out, form.spec, options);
  return out;
}

DeltaEvaluation delta(const FormSpec& spec, const DeltaOptions& options) {
  if (options.use_basis) return delta(combine(zeta_coefficients(decompose_Rn(spec))), options);
  DeltaEvaluation out{spec, {}, {}, {}, {}};
  if (options.use_direct) fill_direct(out, spec, options);
  return out;
}

Enclosure log_exact(const ExactInteger& x, mpfr_prec_t prec) {
  if (x <= 0) throw EnclosureDomainError("log_exact: argument must be positive");
  return log(Enclosure::exact(x, prec));
}

Enclosure normalized_decay(const FormSpec& spec, const Enclosure& delta_value) {
  switch (delta_value.sign()) {
    case Sign::positive:
      break;
    case Sign::negative:
      throw EnclosureDomainError("normalized_decay: delta is certified negative at n = " +
                                 std::to_string(spec.n) + "; log undefined");
    default:
      throw EnclosureDomainError("normalized_decay: sign of delta is indeterminate at n = " +
                                 std::to_string(spec.n) + "; raise the precision");
  }
  const mpfr_prec_t prec = delta_value.precision() + 64;
  const Enclosure dns = log_exact(int_pow(lcm_upto(spec.n), spec.s), prec);
  const Enclosure sum = dns + log(delta_value.with_precision(prec));
  return sum / Enclosure::exact(static_cast<long>(spec.n), prec);
}

}  // namespace oddzeta
