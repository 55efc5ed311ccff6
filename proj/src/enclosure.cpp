#include "oddzeta/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace oddzeta {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // mpfr_t is an array of one struct; steal the limbs and leave `other` empty.
  *value_ = *other.value_;
  other.live_ = false;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this == &other) return *this;
  if (!live_) {
    mpfr_init2(value_, other.precision());
    live_ = true;
  } else {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this == &other) return *this;
  if (live_) mpfr_clear(value_);
  *value_ = *other.value_;
  live_ = other.live_;
  other.live_ = false;
  return *this;
}

BigFloat::~BigFloat() {
  if (live_) mpfr_clear(value_);
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative:
      return "negative";
    case Sign::positive:
      return "positive";
    default:
      return "indeterminate";
  }
}

namespace {

struct Bounds {
  BigFloat lo;
  BigFloat hi;
  explicit Bounds(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

Bounds bounds_of(const Enclosure& e, mpfr_prec_t prec) {
  Bounds b(prec);
  mpfr_sub(b.lo.get(), e.midpoint().get(), e.radius().get(), MPFR_RNDD);
  mpfr_add(b.hi.get(), e.midpoint().get(), e.radius().get(), MPFR_RNDU);
  return b;
}

mpfr_prec_t joint(const Enclosure& a, const Enclosure& b) {
  return std::max(a.precision(), b.precision());
}

// Four-corner product/quotient bound: lo = min f(x,y), hi = max f(x,y).
template <typename Op>
Bounds corners(const Bounds& x, const Bounds& y, mpfr_prec_t prec, Op op) {
  Bounds out(prec);
  BigFloat t(prec);
  bool first = true;
  for (const BigFloat* a : {&x.lo, &x.hi}) {
    for (const BigFloat* b : {&y.lo, &y.hi}) {
      op(t.get(), a->get(), b->get(), MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), out.lo.get())) mpfr_set(out.lo.get(), t.get(), MPFR_RNDD);
      op(t.get(), a->get(), b->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), out.hi.get()))
        mpfr_set(out.hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return out;
}

template <typename F>
Bounds monotone(const Bounds& x, mpfr_prec_t prec, F f) {
  Bounds out(prec);
  f(out.lo.get(), x.lo.get(), MPFR_RNDD);
  f(out.hi.get(), x.hi.get(), MPFR_RNDU);
  return out;
}

}  // namespace

// Closes the interval [lo, hi] into a ball at `prec`.
static Enclosure close_bounds(const Bounds& b, mpfr_prec_t prec);

Enclosure::Enclosure(mpfr_prec_t prec) : mid_(prec), rad_(prec) {}

Enclosure Enclosure::exact(const ExactRational& x, mpfr_prec_t prec) {
  Bounds b(prec);
  mpfr_set_q(b.lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(b.hi.get(), x.get_mpq_t(), MPFR_RNDU);
  return close_bounds(b, prec);
}

Enclosure Enclosure::exact(const ExactInteger& x, mpfr_prec_t prec) {
  Bounds b(prec);
  mpfr_set_z(b.lo.get(), x.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(b.hi.get(), x.get_mpz_t(), MPFR_RNDU);
  return close_bounds(b, prec);
}

Enclosure Enclosure::exact(long x, mpfr_prec_t prec) { return exact(ExactInteger(x), prec); }

Enclosure Enclosure::from_bounds(const ExactRational& lo, const ExactRational& hi,
                                 mpfr_prec_t prec) {
  if (hi < lo) throw std::invalid_argument("from_bounds: hi < lo");
  Bounds b(prec);
  mpfr_set_q(b.lo.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(b.hi.get(), hi.get_mpq_t(), MPFR_RNDU);
  return close_bounds(b, prec);
}

Enclosure Enclosure::ball(const BigFloat& mid, const BigFloat& rad) {
  Enclosure e(mid.precision());
  mpfr_set(e.mid_.get(), mid.get(), MPFR_RNDN);
  if (!mpfr_equal_p(e.mid_.get(), mid.get()))
    throw std::invalid_argument("ball: midpoint not representable at its own precision");
  mpfr_abs(e.rad_.get(), rad.get(), MPFR_RNDU);
  return e;
}

static Enclosure close_bounds(const Bounds& b, mpfr_prec_t prec) {
  if (mpfr_nan_p(b.lo.get()) || mpfr_nan_p(b.hi.get()))
    throw EnclosureDomainError("enclosure endpoint is NaN");
  BigFloat mid(prec);
  mpfr_add(mid.get(), b.lo.get(), b.hi.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  BigFloat up(prec), down(prec);
  mpfr_sub(up.get(), b.hi.get(), mid.get(), MPFR_RNDU);
  mpfr_sub(down.get(), mid.get(), b.lo.get(), MPFR_RNDU);
  BigFloat rad(prec);
  mpfr_max(rad.get(), up.get(), down.get(), MPFR_RNDU);
  return Enclosure::ball(mid, rad);
}

BigFloat Enclosure::lower() const { return bounds_of(*this, precision()).lo; }
BigFloat Enclosure::upper() const { return bounds_of(*this, precision()).hi; }

Sign Enclosure::sign() const {
  const Bounds b = bounds_of(*this, precision());
  if (mpfr_sgn(b.lo.get()) > 0) return Sign::positive;
  if (mpfr_sgn(b.hi.get()) < 0) return Sign::negative;
  return Sign::indeterminate;
}

bool Enclosure::contains(const ExactRational& x) const {
  const Bounds b = bounds_of(*this, precision());
  return mpfr_cmp_q(b.lo.get(), x.get_mpq_t()) <= 0 && mpfr_cmp_q(b.hi.get(), x.get_mpq_t()) >= 0;
}

bool Enclosure::contains(const Enclosure& inner) const {
  const mpfr_prec_t p = joint(*this, inner);
  const Bounds o = bounds_of(*this, p);
  // Inner bounds rounded outward too: containment of the rounded inner
  // interval implies containment of the exact one.
  const Bounds i = bounds_of(inner, p);
  return mpfr_lessequal_p(o.lo.get(), i.lo.get()) && mpfr_lessequal_p(i.hi.get(), o.hi.get());
}

bool Enclosure::overlaps(const Enclosure& other) const {
  const mpfr_prec_t p = joint(*this, other);
  const Bounds a = bounds_of(*this, p);
  const Bounds b = bounds_of(other, p);
  return mpfr_lessequal_p(a.lo.get(), b.hi.get()) && mpfr_lessequal_p(b.lo.get(), a.hi.get());
}

bool Enclosure::is_finite() const {
  return mpfr_number_p(mid_.get()) && mpfr_number_p(rad_.get());
}

bool Enclosure::relative_radius_at_most(long log2_bound) const {
  const Bounds b = bounds_of(*this, precision());
  BigFloat minabs(precision());
  if (mpfr_sgn(b.lo.get()) > 0) {
    mpfr_set(minabs.get(), b.lo.get(), MPFR_RNDD);
  } else if (mpfr_sgn(b.hi.get()) < 0) {
    mpfr_neg(minabs.get(), b.hi.get(), MPFR_RNDD);
  } else {
    return false;
  }
  BigFloat scaled(precision());
  mpfr_mul_2si(scaled.get(), rad_.get(), log2_bound, MPFR_RNDU);
  return mpfr_lessequal_p(scaled.get(), minabs.get());
}

bool Enclosure::radius_at_most(const ExactRational& bound) const {
  return mpfr_cmp_q(rad_.get(), bound.get_mpq_t()) <= 0;
}

double Enclosure::relative_error_log2() const {
  if (mpfr_zero_p(rad_.get())) return -1e300;
  const Bounds b = bounds_of(*this, precision());
  if (sign() == Sign::indeterminate) return 1e300;
  BigFloat minabs(precision());
  if (mpfr_sgn(b.lo.get()) > 0)
    mpfr_set(minabs.get(), b.lo.get(), MPFR_RNDD);
  else
    mpfr_neg(minabs.get(), b.hi.get(), MPFR_RNDD);
  long er = 0, em = 0;
  const double dr = mpfr_get_d_2exp(&er, rad_.get(), MPFR_RNDU);
  const double dm = mpfr_get_d_2exp(&em, minabs.get(), MPFR_RNDD);
  return std::log2(dr) + static_cast<double>(er) - std::log2(dm) - static_cast<double>(em);
}

Enclosure Enclosure::with_precision(mpfr_prec_t prec) const {
  const Bounds b = bounds_of(*this, std::max(prec, precision()));
  Bounds c(prec);
  mpfr_set(c.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_set(c.hi.get(), b.hi.get(), MPFR_RNDU);
  return close_bounds(c, prec);
}

Enclosure Enclosure::operator-() const {
  Enclosure e = *this;
  mpfr_neg(e.mid_.get(), e.mid_.get(), MPFR_RNDN);
  return e;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  const mpfr_prec_t p = joint(a, b);
  const Bounds x = bounds_of(a, p), y = bounds_of(b, p);
  Bounds out(p);
  mpfr_add(out.lo.get(), x.lo.get(), y.lo.get(), MPFR_RNDD);
  mpfr_add(out.hi.get(), x.hi.get(), y.hi.get(), MPFR_RNDU);
  return close_bounds(out, p);
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  const mpfr_prec_t p = joint(a, b);
  const Bounds x = bounds_of(a, p), y = bounds_of(b, p);
  Bounds out(p);
  mpfr_sub(out.lo.get(), x.lo.get(), y.hi.get(), MPFR_RNDD);
  mpfr_sub(out.hi.get(), x.hi.get(), y.lo.get(), MPFR_RNDU);
  return close_bounds(out, p);
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const mpfr_prec_t p = joint(a, b);
  return close_bounds(corners(bounds_of(a, p), bounds_of(b, p), p, mpfr_mul), p);
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.sign() == Sign::indeterminate)
    throw EnclosureDomainError("division by an enclosure containing zero");
  const mpfr_prec_t p = joint(a, b);
  return close_bounds(corners(bounds_of(a, p), bounds_of(b, p), p, mpfr_div), p);
}

std::string Enclosure::mid_decimal(int digits) const {
  if (mpfr_zero_p(mid_.get())) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), mid_.get(), MPFR_RNDN),
      mpfr_free_str);
  std::string d = raw.get();
  std::string sign;
  if (!d.empty() && d[0] == '-') {
    sign = "-";
    d.erase(0, 1);
  }
  std::string out = sign + d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  const long e = static_cast<long>(exp10) - 1;
  out += (e < 0 ? "e-" : "e+");
  const std::string es = std::to_string(e < 0 ? -e : e);
  out += (es.size() < 2 ? "0" : "") + es;
  return out;
}

std::string Enclosure::rad_decimal() const {
  if (mpfr_zero_p(rad_.get())) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, 6, rad_.get(), MPFR_RNDU), mpfr_free_str);
  const std::string d = raw.get();
  std::string out = d.substr(0, 1) + "." + d.substr(1);
  const long e = static_cast<long>(exp10) - 1;
  out += (e < 0 ? "e-" : "e+");
  const std::string es = std::to_string(e < 0 ? -e : e);
  out += (es.size() < 2 ? "0" : "") + es;
  return out;
}

Enclosure log(const Enclosure& x) {
  if (x.sign() != Sign::positive) throw EnclosureDomainError("log of an enclosure not > 0");
  const mpfr_prec_t p = x.precision();
  return close_bounds(monotone(bounds_of(x, p), p, mpfr_log), p);
}

Enclosure exp(const Enclosure& x) {
  const mpfr_prec_t p = x.precision();
  return close_bounds(monotone(bounds_of(x, p), p, mpfr_exp), p);
}

Enclosure sqrt(const Enclosure& x) {
  const mpfr_prec_t p = x.precision();
  const Bounds b = bounds_of(x, p);
  if (mpfr_sgn(b.lo.get()) < 0) throw EnclosureDomainError("sqrt of an enclosure reaching below 0");
  return close_bounds(monotone(b, p, mpfr_sqrt), p);
}

Enclosure root(const Enclosure& x, unsigned long k) {
  if (k == 0) throw std::invalid_argument("root: k must be >= 1");
  const mpfr_prec_t p = x.precision();
  const Bounds b = bounds_of(x, p);
  if (k % 2 == 0 && mpfr_sgn(b.lo.get()) < 0)
    throw EnclosureDomainError("even root of an enclosure reaching below 0");
  return close_bounds(monotone(b, p,
                               [k](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) {
                                 return mpfr_rootn_ui(r, v, k, rnd);
                               }),
                      p);
}

Enclosure pow(const Enclosure& x, unsigned long e) {
  const mpfr_prec_t p = x.precision();
  const Bounds b = bounds_of(x, p);
  auto powe = [e](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { return mpfr_pow_ui(r, v, e, rnd); };
  if (e % 2 == 1 || mpfr_sgn(b.lo.get()) >= 0) return close_bounds(monotone(b, p, powe), p);
  if (mpfr_sgn(b.hi.get()) <= 0) {
    Bounds flipped(p);
    mpfr_neg(flipped.lo.get(), b.hi.get(), MPFR_RNDD);
    mpfr_neg(flipped.hi.get(), b.lo.get(), MPFR_RNDU);
    return close_bounds(monotone(flipped, p, powe), p);
  }
  Bounds out(p);
  BigFloat m(p);
  mpfr_neg(m.get(), b.lo.get(), MPFR_RNDU);
  mpfr_max(m.get(), m.get(), b.hi.get(), MPFR_RNDU);
  mpfr_pow_ui(out.hi.get(), m.get(), e, MPFR_RNDU);
  return close_bounds(out, p);
}

Enclosure abs(const Enclosure& x) {
  switch (x.sign()) {
    case Sign::positive:
      return x;
    case Sign::negative:
      return -x;
    default: {
      const mpfr_prec_t p = x.precision();
      const Bounds b = bounds_of(x, p);
      Bounds out(p);
      mpfr_neg(out.hi.get(), b.lo.get(), MPFR_RNDU);
      mpfr_max(out.hi.get(), out.hi.get(), b.hi.get(), MPFR_RNDU);
      return close_bounds(out, p);
    }
  }
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
  const mpfr_prec_t p = joint(a, b);
  const Bounds x = bounds_of(a, p), y = bounds_of(b, p);
  Bounds out(p);
  mpfr_min(out.lo.get(), x.lo.get(), y.lo.get(), MPFR_RNDD);
  mpfr_max(out.hi.get(), x.hi.get(), y.hi.get(), MPFR_RNDU);
  return close_bounds(out, p);
}

Enclosure log2_constant(mpfr_prec_t prec) {
  Bounds b(prec);
  mpfr_const_log2(b.lo.get(), MPFR_RNDD);
  mpfr_const_log2(b.hi.get(), MPFR_RNDU);
  return close_bounds(b, prec);
}

Enclosure pi_constant(mpfr_prec_t prec) {
  Bounds b(prec);
  mpfr_const_pi(b.lo.get(), MPFR_RNDD);
  mpfr_const_pi(b.hi.get(), MPFR_RNDU);
  return close_bounds(b, prec);
}

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623));
}

}  // namespace oddzeta
