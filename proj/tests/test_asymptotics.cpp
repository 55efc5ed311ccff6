#include "oddzeta/asymptotics.hpp"

#include <doctest.h>

#include <cmath>

using namespace oddzeta;

namespace {

ExactRational p_oracle(int s, const ExactRational& x) {
  const int q = (s + 1) / 2;
  return x * pow(x + 2, q) - (x + 3) * pow(x + 1, q);
}

double mid(const Enclosure& e) { return mpfr_get_d(e.midpoint().get(), MPFR_RNDN); }

}  // namespace

TEST_CASE("root polynomial") {
  for (int s : {7, 9, 25, 33}) {
    const IntPolynomial p = root_polynomial(s);
    CHECK(p.degree() == (s + 1) / 2);  // the x^{q+1} terms cancel
    for (long a = -5; a <= 5; ++a) {
      const ExactRational x = make_rational(a, 3);
      CHECK(p(x) == p_oracle(s, x));
    }
    CHECK(p(ExactRational(0)) == -3);
    CHECK(p.sign_at(ExactRational(1)) > 0);
  }
  // s = 7: x (x+2)^4 - (x+3)(x+1)^4 = x^4 + 6x^3 + 10x^2 + 3x - 3
  const IntPolynomial p7 = root_polynomial(7);
  const std::vector<ExactInteger> want = {-3, 3, 10, 6, 1};
  for (std::size_t j = 0; j < want.size(); ++j) CHECK(p7.coeffs[j] == want[j]);
  CHECK_THROWS_AS(root_polynomial(8), std::invalid_argument);
  CHECK_THROWS_AS(root_polynomial(5), std::invalid_argument);
}

TEST_CASE("x0 bisection") {
  for (int s : {7, 15, 25, 33, 51}) {
    const RootBracket b = find_x0(s, 120);
    const IntPolynomial p = root_polynomial(s);
    CHECK(p.sign_at(b.lo) < 0);
    CHECK(p.sign_at(b.hi) > 0);
    CHECK(b.hi - b.lo <= make_rational(1, ExactInteger(1) << 120));
    CHECK(b.enclosure.contains(b.lo));
    CHECK(b.enclosure.contains(b.hi));
    CHECK(b.lo > 0);
    CHECK(b.hi < 1);
    CHECK(f_value(b.enclosure, s).contains(ExactRational(1)));
  }
  const RootBracket b25 = find_x0(25, 80);
  CHECK(std::abs(mid(b25.enclosure) - 0.00036713) < 5e-8);
}

TEST_CASE("critical point x1") {
  for (int s : {7, 9, 25, 41}) {
    const int q = (s + 1) / 2;
    const double expect = (-3.0 + std::sqrt(9.0 + 24.0 / (q - 3))) / 2.0;
    const Enclosure x1 = critical_x1(s, 200);
    CHECK(mid(x1) == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(mid(critical_x1(7, 128)) == doctest::Approx(1.3722813232690143).epsilon(1e-12));
  CHECK_THROWS_AS(critical_x1(5, 64), std::invalid_argument);
  CHECK(log_derivative_sign(7, make_rational(1, 2)) < 0);
  CHECK(log_derivative_sign(7, ExactRational(2)) > 0);
}

TEST_CASE("f decreases before x1 and increases after") {
  const int s = 25;
  const Enclosure x1 = critical_x1(s, 128);
  const double c = mid(x1);
  auto fv = [&](double x) {
    return mid(f_value(Enclosure::exact(ExactRational(x), 128), s));
  };
  CHECK(fv(c / 4) > fv(c / 2));
  CHECK(fv(c / 2) > fv(c));
  CHECK(fv(2 * c) > fv(c));
  CHECK(fv(4 * c) > fv(2 * c));
  CHECK(fv(1000.0) < 1);
  CHECK_THROWS_AS(f_value(Enclosure::exact(-1L, 64), s), EnclosureDomainError);
}

TEST_CASE("log g(x0) and the saddle form coincide") {
  for (int s : {7, 25, 33}) {
    const GrowthProfile g = decay_exponents(s, 150);
    CHECK(saddle_log(g.x0.enclosure, s).overlaps(g.gx0_log));
    CHECK(g.q == (s + 1) / 2);
  }
  const GrowthProfile g = decay_exponents(25, 150);
  CHECK(std::abs(mid(g.gx0_log) + 25.292363) < 1e-6);
  CHECK(std::abs(mid(g.decay_exponent) + 0.292363) < 1e-6);
  CHECK(g.decay_exponent.sign() == Sign::negative);
  CHECK(g.decay_exponent_hanson.sign() == Sign::positive);
}

TEST_CASE("decay exponents decrease with s; thresholds at 25 and 33") {
  const ScanResult scan = scan_decay(7, 51, 120);
  REQUIRE(scan.entries.size() == 23);
  for (std::size_t j = 1; j < scan.entries.size(); ++j) {
    CHECK((scan.entries[j].decay_exponent - scan.entries[j - 1].decay_exponent).sign() ==
          Sign::negative);
    CHECK((scan.entries[j].decay_exponent_hanson - scan.entries[j - 1].decay_exponent_hanson)
              .sign() == Sign::negative);
  }
  CHECK(scan.minimal_s_pnt == 25);
  CHECK(scan.minimal_s_hanson == 33);
  CHECK(decay_exponents(33, 120).decay_exponent_hanson.sign() == Sign::negative);
  CHECK(decay_exponents(31, 120).decay_exponent_hanson.sign() == Sign::positive);
}
