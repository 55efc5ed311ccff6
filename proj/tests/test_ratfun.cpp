#include "oddzeta/ratfun.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <set>

using namespace oddzeta;

namespace {

// R_n(t) straight from the first product form.
ExactRational summand_oracle(int n, int s, const ExactRational& t) {
  ExactRational v = pow(ExactRational(factorial(n)), s - 5) * pow(ExactRational(2), 6 * n);
  for (int j = 1; j <= n; ++j) v *= (t - j) * (t + n + j);
  for (int j = 1; j <= 3 * n; ++j) v *= t - n - make_rational(1, 2) + j;
  for (int j = 0; j <= n; ++j) v /= pow(t + j, s);
  return v;
}

// Solves A x = b over Q by Gauss-Jordan; A square and invertible.
std::vector<ExactRational> solve(std::vector<std::vector<ExactRational>> a,
                                 std::vector<ExactRational> b) {
  const std::size_t m = b.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const ExactRational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < m; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < m; ++r) b[r] /= a[r][r];
  return b;
}

// Table of R_n by interpolation: unknowns a[i][k], one equation per point.
std::vector<ExactRational> table_by_solve(int n, int s) {
  const int unknowns = s * (n + 1);
  std::vector<std::vector<ExactRational>> a;
  std::vector<ExactRational> b;
  for (int p = 0; p < unknowns; ++p) {
    const ExactRational t = make_rational(2 * p + 3, 3);  // never a pole
    std::vector<ExactRational> row;
    for (int i = 1; i <= s; ++i)
      for (int k = 0; k <= n; ++k) row.push_back(1 / pow(t + k, i));
    a.push_back(std::move(row));
    b.push_back(summand_oracle(n, s, t));
  }
  return solve(std::move(a), std::move(b));
}

// Coefficient b_{i,1} of 1 / prod (t + k_j)^{s_j} via the explicit multi-sum.
ExactRational multisum_coefficient(const std::vector<int>& k, const std::vector<int>& mult,
                                   std::size_t pole, int i) {
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < k.size(); ++j)
    if (j != pole) others.push_back(j);
  const int total = mult[pole] - i;
  ExactRational acc = 0;
  std::function<void(std::size_t, int, ExactRational)> rec = [&](std::size_t idx, int left,
                                                                 ExactRational prod) {
    if (idx == others.size()) {
      if (left == 0) acc += prod;
      return;
    }
    const std::size_t j = others[idx];
    for (int l = 0; l <= left; ++l) {
      const int e = mult[j] + l;
      ExactRational f = ExactRational(binomial(e - 1, l)) / pow(ExactRational(k[j] - k[pole]), e);
      if (l % 2) f = -f;
      rec(idx + 1, left - l, prod * f);
    }
  };
  rec(0, total, ExactRational(1));
  return acc;
}

// Simple-pole residue of a brick at t = -k, computed from its factors.
ExactRational brick_residue(const FactoredRational& f, int k) {
  const ExactRational t = -k;
  ExactRational v = f.scalar();
  for (const auto& fac : f.numerator()) v *= pow(t - fac.root, fac.multiplicity);
  for (const auto& fac : f.denominator())
    if (fac.root != t) v /= pow(t - fac.root, fac.multiplicity);
  return v;
}

std::vector<ExactRational> points(std::mt19937_64& rng, int n, int count) {
  std::uniform_int_distribution<long> num(-500, 500), den(1, 31);
  std::set<ExactRational> seen;
  std::vector<ExactRational> out;
  while (static_cast<int>(out.size()) < count) {
    const ExactRational t = make_rational(num(rng), den(rng));
    if (is_integer(t) && t <= 0 && t >= -n) continue;
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("FormSpec validation") {
  CHECK_NOTHROW(FormSpec::make(1, 7));
  CHECK_THROWS_AS(FormSpec::make(0, 7), std::invalid_argument);
  CHECK_THROWS_AS(FormSpec::make(2, 8), std::invalid_argument);
  CHECK_THROWS_AS(FormSpec::make(2, 5), std::invalid_argument);
}

TEST_CASE("FactoredRational normalization") {
  const ExactRational h = make_rational(1, 2);
  FactoredRational f(ExactRational(3), {{1, 1}, {1, 2}, {h, 1}, {-2, 1}}, {{-2, 2}, {0, 1}});
  // (t-1)^3 (t-1/2) / ((t+2) t)
  CHECK(f.numerator().size() == 2);
  CHECK(f.numerator()[0] == LinearFactor{h, 1});
  CHECK(f.numerator()[1] == LinearFactor{1, 3});
  CHECK(f.denominator_degree() == 2);
  CHECK(f.numerator_degree() == 4);
  CHECK(evaluate(f, ExactRational(2)) == 3 * make_rational(3, 2) / 8);
  CHECK_THROWS_AS(evaluate(f, ExactRational(0)), PoleError);

  const FactoredRational g(ExactRational(2), {{0, 1}}, {{1, 2}});
  const FactoredRational fg = f * g;
  for (long t : {5L, -7L, 11L})
    CHECK(evaluate(fg, ExactRational(t)) == evaluate(f, ExactRational(t)) * evaluate(g, ExactRational(t)));
}

TEST_CASE("summand against its defining product") {
  std::mt19937_64 rng(11);
  for (int s : {7, 9, 25})
    for (int n = 1; n <= 6; ++n) {
      const auto r = build_Rn(FormSpec::make(n, s));
      for (const auto& t : points(rng, n, 12)) CHECK(evaluate(r, t) == summand_oracle(n, s, t));
      CHECK(build_Rn_second_line(FormSpec::make(n, s)) == r);
    }
  CHECK(evaluate(build_Rn(FormSpec::make(1, 7)), ExactRational(2)) == make_rational(35, 2916));
}

TEST_CASE("summand antisymmetry and zeros") {
  std::mt19937_64 rng(12);
  for (int s : {7, 25})
    for (int n = 1; n <= 8; ++n) {
      const auto r = build_Rn(FormSpec::make(n, s));
      for (const auto& t : points(rng, 2 * n, 10)) CHECK(evaluate(r, -t - n) == -evaluate(r, t));
      for (int j = 1; j <= n; ++j) {
        CHECK(evaluate(r, ExactRational(j)) == 0);
        CHECK(evaluate(r, make_rational(2 * j - 1, 2)) == 0);
      }
    }
}

TEST_CASE("decomposition against an interpolation solve") {
  for (auto [n, s] : std::vector<std::pair<int, int>>{{1, 7}, {2, 7}, {3, 7}, {1, 9}, {2, 9}}) {
    const auto table = decompose_Rn(FormSpec::make(n, s));
    const auto solved = table_by_solve(n, s);
    int idx = 0;
    for (int i = 1; i <= s; ++i)
      for (int k = 0; k <= n; ++k) CHECK(table.at(i, k) == solved[idx++]);
  }
}

TEST_CASE("decomposition against the explicit multi-sum coefficient formula") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const int q = std::uniform_int_distribution<int>(1, std::min(4, n + 1))(rng);
    std::vector<int> ks(n + 1);
    for (int j = 0; j <= n; ++j) ks[j] = j;
    std::shuffle(ks.begin(), ks.end(), rng);
    ks.resize(q);
    std::vector<int> mult(q);
    std::vector<LinearFactor> den;
    for (int j = 0; j < q; ++j) {
      mult[j] = std::uniform_int_distribution<int>(1, 4)(rng);
      den.push_back({-ks[j], mult[j]});
    }
    const FactoredRational f(ExactRational(1), {}, den);
    const auto table = decompose(f);
    int total = 0;
    for (int m : mult) total += m;
    const ExactRational d = lcm_upto(n);
    for (int j = 0; j < q; ++j)
      for (int i = 1; i <= mult[j]; ++i) {
        CHECK(table.at(i, ks[j]) == multisum_coefficient(ks, mult, j, i));
        CHECK(is_integer(pow(d, total - i) * table.at(i, ks[j])));
      }
  }
}

TEST_CASE("reconstruction at more points than the degree") {
  std::mt19937_64 rng(14);
  for (int s : {7, 25})
    for (int n = 1; n <= 5; ++n) {
      const FormSpec spec = FormSpec::make(n, s);
      const auto r = build_Rn(spec);
      const auto table = decompose_Rn(spec);
      for (const auto& t : points(rng, n, s * (n + 1) + 6 * n + 3))
        REQUIRE(table.evaluate(t) == evaluate(r, t));
    }
}

TEST_CASE("random proper functions reconstruct") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<long> root_num(-40, 40), root_den(1, 6);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 6)(rng);
    std::vector<LinearFactor> den;
    int degree = 0;
    for (int k = 0; k <= n; ++k) {
      const int m = std::uniform_int_distribution<int>(0, 3)(rng);
      if (m > 0 || k == n) {
        den.push_back({-k, std::max(m, 1)});
        degree += std::max(m, 1);
      }
    }
    std::vector<LinearFactor> num;
    const int ndeg = std::uniform_int_distribution<int>(0, degree - 1)(rng);
    for (int j = 0; j < ndeg; ++j) num.push_back({make_rational(root_num(rng), root_den(rng)), 1});
    const FactoredRational f(make_rational(root_num(rng) + 41, 7), num, den);
    const auto table = decompose(f);
    for (const auto& t : points(rng, n, 12)) CHECK(table.evaluate(t) == evaluate(f, t));
  }
}

TEST_CASE("decompose rejects what it cannot represent") {
  const FactoredRational improper(ExactRational(1), {{1, 1}, {2, 1}}, {{0, 2}});
  CHECK_THROWS_AS(decompose(improper), std::invalid_argument);
  const FactoredRational half_pole(ExactRational(1), {}, {{make_rational(-1, 2), 1}});
  CHECK_THROWS_AS(decompose(half_pole), std::invalid_argument);
  const FactoredRational positive_pole(ExactRational(1), {}, {{3, 1}});
  CHECK_THROWS_AS(decompose(positive_pole), std::invalid_argument);
}

TEST_CASE("the six bricks") {
  CHECK_THROWS_AS(brick_kind(0), std::invalid_argument);
  CHECK_THROWS_AS(brick_kind(7), std::invalid_argument);
  for (int kind = 1; kind <= 6; ++kind)
    for (int n = 0; n <= 10; ++n) {
      const BrickKind bk = brick_kind(kind);
      const auto f = brick_rational(bk, n);
      const auto closed = brick_table(bk, n);
      CHECK(decompose(f) == closed);
      for (int k = 0; k <= n; ++k) CHECK(closed.at(1, k) == brick_residue(f, k));
      CHECK(check_lemma1(closed).passed);
    }
}

TEST_CASE("products of two bricks keep Lemma 1 integrality") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const auto a = brick_rational(brick_kind(std::uniform_int_distribution<int>(1, 6)(rng)), n);
    const auto b = brick_rational(brick_kind(std::uniform_int_distribution<int>(1, 6)(rng)), n);
    CHECK(check_lemma1(decompose(a * b)).passed);
  }
}

TEST_CASE("Lemma 1 and symmetry on the summand tables") {
  for (int s : {7, 25})
    for (int n = 1; n <= 8; ++n) {
      const auto table = decompose_Rn(FormSpec::make(n, s));
      CHECK(check_lemma1(table).passed);
      const auto sym = check_symmetry(table);
      CHECK(sym.passed);
      CHECK(sym.nonzero_column_sums.empty());
      for (int i = 1; i <= s; ++i)
        for (int k = 0; k <= n; ++k)
          CHECK(table.at(i, k) == (i % 2 ? 1 : -1) * table.at(i, n - k));
      CHECK(column_sum(table, 1) == 0);
      for (int i = 2; i <= s; i += 2) CHECK(column_sum(table, i) == 0);
    }
}

TEST_CASE("a perturbed entry is caught by Lemma 1 and the mirror check") {
  const FormSpec spec = FormSpec::make(4, 7);
  const auto table = decompose_Rn(spec);
  const ExactRational eps = make_rational(1, pow(ExactRational(lcm_upto(4)), 7).get_num() * 5);
  const auto bad = table.with_perturbation(3, 1, eps);
  const auto l1 = check_lemma1(bad);
  CHECK_FALSE(l1.passed);
  REQUIRE(l1.failures().size() == 1);
  CHECK(l1.failures()[0].i == 3);
  CHECK(l1.failures()[0].k == 1);
  CHECK_FALSE(check_symmetry(bad).passed);
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
}
