#include "oddzeta/ratfun.hpp"

#include <algorithm>
#include <map>

namespace oddzeta {

namespace {

using Series = std::vector<ExactRational>;

// s *= (c + u), truncated to s.size() terms.
void mul_linear(Series& s, const ExactRational& c) {
  for (std::size_t l = s.size(); l-- > 0;) {
    s[l] *= c;
    if (l > 0) s[l] += s[l - 1];
  }
}

Series mul_truncated(const Series& a, const Series& b) {
  Series out(a.size(), ExactRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// d^alpha for a series with d[0] != 0, by F' d = alpha d' F.
Series power(const Series& d, long alpha) {
  const std::size_t len = d.size();
  Series f(len, ExactRational(0));
  f[0] = pow(d[0], alpha);
  for (std::size_t m = 1; m < len; ++m) {
    ExactRational acc = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      if (d[j] == 0) continue;
      const long w = (alpha + 1) * static_cast<long>(j) - static_cast<long>(m);
      acc += ExactRational(w) * d[j] * f[m - j];
    }
    f[m] = acc / (ExactRational(static_cast<long>(m)) * d[0]);
  }
  return f;
}

std::vector<LinearFactor> merge(std::vector<LinearFactor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const LinearFactor& a, const LinearFactor& b) { return a.root < b.root; });
  std::vector<LinearFactor> out;
  for (auto& f : factors) {
    if (f.multiplicity < 0) throw std::invalid_argument("negative factor multiplicity");
    if (f.multiplicity == 0) continue;
    if (!out.empty() && out.back().root == f.root) {
      out.back().multiplicity += f.multiplicity;
    } else {
      out.push_back(std::move(f));
    }
  }
  return out;
}

int degree(const std::vector<LinearFactor>& fs) {
  int d = 0;
  for (const auto& f : fs) d += f.multiplicity;
  return d;
}

ExactRational half(long twice) { return make_rational(twice, 2); }

}  // namespace

FormSpec FormSpec::make(int n, int s) {
  if (n < 1) throw std::invalid_argument("FormSpec: n must be >= 1");
  if (s < 7 || s % 2 == 0) throw std::invalid_argument("FormSpec: s must be odd and >= 7");
  return FormSpec{n, s};
}

PoleError::PoleError(const ExactRational& t)
    : std::domain_error("evaluation at a pole t = " + to_string(t)), where_(t) {}

FactoredRational::FactoredRational(ExactRational scalar, std::vector<LinearFactor> numerator,
                                   std::vector<LinearFactor> denominator)
    : scalar_(std::move(scalar)) {
  scalar_.canonicalize();
  auto num = merge(std::move(numerator));
  auto den = merge(std::move(denominator));
  for (auto& nf : num) {
    auto it = std::find_if(den.begin(), den.end(),
                           [&](const LinearFactor& d) { return d.root == nf.root; });
    if (it == den.end()) continue;
    const int common = std::min(nf.multiplicity, it->multiplicity);
    nf.multiplicity -= common;
    it->multiplicity -= common;
  }
  numerator_ = merge(std::move(num));
  denominator_ = merge(std::move(den));
  if (scalar_ == 0) numerator_.clear(), denominator_.clear();
}

int FactoredRational::numerator_degree() const { return degree(numerator_); }
int FactoredRational::denominator_degree() const { return degree(denominator_); }

FactoredRational FactoredRational::operator*(const FactoredRational& other) const {
  auto num = numerator_;
  num.insert(num.end(), other.numerator_.begin(), other.numerator_.end());
  auto den = denominator_;
  den.insert(den.end(), other.denominator_.begin(), other.denominator_.end());
  return FactoredRational(scalar_ * other.scalar_, std::move(num), std::move(den));
}

ExactRational evaluate(const FactoredRational& f, const ExactRational& t) {
  ExactRational den = 1;
  for (const auto& d : f.denominator()) {
    const ExactRational v = t - d.root;
    if (v == 0) throw PoleError(t);
    den *= pow(v, d.multiplicity);
  }
  ExactRational num = f.scalar();
  for (const auto& nf : f.numerator()) num *= pow(t - nf.root, nf.multiplicity);
  return num / den;
}

namespace {

ExactRational rn_scalar(const FormSpec& spec) {
  ExactInteger fac_pow;
  mpz_pow_ui(fac_pow.get_mpz_t(), factorial(spec.n).get_mpz_t(), spec.s - 5);
  ExactInteger two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 6 * spec.n);
  return ExactRational(two_pow * fac_pow);
}

}  // namespace

FactoredRational build_Rn(const FormSpec& spec) {
  const int n = spec.n;
  std::vector<LinearFactor> num;
  for (int j = 1; j <= n; ++j) {
    num.push_back({ExactRational(j), 1});
    num.push_back({ExactRational(-(n + j)), 1});
  }
  for (int j = 1; j <= 3 * n; ++j) num.push_back({half(2L * n + 1 - 2L * j), 1});
  std::vector<LinearFactor> den;
  for (int j = 0; j <= n; ++j) den.push_back({ExactRational(-j), spec.s});
  return FactoredRational(rn_scalar(spec), std::move(num), std::move(den));
}

FactoredRational build_Rn_second_line(const FormSpec& spec) {
  const int n = spec.n;
  std::vector<LinearFactor> num;
  for (int j = 0; j <= 6 * n; ++j) num.push_back({half(2L * n - j), 1});
  std::vector<LinearFactor> den;
  for (int j = 0; j <= n; ++j) den.push_back({ExactRational(-j), spec.s + 1});
  return FactoredRational(rn_scalar(spec), std::move(num), std::move(den));
}

PartialFractionTable::PartialFractionTable(int n, int order, std::vector<ExactRational> coeffs,
                                           std::optional<FormSpec> spec)
    : n_(n), order_(order), coeffs_(std::move(coeffs)), spec_(spec) {
  if (n < 0 || order < 1) throw std::invalid_argument("PartialFractionTable: bad shape");
  if (coeffs_.size() != static_cast<std::size_t>(order) * (n + 1))
    throw std::invalid_argument("PartialFractionTable: coefficient count mismatch");
}

std::size_t PartialFractionTable::index(int i, int k) const {
  if (i < 1 || i > order_ || k < 0 || k > n_)
    throw std::out_of_range("PartialFractionTable index");
  return static_cast<std::size_t>(i - 1) * (n_ + 1) + k;
}

const ExactRational& PartialFractionTable::at(int i, int k) const { return coeffs_[index(i, k)]; }

ExactRational PartialFractionTable::evaluate(const ExactRational& t) const {
  ExactRational total = 0;
  for (int k = 0; k <= n_; ++k) {
    const ExactRational base = t + k;
    if (base == 0) {
      for (int i = 1; i <= order_; ++i)
        if (at(i, k) != 0) throw PoleError(t);
      continue;
    }
    const ExactRational inv = 1 / base;
    ExactRational p = inv;
    for (int i = 1; i <= order_; ++i) {
      total += at(i, k) * p;
      p *= inv;
    }
  }
  return total;
}

PartialFractionTable PartialFractionTable::with_perturbation(int i, int k,
                                                             const ExactRational& delta) const {
  PartialFractionTable copy = *this;
  copy.coeffs_[index(i, k)] += delta;
  return copy;
}

PartialFractionTable decompose(const FactoredRational& f) {
  if (f.numerator_degree() >= f.denominator_degree())
    throw std::invalid_argument("decompose: numerator degree must be below denominator degree");

  int n = 0;
  int order = 1;
  for (const auto& d : f.denominator()) {
    if (!is_integer(d.root) || d.root > 0)
      throw std::invalid_argument("decompose: poles must lie at t = -k, k >= 0 integer");
    n = std::max(n, static_cast<int>(-d.root.get_num().get_si()));
    order = std::max(order, d.multiplicity);
  }

  std::vector<ExactRational> coeffs(static_cast<std::size_t>(order) * (n + 1), ExactRational(0));
  for (const auto& pole : f.denominator()) {
    const int k = static_cast<int>(-pole.root.get_num().get_si());
    const std::size_t len = static_cast<std::size_t>(pole.multiplicity);

    // Expansion in u = t + k of f(t) (t+k)^m.
    Series g(len, ExactRational(0));
    g[0] = f.scalar();
    const ExactRational centre = -k;
    for (const auto& nf : f.numerator())
      for (int rep = 0; rep < nf.multiplicity; ++rep) mul_linear(g, centre - nf.root);

    std::map<int, Series> by_multiplicity;
    for (const auto& other : f.denominator()) {
      if (other.root == pole.root) continue;
      auto [it, fresh] = by_multiplicity.try_emplace(other.multiplicity, len, ExactRational(0));
      if (fresh) it->second[0] = 1;
      mul_linear(it->second, centre - other.root);
    }
    for (const auto& [mult, product] : by_multiplicity) g = mul_truncated(g, power(product, -mult));

    for (int i = 1; i <= pole.multiplicity; ++i)
      coeffs[static_cast<std::size_t>(i - 1) * (n + 1) + k] = g[pole.multiplicity - i];
  }
  return PartialFractionTable(n, order, std::move(coeffs));
}

PartialFractionTable decompose_Rn(const FormSpec& spec) {
  PartialFractionTable t = decompose(build_Rn(spec));
  std::vector<ExactRational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(t.order()) * (t.n() + 1));
  for (int i = 1; i <= t.order(); ++i)
    for (int k = 0; k <= t.n(); ++k) coeffs.push_back(t.at(i, k));
  return PartialFractionTable(t.n(), t.order(), std::move(coeffs), spec);
}

BrickKind brick_kind(int index) {
  if (index < 1 || index > 6) throw std::invalid_argument("brick kind must be in 1..6");
  return static_cast<BrickKind>(index);
}

FactoredRational brick_rational(BrickKind kind, int n) {
  if (n < 0) throw std::invalid_argument("brick: n must be >= 0");
  std::vector<LinearFactor> den;
  for (int j = 0; j <= n; ++j) den.push_back({ExactRational(-j), 1});
  std::vector<LinearFactor> num;
  ExactRational scalar = 1;
  ExactInteger four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, n);
  switch (kind) {
    case BrickKind::factorial:
      scalar = ExactRational(factorial(n));
      break;
    case BrickKind::falling:
      for (int j = 1; j <= n; ++j) num.push_back({ExactRational(j), 1});
      break;
    case BrickKind::shifted:
      for (int j = 1; j <= n; ++j) num.push_back({ExactRational(-(n + j)), 1});
      break;
    case BrickKind::half_falling:
      scalar = ExactRational(four_pow);
      for (int j = 1; j <= n; ++j) num.push_back({half(2L * j - 1), 1});
      break;
    case BrickKind::half_rising:
      scalar = ExactRational(four_pow);
      for (int j = 1; j <= n; ++j) num.push_back({half(1 - 2L * j), 1});
      break;
    case BrickKind::half_shifted:
      scalar = ExactRational(four_pow);
      for (int j = 1; j <= n; ++j) num.push_back({half(1 - 2L * n - 2L * j), 1});
      break;
    default:
      throw std::invalid_argument("unknown brick kind");
  }
  return FactoredRational(std::move(scalar), std::move(num), std::move(den));
}

PartialFractionTable brick_table(BrickKind kind, int n) {
  if (n < 0) throw std::invalid_argument("brick: n must be >= 0");
  std::vector<ExactRational> coeffs;
  for (int k = 0; k <= n; ++k) {
    const int sign_k = (k % 2 == 0) ? 1 : -1;
    const int sign_nk = ((n + k) % 2 == 0) ? 1 : -1;
    ExactInteger v;
    switch (kind) {
      case BrickKind::factorial:
        v = sign_k * binomial(n, k);
        break;
      case BrickKind::falling:
        v = sign_nk * binomial(n + k, n) * binomial(n, k);
        break;
      case BrickKind::shifted:
        v = sign_k * binomial(2 * n - k, n) * binomial(n, k);
        break;
      case BrickKind::half_falling:
        v = sign_nk * binomial(2 * n + 2 * k, 2 * n) * binomial(2 * n, n + k);
        break;
      case BrickKind::half_rising:
        v = binomial(2 * k, k) * binomial(2 * n - 2 * k, n - k);
        break;
      case BrickKind::half_shifted:
        v = sign_k * binomial(4 * n - 2 * k, 2 * n) * binomial(2 * n, k);
        break;
      default:
        throw std::invalid_argument("unknown brick kind");
    }
    coeffs.emplace_back(v);
  }
  return PartialFractionTable(n, 1, std::move(coeffs));
}

std::vector<CoefficientVerdict> Lemma1Report::failures() const {
  std::vector<CoefficientVerdict> out;
  for (const auto& e : entries)
    if (!e.pass) out.push_back(e);
  return out;
}

Lemma1Report check_lemma1(const PartialFractionTable& table) {
  Lemma1Report report;
  report.dn = table.n() >= 1 ? lcm_upto(table.n()) : ExactInteger(1);
  for (int i = 1; i <= table.order(); ++i) {
    ExactInteger scale;
    mpz_pow_ui(scale.get_mpz_t(), report.dn.get_mpz_t(), table.order() - i);
    for (int k = 0; k <= table.n(); ++k) {
      const bool ok = is_integer(ExactRational(scale) * table.at(i, k));
      report.entries.push_back({i, k, ok});
      report.passed = report.passed && ok;
    }
  }
  return report;
}

ExactRational column_sum(const PartialFractionTable& table, int i) {
  ExactRational total = 0;
  for (int k = 0; k <= table.n(); ++k) total += table.at(i, k);
  return total;
}

SymmetryReport check_symmetry(const PartialFractionTable& table) {
  SymmetryReport report;
  const int n = table.n();
  for (int i = 1; i <= table.order(); ++i) {
    const int sign = (i % 2 == 1) ? 1 : -1;
    for (int k = 0; k <= n; ++k) {
      const bool ok = table.at(i, k) == sign * table.at(i, n - k);
      report.mirror.push_back({i, k, ok});
      report.passed = report.passed && ok;
    }
    if ((i % 2 == 0 || i == 1) && column_sum(table, i) != 0) {
      report.nonzero_column_sums.push_back(i);
      report.passed = false;
    }
  }
  return report;
}

std::string to_string(const ExactRational& x) { return x.get_str(); }

}  // namespace oddzeta
