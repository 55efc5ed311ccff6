#pragma once

// Univariate rational functions with rational linear factors, the summand
// R_n(t) of the twisted well-poised series, and its partial-fraction table.

#include "oddzeta/arith.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddzeta {

/// Index n >= 1 and odd slot count s >= 7.
struct FormSpec {
  int n = 1;
  int s = 7;

  /// Validating constructor; throws std::invalid_argument.
  static FormSpec make(int n, int s);

  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

/// (t - root)^multiplicity
struct LinearFactor {
  ExactRational root;
  int multiplicity = 1;

  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

class PoleError : public std::domain_error {
 public:
  explicit PoleError(const ExactRational& t);
  const ExactRational& where() const noexcept { return where_; }

 private:
  ExactRational where_;
};

/// scalar * prod (t - r_j)^{m_j} / prod (t - r'_j)^{m'_j}
///
/// Normalized on construction: equal roots are merged, roots common to
/// numerator and denominator are cancelled, factors are sorted by root.
class FactoredRational {
 public:
  FactoredRational(ExactRational scalar, std::vector<LinearFactor> numerator,
                   std::vector<LinearFactor> denominator);

  const ExactRational& scalar() const noexcept { return scalar_; }
  const std::vector<LinearFactor>& numerator() const noexcept { return numerator_; }
  const std::vector<LinearFactor>& denominator() const noexcept { return denominator_; }

  int numerator_degree() const;
  int denominator_degree() const;

  FactoredRational operator*(const FactoredRational& other) const;

  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

 private:
  ExactRational scalar_;
  std::vector<LinearFactor> numerator_;
  std::vector<LinearFactor> denominator_;
};

/// Exact value at t; throws PoleError if t is a pole.
ExactRational evaluate(const FactoredRational& f, const ExactRational& t);

/// R_n(t) in its canonical factored form: scalar 2^{6n} n!^{s-5}, numerator
/// (t-j), (t+n+j) for j = 1..n and (t-n-1/2+j) for j = 1..3n, denominator
/// (t+j)^s for j = 0..n.
FactoredRational build_Rn(const FormSpec& spec);

/// The same function written as 2^{6n} n!^{s-5} prod_{j=0}^{6n} (t-n+j/2)
/// over prod_{j=0}^{n} (t+j)^{s+1}. Normalization reduces it to build_Rn.
FactoredRational build_Rn_second_line(const FormSpec& spec);

/// Coefficients a[i][k] of f(t) = sum_{i=1}^{order} sum_{k=0}^{n} a[i][k] / (t+k)^i.
class PartialFractionTable {
 public:
  PartialFractionTable(int n, int order, std::vector<ExactRational> coeffs,
                       std::optional<FormSpec> spec = std::nullopt);

  int n() const noexcept { return n_; }
  int order() const noexcept { return order_; }
  const std::optional<FormSpec>& spec() const noexcept { return spec_; }

  /// 1 <= i <= order, 0 <= k <= n.
  const ExactRational& at(int i, int k) const;

  ExactRational evaluate(const ExactRational& t) const;

  /// Copy with a[i][k] += delta (fault-injection hook).
  PartialFractionTable with_perturbation(int i, int k, const ExactRational& delta) const;

  friend bool operator==(const PartialFractionTable&, const PartialFractionTable&) = default;

 private:
  std::size_t index(int i, int k) const;

  int n_;
  int order_;
  std::vector<ExactRational> coeffs_;
  std::optional<FormSpec> spec_;
};

/// Partial fractions by exact truncated Laurent expansion at each pole.
///
/// Every pole must be at t = -k for an integer k >= 0; the table has
/// n = max k and order = max pole multiplicity. Throws std::invalid_argument
/// if the function is not proper or a pole is not a non-positive integer.
PartialFractionTable decompose(const FactoredRational& f);

/// decompose(build_Rn(spec)) tagged with spec.
PartialFractionTable decompose_Rn(const FormSpec& spec);

/// The six elementary simple-pole identities over prod_{j=0}^{n} (t+j).
enum class BrickKind {
  factorial = 1,      // n!
  falling = 2,        // prod (t-j)
  shifted = 3,        // prod (t+n+j)
  half_falling = 4,   // 2^{2n} prod (t+1/2-j)
  half_rising = 5,    // 2^{2n} prod (t-1/2+j)
  half_shifted = 6,   // 2^{2n} prod (t+n-1/2+j)
};

/// Throws std::invalid_argument unless 1 <= index <= 6.
BrickKind brick_kind(int index);

FactoredRational brick_rational(BrickKind kind, int n);

/// Closed-form binomial coefficients of the brick; order-1 table.
PartialFractionTable brick_table(BrickKind kind, int n);

struct CoefficientVerdict {
  int i;
  int k;
  bool pass;
};

/// d_n^{order-i} a[i][k] in Z for every entry.
struct Lemma1Report {
  ExactInteger dn;
  std::vector<CoefficientVerdict> entries;
  bool passed = true;
  std::vector<CoefficientVerdict> failures() const;
};

Lemma1Report check_lemma1(const PartialFractionTable& table);

/// a[i][k] = (-1)^{i-1} a[i][n-k]; sum_k a[i][k] = 0 for even i and for i = 1.
struct SymmetryReport {
  std::vector<CoefficientVerdict> mirror;  // one per (i, k)
  std::vector<int> nonzero_column_sums;    // i values that should sum to 0 and do not
  bool passed = true;
};

SymmetryReport check_symmetry(const PartialFractionTable& table);

/// sum_{k=0}^{n} a[i][k]
ExactRational column_sum(const PartialFractionTable& table, int i);

std::string to_string(const ExactRational& x);

}  // namespace oddzeta
