#pragma once

// Rigorous evaluation of zeta values, of the series r_n and r^_n by direct
// summation of their exact terms, and of the zeta-basis linear forms.

#include "oddzeta/enclosure.hpp"
#include "oddzeta/linear_forms.hpp"

#include <map>
#include <optional>

namespace oddzeta {

/// Carries the best enclosure reached when a precision target is missed.
class PrecisionUnattainable : public std::runtime_error {
 public:
  PrecisionUnattainable(const std::string& what, Enclosure best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const Enclosure& best() const noexcept { return best_; }

 private:
  Enclosure best_;
};

/// Euler-Maclaurin with N - 1 explicit terms and M Bernoulli corrections.
/// The remainder is bounded by the first omitted correction term (real
/// argument > 1), which is added to the radius.
Enclosure zeta_value_em(int i, int cutoff, int corrections, mpfr_prec_t prec);

/// zeta(i) with radius <= 2^{-bits}; parameters chosen automatically.
/// Throws std::invalid_argument for i < 2.
Enclosure zeta_value(int i, long bits);

/// zeta(i) for odd i in 3..s, radius <= 2^{-bits} each.
std::map<int, Enclosure> odd_zeta_values(int s, long bits);

enum class Grid { integer, half };

/// Terms of r_n (integer grid, c_k = R_n(n+1+k)) and of r^_n (half grid,
/// c^_k = R_n(n+1/2+k)); every term is an exact positive rational.
class SummandSequence {
 public:
  SummandSequence(FormSpec spec, Grid grid);

  const FormSpec& spec() const noexcept { return spec_; }
  Grid grid() const noexcept { return grid_; }

  ExactRational term(long k) const;

  /// Certified upper bound for sum_{j >= k} term(j).
  ExactRational tail_bound(long k) const;

 private:
  FormSpec spec_;
  Grid grid_;
  ExactInteger factorial_power_;  // n!^{s-5}
  ExactInteger leading_;          // 2^{6n} n!^{s-5}
};

/// Closed form of c_{k+1}/c_k:
/// (k+3n+3/2)(k+3n+2) / ((k+1)(k+3/2)) * ((k+n+1)/(k+2n+2))^{s+1}.
ExactRational consecutive_ratio_closed(const FormSpec& spec, long k);

/// Closed form of c_k/c^_k:
/// (6n+2k+2)/(2k+1) * (2^{-2(n+1)} C(4n+2k+2, 2n+k+1) / C(2n+2k, n+k))^{s+1}.
ExactRational cross_ratio_closed(const FormSpec& spec, long k);

struct SeriesSum {
  Enclosure value;
  long cutoff = 0;      // number of explicit terms
  ExactRational tail;   // certified bound on the omitted terms
};

/// r_n or r^_n with relative radius <= 10^{-digits}. Throws
/// PrecisionUnattainable when max_cutoff terms do not suffice.
SeriesSum sum_series(const SummandSequence& seq, int digits, long max_cutoff = 1L << 22);

/// sum_{odd i} a_i zeta(i) + a0 at a relative radius <= 10^{-digits}, with
/// the working precision raised until the target is met.
Enclosure evaluate_r_basis(const ZetaLinearForm& form, int digits);
Enclosure evaluate_rhat_basis(const ZetaLinearForm& form, int digits);
Enclosure evaluate_delta_basis(const CombinedForm& form, int digits);

/// Same, with the zeta(3) coefficient of the combined form replaced by
/// `zeta3_coeff` (zero for the genuine form).
Enclosure evaluate_delta_basis(const CombinedForm& form, int digits,
                               const ExactRational& zeta3_coeff, const Enclosure& zeta3);

struct DeltaEvaluation {
  FormSpec spec;
  std::optional<Enclosure> basis;   // zeta-basis route
  std::optional<Enclosure> direct;  // 7 * sum c_k - sum c^_k
  std::optional<Enclosure> r_direct;
  std::optional<Enclosure> rhat_direct;

  /// Preferred value: basis if present, else direct.
  const Enclosure& value() const;
  /// Both routes present and overlapping.
  bool routes_agree() const;
};

struct DeltaOptions {
  int digits = 40;
  bool use_basis = true;
  bool use_direct = true;
  long max_cutoff = 1L << 22;
};

DeltaEvaluation delta(const FormSpec& spec, const DeltaOptions& options);
DeltaEvaluation delta(const CombinedForm& form, const DeltaOptions& options);

/// (1/n) log(d_n^s * delta). Throws EnclosureDomainError unless delta is
/// certified positive.
Enclosure normalized_decay(const FormSpec& spec, const Enclosure& delta_value);

/// log(x) for an exact positive integer.
Enclosure log_exact(const ExactInteger& x, mpfr_prec_t prec);

}  // namespace oddzeta
