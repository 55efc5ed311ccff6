#include "oddzeta/linear_forms.hpp"

namespace oddzeta {

namespace {

ExactInteger int_pow(const ExactInteger& b, unsigned long e) {
  ExactInteger r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

ExactInteger dn_or_one(int n) { return n >= 1 ? lcm_upto(n) : ExactInteger(1); }

// Column of inner sums S[k] for k = 0..kmax, built incrementally.
std::vector<ExactRational> harmonic_prefix(int kmax, int i) {
  std::vector<ExactRational> out(kmax + 1, ExactRational(0));
  for (int k = 1; k <= kmax; ++k) out[k] = out[k - 1] + pow(ExactRational(k), -i);
  return out;
}

}  // namespace

ExactRational harmonic(int k, int i) {
  ExactRational total = 0;
  for (int l = 1; l <= k; ++l) total += pow(ExactRational(l), -i);
  return total;
}

ExactRational half_harmonic_signed(int j, int i) {
  ExactRational total = 0;
  for (int l = 0; l <= j; ++l) total += pow(make_rational(2 * l + 1, 2), -i);
  return (i % 2 == 0) ? total : ExactRational(-total);
}

ExactRational half_harmonic(int j, int i) {
  ExactRational total = 0;
  for (int l = 1; l <= j; ++l) total += pow(make_rational(2 * l - 1, 2), -i);
  return total;
}

ZetaLinearForm zeta_coefficients(const PartialFractionTable& table) {
  if (!table.spec()) throw std::invalid_argument("zeta_coefficients: table has no FormSpec");
  const FormSpec spec = *table.spec();
  const int n = spec.n;
  const int s = spec.s;
  const int m = (n - 1) / 2;

  ZetaLinearForm form{spec, {}, ExactRational(0), ExactRational(0)};
  for (int i = 1; i <= s; ++i) {
    const ExactRational total = column_sum(table, i);
    if (i % 2 == 0 || i == 1) {
      if (total != 0)
        throw TableInvariantError("column sum for i = " + std::to_string(i) + " is nonzero");
    } else {
      form.a.emplace(i, total);
    }
  }

  // r_n: a0 = -sum_i sum_k a_{i,k} sum_{l=1}^{k} l^{-i}
  for (int i = 1; i <= s; ++i) {
    const auto h = harmonic_prefix(n, i);
    for (int k = 1; k <= n; ++k) form.a0 -= table.at(i, k) * h[k];
  }

  // r^_n, summation started at nu = -m:
  //   sum_{k=0}^{m} a_{i,k} sum_{l=0}^{m-k} (-1)^i (l+1/2)^{-i}
  // - sum_{k=m+1}^{n} a_{i,k} sum_{l=1}^{k-m-1} (l-1/2)^{-i}
  for (int i = 1; i <= s; ++i) {
    for (int k = 0; k <= m; ++k) form.a0hat += table.at(i, k) * half_harmonic_signed(m - k, i);
    for (int k = m + 1; k <= n; ++k) form.a0hat -= table.at(i, k) * half_harmonic(k - m - 1, i);
  }
  return form;
}

ExactRational combined_coefficient(const ZetaLinearForm& form, int i) {
  const ExactRational& ai = form.a.at(i);
  ExactInteger twist;
  mpz_ui_pow_ui(twist.get_mpz_t(), 2, i);
  twist -= 1;
  return 7 * ai - ExactRational(twist) * ai;
}

CombinedForm combine(const ZetaLinearForm& form) {
  CombinedForm out{form.spec, {}, 7 * form.a0 - form.a0hat};
  for (const auto& [i, ai] : form.a) {
    if (i == 3) {
      if (combined_coefficient(form, 3) != 0) throw std::logic_error("zeta(3) slot survived");
      continue;
    }
    out.c.emplace(i, combined_coefficient(form, i));
  }
  return out;
}

Lemma3Report check_lemma3(const ZetaLinearForm& form) {
  const int n = form.spec.n;
  const int s = form.spec.s;
  const int m = (n - 1) / 2;
  Lemma3Report report;
  report.dn = lcm_upto(n);

  auto record = [&](std::vector<InclusionVerdict>& into, InclusionVerdict v) {
    report.passed = report.passed && v.pass;
    into.push_back(std::move(v));
  };

  for (const auto& [i, ai] : form.a) {
    const bool ok = is_integer(ExactRational(int_pow(report.dn, s - i)) * ai);
    record(report.coefficients, {"a_i", i, -1, ok});
  }
  const ExactRational dns(int_pow(report.dn, s));
  record(report.coefficients, {"a0", 0, -1, is_integer(dns * form.a0)});
  record(report.coefficients, {"a0hat", 0, -1, is_integer(dns * form.a0hat)});

  const ExactInteger dn1 = dn_or_one(n - 1);
  for (int i = 1; i <= s; ++i) {
    const ExactRational dni(int_pow(report.dn, i));
    const ExactRational dn1i(int_pow(dn1, i));
    const auto h = harmonic_prefix(n, i);
    for (int k = 0; k <= n; ++k) record(report.inner_sums, {"H", i, k, is_integer(dni * h[k])});
    for (int k = 0; k <= m; ++k)
      record(report.inner_sums, {"Hhalf+", i, k, is_integer(dni * half_harmonic_signed(m - k, i))});
    for (int k = m + 1; k <= n; ++k)
      record(report.inner_sums, {"Hhalf-", i, k, is_integer(dn1i * half_harmonic(k - m - 1, i))});
  }
  return report;
}

CombinedIntegrality check_combined_integrality(const CombinedForm& form) {
  CombinedIntegrality out;
  const ExactInteger dn = lcm_upto(form.spec.n);
  out.c0_integral = is_integer(ExactRational(int_pow(dn, form.spec.s)) * form.c0);
  out.passed = out.c0_integral;
  for (const auto& [i, ci] : form.c) {
    const bool ok = is_integer(ExactRational(int_pow(dn, form.spec.s - i)) * ci);
    out.slots.push_back({"c_i", i, -1, ok});
    out.passed = out.passed && ok;
  }
  return out;
}

ExactInteger common_denominator(const ZetaLinearForm& form) {
  ExactInteger d = 1;
  auto fold = [&](const ExactRational& x) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  };
  for (const auto& [i, ai] : form.a) fold(ai);
  fold(form.a0);
  fold(form.a0hat);
  return d;
}

}  // namespace oddzeta
