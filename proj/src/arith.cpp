#include "oddzeta/arith.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace oddzeta {

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const ExactRational& x) { return x.get_den() == 1; }

ExactInteger lcm_upto(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("lcm_upto: n must be >= 1");
  ExactInteger d = 1;
  for (std::uint32_t m = 2; m <= n; ++m) mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), m);
  return d;
}

std::vector<std::uint32_t> primes_upto(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
  }
  return out;
}

ExactInteger lcm_upto_sieve(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("lcm_upto_sieve: n must be >= 1");
  ExactInteger d = 1;
  for (std::uint32_t p : primes_upto(n)) {
    std::uint64_t pk = p;
    while (pk * p <= n) pk *= p;
    d *= static_cast<unsigned long>(pk);
  }
  return d;
}

std::vector<ExactInteger> lcm_prefix(std::uint32_t n) {
  std::vector<ExactInteger> out;
  out.reserve(n);
  ExactInteger d = 1;
  for (std::uint32_t m = 1; m <= n; ++m) {
    mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), m);
    out.push_back(d);
  }
  return out;
}

ExactInteger binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  ExactInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ExactInteger factorial(std::uint32_t n) {
  ExactInteger r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::vector<ExactRational> bernoulli_list(std::uint32_t m) {
  std::vector<ExactRational> b;
  b.reserve(m + 1);
  b.emplace_back(1);
  for (std::uint32_t j = 1; j <= m; ++j) {
    if (j > 1 && j % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    // sum_{i=0}^{j} C(j+1, i) B_i = 0
    ExactRational acc = 0;
    for (std::uint32_t i = 0; i < j; ++i) {
      if (b[i] == 0) continue;
      acc += ExactRational(binomial(j + 1, i)) * b[i];
    }
    ExactRational bj = -acc / ExactRational(j + 1);
    bj.canonicalize();
    b.push_back(std::move(bj));
  }
  return b;
}

std::shared_ptr<const std::vector<ExactRational>> bernoulli_cached(std::uint32_t m) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<ExactRational>> table;
  std::lock_guard lock(mu);
  if (!table || table->size() <= m) {
    std::uint32_t want = m;
    if (table) want = std::max<std::uint32_t>(m, 2 * static_cast<std::uint32_t>(table->size()));
    table = std::make_shared<const std::vector<ExactRational>>(bernoulli_list(want));
  }
  return table;
}

ExactRational pow(const ExactRational& x, std::int64_t e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("zero to a negative power");
    return pow(make_rational(x.get_den(), x.get_num()), -e);
  }
  ExactInteger num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

long log2_estimate(const ExactRational& x) {
  if (x == 0) throw std::domain_error("log2_estimate of zero");
  return static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
}

}  // namespace oddzeta
