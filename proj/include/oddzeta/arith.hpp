#pragma once

// Exact integer and rational primitives.
//
// ExactInteger and ExactRational are GMP values. Every ExactRational that
// leaves this library is canonical: lowest terms, positive denominator.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

namespace oddzeta {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument on den == 0.
ExactRational make_rational(const ExactInteger& num, const ExactInteger& den);

bool is_integer(const ExactRational& x);

/// d_n = lcm(1, ..., n) by incremental lcm. Rejects n == 0.
ExactInteger lcm_upto(std::uint32_t n);

/// d_n as the product of p^floor(log_p n) over primes p <= n.
ExactInteger lcm_upto_sieve(std::uint32_t n);

/// d_1, ..., d_n in one pass; element m-1 holds d_m.
std::vector<ExactInteger> lcm_prefix(std::uint32_t n);

/// Primes <= n (Eratosthenes).
std::vector<std::uint32_t> primes_upto(std::uint32_t n);

/// C(n, k); zero when k < 0 or k > n.
ExactInteger binomial(std::int64_t n, std::int64_t k);

ExactInteger factorial(std::uint32_t n);

/// B_0..B_m with B_1 = -1/2, from sum_{j=0}^{m} C(m+1, j) B_j = 0.
std::vector<ExactRational> bernoulli_list(std::uint32_t m);

/// Shared, lazily grown Bernoulli table holding at least B_0..B_m.
/// Safe to call concurrently.
std::shared_ptr<const std::vector<ExactRational>> bernoulli_cached(std::uint32_t m);

ExactRational pow(const ExactRational& x, std::int64_t e);

/// log2|x| to within +-2; for working-precision planning only. x != 0.
long log2_estimate(const ExactRational& x);

}  // namespace oddzeta
