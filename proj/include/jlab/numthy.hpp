#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace jlab::numthy {

bool is_prime(std::uint64_t n);

// Sorted (prime, exponent) pairs; requires n >= 2.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// (p, k) with n = p^k, or nullopt (1 is not a prime power).
std::optional<std::pair<std::uint64_t, int>> is_prime_power(std::uint64_t n);

// Largest prime <= n; requires n >= 2. Satisfies n < 2 * result (Bertrand).
std::uint64_t largest_prime_leq(std::uint64_t n);

// Sum of base-p digits of n; requires p >= 2.
std::uint64_t digit_sum(std::uint64_t p, std::uint64_t n);

// Exponent of prime p in n!. Evaluated by two routes, sum of floor(n/p^i)
// and (n - digit_sum_p(n)) / (p - 1), which must agree.
std::uint64_t legendre_exponent(std::uint64_t p, std::uint64_t n);

}  // namespace jlab::numthy
