#include "doctest.h"

#include <stdexcept>

#include "jlab/numthy.hpp"

using namespace jlab::numthy;

TEST_CASE("primality and factorization basics") {
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));  // 7*13

    CHECK(factorize(12) == std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {3, 1}});
    CHECK(factorize(97) == std::vector<std::pair<std::uint64_t, int>>{{97, 1}});

    CHECK(is_prime_power(9) == std::pair<std::uint64_t, int>{3, 2});
    CHECK(is_prime_power(32) == std::pair<std::uint64_t, int>{2, 5});
    CHECK_FALSE(is_prime_power(1).has_value());
    CHECK_FALSE(is_prime_power(12).has_value());

    for (std::uint64_t n = 2; n <= 5000; ++n) {
        std::uint64_t back = 1;
        for (auto [p, e] : factorize(n))
            for (int i = 0; i < e; ++i) back *= p;
        CHECK(back == n);
    }
}

TEST_CASE("largest prime below n and the Bertrand bound") {
    CHECK(largest_prime_leq(10) == 7);
    CHECK(largest_prime_leq(13) == 13);
    CHECK(largest_prime_leq(2) == 2);
    CHECK_THROWS_AS(largest_prime_leq(1), std::invalid_argument);

    for (std::uint64_t n = 2; n <= 3000; ++n) {
        std::uint64_t p = largest_prime_leq(n);
        CHECK(p <= n);
        CHECK(n < 2 * p);
    }
}

TEST_CASE("digit sums") {
    CHECK(digit_sum(2, 7) == 3);
    CHECK(digit_sum(3, 9) == 1);
    CHECK(digit_sum(10, 1234) == 10);
    CHECK(digit_sum(5, 0) == 0);
}

TEST_CASE("factorial valuation: both routes agree and match known values") {
    CHECK(legendre_exponent(2, 4) == 3);  // 4! = 24 = 2^3 * 3
    CHECK(legendre_exponent(3, 9) == 4);
    CHECK(legendre_exponent(5, 4) == 0);
    CHECK_THROWS_AS(legendre_exponent(6, 10), std::invalid_argument);

    // the implementation asserts route A == route B internally on each call
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
        for (std::uint64_t n = 0; n <= 2000; ++n) (void)legendre_exponent(p, n);

    // exponent of the largest prime <= n in n! is exactly 1
    for (std::uint64_t n = 2; n <= 3000; ++n)
        CHECK(legendre_exponent(largest_prime_leq(n), n) == 1);
}
