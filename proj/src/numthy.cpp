#include "jlab/numthy.hpp"

#include <stdexcept>

namespace jlab::numthy {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) n /= d, ++e;
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::optional<std::pair<std::uint64_t, int>> is_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

std::uint64_t largest_prime_leq(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("largest_prime_leq: n must be >= 2");
    for (std::uint64_t m = n;; --m)
        if (is_prime(m)) return m;
}

std::uint64_t digit_sum(std::uint64_t p, std::uint64_t n) {
    if (p < 2) throw std::invalid_argument("digit_sum: base must be >= 2");
    std::uint64_t s = 0;
    while (n) {
        s += n % p;
        n /= p;
    }
    return s;
}

std::uint64_t legendre_exponent(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) throw std::invalid_argument("legendre_exponent: p must be prime");
    std::uint64_t a = 0;
    for (std::uint64_t q = p; q <= n; q *= p) {
        a += n / q;
        if (q > n / p) break;  // next q would overflow past n anyway
    }
    std::uint64_t b = (n - digit_sum(p, n)) / (p - 1);
    if (a != b) throw std::logic_error("legendre_exponent: the two evaluation routes disagree");
    return a;
}

}  // namespace jlab::numthy
