#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace jlab {

// Exact arbitrary-precision integer for group orders. Ring sizes stay in
// native integers; automorphism orders like (|J|!)^c overflow 64 bits fast.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_factorial(unsigned long n) {
    BigInt r = 1;
    for (unsigned long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace jlab
