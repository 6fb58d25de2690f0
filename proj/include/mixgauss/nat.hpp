#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mixgauss {

/// Arbitrary-precision integer used for counts. Every count is non-negative;
/// the signed backend only keeps intermediate differences well defined.
using Nat = boost::multiprecision::cpp_int;

inline Nat pow2(std::uint64_t exponent) {
    Nat r = 1;
    r <<= exponent;
    return r;
}

inline Nat pow_nat(unsigned base, std::uint64_t exponent) {
    Nat r = 1;
    Nat b = base;
    while (exponent != 0) {
        if (exponent & 1U) r *= b;
        b *= b;
        exponent >>= 1U;
    }
    return r;
}

inline std::string to_decimal(const Nat& n) { return n.str(); }

inline Nat parse_nat(const std::string& s) { return Nat(s); }

}  // namespace mixgauss
