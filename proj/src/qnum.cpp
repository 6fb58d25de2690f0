#include "mixgauss/qnum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mixgauss/errors.hpp"

namespace mixgauss::qnum {

namespace {

void require_base(unsigned q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
}

// q^n - 1
Nat q_power_minus_one(unsigned n, unsigned q) { return pow_nat(q, n) - 1; }

void exact_divide(Nat& value, const Nat& divisor) {
    Nat quotient;
    Nat remainder;
    boost::multiprecision::divide_qr(value, divisor, quotient, remainder);
    if (remainder != 0) throw InconsistencyError("q-binomial partial product is not divisible");
    value = std::move(quotient);
}

}  // namespace

Nat q_integer(unsigned n, unsigned q) {
    require_base(q);
    Nat r = q_power_minus_one(n, q);
    exact_divide(r, Nat(q - 1));
    return r;
}

Nat q_factorial(unsigned n, unsigned q) {
    require_base(q);
    Nat r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= q_integer(i, q);
    return r;
}

Nat q_binomial(unsigned n, unsigned k, unsigned q) {
    require_base(q);
    if (k > n) return 0;
    Nat r = 1;
    for (unsigned i = 0; i < k; ++i) {
        // r becomes [n choose i+1]_q
        r *= q_power_minus_one(n - i, q);
        exact_divide(r, q_power_minus_one(i + 1, q));
    }
    return r;
}

Nat q_multinomial(unsigned n, std::span<const unsigned> parts, unsigned q) {
    require_base(q);
    const unsigned long long sum = std::accumulate(parts.begin(), parts.end(), 0ULL);
    if (sum > n) return 0;
    Nat r = 1;
    unsigned rest = n;
    for (unsigned part : parts) {
        r *= q_binomial(rest, part, q);
        rest -= part;
    }
    return r;
}

}  // namespace mixgauss::qnum
