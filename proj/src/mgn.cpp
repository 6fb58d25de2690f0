#include "mixgauss/mgn.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mixgauss/errors.hpp"
#include "mixgauss/qnum.hpp"

namespace mixgauss {

std::string to_string(const TypeProfile& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TypeProfile& p) {
    return os << '(' << p.alpha << ',' << p.beta << ';' << p.k0 << ',' << p.k1 << ',' << p.k2 << ',' << p.k3
              << ')';
}

}  // namespace mixgauss

namespace mixgauss::mgn {

DeltaExponents delta_exponents(const TypeProfile& p) {
    const auto a = static_cast<std::int64_t>(p.alpha);
    const auto b = static_cast<std::int64_t>(p.beta);
    const auto k0 = static_cast<std::int64_t>(p.k0);
    const auto k1 = static_cast<std::int64_t>(p.k1);
    const auto k2 = static_cast<std::int64_t>(p.k2);
    const auto k3 = static_cast<std::int64_t>(p.k3);
    const std::int64_t free = b - (k1 + k2 + k3);
    DeltaExponents d;
    d.delta = k0 * free + k1 * (a - k0 + 2 * free + k3) + k2 * (free + (a - k0));
    d.delta_bar = k1 * (a - k0) + free * (k0 + 2 * k1 + k2) + k3 * (k1 + k0);
    return d;
}

CountBreakdown count_product(const TypeProfile& p) {
    CountBreakdown out;
    if (!p.valid()) return out;

    const unsigned a = p.alpha;
    const unsigned b = p.beta;
    const unsigned k0 = p.k0, k1 = p.k1, k2 = p.k2, k3 = p.k3;

    // Generators picked from the whole ambient space.
    for (unsigned i = 0; i < k0; ++i) out.n1 *= (pow2(a) - pow2(i)) * pow2(b);
    for (unsigned i = 0; i < k1; ++i) out.n2 *= (pow2(3ULL * b) - pow2(2ULL * b + i)) * pow2(a);
    for (unsigned i = 0; i < k2; ++i) out.n3 *= (pow2(2ULL * b) - pow2(b + k1 + i)) * pow2(a);
    for (unsigned i = 0; i < k3; ++i) out.n4 *= pow2(b) - pow2(k2 + k1 + i);

    // Generators picked inside one code of the type.
    for (unsigned i = 0; i < k0; ++i) out.d1 *= pow2(k0 + k1 + k2 + k3) - pow2(k1 + k2 + k3 + i);
    for (unsigned i = 0; i < k1; ++i) out.d2 *= (pow2(3ULL * k1) - pow2(2ULL * k1 + i)) * pow2(k0 + 2 * k2 + k3);
    for (unsigned i = 0; i < k2; ++i) out.d3 *= (pow2(2ULL * k2) - pow2(k2 + i)) * pow2(k0 + 2 * k1 + k3);
    for (unsigned i = 0; i < k3; ++i) out.d4 *= pow2(k1 + k2 + k3) - pow2(k1 + k2 + i);

    const Nat numerator = out.n1 * out.n2 * out.n3 * out.n4;
    const Nat denominator = out.d1 * out.d2 * out.d3 * out.d4;
    Nat remainder;
    boost::multiprecision::divide_qr(numerator, denominator, out.total, remainder);
    if (remainder != 0) throw InconsistencyError("product count is not an integer for " + to_string(p));
    return out;
}

Nat count_closed_form(const TypeProfile& p) {
    if (!p.valid()) return 0;
    const auto d = delta_exponents(p);
    const std::array<unsigned, 3> parts{p.k1, p.k2, p.k3};
    return pow2(static_cast<std::uint64_t>(d.delta)) * qnum::q_binomial(p.alpha, p.k0, 2) *
           qnum::q_multinomial(p.beta, parts, 2);
}

Nat count(const TypeProfile& p) {
    Nat closed = count_closed_form(p);
    const CountBreakdown product = count_product(p);
    if (closed != product.total) {
        throw InconsistencyError("count formulas disagree at " + to_string(p) + ": " + to_decimal(closed) +
                                 " vs " + to_decimal(product.total));
    }
    return closed;
}

Nat count_z8(unsigned n, unsigned k1, unsigned k2, unsigned k3) {
    if (n == 0) throw std::invalid_argument("count_z8: length must be positive");
    const unsigned l = k1 + k2 + k3;
    if (l > n) return 0;
    const Nat mixed = count({1, n, 1, k1, k2, k3});
    const unsigned shift = n - l;
    if ((mixed & (pow2(shift) - 1)) != 0) {
        throw InconsistencyError("count_z8: 2^" + std::to_string(shift) + " does not divide " + to_decimal(mixed));
    }
    return mixed >> shift;
}

Nat count_z2z4(unsigned alpha, unsigned beta, unsigned k0, unsigned k1, unsigned k2) {
    return count({alpha, beta, k0, 0, k1, k2});
}

Nat binary_binomial_identity(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("binary_binomial_identity: k > n");
    Nat c = count({n, 1, k, 0, 0, 1});
    if (c != qnum::q_binomial(n, k, 2)) {
        throw InconsistencyError("binary specialization disagrees with [" + std::to_string(n) + ";" +
                                 std::to_string(k) + "]_2");
    }
    return c;
}

TypeProfile dual_type(const TypeProfile& p) {
    if (!p.valid()) throw std::invalid_argument("dual_type: invalid profile " + to_string(p));
    return {p.alpha, p.beta, p.alpha - p.k0, p.beta - p.l(), p.k3, p.k2};
}

TypeProfile dual_type(const TypeProfile& p, unsigned r) {
    if (!p.valid()) throw std::invalid_argument("dual_type: invalid profile " + to_string(p));
    if (r > p.k2 || r > p.alpha - p.k0) throw std::invalid_argument("dual_type: rank exceeds min(k2, alpha - k0)");
    return {p.alpha, p.beta, p.alpha - p.k0 - r, p.beta - p.l(), p.k3 + r, p.k2 - r};
}

Nat count_dual(const TypeProfile& p) {
    if (!p.valid()) return 0;
    const auto d = delta_exponents(p);
    const std::array<unsigned, 3> parts{p.beta - p.l(), p.k3, p.k2};
    return pow2(static_cast<std::uint64_t>(d.delta_bar)) * qnum::q_binomial(p.alpha, p.alpha - p.k0, 2) *
           qnum::q_multinomial(p.beta, parts, 2);
}

bool self_dual_count_condition(const TypeProfile& p) {
    return static_cast<unsigned long long>(p.alpha) * p.k2 == static_cast<unsigned long long>(p.k0) * (p.k2 + p.k3);
}

bool lemma_swap_k_l(unsigned r, unsigned s, unsigned m, unsigned k, unsigned l) {
    if (m > r || s != k + l) throw std::invalid_argument("lemma_swap_k_l: requires m <= r and s = k + l");
    return count({r, s, m, k, l, 0}) == count({r, s, m, l, k, 0});
}

std::vector<TypeProfile> profiles_for(unsigned alpha, unsigned beta) {
    std::vector<TypeProfile> out;
    for (unsigned k0 = 0; k0 <= alpha; ++k0)
        for (unsigned k1 = 0; k1 <= beta; ++k1)
            for (unsigned k2 = 0; k1 + k2 <= beta; ++k2)
                for (unsigned k3 = 0; k1 + k2 + k3 <= beta; ++k3) out.push_back({alpha, beta, k0, k1, k2, k3});
    return out;
}

Nat total_codes(unsigned alpha, unsigned beta) {
    Nat sum = 0;
    for (const auto& p : profiles_for(alpha, beta)) sum += count(p);
    return sum;
}

}  // namespace mixgauss::mgn
