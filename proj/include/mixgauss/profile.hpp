#pragma once

#include <compare>
#include <iosfwd>
#include <string>

namespace mixgauss {

/**
 * Type (alpha, beta; k0, k1, k2, k3) of an additive code in
 * Z2^alpha x Z8^beta: k0 order-2 generators seen through the binary
 * coordinates, and k1, k2, k3 generators of order 8, 4, 2 seen through the
 * Z8 coordinates.
 *
 * The same struct carries Z2Z4 types (alpha, beta; k0, k1, k2) with k3 = 0,
 * where k1 counts order-4 and k2 order-2 generators from the Z4 part. Which
 * reading applies is fixed by the ring exponent of the surrounding context.
 *
 * Ordering is lexicographic over (alpha, beta, k0, k1, k2, k3).
 */
struct TypeProfile {
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned k0 = 0;
    unsigned k1 = 0;
    unsigned k2 = 0;
    unsigned k3 = 0;

    /// Number of generators through the modular coordinates.
    [[nodiscard]] constexpr unsigned l() const { return k1 + k2 + k3; }

    [[nodiscard]] constexpr bool valid() const { return k0 <= alpha && k1 + k2 + k3 <= beta; }

    friend constexpr auto operator<=>(const TypeProfile&, const TypeProfile&) = default;
};

/// "(a,b;k0,k1,k2,k3)"
std::string to_string(const TypeProfile& p);
std::ostream& operator<<(std::ostream& os, const TypeProfile& p);

}  // namespace mixgauss
