#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixgauss/nat.hpp"
#include "mixgauss/profile.hpp"

/// Counting distinct Z2Z8-additive codes of a given type (mixed generalized
/// Gaussian numbers) and the specializations to Z8, Z2Z4 and binary codes.
namespace mixgauss::mgn {

/// Factors of the ordered-generator count. total * d1*d2*d3*d4 == n1*n2*n3*n4.
struct CountBreakdown {
    Nat n1 = 1, n2 = 1, n3 = 1, n4 = 1;
    Nat d1 = 1, d2 = 1, d3 = 1, d4 = 1;
    Nat total = 0;
};

/// Powers of two in front of the q-multinomial forms of a count and of the
/// count of its dual type.
struct DeltaExponents {
    std::int64_t delta = 0;
    std::int64_t delta_bar = 0;
};

DeltaExponents delta_exponents(const TypeProfile& p);

/**
 * Ratio-of-products count: ordered generator tuples chosen from the whole
 * ambient space (n1..n4) divided by those chosen inside one code of the
 * type (d1..d4). A factor whose generator count is zero is 1.
 *
 * Invalid profiles give total 0 with every factor 1. Throws
 * InconsistencyError if the quotient is not exact.
 */
CountBreakdown count_product(const TypeProfile& p);

/// 2^delta * [alpha; k0]_2 * [beta; k1, k2, k3]_2, or 0 for invalid profiles.
Nat count_closed_form(const TypeProfile& p);

/// Number of distinct codes of type p. Both formulas are always evaluated;
/// InconsistencyError if they differ. Invalid profiles count 0.
Nat count(const TypeProfile& p);

/// Linear codes over Z8 of length n with k1, k2, k3 generators of order
/// 8, 4, 2. Requires n >= 1; returns 0 when k1+k2+k3 > n.
Nat count_z8(unsigned n, unsigned k1, unsigned k2, unsigned k3);

/// Z2Z4-additive codes of type (alpha, beta; k0, k1, k2), k1 order-4 and k2
/// order-2 generators. Evaluated as count(alpha, beta; k0, 0, k1, k2).
Nat count_z2z4(unsigned alpha, unsigned beta, unsigned k0, unsigned k1, unsigned k2);

/// count(n, 1; k, 0, 0, 1); checks it against [n; k]_2 and throws
/// InconsistencyError on mismatch. Requires k <= n.
Nat binary_binomial_identity(unsigned n, unsigned k);

/// (alpha, beta; alpha - k0, beta - l, k3, k2). Throws std::invalid_argument
/// for invalid profiles. An involution. This is the type of the dual code
/// only when the s2 block has rank zero; see the two-argument form.
TypeProfile dual_type(const TypeProfile& p);

/// Type of the dual of a code of type p whose s2 block has F_2 rank r:
/// (alpha, beta; alpha - k0 - r, beta - l, k3 + r, k2 - r). Throws
/// std::invalid_argument unless r <= min(k2, alpha - k0).
TypeProfile dual_type(const TypeProfile& p, unsigned r);

/// Closed form for the number of codes of the dual type,
/// 2^delta_bar [alpha; alpha-k0]_2 [beta; beta-l, k3, k2]_2. 0 if invalid.
Nat count_dual(const TypeProfile& p);

/// alpha*k2 == k0*(k2+k3): exactly when a type and its dual type have the
/// same number of codes.
bool self_dual_count_condition(const TypeProfile& p);

/// count(r,s; m,k,l,0) == count(r,s; m,l,k,0). Requires m <= r and s == k+l.
bool lemma_swap_k_l(unsigned r, unsigned s, unsigned m, unsigned k, unsigned l);

/// Every valid profile with the given ambient dimensions, in lexicographic order.
std::vector<TypeProfile> profiles_for(unsigned alpha, unsigned beta);

/// Sum of count over all valid profiles: the number of subgroups of
/// Z2^alpha x Z8^beta.
Nat total_codes(unsigned alpha, unsigned beta);

// ---- identity sweeps ------------------------------------------------------

enum class CheckKind {
    identity,   ///< expected to hold; failure is a defect
    literal,    ///< a statement exactly as printed in the literature; may fail
    corrected,  ///< the repaired form of a failing literal statement
};

struct IdentityCheck {
    std::string id;
    std::string statement;
    CheckKind kind = CheckKind::identity;
    bool passed = true;
    std::size_t cases = 0;
    std::string counterexample;  ///< first failing instance, empty if none
    std::string note;
};

struct IdentityReport {
    unsigned max_alpha = 0;
    unsigned max_beta = 0;
    std::vector<IdentityCheck> checks;

    /// All identity and corrected checks passed.
    [[nodiscard]] bool ok() const;
    [[nodiscard]] const IdentityCheck* find(const std::string& id) const;
};

/**
 * Sweeps the structural identities of the counts over 1 <= r <= max_alpha,
 * 1 <= s <= max_beta (and every valid profile within those bounds):
 *
 *  (a) N(r,s;r,s,0,0) = N(r,s;r,0,s,0) = N(r,s;r,0,0,s) = 1
 *  (b) N(r+1,s;1,1,1,0) (2^r - 1) = 4 (2^(r+1) - 1) N(r,s;1,1,1,0)
 *  (c) N(1,r;1,1,1,0) = 2^(4r-8) (2^(r-1) - 1)(2^r - 1), r >= 2
 *  (d) N(a+1,r;1,1,1,0) = 4 N(a,r;1,1,1,0) + (2^r-1)(2^(r-1)-1) 2^(3a+4(r-2))
 *  (e) N(j,k;j,1,1,1) = 2^((k-3)(j-1)) N(1,k;1,1,1,1), k >= 3
 *  (f) N(r,s;r,0,1,s-1) = N(r,s;r,0,s-1,1) = N(r,s;r,s-1,1,0)
 *      = N(r,s;r,1,s-1,0) = 2^s - 1, s >= 2
 *  (g) N(r,s;r,0,k,s-k) = N(r,s;r,s-k,k,0), N(r,s;r,k,0,s-k) = N(r,s;r,s-k,0,k)
 *  (h) delta - delta_bar = alpha k2 - k0 (k2 + k3), and count_dual(p) = count(dual_type(p))
 *
 * plus the swap lemma, the self-dual criterion, the full-binary-rank lemma
 * in its printed and corrected forms, the equal-dual corollary in its
 * printed and conditional forms, and the printed fourth term of the
 * (r,2r;r,r,0,r) diagonal.
 */
IdentityReport check_identities(unsigned max_alpha, unsigned max_beta);

}  // namespace mixgauss::mgn
