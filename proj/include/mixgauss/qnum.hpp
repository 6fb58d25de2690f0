#pragma once

#include <span>

#include "mixgauss/nat.hpp"

/// Exact q-analogues of integers, factorials, binomials and multinomials.
/// Every function is pure and evaluates at an integer q >= 2; passing q < 2
/// throws std::invalid_argument.
namespace mixgauss::qnum {

/// [n]_q = 1 + q + ... + q^(n-1); zero for n = 0.
Nat q_integer(unsigned n, unsigned q);

/// [n]_q! = [1]_q [2]_q ... [n]_q; one for n = 0.
Nat q_factorial(unsigned n, unsigned q);

/**
 * Gaussian binomial [n choose k]_q, the number of k-dimensional subspaces of
 * F_q^n. Evaluated as the running product of (q^(n-i) - 1) / (q^(i+1) - 1),
 * where every partial product is itself a Gaussian binomial, so each
 * division is exact. Returns 0 for k > n.
 */
Nat q_binomial(unsigned n, unsigned k, unsigned q);

/**
 * q-multinomial [n; k1, k2, ..., km]_q as the telescoping product
 * [n;k1][n-k1;k2]...; the residual n - sum(parts) is an implicit last part.
 * Counts flags of subspaces with the given successive codimensions.
 * Returns 0 when sum(parts) > n and 1 for an empty part list.
 */
Nat q_multinomial(unsigned n, std::span<const unsigned> parts, unsigned q);

}  // namespace mixgauss::qnum
