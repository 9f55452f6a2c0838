#pragma once

#include "npoisson/exterior.hpp"

namespace npoisson {

/// Schouten-Nijenhuis bracket, grade a + b - 1.
///
/// Sign convention: [X, f] = X(f), [X, Y] is the Lie bracket, and
///   [A, B]      = -(-1)^{(a-1)(b-1)} [B, A]
///   [A, B ^ C]  = [A, B] ^ C + (-1)^{(a-1)b} B ^ [A, C]
/// On decomposable fields this is
///   [X_1^..^X_p, Y_1^..^Y_q] = sum (-1)^{i+j} [X_i, Y_j] ^ X_1..^X_i..X_p ^ Y_1..^Y_j..Y_q
/// with hats omitted. The bracket of two functions is the zero function.
///
/// The classical volume identity and the Jacobi-manifold condition
/// [L, L] = 2 X ^ L are stated for the opposite sign on pairs of bivectors,
/// [A, B]' = -[A, B]; the checks below translate accordingly.
Multivector schouten(const Multivector& a, const Multivector& b);

/// [L, L] = 0
bool is_poisson(const Multivector& lambda);

/// [L, L] = 0 for an even-grade multivector.
bool is_n_poisson(const Multivector& lambda);

/// d i_{L^L} W == 2 i_L d i_L W for a volume form W.
bool volume_poisson_criterion(const Multivector& lambda, const Form& volume);

/// Right side of the volume identity:
///   -i_{L1} i_{L2} dW - d i_{L2^L1} W + i_{L1} d i_{L2} W + i_{L2} d i_{L1} W
Form volume_identity_rhs(const Multivector& lambda1, const Multivector& lambda2, const Form& volume);

/// i_{[L1,L2]'} W = -i_{[L1,L2]} W
Form volume_identity_lhs(const Multivector& lambda1, const Multivector& lambda2, const Form& volume);

/// True iff volume_identity_lhs == volume_identity_rhs.
bool schouten_volume_identity_check(const Multivector& lambda1, const Multivector& lambda2, const Form& volume);

/// [X, L] = 0 and [L, L]' = 2 X ^ L, i.e. [L, L] = -2 X ^ L in this module's sign.
/// Exactly the pairs whose bracket L(f,g) + f X(g) - g X(f) satisfies Jacobi.
bool jacobi_pair_check(const Multivector& lambda, const Multivector& field);

} // namespace npoisson
