#pragma once

#include <array>

#include "npoisson/brackets.hpp"
#include "npoisson/exterior.hpp"

namespace npoisson {

/// On a Darboux chart (q1,q2,q3,p1,p2,p3):
///   w_B = w_0 - B1 dq2^dq3 - B2 dq3^dq1 - B3 dq1^dq2,
/// so that {p_i, p_j} = eps_ijk B^k and dw_B = -div(B) dq1^dq2^dq3.
Form magnetic_form(const std::array<Polynomial, 3>& b);

/// div B = sum dB^i/dq^i
Polynomial divergence(const std::array<Polynomial, 3>& b);

/// J_i = eps_ijk q^j p_k on the Darboux chart of dimension 6.
std::array<Polynomial, 3> angular_momenta(const ChartPtr& chart);

/// Contact structure on (x, y, z): L = (d/dx + y d/dz) ^ d/dy, X = d/dz.
JacobiDef contact_pair();

} // namespace npoisson
