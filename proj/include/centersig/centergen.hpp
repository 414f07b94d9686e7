#pragma once

#include <vector>

#include "centersig/planar.hpp"
#include "centersig/returnmap.hpp"

namespace csig {

/// sum a_i t^{i+1} = -(sum u_k' t^{k+1}) / (1 + sum (k+1) u_k t^k), a_1..a_N.
/// Each u_k must vanish at 0 and 2pi and lie in a symbolic class.
CoeffSeq from_u_sequence(const std::vector<CoeffFn>& u, int cutoff);

/// sum a_i t^{i+1} = (sum (d_k/2pi) t^{k+1}) / (1 + sum (k+1) d_k (1 - x/2pi) t^k).
/// Coefficients are single-piece polynomials in x.
CoeffSeq t_map(const ReturnSeries& f, int cutoff);

/// Field with A = P1(H), B = P2(H):
/// x' = -y - xy A_x + x^2 A_y - yB, y' = x - y^2 A_x + xy A_y + xB.
/// H must be homogeneous and P2 must have no constant term.
PlanarField hamiltonian_field(const BiPoly& h, const std::vector<Scalar>& p1, const std::vector<Scalar>& p2);

/// Validated field with F odd in y and G even in y.
PlanarField symmetric_field(const BiPoly& f, const BiPoly& g);

}  // namespace csig
