#pragma once

#include <utility>
#include <vector>

#include "centersig/funcs.hpp"

namespace csig {

struct OdeTolerance {
  double rtol = 1e-12;
  double atol = 1e-14;
};

/// v_1(2pi), ..., v_n(2pi) for v(x; r) = r + sum v_j(x) r^{j+1}; v_j(2pi) = c_j.
std::vector<Complex> variational_all(const CoeffSeq& a, int n, OdeTolerance tol = {});
Complex variational(const CoeffSeq& a, int n, OdeTolerance tol = {});

/// e^{-2pi} / (2 max(1, l)).
double safe_radius(const CoeffSeq& a);

struct Trajectory {
  Complex end;
  bool blew_up = false;
  std::vector<std::pair<double, Complex>> path;  // accepted steps, including x = 0
};

/// Direct integration of dv/dx = sum a_i v^{i+1} from v(0) = r0. Throws
/// PreconditionError outside safe_radius unless `force`, in which case blow-up
/// is reported in the result.
Trajectory trajectory(const CoeffSeq& a, Complex r0, OdeTolerance tol = {}, bool force = false,
                      bool record_path = false);

struct Displacement {
  double r;
  Complex delta;  // v(2pi; r) - r
};

struct DisplacementScan {
  std::vector<Displacement> points;
  bool center_like = true;  // all |delta| <= verdict_tol * r
};

DisplacementScan displacement_scan(const CoeffSeq& a, const std::vector<double>& radii, OdeTolerance tol = {},
                                   double verdict_tol = 1e-9);

}  // namespace csig
