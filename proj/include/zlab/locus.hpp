#pragma once

#include <vector>

#include "zlab/function.hpp"

namespace zlab {

/// The 2k rays through the origin on which {f(nz)} fails to be normal.
struct RaySet {
  int k = 0;
  std::vector<double> angles;  // sorted, in [0, 2*pi)
};

/// ((+-pi/2 - arg a_k)/k + 2*pi*l/k) mod 2*pi, with arg a_k in [0, 2*pi).
RaySet nonnormal_rays(const Polynomial& p);

/// The k angles of one sign family, in order of l = 0..k-1 (sign = +1 or -1).
std::vector<double> ray_family(const Polynomial& p, int sign);

/// z0 = 0 always; otherwise only exp-rational functions, and only when
/// arg z0 is within angle_tol of a ray.
bool is_nonnormal_at(const Function& f, cplx z0, double angle_tol = 1e-9);

}  // namespace zlab
