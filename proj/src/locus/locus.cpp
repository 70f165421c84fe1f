#include "zlab/locus.hpp"

#include <algorithm>
#include <cmath>

namespace zlab {

std::vector<double> ray_family(const Polynomial& p, int sign) {
  const int k = p.degree();
  const double arg_ak = normalize_angle(std::arg(p.leading()));
  const double half_pi = sign * std::numbers::pi / 2.0;
  std::vector<double> out;
  out.reserve(k);
  for (int l = 0; l < k; ++l) {
    out.push_back(normalize_angle((half_pi - arg_ak) / k + kTwoPi * l / k));
  }
  return out;
}

RaySet nonnormal_rays(const Polynomial& p) {
  RaySet rays;
  rays.k = p.degree();
  rays.angles = ray_family(p, 1);
  const auto minus = ray_family(p, -1);
  rays.angles.insert(rays.angles.end(), minus.begin(), minus.end());
  std::sort(rays.angles.begin(), rays.angles.end());
  return rays;
}

bool is_nonnormal_at(const Function& f, cplx z0, double angle_tol) {
  if (z0 == cplx{}) return true;
  const Polynomial* p = f.exponent();
  if (p == nullptr) return false;
  const double a = std::arg(z0);
  for (double ray : nonnormal_rays(*p).angles) {
    if (std::abs(wrap_difference(a, ray)) <= angle_tol) return true;
  }
  return false;
}

}  // namespace zlab
