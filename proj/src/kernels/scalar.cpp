#include <algorithm>
#include <cmath>

#include "zlab/kernels.hpp"

namespace zlab::kernels::scalar {

void chordal_many(SphereView a, SphereView b, std::size_t n, double* out) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = a.x[i] - b.x[i];
    const double dy = a.y[i] - b.y[i];
    const double dz = a.z[i] - b.z[i];
    out[i] = 0.5 * std::sqrt(dx * dx + dy * dy + dz * dz);
  }
}

double max_chordal(SphereView a, SphereView b, std::size_t n) noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = a.x[i] - b.x[i];
    const double dy = a.y[i] - b.y[i];
    const double dz = a.z[i] - b.z[i];
    best = std::max(best, 0.5 * std::sqrt(dx * dx + dy * dy + dz * dz));
  }
  return best;
}

void horner_many(const double* c_re, const double* c_im, std::size_t ncoef,
                 const double* z_re, const double* z_im, std::size_t n, HornerOut out) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    double pr = 0.0, pi = 0.0, dr = 0.0, di = 0.0;
    const double zr = z_re[i], zi = z_im[i];
    for (std::size_t j = ncoef; j-- > 0;) {
      const double ndr = (dr * zr - di * zi) + pr;
      const double ndi = (dr * zi + di * zr) + pi;
      const double npr = (pr * zr - pi * zi) + c_re[j];
      const double npi = (pr * zi + pi * zr) + c_im[j];
      dr = ndr;
      di = ndi;
      pr = npr;
      pi = npi;
    }
    out.p_re[i] = pr;
    out.p_im[i] = pi;
    out.d_re[i] = dr;
    out.d_im[i] = di;
  }
}

}  // namespace zlab::kernels::scalar
