// Compiled with -mavx2 -ffp-contract=off: same operation order as the scalar
// kernels and no fused multiply-add, so results are bit-identical.
#include <immintrin.h>

#include <algorithm>

#include "zlab/kernels.hpp"

namespace zlab::kernels::avx2 {

namespace {

inline __m256d half_distance(SphereView a, SphereView b, std::size_t i) noexcept {
  const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(a.x + i), _mm256_loadu_pd(b.x + i));
  const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(a.y + i), _mm256_loadu_pd(b.y + i));
  const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(a.z + i), _mm256_loadu_pd(b.z + i));
  __m256d s = _mm256_mul_pd(dx, dx);
  s = _mm256_add_pd(s, _mm256_mul_pd(dy, dy));
  s = _mm256_add_pd(s, _mm256_mul_pd(dz, dz));
  return _mm256_mul_pd(_mm256_set1_pd(0.5), _mm256_sqrt_pd(s));
}

}  // namespace

void chordal_many(SphereView a, SphereView b, std::size_t n, double* out) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, half_distance(a, b, i));
  if (i < n) {
    scalar::chordal_many({a.x + i, a.y + i, a.z + i}, {b.x + i, b.y + i, b.z + i}, n - i, out + i);
  }
}

double max_chordal(SphereView a, SphereView b, std::size_t n) noexcept {
  std::size_t i = 0;
  __m256d best = _mm256_setzero_pd();
  for (; i + 4 <= n; i += 4) best = _mm256_max_pd(best, half_distance(a, b, i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  if (i < n) {
    m = std::max(m, scalar::max_chordal({a.x + i, a.y + i, a.z + i},
                                        {b.x + i, b.y + i, b.z + i}, n - i));
  }
  return m;
}

void horner_many(const double* c_re, const double* c_im, std::size_t ncoef,
                 const double* z_re, const double* z_im, std::size_t n, HornerOut out) noexcept {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d zr = _mm256_loadu_pd(z_re + i);
    const __m256d zi = _mm256_loadu_pd(z_im + i);
    __m256d pr = _mm256_setzero_pd(), pi = _mm256_setzero_pd();
    __m256d dr = _mm256_setzero_pd(), di = _mm256_setzero_pd();
    for (std::size_t j = ncoef; j-- > 0;) {
      const __m256d ndr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(dr, zr), _mm256_mul_pd(di, zi)), pr);
      const __m256d ndi = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dr, zi), _mm256_mul_pd(di, zr)), pi);
      const __m256d npr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(pr, zr), _mm256_mul_pd(pi, zi)),
                                        _mm256_set1_pd(c_re[j]));
      const __m256d npi = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(pr, zi), _mm256_mul_pd(pi, zr)),
                                        _mm256_set1_pd(c_im[j]));
      dr = ndr;
      di = ndi;
      pr = npr;
      pi = npi;
    }
    _mm256_storeu_pd(out.p_re + i, pr);
    _mm256_storeu_pd(out.p_im + i, pi);
    _mm256_storeu_pd(out.d_re + i, dr);
    _mm256_storeu_pd(out.d_im + i, di);
  }
  if (i < n) {
    scalar::horner_many(c_re, c_im, ncoef, z_re + i, z_im + i, n - i,
                        {out.p_re + i, out.p_im + i, out.d_re + i, out.d_im + i});
  }
}

}  // namespace zlab::kernels::avx2
