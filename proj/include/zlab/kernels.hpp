#pragma once

#include <cstddef>
#include <string_view>

namespace zlab::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;

/// Best available ISA, decided once per process. ZLAB_ISA=scalar|avx2
/// narrows the choice (an unavailable request falls back to scalar).
Isa active_isa() noexcept;

/// Structure-of-arrays view of points on the unit sphere.
struct SphereView {
  const double* x;
  const double* y;
  const double* z;
};

/// out[i] = |a_i - b_i| / 2, the chordal distance of the preimages.
void chordal_many(SphereView a, SphereView b, std::size_t n, double* out, Isa isa) noexcept;

/// max_i |a_i - b_i| / 2; 0 for n == 0.
double max_chordal(SphereView a, SphereView b, std::size_t n, Isa isa) noexcept;

/// Evaluates p(z) = sum c_j z^j and p'(z) at n points by Horner's rule.
/// Coefficients are ascending, given as split real/imaginary arrays.
struct HornerOut {
  double* p_re;
  double* p_im;
  double* d_re;
  double* d_im;
};

void horner_many(const double* c_re, const double* c_im, std::size_t ncoef,
                 const double* z_re, const double* z_im, std::size_t n,
                 HornerOut out, Isa isa) noexcept;

namespace scalar {
void chordal_many(SphereView a, SphereView b, std::size_t n, double* out) noexcept;
double max_chordal(SphereView a, SphereView b, std::size_t n) noexcept;
void horner_many(const double* c_re, const double* c_im, std::size_t ncoef,
                 const double* z_re, const double* z_im, std::size_t n, HornerOut out) noexcept;
}  // namespace scalar

#if defined(ZLAB_HAVE_AVX2)
namespace avx2 {
void chordal_many(SphereView a, SphereView b, std::size_t n, double* out) noexcept;
double max_chordal(SphereView a, SphereView b, std::size_t n) noexcept;
void horner_many(const double* c_re, const double* c_im, std::size_t ncoef,
                 const double* z_re, const double* z_im, std::size_t n, HornerOut out) noexcept;
}  // namespace avx2
#endif

}  // namespace zlab::kernels
