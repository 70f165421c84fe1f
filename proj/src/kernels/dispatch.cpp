#include <cstdlib>
#include <string_view>

#include "zlab/kernels.hpp"

namespace zlab::kernels {

std::string_view to_string(Isa isa) noexcept {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(ZLAB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa detect() noexcept {
  const char* env = std::getenv("ZLAB_ISA");
  if (env != nullptr && std::string_view(env) == "scalar") return Isa::scalar;
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() noexcept {
  static const Isa isa = detect();
  return isa;
}

void chordal_many(SphereView a, SphereView b, std::size_t n, double* out, Isa isa) noexcept {
#if defined(ZLAB_HAVE_AVX2)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) return avx2::chordal_many(a, b, n, out);
#endif
  (void)isa;
  scalar::chordal_many(a, b, n, out);
}

double max_chordal(SphereView a, SphereView b, std::size_t n, Isa isa) noexcept {
#if defined(ZLAB_HAVE_AVX2)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) return avx2::max_chordal(a, b, n);
#endif
  (void)isa;
  return scalar::max_chordal(a, b, n);
}

void horner_many(const double* c_re, const double* c_im, std::size_t ncoef,
                 const double* z_re, const double* z_im, std::size_t n,
                 HornerOut out, Isa isa) noexcept {
#if defined(ZLAB_HAVE_AVX2)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) {
    return avx2::horner_many(c_re, c_im, ncoef, z_re, z_im, n, out);
  }
#endif
  (void)isa;
  scalar::horner_many(c_re, c_im, ncoef, z_re, z_im, n, out);
}

}  // namespace zlab::kernels
