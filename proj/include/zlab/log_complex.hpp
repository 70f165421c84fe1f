#pragma once

#include <complex>
#include <limits>
#include <numbers>

namespace zlab {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2*pi).
double normalize_angle(double theta) noexcept;
long double normalize_angle(long double theta) noexcept;

/// Signed angular difference a - b wrapped to (-pi, pi].
double wrap_difference(double a, double b) noexcept;

/// Extended complex number w = exp(t + i*theta) on the Riemann sphere.
///
/// t = -inf encodes w = 0 and t = +inf encodes w = infinity; neither carries
/// an argument (theta is stored as 0 and ignored). Finite values keep theta in
/// [0, 2*pi). Magnitudes such as exp(1e6) are representable.
class LogComplex {
 public:
  enum class Kind { finite, zero, infinity };

  /// The value 1.
  constexpr LogComplex() noexcept = default;

  static LogComplex from_log_polar(double t, double theta) noexcept;
  static LogComplex from_cartesian(std::complex<double> w) noexcept;
  static constexpr LogComplex zero() noexcept {
    return LogComplex(-std::numeric_limits<double>::infinity(), 0.0);
  }
  static constexpr LogComplex infinity() noexcept {
    return LogComplex(std::numeric_limits<double>::infinity(), 0.0);
  }

  constexpr double log_modulus() const noexcept { return t_; }
  constexpr double arg() const noexcept { return theta_; }
  constexpr Kind kind() const noexcept {
    if (t_ == -std::numeric_limits<double>::infinity()) return Kind::zero;
    if (t_ == std::numeric_limits<double>::infinity()) return Kind::infinity;
    return Kind::finite;
  }
  constexpr bool is_zero() const noexcept { return kind() == Kind::zero; }
  constexpr bool is_infinity() const noexcept { return kind() == Kind::infinity; }
  constexpr bool is_finite() const noexcept { return kind() == Kind::finite; }

  /// Overflows to inf / underflows to 0 outside the double range.
  std::complex<double> to_cartesian() const noexcept;

  LogComplex reciprocal() const noexcept;

  friend constexpr bool operator==(const LogComplex&, const LogComplex&) = default;

 private:
  constexpr LogComplex(double t, double theta) noexcept : t_(t), theta_(theta) {}

  double t_ = 0.0;
  double theta_ = 0.0;
};

enum class Strictness { lenient, strict };

/// Throws Error(indeterminate) on 0 * inf.
LogComplex multiply(const LogComplex& a, const LogComplex& b);

/// Sum with the larger modulus factored out, so the inner term never
/// overflows. inf + inf is inf unless strict, where it throws. A sum whose
/// modulus falls below a few ulps of the larger operand is flushed to zero.
LogComplex add(const LogComplex& a, const LogComplex& b,
               Strictness strictness = Strictness::lenient);

/// a^p on the principal branch. In strict mode zero^p (p <= 0) and
/// inf^p (p >= 0) throw Error(domain).
LogComplex pow_real(const LogComplex& a, double p,
                    Strictness strictness = Strictness::lenient);

inline LogComplex operator*(const LogComplex& a, const LogComplex& b) { return multiply(a, b); }
inline LogComplex operator+(const LogComplex& a, const LogComplex& b) { return add(a, b); }

/// Chordal distance |w1 - w2| / (sqrt(1+|w1|^2) sqrt(1+|w2|^2)), in [0, 1].
/// Branches at |w| = 1 so that no positive log-modulus is exponentiated.
double chordal(const LogComplex& w1, const LogComplex& w2) noexcept;

/// Image of w on the unit sphere (stereographic from the north pole).
/// chordal(w1, w2) equals half the Euclidean distance of the images.
struct SpherePoint {
  double x = 0.0;
  double y = 0.0;
  double z = -1.0;
};

SpherePoint to_sphere(const LogComplex& w) noexcept;

}  // namespace zlab
