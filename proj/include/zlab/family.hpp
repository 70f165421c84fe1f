#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zlab/function.hpp"

namespace zlab {

inline constexpr double kAngleTol = 1e-9;

/// Closed arc running counterclockwise from lo to hi (both in [0, 2*pi)).
/// lo == hi is a single point; the full circle is ArgSet::all_nonzero().
struct Arc {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept;
  bool contains(double angle, double tol = kAngleTol) const noexcept;
};

/// Admissible values of arg A1 for an exponential family.
class ArgSet {
 public:
  enum class Kind { single, finite, arcs, all_nonzero };

  static ArgSet single(double angle);
  /// Angles are normalized, deduplicated within tolerance and sorted.
  static ArgSet finite(std::vector<double> angles);
  /// Union of closed arcs, merged where they overlap or touch. A union that
  /// covers the circle becomes all_nonzero().
  static ArgSet arcs(const std::vector<Arc>& arcs);
  static ArgSet all_nonzero();

  Kind kind() const noexcept { return kind_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<Arc>& arc_list() const noexcept { return arcs_; }

  bool contains(double angle, double tol = kAngleTol) const noexcept;
  ArgSet rotated(double delta) const;

  /// Set equality: single {x} equals finite {x}.
  bool equals(const ArgSet& other, double tol = kAngleTol) const;

 private:
  Kind kind_ = Kind::all_nonzero;
  std::vector<double> values_;
  std::vector<Arc> arcs_;
};

/// {c (zeta + C)^e : |c| > 0, arg c = arg_total, C free}. With pinned_coeff
/// the family is written coeff * (A1 zeta + A0)^e, A1 > 0, which is the same
/// set with arg_total = arg coeff.
struct PowerFamily {
  double arg_total = 0.0;
  int exponent = 1;
  std::optional<cplx> pinned_coeff;
};

/// {exp(A1 zeta + A0) : A0 free, arg A1 in args}.
struct ExpFamily {
  ArgSet args;
};

/// {F(C1 + C2 zeta) : C1 free, C2 > 0}.
struct PrecompositionFamily {
  Function base;
};

/// {s (A zeta + C)^e : A > 0, C free}.
struct ScaledAffineFamily {
  cplx scale{1.0, 0.0};
  int exponent = 1;
};

using FamilyDescriptor =
    std::variant<PowerFamily, ExpFamily, PrecompositionFamily, ScaledAffineFamily>;
using FamilySet = std::vector<FamilyDescriptor>;

std::string family_name(const FamilyDescriptor& d);

bool same_family(const FamilyDescriptor& a, const FamilyDescriptor& b, double tol = kAngleTol);

/// Sorted by family, exponent and angle, with duplicates removed.
FamilySet canonicalize(FamilySet set);

/// Equality of descriptor sets up to order and duplicates.
bool same_family_set(const FamilySet& a, const FamilySet& b, double tol = kAngleTol);

/// Family of reciprocals of each member.
FamilyDescriptor dual(const FamilyDescriptor& d);
FamilySet dual(const FamilySet& set);

}  // namespace zlab
