#include <algorithm>
#include <cmath>
#include <tuple>

#include "zlab/family.hpp"
#include "zlab/limit.hpp"

namespace zlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// (family index, exponent, angle) ordering key.
std::tuple<std::size_t, int, double> sort_key(const FamilyDescriptor& d) {
  return std::visit(
      overloaded{
          [&](const PowerFamily& p) { return std::tuple(d.index(), p.exponent, p.arg_total); },
          [&](const ExpFamily& e) {
            double a = 0.0;
            if (!e.args.values().empty()) a = e.args.values().front();
            if (!e.args.arc_list().empty()) a = e.args.arc_list().front().lo;
            return std::tuple(d.index(), 0, a);
          },
          [&](const PrecompositionFamily&) { return std::tuple(d.index(), 0, 0.0); },
          [&](const ScaledAffineFamily& s) {
            return std::tuple(d.index(), s.exponent, normalize_angle(std::arg(s.scale)));
          },
      },
      d);
}

}  // namespace

std::string family_name(const FamilyDescriptor& d) {
  static const char* const names[] = {"power", "exp", "precomposition", "scaled_affine"};
  return names[d.index()];
}

bool same_family(const FamilyDescriptor& a, const FamilyDescriptor& b, double tol) {
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<PowerFamily>(&a)) {
    const auto& q = std::get<PowerFamily>(b);
    if (p->exponent != q.exponent) return false;
    if (std::abs(wrap_difference(p->arg_total, q.arg_total)) > tol) return false;
    if (p->pinned_coeff.has_value() != q.pinned_coeff.has_value()) return false;
    return !p->pinned_coeff || close(*p->pinned_coeff, *q.pinned_coeff, tol);
  }
  if (const auto* e = std::get_if<ExpFamily>(&a)) return e->args.equals(std::get<ExpFamily>(b).args, tol);
  if (const auto* f = std::get_if<PrecompositionFamily>(&a)) {
    return same_function(f->base, std::get<PrecompositionFamily>(b).base, tol);
  }
  const auto& s = std::get<ScaledAffineFamily>(a);
  const auto& t = std::get<ScaledAffineFamily>(b);
  return s.exponent == t.exponent && close(s.scale, t.scale, tol);
}

FamilySet canonicalize(FamilySet set) {
  std::stable_sort(set.begin(), set.end(), [](const FamilyDescriptor& a, const FamilyDescriptor& b) {
    return sort_key(a) < sort_key(b);
  });
  FamilySet out;
  for (auto& d : set) {
    if (std::none_of(out.begin(), out.end(), [&](const FamilyDescriptor& e) { return same_family(d, e); })) {
      out.push_back(std::move(d));
    }
  }
  return out;
}

bool same_family_set(const FamilySet& a, const FamilySet& b, double tol) {
  const FamilySet ca = canonicalize(a);
  const FamilySet cb = canonicalize(b);
  if (ca.size() != cb.size()) return false;
  std::vector<bool> used(cb.size(), false);
  for (const auto& d : ca) {
    bool found = false;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (!used[j] && same_family(d, cb[j], tol)) {
        used[j] = found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

FamilyDescriptor dual(const FamilyDescriptor& d) {
  return std::visit(
      overloaded{
          [](const PowerFamily& p) -> FamilyDescriptor {
            PowerFamily q{normalize_angle(-p.arg_total), -p.exponent, std::nullopt};
            if (p.pinned_coeff) q.pinned_coeff = 1.0 / *p.pinned_coeff;
            return q;
          },
          [](const ExpFamily& e) -> FamilyDescriptor {
            return ExpFamily{e.args.rotated(std::numbers::pi)};
          },
          [](const PrecompositionFamily& f) -> FamilyDescriptor {
            return PrecompositionFamily{f.base.reciprocal()};
          },
          [](const ScaledAffineFamily& s) -> FamilyDescriptor {
            return ScaledAffineFamily{1.0 / s.scale, -s.exponent};
          },
      },
      d);
}

FamilySet dual(const FamilySet& set) {
  FamilySet out;
  out.reserve(set.size());
  for (const auto& d : set) out.push_back(dual(d));
  return canonicalize(std::move(out));
}

}  // namespace zlab
