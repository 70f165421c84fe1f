#include <algorithm>
#include <cmath>

#include "zlab/family.hpp"

namespace zlab {

namespace {

bool same_angle(double a, double b, double tol) { return std::abs(wrap_difference(a, b)) <= tol; }

std::vector<double> dedupe_angles(std::vector<double> angles) {
  for (double& a : angles) a = normalize_angle(a);
  std::sort(angles.begin(), angles.end());
  std::vector<double> out;
  for (double a : angles) {
    if (std::none_of(out.begin(), out.end(), [&](double b) { return same_angle(a, b, kAngleTol); })) {
      out.push_back(a);
    }
  }
  return out;
}

bool same_point_sets(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (double x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && same_angle(x, b[j], tol)) {
        used[j] = found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

double Arc::width() const noexcept { return normalize_angle(hi - lo); }

bool Arc::contains(double angle, double tol) const noexcept {
  const double d = normalize_angle(angle - lo);
  return d <= width() + tol || d >= kTwoPi - tol;
}

ArgSet ArgSet::single(double angle) {
  ArgSet s;
  s.kind_ = Kind::single;
  s.values_ = {normalize_angle(angle)};
  return s;
}

ArgSet ArgSet::finite(std::vector<double> angles) {
  ArgSet s;
  s.kind_ = Kind::finite;
  s.values_ = dedupe_angles(std::move(angles));
  return s;
}

ArgSet ArgSet::all_nonzero() { return ArgSet{}; }

ArgSet ArgSet::arcs(const std::vector<Arc>& input) {
  struct Span {
    double start;
    double end;  // start <= end <= start + 2*pi, on the real line
  };
  std::vector<Span> spans;
  for (const Arc& a : input) {
    const double lo = normalize_angle(a.lo);
    spans.push_back({lo, lo + Arc{lo, normalize_angle(a.hi)}.width()});
  }
  std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) { return x.start < y.start; });

  std::vector<Span> merged;
  for (const Span& s : spans) {
    if (!merged.empty() && s.start <= merged.back().end + kAngleTol) {
      merged.back().end = std::max(merged.back().end, s.end);
    } else {
      merged.push_back(s);
    }
  }
  if (merged.size() > 1 && merged.back().end + kAngleTol >= merged.front().start + kTwoPi) {
    merged.front() = {merged.back().start, std::max(merged.back().end, merged.front().end + kTwoPi)};
    merged.pop_back();
  }
  for (const Span& s : merged) {
    if (s.end - s.start >= kTwoPi - kAngleTol) return all_nonzero();
  }
  if (merged.size() == 1 && merged.front().end + kAngleTol >= merged.front().start + kTwoPi) {
    return all_nonzero();
  }

  ArgSet out;
  out.kind_ = Kind::arcs;
  for (const Span& s : merged) out.arcs_.push_back({normalize_angle(s.start), normalize_angle(s.end)});
  std::sort(out.arcs_.begin(), out.arcs_.end(), [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
  return out;
}

bool ArgSet::contains(double angle, double tol) const noexcept {
  switch (kind_) {
    case Kind::all_nonzero: return true;
    case Kind::single:
    case Kind::finite:
      return std::any_of(values_.begin(), values_.end(),
                         [&](double v) { return same_angle(angle, v, tol); });
    case Kind::arcs:
      return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return a.contains(angle, tol); });
  }
  return false;
}

ArgSet ArgSet::rotated(double delta) const {
  switch (kind_) {
    case Kind::all_nonzero: return *this;
    case Kind::single: return single(values_.front() + delta);
    case Kind::finite: {
      std::vector<double> v = values_;
      for (double& a : v) a += delta;
      return finite(std::move(v));
    }
    case Kind::arcs: {
      std::vector<Arc> a = arcs_;
      for (Arc& arc : a) arc = {arc.lo + delta, arc.hi + delta};
      return arcs(a);
    }
  }
  return *this;
}

bool ArgSet::equals(const ArgSet& other, double tol) const {
  const bool points = kind_ == Kind::single || kind_ == Kind::finite;
  const bool other_points = other.kind_ == Kind::single || other.kind_ == Kind::finite;
  if (points && other_points) return same_point_sets(values_, other.values_, tol);
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::all_nonzero) return true;
  if (arcs_.size() != other.arcs_.size()) return false;
  std::vector<bool> used(other.arcs_.size(), false);
  for (const Arc& a : arcs_) {
    bool found = false;
    for (std::size_t j = 0; j < other.arcs_.size(); ++j) {
      const Arc& b = other.arcs_[j];
      if (!used[j] && same_angle(a.lo, b.lo, tol) && std::abs(a.width() - b.width()) <= 2.0 * tol) {
        used[j] = found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace zlab
