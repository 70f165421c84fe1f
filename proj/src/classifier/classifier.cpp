#include "zlab/classifier.hpp"

#include <cmath>

#include "zlab/error.hpp"

namespace zlab {

namespace {

constexpr double kPi = std::numbers::pi;

double arg0(cplx z) { return normalize_angle(std::arg(z)); }

bool same_angle(double a, double b) { return std::abs(wrap_difference(a, b)) <= kAngleTol; }

// Zero families R~(gamma) e^{P(gamma)} (A zeta + C)^l of f = R e^P.
FamilySet zero_power_families(const Rational& r, const Polynomial& p, bool pinned) {
  FamilySet out;
  for (std::size_t i = 0; i < r.zeros().size(); ++i) {
    const cplx g = r.zeros()[i].point;
    const cplx log_c = std::log(r.tilde_reduce(i)) + p.eval(g);
    PowerFamily fam{normalize_angle(log_c.imag()), r.zeros()[i].mult, std::nullopt};
    if (pinned) fam.pinned_coeff = std::exp(log_c);
    out.push_back(fam);
  }
  return out;
}

FamilySet pole_power_families(const Rational& r, const Polynomial& p, bool pinned) {
  FamilySet out;
  for (std::size_t j = 0; j < r.poles().size(); ++j) {
    const cplx b = r.poles()[j].point;
    const cplx log_c = std::log(r.hat_reduce(j)) + p.eval(b);
    PowerFamily fam{normalize_angle(log_c.imag()), -r.poles()[j].mult, std::nullopt};
    if (pinned) fam.pinned_coeff = std::exp(log_c);
    out.push_back(fam);
  }
  return out;
}

// F(C1 + C2 zeta) written as a power or exponential family when F has a
// single factor L (z - c)^m or is L e^{p1 z + p0}.
std::optional<FamilyDescriptor> simple_form(const Function& f) {
  const Rational& r = f.rational_part();
  if (const Polynomial* p = f.exponent()) {
    if (r.is_constant() && p->degree() == 1) return ExpFamily{ArgSet::single(arg0(p->leading()))};
    return std::nullopt;
  }
  if (r.zeros().size() + r.poles().size() != 1) return std::nullopt;
  const int e = r.zeros().empty() ? -r.poles().front().mult : r.zeros().front().mult;
  return PowerFamily{arg0(r.scalar()), e, std::nullopt};
}

std::optional<LimitFunction> simple_form(const PrecompositionLimit& g) {
  const Rational& r = g.base.rational_part();
  if (const Polynomial* p = g.base.exponent()) {
    if (!r.is_constant() || p->degree() != 1) return std::nullopt;
    const cplx p1 = p->leading();
    return ExpLimit{std::log(r.scalar()) + p->coefficients()[0] + p1 * g.shift, p1 * g.scale};
  }
  if (r.zeros().size() + r.poles().size() != 1) return std::nullopt;
  const Root& root = r.zeros().empty() ? r.poles().front() : r.zeros().front();
  const int e = r.zeros().empty() ? -root.mult : root.mult;
  return PowerLimit{r.scalar(), g.scale, g.shift - root.point, e};
}

void validate_candidate(const LimitFunction& g) {
  auto fail = [] { throw Error(ErrorCode::unsupported_form, "candidate is constant or malformed"); };
  if (const auto* p = std::get_if<PowerLimit>(&g)) {
    if (p->exponent == 0 || p->c == cplx{} || p->a == cplx{}) fail();
  } else if (const auto* e = std::get_if<ExpLimit>(&g)) {
    if (e->a1 == cplx{}) fail();
  } else {
    const auto& q = std::get<PrecompositionLimit>(g);
    if (q.scale == cplx{} || (q.base.exponent() == nullptr && q.base.rational_part().is_constant())) fail();
  }
}

bool admits(const FamilyDescriptor& fam, const LimitFunction& g) {
  if (const auto* p = std::get_if<PowerLimit>(&g)) {
    const double total = arg0(p->c * std::pow(p->a, p->exponent));
    if (const auto* pf = std::get_if<PowerFamily>(&fam)) {
      return pf->exponent == p->exponent && same_angle(pf->arg_total, total);
    }
    if (const auto* sf = std::get_if<ScaledAffineFamily>(&fam)) {
      return sf->exponent == p->exponent && same_angle(arg0(sf->scale), total);
    }
    return false;
  }
  if (const auto* e = std::get_if<ExpLimit>(&g)) {
    const auto* ef = std::get_if<ExpFamily>(&fam);
    return ef != nullptr && ef->args.contains(arg0(e->a1));
  }
  const auto& q = std::get<PrecompositionLimit>(g);
  const auto* pf = std::get_if<PrecompositionFamily>(&fam);
  return pf != nullptr && same_angle(arg0(q.scale), 0.0) &&
         same_function(pf->base.folded(), q.base.folded());
}

}  // namespace

void check_alpha(double alpha) {
  if (!(alpha > -1.0 && alpha < 1.0)) throw Error(ErrorCode::domain, "alpha out of range (-1,1)");
}

FamilySet classify_monome(int k, cplx /*beta*/, double alpha) {
  check_alpha(alpha);
  if (k < 1) throw Error(ErrorCode::invalid_spec, "monome degree must be >= 1");
  return {ScaledAffineFamily{{1.0, 0.0}, k}};
}

FamilySet classify_polynomial(const Polynomial& p, double alpha) {
  check_alpha(alpha);
  if (alpha == 0.0) return {PrecompositionFamily{Function::polynomial(p)}};
  if (alpha < 0.0) return {ScaledAffineFamily{p.leading(), p.degree()}};
  const Rational r(p.leading(), p.roots(), {});
  FamilySet out;
  for (std::size_t i = 0; i < r.zeros().size(); ++i) {
    out.push_back(ScaledAffineFamily{r.tilde_reduce(i), r.zeros()[i].mult});
  }
  return canonicalize(std::move(out));
}

FamilySet classify_rational(const Rational& r, double alpha) {
  check_alpha(alpha);
  if (r.is_constant()) throw Error(ErrorCode::degenerate, "rational function is constant");
  if (alpha == 0.0) return {PrecompositionFamily{Function::rational(r)}};
  FamilySet out;
  if (alpha > 0.0) {
    if (r.zeros().empty()) return {ScaledAffineFamily{r.scalar(), -r.pole_order()}};
    for (std::size_t i = 0; i < r.zeros().size(); ++i) {
      out.push_back(ScaledAffineFamily{r.tilde_reduce(i), r.zeros()[i].mult});
    }
  } else {
    if (r.poles().empty()) return {ScaledAffineFamily{r.scalar(), r.zero_order()}};
    for (std::size_t j = 0; j < r.poles().size(); ++j) {
      out.push_back(ScaledAffineFamily{r.hat_reduce(j), -r.poles()[j].mult});
    }
  }
  return canonicalize(std::move(out));
}

ArgSet exp_arg_arcs(double arg_ak, int k, double alpha) {
  if (alpha < 0.0) return exp_arg_arcs(arg_ak + kPi, k, -alpha).rotated(kPi);
  const double phi = normalize_angle(arg_ak);
  const double q = static_cast<double>(k - 1) / k;
  std::vector<Arc> arcs;
  for (int l = 0; l < k; ++l) {
    arcs.push_back({phi + q * (kPi / 2.0 - phi + kTwoPi * l), phi + q * (1.5 * kPi - phi + kTwoPi * l)});
  }
  return ArgSet::arcs(arcs);
}

FamilySet classify_exp(const Function& f_in, double alpha) {
  check_alpha(alpha);
  if (f_in.kind() != FunctionKind::exp_rational) {
    throw Error(ErrorCode::invalid_spec, "classify_exp needs an exp-rational function");
  }
  const Function f = f_in.folded();
  const Rational& r = f.rational_part();
  const Polynomial& p = *f.exponent();
  const int k = p.degree();
  const double phi = arg0(p.leading());

  FamilySet out;
  if (k == 1) {
    out.push_back(ExpFamily{ArgSet::single(phi)});
    if (alpha == 0.0) {
      out.push_back(PrecompositionFamily{f});
    } else {
      const FamilySet powers = alpha > 0.0 ? zero_power_families(r, p, true) : pole_power_families(r, p, true);
      out.insert(out.end(), powers.begin(), powers.end());
    }
    return canonicalize(std::move(out));
  }

  if (alpha == 0.0) {
    std::vector<double> args;
    for (int sign : {1, -1}) {
      for (int l = 0; l < k; ++l) {
        args.push_back((phi + (k - 1) * (sign * kPi / 2.0) + (k - 1) * kTwoPi * l) / k);
      }
    }
    out.push_back(PrecompositionFamily{f});
    out.push_back(ExpFamily{ArgSet::finite(args)});
    return canonicalize(std::move(out));
  }

  out = alpha > 0.0 ? zero_power_families(r, p, false) : pole_power_families(r, p, false);
  out.push_back(ExpFamily{exp_arg_arcs(phi, k, alpha)});
  return canonicalize(std::move(out));
}

FamilySet classify(const Function& f, double alpha) {
  switch (f.kind()) {
    case FunctionKind::polynomial: return classify_polynomial(*f.as_polynomial(), alpha);
    case FunctionKind::rational: return classify_rational(f.rational_part(), alpha);
    case FunctionKind::exp_rational: return classify_exp(f, alpha);
  }
  return {};
}

bool membership(const LimitFunction& g, const FamilySet& families) {
  validate_candidate(g);
  std::vector<LimitFunction> forms{g};
  if (const auto* q = std::get_if<PrecompositionLimit>(&g)) {
    if (auto s = simple_form(*q)) forms.push_back(*s);
  }
  for (const FamilyDescriptor& fam : families) {
    std::vector<FamilyDescriptor> views{fam};
    if (const auto* pf = std::get_if<PrecompositionFamily>(&fam)) {
      if (auto s = simple_form(pf->base)) views.push_back(*s);
    }
    for (const auto& v : views) {
      for (const auto& form : forms) {
        if (admits(v, form)) return true;
      }
    }
  }
  return false;
}

}  // namespace zlab
