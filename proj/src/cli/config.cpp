#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zlab/classifier.hpp"
#include "zlab/cli.hpp"
#include "zlab/error.hpp"

namespace zlab::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::config, path + ": " + msg);
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

cplx complex_value(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(path, "expected a complex number [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_json(cplx z) { return json::array({round9(z.real()), round9(z.imag())}); }

std::vector<Root> roots_value(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Root> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const int mult = j[i].contains("mult") ? integer(j[i]["mult"], p + ".mult") : 1;
    if (mult < 1) fail(p + ".mult", "must be a positive integer");
    out.push_back({complex_value(field(j[i], p, "point"), p + ".point"), mult});
  }
  return out;
}

json roots_json(const std::vector<Root>& roots) {
  json a = json::array();
  for (const Root& r : roots) a.push_back({{"point", complex_json(r.point)}, {"mult", r.mult}});
  return a;
}

Polynomial polynomial_value(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  try {
    if (j.contains("coefficients")) {
      const json& c = j["coefficients"];
      if (!c.is_array()) fail(path + ".coefficients", "expected an array");
      std::vector<cplx> coeffs;
      for (std::size_t i = 0; i < c.size(); ++i) {
        coeffs.push_back(complex_value(c[i], path + ".coefficients[" + std::to_string(i) + "]"));
      }
      return Polynomial::from_coefficients(coeffs);
    }
    const cplx leading = complex_value(field(j, path, "leading"), path + ".leading");
    return Polynomial(leading, roots_value(field(j, path, "roots"), path + ".roots"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::config) throw;
    fail(path, e.what());
  }
}

Rational rational_value(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const cplx scalar = j.contains("scalar") ? complex_value(j["scalar"], path + ".scalar") : cplx{1.0, 0.0};
  const auto zeros = j.contains("zeros") ? roots_value(j["zeros"], path + ".zeros") : std::vector<Root>{};
  const auto poles = j.contains("poles") ? roots_value(j["poles"], path + ".poles") : std::vector<Root>{};
  try {
    return Rational(scalar, zeros, poles);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

ArgSet arg_set_value(const json& j, const std::string& path) {
  const json& kind = field(j, path, "kind");
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "all_nonzero") return ArgSet::all_nonzero();
  if (k == "single" || k == "finite") {
    const json& v = field(j, path, "values");
    if (!v.is_array() || v.empty()) fail(path + ".values", "expected a nonempty array");
    std::vector<double> values;
    for (std::size_t i = 0; i < v.size(); ++i) values.push_back(number(v[i], path + ".values"));
    return k == "single" ? ArgSet::single(values.front()) : ArgSet::finite(values);
  }
  if (k == "arcs") {
    const json& a = field(j, path, "arcs");
    if (!a.is_array()) fail(path + ".arcs", "expected an array");
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string p = path + ".arcs[" + std::to_string(i) + "]";
      if (!a[i].is_array() || a[i].size() != 2) fail(p, "expected [lo, hi]");
      arcs.push_back({number(a[i][0], p), number(a[i][1], p)});
    }
    return ArgSet::arcs(arcs);
  }
  fail(path + ".kind", "unknown arg set kind '" + k + "'");
}

json arg_set_json(const ArgSet& s) {
  switch (s.kind()) {
    case ArgSet::Kind::all_nonzero: return {{"kind", "all_nonzero"}};
    case ArgSet::Kind::single:
    case ArgSet::Kind::finite: {
      json v = json::array();
      for (double a : s.values()) v.push_back(round9(a));
      return {{"kind", s.kind() == ArgSet::Kind::single ? "single" : "finite"}, {"values", v}};
    }
    case ArgSet::Kind::arcs: {
      json a = json::array();
      for (const Arc& arc : s.arc_list()) a.push_back(json::array({round9(arc.lo), round9(arc.hi)}));
      return {{"kind", "arcs"}, {"arcs", a}};
    }
  }
  return {};
}

}  // namespace

double round9(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

std::string format9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x == 0.0 ? 0.0 : x);
  return buf;
}

Function parse_function(const json& j) {
  const json& kind = field(j, "config", "kind");
  if (!kind.is_string()) fail("config.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "polynomial") return Function::polynomial(polynomial_value(field(j, "config", "polynomial"), "polynomial"));
  if (k == "rational") return Function::rational(rational_value(field(j, "config", "rational"), "rational"));
  if (k == "exp_rational") {
    Polynomial p = polynomial_value(field(j, "config", "polynomial"), "polynomial");
    Rational r = j.contains("rational") ? rational_value(j["rational"], "rational") : Rational({1.0, 0.0}, {}, {});
    return Function::exp_rational(std::move(r), std::move(p));
  }
  fail("config.kind", "unknown kind '" + k + "' (polynomial, rational or exp_rational)");
}

json function_to_json(const Function& f) {
  const Rational& r = f.rational_part();
  json rational = {{"scalar", complex_json(r.scalar())}, {"zeros", roots_json(r.zeros())}, {"poles", roots_json(r.poles())}};
  switch (f.kind()) {
    case FunctionKind::polynomial: {
      const Polynomial& p = *f.as_polynomial();
      return {{"kind", "polynomial"}, {"polynomial", {{"leading", complex_json(p.leading())}, {"roots", roots_json(p.roots())}}}};
    }
    case FunctionKind::rational: return {{"kind", "rational"}, {"rational", rational}};
    case FunctionKind::exp_rational: {
      json c = json::array();
      for (const cplx& a : f.exponent()->coefficients()) c.push_back(complex_json(a));
      return {{"kind", "exp_rational"}, {"polynomial", {{"coefficients", c}}}, {"rational", rational}};
    }
  }
  return {};
}

Config parse_config(const json& j) {
  if (!j.is_object()) fail("config", "expected an object");
  Function f = parse_function(j);
  const double alpha = number(field(j, "config", "alpha"), "alpha");
  if (!(alpha > -1.0 && alpha < 1.0)) fail("alpha", "alpha out of range (-1,1)");
  if (f.kind() == FunctionKind::rational && f.rational_part().is_constant()) {
    fail("rational", "function is constant");
  }
  return {std::move(f), alpha};
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::config, path + ": cannot open config file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::config, path + ": " + e.what());
  }
  return parse_config(j);
}

json descriptor_to_json(const FamilyDescriptor& d) {
  json j = {{"family", family_name(d)}};
  if (const auto* p = std::get_if<PowerFamily>(&d)) {
    j["exponent"] = p->exponent;
    j["arg_total"] = round9(p->arg_total);
    if (p->pinned_coeff) j["pinned_coeff"] = complex_json(*p->pinned_coeff);
  } else if (const auto* e = std::get_if<ExpFamily>(&d)) {
    j["arg_set"] = arg_set_json(e->args);
  } else if (const auto* f = std::get_if<PrecompositionFamily>(&d)) {
    j["function"] = function_to_json(f->base);
  } else {
    const auto& s = std::get<ScaledAffineFamily>(d);
    j["exponent"] = s.exponent;
    j["scale"] = complex_json(s.scale);
  }
  return j;
}

FamilyDescriptor descriptor_from_json(const json& j) {
  const json& fam = field(j, "descriptor", "family");
  if (!fam.is_string()) fail("descriptor.family", "expected a string");
  const std::string name = fam.get<std::string>();
  if (name == "power") {
    PowerFamily p{number(field(j, "descriptor", "arg_total"), "descriptor.arg_total"),
                  integer(field(j, "descriptor", "exponent"), "descriptor.exponent"), std::nullopt};
    if (j.contains("pinned_coeff")) p.pinned_coeff = complex_value(j["pinned_coeff"], "descriptor.pinned_coeff");
    return p;
  }
  if (name == "exp") return ExpFamily{arg_set_value(field(j, "descriptor", "arg_set"), "descriptor.arg_set")};
  if (name == "precomposition") return PrecompositionFamily{parse_function(field(j, "descriptor", "function"))};
  if (name == "scaled_affine") {
    return ScaledAffineFamily{complex_value(field(j, "descriptor", "scale"), "descriptor.scale"),
                              integer(field(j, "descriptor", "exponent"), "descriptor.exponent")};
  }
  fail("descriptor.family", "unknown family '" + name + "'");
}

json families_to_json(const FamilySet& set) {
  json a = json::array();
  for (const auto& d : set) a.push_back(descriptor_to_json(d));
  return a;
}

FamilySet families_from_json(const json& j) {
  if (!j.is_array()) fail("descriptors", "expected an array");
  FamilySet out;
  for (const auto& d : j) out.push_back(descriptor_from_json(d));
  return out;
}

LimitFunction limit_from_json(const json& j, const Function& base) {
  const json& form = field(j, "limit", "form");
  if (!form.is_string()) fail("limit.form", "expected a string");
  const std::string name = form.get<std::string>();
  auto opt_c = [&](const char* key, cplx dflt) {
    return j.contains(key) ? complex_value(j[key], std::string("limit.") + key) : dflt;
  };
  if (name == "exp") return ExpLimit{opt_c("A0", {}), opt_c("A1", {1.0, 0.0})};
  if (name == "power") {
    const int e = integer(field(j, "limit", "exponent"), "limit.exponent");
    return PowerLimit{opt_c("c", {1.0, 0.0}), opt_c("A", {1.0, 0.0}), opt_c("C", {}), e};
  }
  if (name == "precomposition") return PrecompositionLimit{base, opt_c("shift", {}), opt_c("scale", {1.0, 0.0})};
  fail("limit.form", "unknown form '" + name + "' (power, exp or precomposition)");
}

json limit_to_json(const LimitFunction& g) {
  if (const auto* p = std::get_if<PowerLimit>(&g)) {
    return {{"form", "power"}, {"c", complex_json(p->c)}, {"A", complex_json(p->a)},
            {"C", complex_json(p->shift)}, {"exponent", p->exponent}};
  }
  if (const auto* e = std::get_if<ExpLimit>(&g)) {
    return {{"form", "exp"}, {"A0", complex_json(e->a0)}, {"A1", complex_json(e->a1)}};
  }
  const auto& q = std::get<PrecompositionLimit>(g);
  return {{"form", "precomposition"}, {"shift", complex_json(q.shift)}, {"scale", complex_json(q.scale)},
          {"function", function_to_json(q.base)}};
}

}  // namespace zlab::cli
