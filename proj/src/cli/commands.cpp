#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "zlab/classifier.hpp"
#include "zlab/cli.hpp"
#include "zlab/error.hpp"
#include "zlab/locus.hpp"
#include "zlab/recipe.hpp"
#include "zlab/verifier.hpp"

namespace zlab::cli {

namespace {

constexpr const char* kCsvHeader = "# zalcman-lab v1";

json parse_json_flag(const std::string& text, const char* flag) {
  if (text.empty()) return json::object();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::config, std::string(flag) + ": " + e.what());
  }
}

double param_number(const json& p, const char* key, double dflt) {
  if (!p.contains(key)) return dflt;
  if (!p[key].is_number()) throw Error(ErrorCode::config, std::string("params.") + key + ": expected a number");
  return p[key].get<double>();
}

cplx param_complex(const json& p, const char* key, cplx dflt) {
  if (!p.contains(key)) return dflt;
  const json& v = p[key];
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw Error(ErrorCode::config, std::string("params.") + key + ": expected [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::string complex_text(cplx z) { return "(" + format9(z.real()) + ", " + format9(z.imag()) + ")"; }

std::string arg_set_text(const ArgSet& s) {
  std::string out;
  switch (s.kind()) {
    case ArgSet::Kind::all_nonzero: return "all_nonzero";
    case ArgSet::Kind::single:
    case ArgSet::Kind::finite:
      out = s.kind() == ArgSet::Kind::single ? "single" : "finite";
      for (double v : s.values()) out += " " + format9(v);
      return out;
    case ArgSet::Kind::arcs:
      out = "arcs";
      for (const Arc& a : s.arc_list()) out += " [" + format9(a.lo) + ", " + format9(a.hi) + "]";
      return out;
  }
  return out;
}

std::string descriptor_text(const FamilyDescriptor& d) {
  if (const auto* p = std::get_if<PowerFamily>(&d)) {
    std::string s = "power exponent=" + std::to_string(p->exponent) + " arg_total=" + format9(p->arg_total);
    if (p->pinned_coeff) s += " pinned_coeff=" + complex_text(*p->pinned_coeff);
    return s;
  }
  if (const auto* e = std::get_if<ExpFamily>(&d)) return "exp arg_set=" + arg_set_text(e->args);
  if (std::holds_alternative<PrecompositionFamily>(d)) return "precomposition f(C1 + C2*zeta)";
  const auto& s = std::get<ScaledAffineFamily>(d);
  return "scaled_affine exponent=" + std::to_string(s.exponent) + " scale=" + complex_text(s.scale);
}

bool is_monome(const Function& f) {
  const Polynomial* p = f.as_polynomial();
  return p != nullptr && p->roots().size() == 1 && p->leading() == cplx{1.0, 0.0};
}

Recipe build_recipe(const Config& cfg, const std::string& target, const json& params, bool pinned) {
  const Function& f = cfg.f;
  const double alpha = cfg.alpha;
  if (target == "affine") {
    const double a = param_number(params, "A", 1.0);
    const cplx c = param_complex(params, "C", {});
    const auto index = static_cast<std::size_t>(param_number(params, "index", 0.0));
    if (is_monome(f)) {
      const Root& r = f.as_polynomial()->roots().front();
      return recipe_monome(r.mult, r.point, alpha, a, c);
    }
    return recipe_rational(f, alpha, a, c, index);
  }
  if (target == "precomposition") {
    if (alpha != 0.0) throw Error(ErrorCode::target_mismatch, "precomposition targets need alpha = 0");
    const cplx b = param_complex(params, "b", {});
    const double c = param_number(params, "c", 1.0);
    return recipe_rational(f, 0.0, c, b);
  }
  if (target == "exp-ray") {
    if (f.kind() != FunctionKind::exp_rational) throw Error(ErrorCode::target_mismatch, "exp-ray needs exp_rational");
    RayOptions opt;
    opt.ray_index = static_cast<std::size_t>(param_number(params, "ray", 0.0));
    opt.shrink_c = param_number(params, "c", 4.0);
    if (params.contains("z0") && params["z0"].is_number()) opt.z0_modulus = params["z0"].get<double>();
    const Polynomial& p = *f.exponent();
    const auto rays = nonnormal_rays(p).angles;
    cplx a1_default{1.0, 0.0};
    if (opt.ray_index < rays.size()) {
      a1_default = std::polar(1.0, std::arg(p.leading()) + (p.degree() - 1) * rays[opt.ray_index]);
    }
    return recipe_exp_ray_pinned(f, alpha, param_complex(params, "A1", a1_default), param_complex(params, "A0", {}), opt);
  }
  if (target == "exp-interior") {
    if (f.kind() != FunctionKind::exp_rational) throw Error(ErrorCode::target_mismatch, "exp-interior needs exp_rational");
    InteriorOptions opt;
    opt.pinned = pinned;
    opt.rho_scale = param_number(params, "rho_scale", 1.0);
    opt.a0 = {0.0, param_number(params, "A0_im", 0.0)};
    if (params.contains("arg")) return recipe_exp_interior_for_arg(f, alpha, param_number(params, "arg", 0.0), opt);
    const double theta0 = param_number(params, "theta0", 0.0);
    if (alpha < 0.0) return recipe_exp_interior(f.reciprocal(), -alpha, theta0, opt).dual();
    return recipe_exp_interior(f, alpha, theta0, opt);
  }
  throw Error(ErrorCode::config, "--target: unknown target '" + target +
                                     "' (affine, precomposition, exp-ray, exp-interior)");
}

json diagnostics_json(const StepDiagnostics& d) {
  json j = json::object();
  if (d.c0) j["c0"] = round9(*d.c0);
  if (d.t) j["t"] = round9(*d.t);
  if (d.zhat) j["zhat"] = json::array({round9(d.zhat->real()), round9(d.zhat->imag())});
  if (d.residual) j["residual"] = round9(*d.residual);
  if (d.congruence) j["congruence"] = round9(*d.congruence);
  if (d.branch) j["branch"] = *d.branch;
  if (d.iterations) j["iterations"] = *d.iterations;
  if (d.local_a1) j["local_A1"] = json::array({round9(d.local_a1->real()), round9(d.local_a1->imag())});
  if (d.local_a0) j["local_A0"] = json::array({round9(d.local_a0->real()), round9(d.local_a0->imag())});
  return j;
}

std::vector<long long> parse_schedule(const std::string& text) {
  if (text.empty()) return default_schedule();
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long n = std::stoll(item, &used);
      if (used != item.size() || n < 1) throw std::invalid_argument(item);
      out.push_back(n);
    } catch (const std::exception&) {
      throw Error(ErrorCode::config, "--n-schedule: bad entry '" + item + "'");
    }
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw Error(ErrorCode::config, "--n-schedule: must be strictly increasing");
  }
  if (out.empty()) throw Error(ErrorCode::config, "--n-schedule: empty");
  return out;
}

cplx parse_point(const std::string& text) {
  std::stringstream ss(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(ss >> re)) throw Error(ErrorCode::config, "--center: expected re,im");
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im)) throw Error(ErrorCode::config, "--center: expected re,im");
  }
  return {re, im};
}

std::vector<long long> scan_schedule(long long nmax) {
  std::vector<long long> out;
  for (long long decade = 1; decade <= nmax; decade *= 10) {
    for (long long m : {1, 2, 5}) {
      if (m * decade <= nmax) out.push_back(m * decade);
    }
  }
  if (out.empty() || out.back() != nmax) out.push_back(nmax);
  return out;
}

int selftest(std::ostream& out) {
  int failures = 0;
  int checks = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      out << "FAIL " << what << "\n";
    }
  };
  for (int k : {1, 2, 3}) {
    for (double alpha : {-0.5, 0.0, 0.5}) {
      const Recipe r = recipe_monome(k, {3.0, 0.0}, alpha, 2.0, {1.0, 1.0});
      const auto rep = verify_convergence(r, r.target(), GridSpec{}, {10, 1000, 1000000}, 1e-9);
      check(rep.pass, "monome exact identity k=" + std::to_string(k) + " alpha=" + format9(alpha));
    }
  }
  const auto rays = nonnormal_rays(Polynomial({1.0, 0.0}, {{{0.0, 0.0}, 2}})).angles;
  for (int l = 0; l < 4; ++l) {
    check(std::abs(rays[l] - (2 * l + 1) * std::numbers::pi / 4) < 1e-12, "ray formula z^2");
  }
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> t(0.0, 3.0);
  std::uniform_real_distribution<double> th(0.0, kTwoPi);
  for (int i = 0; i < 1000; ++i) {
    const auto a = LogComplex::from_log_polar(t(rng), th(rng));
    const auto b = LogComplex::from_log_polar(t(rng), th(rng));
    const auto c = LogComplex::from_log_polar(t(rng), th(rng));
    const double ab = chordal(a, b);
    check(std::abs(ab - chordal(b, a)) < 1e-15 && ab >= 0.0 && ab <= 1.0, "chordal symmetry and bound");
    check(chordal(a, c) <= ab + chordal(b, c) + 1e-12, "chordal triangle inequality");
    check(std::abs(chordal(a.reciprocal(), b.reciprocal()) - ab) < 1e-12, "chordal inversion invariance");
  }
  const Function e_z = Function::exp_rational(Rational({1.0, 0.0}, {}, {}), Polynomial({1.0, 0.0}, {{{0.0, 0.0}, 1}}));
  check(!membership(ExpLimit{{}, {0.0, 1.0}}, classify(e_z, 0.0)), "e^{i zeta} rejected from Pi_0(e^z)");
  check(membership(ExpLimit{{std::log(5.0), 0.0}, {1.0, 0.0}}, classify(e_z, 0.0)), "5 e^{zeta} in Pi_0(e^z)");
  out << "selftest: " << (checks - failures) << "/" << checks << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rescaling limits of f(nz) for f = R e^P", "zlab"};
  app.require_subcommand(1);

  std::string config_path, format = "json", target, params_text, mode, limit_text, schedule_text, center_text = "0,0";
  std::string recipe_mode = "pinned";
  double grid_radius = 2.0, tol = -1.0, radius = 0.1;
  int grid_n = 21;
  long long nmax = 50;

  auto* classify_cmd = app.add_subcommand("classify", "print the limit families of f");
  classify_cmd->add_option("config", config_path, "JSON config")->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* rays_cmd = app.add_subcommand("rays", "print the non-normality rays");
  rays_cmd->add_option("config", config_path, "JSON config")->required();
  rays_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* construct_cmd = app.add_subcommand("construct", "print the first terms of a rescaling sequence");
  construct_cmd->add_option("config", config_path, "JSON config")->required();
  construct_cmd->add_option("--target", target)->required();
  construct_cmd->add_option("--params", params_text, "JSON object");
  construct_cmd->add_option("--mode", recipe_mode)->check(CLI::IsMember({"faithful", "pinned"}));

  auto* verify_cmd = app.add_subcommand("verify", "check convergence of the rescaled sequence");
  verify_cmd->add_option("config", config_path, "JSON config")->required();
  verify_cmd->add_option("--target", target)->required();
  verify_cmd->add_option("--params", params_text, "JSON object");
  verify_cmd->add_option("--limit", limit_text, "JSON limit function overriding the recipe target");
  verify_cmd->add_option("--n-schedule", schedule_text, "comma separated, increasing");
  verify_cmd->add_option("--grid-radius", grid_radius);
  verify_cmd->add_option("--grid-n", grid_n);
  verify_cmd->add_option("--tol", tol);
  verify_cmd->add_option("--mode", mode)->check(CLI::IsMember({"full", "subsequence"}));
  verify_cmd->add_option("--recipe-mode", recipe_mode)->check(CLI::IsMember({"faithful", "pinned"}));

  auto* scan_cmd = app.add_subcommand("scan", "n f^#(nz) over a disk");
  scan_cmd->add_option("config", config_path, "JSON config")->required();
  scan_cmd->add_option("--center", center_text, "re,im");
  scan_cmd->add_option("--radius", radius);
  scan_cmd->add_option("--nmax", nmax);
  scan_cmd->add_option("--grid-n", grid_n);

  auto* selftest_cmd = app.add_subcommand("selftest", "exact identities and kernel invariants");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (selftest_cmd->parsed()) return selftest(out);
    const Config cfg = load_config(config_path);

    if (classify_cmd->parsed()) {
      const FamilySet fams = classify(cfg.f, cfg.alpha);
      if (format == "json") {
        out << families_to_json(fams).dump(2) << "\n";
      } else {
        for (const auto& d : fams) out << descriptor_text(d) << "\n";
      }
      return 0;
    }

    if (rays_cmd->parsed()) {
      std::vector<double> angles;
      if (const Polynomial* p = cfg.f.exponent()) angles = nonnormal_rays(*p).angles;
      if (format == "json") {
        json a = json::array();
        for (double x : angles) a.push_back(round9(x));
        out << a.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < angles.size(); ++i) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.6f", angles[i]);
          out << (i ? ", " : "") << buf;
        }
        out << "\n";
      }
      return 0;
    }

    const json params = parse_json_flag(params_text, "--params");
    if (!params.is_object()) throw Error(ErrorCode::config, "--params: expected a JSON object");

    if (construct_cmd->parsed()) {
      const Recipe r = build_recipe(cfg, target, params, recipe_mode == "pinned");
      json terms = json::array();
      for (long long n = 2; n <= 6; ++n) {
        const RecipeStep s = r.step(n);
        terms.push_back({{"n", n},
                         {"k", round9(static_cast<double>(s.term.k))},
                         {"z", json::array({round9(static_cast<double>(s.term.z.real())),
                                            round9(static_cast<double>(s.term.z.imag()))})},
                         {"rho", round9(static_cast<double>(s.term.rho))},
                         {"diagnostics", diagnostics_json(s.diagnostics)}});
      }
      json j = {{"recipe", to_string(r.kind())},
                {"dual", r.is_dual()},
                {"exactness", r.exactness() == Exactness::exact ? "exact" : "limit-only"},
                {"approximate_target", r.approximate_target()},
                {"target", limit_to_json(r.target())},
                {"terms", terms}};
      out << j.dump(2) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      const Recipe r = build_recipe(cfg, target, params, recipe_mode == "pinned");
      const LimitFunction g = limit_text.empty() ? r.target() : limit_from_json(parse_json_flag(limit_text, "--limit"), cfg.f);
      const double tolerance = tol > 0.0 ? tol : (r.exactness() == Exactness::exact ? 1e-9 : 1e-2);
      GridSpec grid;
      grid.radius = grid_radius;
      grid.points_per_side = grid_n;
      if (!(grid_radius > 0.0) || grid_n < 5 || grid_n % 2 == 0) {
        throw Error(ErrorCode::config, "--grid-radius/--grid-n: radius > 0 and an odd count >= 5 required");
      }
      const auto rep = verify_convergence(r, g, grid, parse_schedule(schedule_text), tolerance,
                                          mode == "subsequence" ? VerifyMode::subsequence : VerifyMode::full);
      out << kCsvHeader << "\n" << "n,sup_error,phase_dispersion,selected_flag\n";
      for (std::size_t i = 0; i < rep.schedule.size(); ++i) {
        out << rep.schedule[i] << "," << format9(rep.sup_error[i]) << "," << format9(rep.phase_dispersion[i]) << ","
            << (rep.selected[i] ? 1 : 0) << "\n";
      }
      if (rep.pass) {
        out << "# verdict: pass\n";
        return 0;
      }
      out << "# verdict: fail\n# reason: " << rep.reason << "\n";
      err << "reason: " << rep.reason << "\n";
      return 1;
    }

    if (scan_cmd->parsed()) {
      if (!(radius > 0.0) || nmax < 1 || grid_n < 5 || grid_n % 2 == 0) {
        throw Error(ErrorCode::config, "--radius/--nmax/--grid-n: radius > 0, nmax >= 1, odd grid count >= 5");
      }
      const auto field = marty_scan(cfg.f, parse_point(center_text), radius, grid_n == 21 ? 11 : grid_n,
                                    scan_schedule(nmax));
      out << kCsvHeader << "\n" << "z_re,z_im,n,marty_value\n";
      for (std::size_t s = 0; s < field.schedule.size(); ++s) {
        for (std::size_t i = 0; i < field.points.size(); ++i) {
          out << format9(field.points[i].real()) << "," << format9(field.points[i].imag()) << ","
              << field.schedule[s] << "," << format9(field.values[s][i]) << "\n";
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::config ? 2 : 1;
  }
  return 2;
}

}  // namespace zlab::cli
