// Command-line front end: body I/O, family computation, law checks and
// CSV/SVG curve emission.
//
// Exit codes: 0 = pass, 1 = law violation (machine-readable report on
// stdout), 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <polycalc/io.hpp>
#include <polycalc/polycalc.hpp>

using nlohmann::json;
using namespace polycalc;

namespace {

json witness_json(const HomothetyWitness& w, int dim) {
  json t = json::array();
  for (int i = 0; i < dim; ++i) t.push_back(w.translation[i]);
  return json{{"scale", w.scale}, {"translation", t}};
}

json report_json(const PassReport& rep) {
  return json{{"law", law_name(rep.law)},
              {"pass", rep.pass},
              {"max_residual", rep.max_residual},
              {"details", rep.details}};
}

json diagnosis_json(const DiagnosisReport& rep, int dim) {
  json intervals = json::array();
  for (auto& [lo, hi] : rep.constancy_intervals) intervals.push_back({lo, hi});
  json ptang = json::object();
  for (auto& [p, verdict] : rep.p_tangential) ptang[std::to_string(p)] = verdict;
  json j{{"conditions",
          {{"i_quotient_equal", rep.conditions[0]},
           {"ii_homothetic", rep.conditions[1]},
           {"iii_tangential_homothet", rep.conditions[2]},
           {"iv_constant_below", rep.conditions[3]}}},
         {"agree", rep.agree},
         {"monotone", rep.monotone},
         {"max_rise", rep.max_rise},
         {"constancy_intervals", intervals},
         {"p_tangential", ptang},
         {"r_class", rep.r_class},
         {"gauge_homothety", rep.gauge_homothety},
         {"constant_at_gauge_level", rep.constant_at_gauge_level}};
  if (rep.homothety) j["homothety"] = witness_json(*rep.homothety, dim);
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

void emit_body(const Polytope& P, const std::string& out_path, const std::string& label) {
  if (out_path.empty())
    std::cout << body_to_json(P, label).dump(2) << "\n";
  else
    write_body(P, out_path, label);
}

QuotientSelection parse_quotients(const std::string& spec, bool& ok) {
  QuotientSelection sel;
  sel.base = false;
  std::stringstream ss(spec);
  std::string tok;
  ok = true;
  while (std::getline(ss, tok, ',')) {
    if (tok == "I") sel.base = true;
    else if (tok == "IOmega") sel.omega = true;
    else if (tok.size() == 2 && tok[0] == 'I' && std::isdigit(tok[1])) sel.ii = true;
    else if (tok.size() == 3 && tok[0] == 'I' && std::isdigit(tok[1]) && std::isdigit(tok[2])) sel.iij = true;
    else ok = false;
  }
  sel.base = true;  // I is always emitted
  return sel;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polycalc: parallel bodies, Wulff families and isoperimetric diagnostics for polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  double eps = 1e-9;
  std::string format = "text";
  app.add_option("--eps", eps, "geometric tolerance (default 1e-9)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string body_a, body_b, omega_spec, omega2_spec, out_path, svg_path, quotients = "I", law_name_arg;
  double lambda = 0.0, l0 = 0.0, l1 = 0.0, mu = 0.5, fd_h = 0.0, tol = 0.0;
  double lmin = std::numeric_limits<double>::quiet_NaN(), lmax = std::numeric_limits<double>::quiet_NaN();
  int steps = 64;
  unsigned long long seed = 1;

  CLI::App* c_info = app.add_subcommand("info", "vertices, facets, volume and surface of a body");
  c_info->add_option("BODY", body_a)->required();

  CLI::App* c_inr = app.add_subcommand("inradius", "relative inradius inr(K;E) and incenter");
  c_inr->add_option("K", body_a)->required();
  c_inr->add_option("E", body_b)->required();

  CLI::App* c_par = app.add_subcommand("parallel", "inner/outer parallel body K_lambda");
  c_par->add_option("K", body_a)->required();
  c_par->add_option("E", body_b)->required();
  c_par->add_option("--lambda", lambda)->required();
  c_par->add_option("-o,--output", out_path);

  CLI::App* c_wulff = app.add_subcommand("wulff", "Wulff shape K(Omega,lambda)");
  c_wulff->add_option("K", body_a)->required();
  c_wulff->add_option("E", body_b)->required();
  c_wulff->add_option("--omega", omega_spec, "direction file, body file or 'axes'")->required();
  c_wulff->add_option("--lambda", lambda)->required();
  c_wulff->add_option("-o,--output", out_path);

  CLI::App* c_form = app.add_subcommand("formbody", "form body K* = E^{U(K)}");
  c_form->add_option("K", body_a)->required();
  c_form->add_option("E", body_b)->required();
  c_form->add_option("-o,--output", out_path);

  CLI::App* c_env = app.add_subcommand("envelope", "gauge envelope E^Omega");
  c_env->add_option("E", body_a)->required();
  c_env->add_option("--omega", omega_spec)->required();
  c_env->add_option("-o,--output", out_path);

  CLI::App* c_curve = app.add_subcommand("curve", "sample quotient curves over a lambda grid");
  c_curve->add_option("K", body_a)->required();
  c_curve->add_option("E", body_b)->required();
  c_curve->add_option("--omega", omega_spec);
  c_curve->add_option("--lmin", lmin);
  c_curve->add_option("--lmax", lmax);
  c_curve->add_option("--steps", steps);
  c_curve->add_option("--quotients", quotients, "comma list: I,IOmega,I0,I1,I01,...");
  c_curve->add_option("-o,--output", out_path, "CSV output path (default stdout)");
  c_curve->add_option("--svg", svg_path, "also emit an SVG line chart");

  CLI::App* c_check = app.add_subcommand("check", "run one law on a (K,E) instance");
  c_check->add_option("LAW", law_name_arg)->required();
  c_check->add_option("K", body_a)->required();
  c_check->add_option("E", body_b)->required();
  c_check->add_option("--l0", l0);
  c_check->add_option("--l1", l1);
  c_check->add_option("--lambda", lambda);
  c_check->add_option("--mu", mu);
  c_check->add_option("--fd-h", fd_h);
  c_check->add_option("--tol", tol);
  c_check->add_option("--omega", omega_spec);
  c_check->add_option("--omega2", omega2_spec);
  c_check->add_option("--seed", seed);

  CLI::App* c_diag = app.add_subcommand("diagnose", "four-way constancy equivalence diagnosis");
  c_diag->add_option("K", body_a)->required();
  c_diag->add_option("E", body_b)->required();
  c_diag->add_option("--l0", l0)->required();
  c_diag->add_option("--l1", l1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  eps_geom() = eps;

  try {
    if (c_info->parsed()) {
      Polytope P = read_body(body_a);
      if (format == "json") {
        json j = body_to_json(P);
        j["full_dim"] = P.full_dim;
        j["n_vertices"] = P.vertices.size();
        j["n_facets"] = P.facets.size();
        j["volume"] = volume(P);
        if (P.full_dim) j["classical_surface"] = classical_surface(P);
        json facets = json::array();
        for (const HalfSpace& h : P.facets) {
          json n = json::array();
          for (int i = 0; i < P.dim; ++i) n.push_back(h.normal[i]);
          facets.push_back({{"normal", n}, {"offset", h.offset}});
        }
        j["facets"] = facets;
        std::cout << j.dump(2) << "\n";
      } else if (format == "csv") {
        std::cout << "key,value\ndim," << P.dim << "\nfull_dim," << P.full_dim << "\nn_vertices,"
                  << P.vertices.size() << "\nn_facets," << P.facets.size() << "\nvolume,"
                  << format_full(volume(P)) << "\n";
        if (P.full_dim) std::cout << "classical_surface," << format_full(classical_surface(P)) << "\n";
      } else {
        std::cout << "dim " << P.dim << (P.full_dim ? "" : " (lower-dimensional)") << "\n"
                  << "vertices " << P.vertices.size() << ", facets " << P.facets.size() << "\n"
                  << "volume " << format_full(volume(P)) << "\n";
        if (P.full_dim) std::cout << "classical surface " << format_full(classical_surface(P)) << "\n";
        for (const Vec& v : P.vertices) {
          std::cout << "  v";
          for (int i = 0; i < P.dim; ++i) std::cout << " " << format_full(v[i]);
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (c_inr->parsed()) {
      Polytope K = read_body(body_a), E = read_body(body_b);
      InradiusResult ir = inradius(K, E);
      if (format == "json") {
        json c = json::array();
        for (int i = 0; i < K.dim; ++i) c.push_back(ir.center[i]);
        std::cout << json{{"r", ir.r}, {"center", c}}.dump(2) << "\n";
      } else if (format == "csv") {
        std::cout << "key,value\nr," << format_full(ir.r) << "\n";
        for (int i = 0; i < K.dim; ++i)
          std::cout << "center" << i << "," << format_full(ir.center[i]) << "\n";
      } else {
        std::cout << "r = " << format_full(ir.r) << "\ncenter =";
        for (int i = 0; i < K.dim; ++i) std::cout << " " << format_full(ir.center[i]);
        std::cout << "\n";
      }
      return 0;
    }

    if (c_par->parsed()) {
      Polytope K = read_body(body_a), E = read_body(body_b);
      emit_body(parallel_body(K, E, lambda), out_path, "parallel");
      return 0;
    }

    if (c_wulff->parsed()) {
      Polytope K = read_body(body_a), E = read_body(body_b);
      DirectionSet omega = read_directions(omega_spec, K.dim);
      emit_body(wulff_body(K, E, omega, lambda), out_path, "wulff");
      return 0;
    }

    if (c_form->parsed()) {
      Polytope K = read_body(body_a), E = read_body(body_b);
      emit_body(form_body(K, E), out_path, "formbody");
      return 0;
    }

    if (c_env->parsed()) {
      Polytope E = read_body(body_a);
      DirectionSet omega = read_directions(omega_spec, E.dim);
      emit_body(gauge_envelope(E, omega), out_path, "envelope");
      return 0;
    }

    if (c_curve->parsed()) {
      Polytope K = read_body(body_a), E = read_body(body_b);
      double r = inradius(K, E).r;
      bool ok = true;
      QuotientSelection sel = parse_quotients(quotients, ok);
      if (!ok) {
        std::cerr << "unrecognized quotient token in --quotients\n";
        return 2;
      }
      std::optional<DirectionSet> omega;
      if (!omega_spec.empty()) omega = read_directions(omega_spec, K.dim);
      if (sel.omega && !omega) {
        std::cerr << "--quotients IOmega needs --omega\n";
        return 2;
      }
      GridSpec gs;
      gs.steps = steps;
      gs.hi = std::isnan(lmax) ? 4.0 * std::max(r, 1.0) : lmax;
      if (!std::isnan(lmin)) {
        gs.lo = lmin;
        gs.log_refine = false;
      }
      FamilyCurve curve = sample_curve(K, E, make_grid(r, gs), omega, sel);
      if (out_path.empty()) {
        write_curve_csv(curve, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write " + out_path);
        write_curve_csv(curve, out);
      }
      if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) throw ParseError("cannot write " + svg_path);
        write_curve_svg(curve, out);
      }
      return 0;
    }

    if (c_check->parsed()) {
      Polytope K = read_body(body_a), E = read_body(body_b);
      auto law = law_from_name(law_name_arg);
      if (!law) {
        std::cerr << "unknown law: " << law_name_arg << "\n";
        return 2;
      }
      LawParams prm;
      prm.seed = seed;
      if (c_check->count("--l0")) prm.l0 = l0;
      if (c_check->count("--l1")) prm.l1 = l1;
      if (c_check->count("--lambda")) prm.lambda = lambda;
      if (c_check->count("--mu")) prm.mu = mu;
      if (c_check->count("--fd-h")) prm.h = fd_h;
      if (c_check->count("--tol")) prm.tol = tol;
      if (!omega_spec.empty()) prm.omega = read_directions(omega_spec, K.dim);
      if (!omega2_spec.empty()) prm.omega2 = read_directions(omega2_spec, K.dim);
      PassReport rep = law_check(*law, K, E, prm);
      if (format == "json" || !rep.pass)
        std::cout << report_json(rep).dump(2) << "\n";
      else
        std::cout << law_name(rep.law) << ": " << (rep.pass ? "pass" : "FAIL")
                  << " (max residual " << rep.max_residual << ")\n  " << rep.details << "\n";
      return rep.pass ? 0 : 1;
    }

    if (c_diag->parsed()) {
      Polytope K = read_body(body_a), E = read_body(body_b);
      DiagnosisReport rep = constancy_diagnosis(K, E, l0, l1);
      json j = diagnosis_json(rep, K.dim);
      if (format == "json" || !rep.agree)
        std::cout << j.dump(2) << "\n";
      else {
        std::cout << "conditions (i)-(iv):";
        for (bool c : rep.conditions) std::cout << " " << (c ? "true" : "false");
        std::cout << "\nagree: " << (rep.agree ? "yes" : "NO") << "\n";
        if (rep.homothety)
          std::cout << "homothety scale " << rep.homothety->scale << "\n";
      }
      return rep.agree ? 0 : 1;
    }
  } catch (const GeomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
