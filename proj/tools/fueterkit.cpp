#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "fueterkit/checks.hpp"
#include "fueterkit/io.hpp"

namespace fk = fueterkit;
using fk::Json;

namespace {

struct Options {
  std::string algebra = "quaternions";
  int order = 4;
  double tol = 1e-9;
  uint64_t seed = 1;
  std::string format = "json";
};

int g_exit = 0;

void emit(const Json& j, const Options&) { std::cout << j.dump(2) << "\n"; }

void emit_report(const fk::CheckReport& rep, const Options& opt) {
  if (opt.format == "table")
    std::cout << fk::render_table({rep});
  else
    std::cout << fk::report_to_json(rep).dump(2) << "\n";
  if (!rep.pass) g_exit = std::max(g_exit, 1);
}

void emit_reports(const std::vector<fk::CheckReport>& reps, const Json& config,
                  const Options& opt) {
  if (opt.format == "table")
    std::cout << fk::render_table(reps);
  else
    std::cout << fk::suite_json(config, reps).dump(2) << "\n";
  for (auto& r : reps)
    if (!r.pass) g_exit = std::max(g_exit, 1);
}

fk::FueterPoint parse_point(const fk::AlgebraPtr& spec, const std::string& coords) {
  if (coords.empty()) return fk::FueterPoint::origin(spec);
  auto v = fk::parse_coords(coords);
  if (static_cast<int>(v.size()) != spec->dim())
    throw fk::ParseError("point needs m+1 coordinates");
  return {spec, std::move(v)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fueterkit - hyperholomorphic function toolkit over finite-dimensional algebras"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--algebra", opt.algebra,
                 "builtin name (quaternions, split_quaternions, clifford:p,q, grassmann:n, "
                 "ternary) or spec file path");
  app.add_option("--order", opt.order, "truncation order");
  app.add_option("--tol", opt.tol, "tolerance for numeric checks");
  app.add_option("--seed", opt.seed, "seed for randomized property checks");
  app.add_option("--format", opt.format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  std::vector<std::function<void()>> actions;
  auto defer = [&](CLI::App* cmd, std::function<void()> fn) {
    cmd->callback([&actions, fn = std::move(fn)]() { actions.push_back(fn); });
  };

  // ---- algebra ----
  auto* alg = app.add_subcommand("algebra", "algebra specs: validate, show");
  alg->require_subcommand(1);
  auto* alg_validate = alg->add_subcommand("validate", "check the algebra axioms");
  defer(alg_validate, [&] {
    auto spec = fk::resolve_algebra(opt.algebra);
    emit_report(fk::check_algebra_valid(spec, 100, opt.seed, opt.tol), opt);
  });
  auto* alg_show = alg->add_subcommand("show", "emit the algebra spec as JSON");
  defer(alg_show, [&] {
    emit(fk::algebra_to_json(fk::resolve_algebra(opt.algebra)), opt);
  });

  // ---- series ----
  auto* ser = app.add_subcommand("series", "operations on Fueter series files");
  ser->require_subcommand(1);
  static std::string in_path, rhs_path, point_str, center_str, sigma_str, scales_str, alpha_str,
      eta_json, b_str, xi_str;
  static int dir_k = 1, from_order = 1, n_dirs = 3;
  static bool right_product = false;

  auto* s_eval = ser->add_subcommand("eval", "evaluate a series at a point");
  s_eval->add_option("--in", in_path, "series JSON file")->required();
  s_eval->add_option("--point", point_str, "comma separated coordinates")->required();
  defer(s_eval, [&] {
    auto f = fk::series_from_json(fk::load_json(in_path));
    auto value = fk::eval(f, parse_point(f.spec(), point_str));
    emit(Json{{"value", fk::element_to_json(value)}, {"pretty", value.str()}}, opt);
  });

  auto* s_dop = ser->add_subcommand("dop", "apply the Cauchy-Fueter operator");
  s_dop->add_option("--in", in_path, "series JSON file");
  s_dop->add_option("--alpha", alpha_str, "multi-index for a monomial check");
  s_dop->add_option("--center", center_str, "center coordinates (default origin)");
  auto dop_action = [&] {
    auto spec = fk::resolve_algebra(opt.algebra);
    fk::VPolynomial p(spec);
    std::string subject;
    if (!in_path.empty()) {
      auto f = fk::series_from_json(fk::load_json(in_path));
      p = fk::to_vpoly(f);
      subject = "series";
    } else if (!alpha_str.empty()) {
      auto alpha = fk::parse_multi_index(alpha_str, spec->m());
      p = fk::monomial_expand(alpha, parse_point(spec, center_str));
      subject = "monomial";
    } else {
      throw fk::ParseError("series dop needs --in or --alpha");
    }
    auto d = fk::apply_dirac(p);
    fk::CheckReport rep{"dirac_annihilation", spec->name(), "", opt.order};
    rep.pass = d.is_zero();
    rep.details = Json{{"subject", subject}, {"result", d.str()}};
    emit_report(rep, opt);
  };
  defer(s_dop, dop_action);

  auto* s_shift = ser->add_subcommand("shift", "backward shift R_k");
  s_shift->add_option("--in", in_path)->required();
  s_shift->add_option("--k", dir_k, "direction 1..m")->required();
  defer(s_shift, [&] {
    auto f = fk::series_from_json(fk::load_json(in_path));
    emit(fk::series_to_json(fk::backward_shift(f, dir_k)), opt);
  });

  auto* s_prod = ser->add_subcommand("product", "Cauchy product of two series");
  s_prod->add_option("--lhs", in_path)->required();
  s_prod->add_option("--rhs", rhs_path)->required();
  s_prod->add_flag("--right", right_product, "use the right-sided product");
  defer(s_prod, [&] {
    auto f = fk::series_from_json(fk::load_json(in_path));
    auto g = fk::series_from_json(fk::load_json(rhs_path));
    auto h = right_product
                 ? fk::cauchy_product_right(f.with_side(fk::Side::Right),
                                            g.with_side(fk::Side::Right))
                 : fk::cauchy_product(f, g);
    emit(fk::series_to_json(h), opt);
  });

  auto* s_inv = ser->add_subcommand("inverse", "odot-inverse");
  s_inv->add_option("--in", in_path)->required();
  defer(s_inv, [&] {
    auto f = fk::series_from_json(fk::load_json(in_path));
    emit(fk::series_to_json(fk::cauchy_inverse(f)), opt);
  });

  auto* s_rec = ser->add_subcommand("recenter", "rewrite around a new center");
  s_rec->add_option("--in", in_path)->required();
  s_rec->add_option("--center", center_str)->required();
  defer(s_rec, [&] {
    auto f = fk::series_from_json(fk::load_json(in_path));
    emit(fk::series_to_json(fk::recenter(f, parse_point(f.spec(), center_str))), opt);
  });

  auto* s_gle = ser->add_subcommand("gleason", "solve Gleason's problem by backward shifts");
  s_gle->add_option("--in", in_path)->required();
  defer(s_gle, [&] {
    auto f = fk::series_from_json(fk::load_json(in_path));
    auto g = fk::gleason_solve(f);
    bool zero = fk::gleason_residual(f, g).is_zero();
    Json out;
    out["residual_zero"] = zero;
    Json gj = Json::array();
    for (auto& gk : g) gj.push_back(fk::series_to_json(gk));
    out["g"] = gj;
    emit(out, opt);
    if (!zero) g_exit = std::max(g_exit, 1);
  });

  auto* s_fre = ser->add_subcommand("frechet", "Frechet-derivative decay probe");
  s_fre->add_option("--in", in_path)->required();
  s_fre->add_option("--xi", xi_str, "expansion point (default origin)");
  s_fre->add_option("--scales", scales_str, "comma separated scales (default 0.1,0.01,0.001)");
  s_fre->add_option("--dirs", n_dirs, "number of random directions");
  defer(s_fre, [&] {
    auto f = fk::series_from_json(fk::load_json(in_path));
    auto spec = f.spec();
    std::vector<fk::Rational> scales;
    std::string text = scales_str.empty() ? "0.1,0.01,0.001" : scales_str;
    for (auto& c : fk::parse_coords(text)) scales.push_back(c.re);
    fk::RandomSource rng(opt.seed);
    std::vector<std::vector<fk::FieldScalar>> dirs;
    for (int d = 0; d < n_dirs; ++d) {
      std::vector<fk::FieldScalar> u(spec->dim());
      u[0] = fk::FieldScalar(rng.nonzero_rational());
      for (int i = 1; i <= spec->m(); ++i) u[i] = fk::FieldScalar(rng.rational());
      dirs.push_back(std::move(u));
    }
    auto repF = fk::frechet_check(fk::to_vpoly(f), parse_point(spec, xi_str), scales, dirs);
    fk::CheckReport rep{"frechet_decay", spec->name(), "", f.order()};
    rep.pass = repF.hyperholomorphic;
    rep.details["exact_zero"] = repF.exact_zero;
    rep.details["min_slope"] = std::isfinite(repF.min_slope) ? Json(repF.min_slope) : Json("inf");
    Json table = Json::array();
    for (auto& row : repF.ratios) table.push_back(row);
    rep.details["ratios"] = table;
    emit_report(rep, opt);
  });

  auto* s_tail = ser->add_subcommand("tail", "weighted tail diagnostic");
  s_tail->add_option("--in", in_path)->required();
  s_tail->add_option("--sigma", sigma_str, "comma separated radii")->required();
  s_tail->add_option("--from-order", from_order);
  defer(s_tail, [&] {
    auto f = fk::series_from_json(fk::load_json(in_path));
    std::vector<double> sigma;
    for (auto& c : fk::parse_coords(sigma_str)) sigma.push_back(c.re.convert_to<double>());
    emit(Json{{"tail", fk::tail_bound(f, sigma, from_order)}, {"from_order", from_order}}, opt);
  });

  // ---- realize ----
  auto* rea = app.add_subcommand("realize", "state-space realizations");
  rea->require_subcommand(1);
  static std::string method = "both", stack_mode = "row";

  auto* r_exp = rea->add_subcommand("expand", "series expansion of a realization");
  r_exp->add_option("--in", in_path)->required();
  r_exp->add_option("--method", method)->check(CLI::IsMember({"taylor", "neumann", "both"}));
  defer(r_exp, [&] {
    auto r = fk::realization_from_json(fk::load_json(in_path));
    if (method == "taylor") {
      emit(fk::series_to_json(fk::to_series(r, opt.order, fk::ExpandMethod::TaylorFormula)), opt);
    } else if (method == "neumann") {
      emit(fk::series_to_json(fk::to_series(r, opt.order, fk::ExpandMethod::Neumann)), opt);
    } else {
      auto a = fk::to_series(r, opt.order, fk::ExpandMethod::TaylorFormula);
      auto b = fk::to_series(r, opt.order, fk::ExpandMethod::Neumann);
      bool agree = a == b;
      emit(Json{{"methods_agree", agree}, {"series", fk::series_to_json(a)}}, opt);
      if (!agree) g_exit = std::max(g_exit, 1);
    }
  });

  auto* r_inv = rea->add_subcommand("invert", "realization of the odot-inverse");
  r_inv->add_option("--in", in_path)->required();
  defer(r_inv, [&] {
    auto r = fk::realization_from_json(fk::load_json(in_path));
    emit(fk::realization_to_json(fk::inverse(r)), opt);
  });

  auto* r_prod = rea->add_subcommand("product", "cascade of two realizations");
  r_prod->add_option("--lhs", in_path)->required();
  r_prod->add_option("--rhs", rhs_path)->required();
  defer(r_prod, [&] {
    emit(fk::realization_to_json(
             fk::product(fk::realization_from_json(fk::load_json(in_path)),
                         fk::realization_from_json(fk::load_json(rhs_path)))),
         opt);
  });

  auto* r_sum = rea->add_subcommand("sum", "parallel sum of two realizations");
  r_sum->add_option("--lhs", in_path)->required();
  r_sum->add_option("--rhs", rhs_path)->required();
  defer(r_sum, [&] {
    emit(fk::realization_to_json(
             fk::sum(fk::realization_from_json(fk::load_json(in_path)),
                     fk::realization_from_json(fk::load_json(rhs_path)))),
         opt);
  });

  auto* r_stack = rea->add_subcommand("stack", "row or column concatenation");
  r_stack->add_option("--lhs", in_path)->required();
  r_stack->add_option("--rhs", rhs_path)->required();
  r_stack->add_option("--mode", stack_mode)->check(CLI::IsMember({"row", "col"}));
  defer(r_stack, [&] {
    auto a = fk::realization_from_json(fk::load_json(in_path));
    auto b = fk::realization_from_json(fk::load_json(rhs_path));
    emit(fk::realization_to_json(stack_mode == "row" ? fk::concat_row(a, b)
                                                     : fk::concat_col(a, b)),
         opt);
  });

  auto* r_poly = rea->add_subcommand("from-poly", "realization of a polynomial series");
  r_poly->add_option("--in", in_path)->required();
  defer(r_poly, [&] {
    auto p = fk::matrix_series_from_json(fk::load_json(in_path));
    auto r = fk::from_polynomial(p);
    bool roundtrip = fk::to_series(r, p.order(), fk::ExpandMethod::TaylorFormula) == p;
    emit(Json{{"roundtrip_exact", roundtrip},
              {"realization", fk::realization_to_json(r)}},
         opt);
    if (!roundtrip) g_exit = std::max(g_exit, 1);
  });

  auto* r_gle = rea->add_subcommand("gleason", "Gleason solutions through the resolvent");
  r_gle->add_option("--in", in_path)->required();
  r_gle->add_option("--eta", eta_json, "constant column as JSON (default all-ones)");
  defer(r_gle, [&] {
    auto r = fk::realization_from_json(fk::load_json(in_path));
    fk::MatrixOverA eta(r.spec(), r.in_dim(), 1);
    if (eta_json.empty()) {
      for (int i = 0; i < r.in_dim(); ++i)
        eta.at(i, 0) = fk::AlgebraElement::one(r.spec());
    } else {
      eta = fk::matrix_from_json(Json::parse(eta_json), r.spec());
    }
    auto g = fk::gleason_via_realization(r, eta, opt.order);
    auto f = fk::cauchy_product(fk::to_series(r, opt.order, fk::ExpandMethod::Neumann),
                                fk::constant_series(r.center, eta, opt.order, fk::Side::Left));
    bool zero = fk::gleason_residual_matrix(f, g).is_zero();
    Json gj = Json::array();
    for (auto& gk : g) gj.push_back(fk::series_to_json(gk));
    emit(Json{{"residual_zero", zero}, {"g", gj}}, opt);
    if (!zero) g_exit = std::max(g_exit, 1);
  });

  // ---- module ----
  auto* mod = app.add_subcommand("module", "weighted modules of Fueter series");
  mod->require_subcommand(1);
  static std::string weights_name = "drury_arveson";
  mod->add_option("--weights", weights_name, "drury_arveson | fock");

  auto* m_gram = mod->add_subcommand("gram", "K_l component Gram signatures");
  defer(m_gram, [&] {
    auto spec = fk::resolve_algebra(opt.algebra);
    auto w = fk::WeightFamily::by_name(weights_name);
    auto sigs = fk::component_gram_signatures(spec, w, opt.order, opt.tol);
    fk::CheckReport rep{"component_gram", spec->name(), w.name(), opt.order};
    rep.pass = true;
    Json arr = Json::array();
    for (auto& s : sigs)
      arr.push_back(Json{{"l", s.l}, {"positive", s.positive}, {"negative", s.negative},
                         {"zero", s.zero}});
    rep.details["signatures"] = arr;
    emit_report(rep, opt);
  });

  auto* m_ker = mod->add_subcommand("kernel", "reproducing kernel series / reproducing check");
  m_ker->add_option("--xi", xi_str, "kernel point coordinates")->required();
  m_ker->add_option("--b", b_str, "coefficient vector for the kernel direction");
  m_ker->add_option("--in", in_path, "series file to test the reproducing property on");
  defer(m_ker, [&] {
    auto spec = fk::resolve_algebra(opt.algebra);
    auto w = fk::WeightFamily::by_name(weights_name);
    auto xi = parse_point(spec, xi_str);
    fk::AlgebraElement b = fk::AlgebraElement::one(spec);
    if (!b_str.empty()) {
      auto c = fk::parse_coords(b_str);
      if (static_cast<int>(c.size()) != spec->dim())
        throw fk::ParseError("-b needs one coefficient per basis element");
      b = fk::AlgebraElement(spec, c);
    }
    if (in_path.empty()) {
      emit(fk::series_to_json(fk::kernel_series(xi, opt.order, w, b)), opt);
    } else {
      auto f = fk::series_from_json(fk::load_json(in_path));
      auto [lhs, rhs] = fk::reproducing_check(f, xi, b, w, opt.order);
      fk::CheckReport rep{"reproducing_property", spec->name(), w.name(), opt.order};
      rep.pass = lhs == rhs;
      rep.details = Json{{"pairing", lhs.str()}, {"pointwise", rhs.str()}};
      emit_report(rep, opt);
    }
  });

  auto* m_adj = mod->add_subcommand("adjoint-check", "multiplication/backward-shift adjoints");
  defer(m_adj, [&] {
    auto spec = fk::resolve_algebra(opt.algebra);
    auto w = fk::WeightFamily::by_name(weights_name);
    emit_report(w.name() == "fock"
                    ? fk::check_fock_structure(spec, opt.order, 10, opt.seed)
                    : fk::check_da_structure(spec, opt.order, opt.seed),
                opt);
  });

  auto* m_con = mod->add_subcommand("contraction", "Drury-Arveson contraction gap witness");
  m_con->add_option("--k", dir_k, "direction 1..m");
  defer(m_con, [&] {
    auto spec = fk::resolve_algebra(opt.algebra);
    fk::RandomSource rng(opt.seed);
    auto origin = fk::FueterPoint::origin(spec);
    fk::CheckReport rep{"contraction_gap", spec->name(), "drury_arveson", opt.order};
    rep.pass = true;
    Json arr = Json::array();
    for (int t = 0; t < 5; ++t) {
      auto f = rng.series(origin, opt.order, 2 * opt.order);
      auto gap = fk::da_contraction_gap(f, dir_k);
      rep.pass = rep.pass && gap.exact;
      arr.push_back(Json{{"gap", gap.gap.str()}, {"exact", gap.exact}});
    }
    rep.details["samples"] = arr;
    emit_report(rep, opt);
  });

  auto* m_id = mod->add_subcommand("identity", "evaluation identity telescoping");
  defer(m_id, [&] {
    auto spec = fk::resolve_algebra(opt.algebra);
    fk::RandomSource rng(opt.seed);
    auto origin = fk::FueterPoint::origin(spec);
    fk::CheckReport rep{"evaluation_identity", spec->name(), "drury_arveson", opt.order};
    rep.pass = true;
    for (int t = 0; t < 5; ++t) {
      auto f = rng.series(origin, opt.order, 2 * opt.order);
      auto id = fk::evaluation_identity_check(f);
      rep.pass = rep.pass && id.exact;
    }
    emit_report(rep, opt);
  });

  auto* m_bla = mod->add_subcommand("blaschke", "Blaschke factor checks");
  m_bla->add_option("--xi", xi_str, "base point coordinates of the zero point");
  static std::string zeta_str;
  m_bla->add_option(
      "--zeta", zeta_str,
      "zero point as a zeta tuple: m elements, ';' separated, each a comma list of coefficients");
  defer(m_bla, [&] {
    if (xi_str.empty() && zeta_str.empty() && opt.algebra == "quaternions") {
      emit_report(fk::check_blaschke(opt.tol), opt);
    } else {
      auto spec = fk::resolve_algebra(opt.algebra);
      std::vector<fk::AlgebraElement> tuple;
      if (!zeta_str.empty()) {
        std::stringstream ss(zeta_str);
        std::string elem;
        while (std::getline(ss, elem, ';')) {
          auto c = fk::parse_coords(elem);
          if (static_cast<int>(c.size()) != spec->dim())
            throw fk::ParseError("each zeta entry needs one coefficient per basis element");
          tuple.emplace_back(spec, std::move(c));
        }
      } else {
        tuple = parse_point(spec, xi_str).zetas();
      }
      auto b = fk::blaschke_factor(tuple, opt.order, opt.tol);
      Json arr = Json::array();
      for (auto& s : b) arr.push_back(fk::series_to_json(s));
      double sq = 0;
      for (auto& s : b) {
        double n = fk::eval(s, tuple).norm();
        sq += n * n;
      }
      emit(Json{{"eval_at_xi", std::sqrt(sq)}, {"row", arr}}, opt);
    }
  });

  auto* m_fock = mod->add_subcommand("fock-check", "Fock derivative adjoint identities");
  defer(m_fock, [&] {
    auto spec = fk::resolve_algebra(opt.algebra);
    emit_report(fk::check_fock_structure(spec, opt.order, 10, opt.seed), opt);
  });

  // ---- top level ----
  auto* demo = app.add_subcommand("center-demo", "center dependence of the Cauchy product");
  defer(demo, [&] { emit_report(fk::check_center_dependence(), opt); });

  auto* dop_alias = app.add_subcommand("dop", "alias for `series dop`");
  dop_alias->add_option("--alpha", alpha_str, "multi-index for a monomial check");
  dop_alias->add_option("--center", center_str, "center coordinates (default origin)");
  dop_alias->add_option("--in", in_path, "series JSON file");
  defer(dop_alias, dop_action);

  auto* suite = app.add_subcommand("suite", "run the full property suite");
  defer(suite, [&] {
    auto spec = fk::resolve_algebra(opt.algebra);
    auto reports = fk::run_suite(spec, opt.order, opt.seed, opt.tol);
    Json config{{"algebra", spec->name()},
                {"order", opt.order},
                {"seed", opt.seed},
                {"tol", opt.tol}};
    emit_reports(reports, config, opt);
  });

  // global flags may follow the subcommand name
  auto enable_fallthrough = [](auto&& self, CLI::App* node) -> void {
    for (CLI::App* sub : node->get_subcommands({})) {
      sub->fallthrough(true);
      self(self, sub);
    }
  };
  enable_fallthrough(enable_fallthrough, &app);

  try {
    app.parse(argc, argv);
    for (auto& fn : actions) fn();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const fk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return g_exit;
}
