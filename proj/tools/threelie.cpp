// Command-line frontend. Machine-readable JSON reports go to stdout, a short
// human summary to stderr. Exit codes: 0 all checks pass, 1 an identity
// fails, 2 malformed input or usage.

#include "tlie/cochain.hpp"
#include "tlie/families.hpp"
#include "tlie/io.hpp"
#include "tlie/nijenhuis.hpp"
#include "tlie/ns_three_lie.hpp"
#include "tlie/reynolds.hpp"
#include "tlie/twisted_rbo.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <random>

using namespace tlie;
using nlohmann::json;

namespace {

int emit_report(const Report& report) {
  std::cout << io::to_json(report).dump(2) << "\n";
  std::cerr << report.subject << ": " << to_string(report.outcome) << " ("
            << report.tuples_checked << " tuples";
  if (!report.skipped.empty()) std::cerr << ", " << report.skipped.size() << " skipped";
  std::cerr << ", " << report.violations.size() << " violations)\n";
  return report.passed() ? 0 : 1;
}

void emit_file(const std::string& path, const json& j, const char* what) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    io::save(path, j);
    std::cerr << "wrote " << what << " to " << path << "\n";
  }
}

/// Loads an algebra file and insists on the fundamental identity.
ThreeLieAlgebra load_verified_algebra(const std::string& path) {
  ThreeLieAlgebra a = io::load_algebra(path);
  Report fi = verify_fundamental_identity(a);
  if (!fi.passed())
    throw Error(ErrorKind::unverified_input, path + ": fundamental identity fails");
  return a;
}

Representation load_verified_representation(const std::string& path) {
  Representation raw = io::load_representation(path);
  ThreeLieAlgebra carrier = raw.carrier();
  if (!verify_fundamental_identity(carrier).passed())
    throw Error(ErrorKind::unverified_input, path + ": carrier fundamental identity fails");
  Representation rep(std::move(carrier), raw.dim_v());
  for (std::size_t p = 0; p < pair_count(rep.dim()); ++p) {
    auto [i, j] = pair_at(rep.dim(), p);
    rep.set_rho(i, j, raw.rho_slot(p));
  }
  if (!verify_representation(rep).passed())
    throw Error(ErrorKind::unverified_input, path + ": representation identities fail");
  return rep;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  std::size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw Error(ErrorKind::parse, "range must look like lo..hi: '" + text + "'");
  try {
    long long lo = std::stoll(text.substr(0, dots));
    long long hi = std::stoll(text.substr(dots + 2));
    if (lo > hi) throw Error(ErrorKind::parse, "empty range: '" + text + "'");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::parse, "bad range: '" + text + "'");
  } catch (const std::out_of_range&) {
    throw Error(ErrorKind::parse, "bad range: '" + text + "'");
  }
}

int run_selftest(std::uint64_t seed, int trials);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computational algebra for 3-Lie algebras, twisted Rota-Baxter operators,"
               " NS-3-Lie algebras, Nijenhuis and Reynolds operators"};
  app.require_subcommand(1);

  std::string in_a, in_b, in_c, emit_path, range_text = "-5..6", weight_range_text;
  std::size_t nmax = 2;
  long long window_lo = 1, window_hi = 12;
  std::uint64_t seed = 1;
  int trials = 25;

  // check ------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "verify a defining identity on a structure file");
  check->require_subcommand(1);
  auto* check_fi = check->add_subcommand("fi", "fundamental identity of an algebra");
  check_fi->add_option("algebra", in_a)->required();
  auto* check_der = check->add_subcommand("derivation", "derivation identity of a linear map");
  check_der->add_option("algebra", in_a)->required();
  check_der->add_option("map", in_b)->required();
  auto* check_rep = check->add_subcommand("rep", "representation identities");
  check_rep->add_option("representation", in_a)->required();
  auto* check_coc = check->add_subcommand("cocycle", "2-cocycle identity of an alternating form");
  check_coc->add_option("representation", in_a)->required();
  check_coc->add_option("cochain", in_b)->required();
  auto* check_nij = check->add_subcommand("nijenhuis", "Nijenhuis condition of a linear map");
  check_nij->add_option("algebra", in_a)->required();
  check_nij->add_option("map", in_b)->required();
  auto* check_rey = check->add_subcommand("reynolds", "Reynolds condition of a linear map");
  check_rey->add_option("algebra", in_a)->required();
  check_rey->add_option("map", in_b)->required();
  auto* check_ns = check->add_subcommand("ns", "NS-3-Lie axioms");
  check_ns->add_option("ns_algebra", in_a)->required();

  // construct ----------------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "build an induced structure and emit it");
  construct->require_subcommand(1);
  auto* c_semi = construct->add_subcommand("semidirect", "twisted semidirect product");
  c_semi->add_option("representation", in_a)->required();
  c_semi->add_option("cochain", in_b)->required();
  c_semi->add_option("--emit", emit_path);
  auto* c_defn = construct->add_subcommand("deform-n", "deformed algebra of a Nijenhuis operator");
  c_defn->add_option("algebra", in_a)->required();
  c_defn->add_option("map", in_b)->required();
  c_defn->add_option("--emit", emit_path);
  auto* c_reyb = construct->add_subcommand("reynolds-bracket", "induced Reynolds bracket");
  c_reyb->add_option("algebra", in_a)->required();
  c_reyb->add_option("map", in_b)->required();
  c_reyb->add_option("--emit", emit_path);
  auto* c_nst = construct->add_subcommand("ns-from-trbo", "NS structure of a twisted operator");
  c_nst->add_option("operator", in_a)->required();
  c_nst->add_option("--emit", emit_path);
  auto* c_nsn = construct->add_subcommand("ns-from-nijenhuis", "NS structure of a Nijenhuis operator");
  c_nsn->add_option("algebra", in_a)->required();
  c_nsn->add_option("map", in_b)->required();
  c_nsn->add_option("--emit", emit_path);
  auto* c_tfr = construct->add_subcommand("trbo-from-reynolds",
                                          "Reynolds operator as a twisted Rota-Baxter operator");
  c_tfr->add_option("algebra", in_a)->required();
  c_tfr->add_option("map", in_b)->required();
  c_tfr->add_option("--emit", emit_path);

  // trbo ---------------------------------------------------------------------
  auto* trbo = app.add_subcommand("trbo", "twisted Rota-Baxter operators");
  trbo->require_subcommand(1);
  auto* t_check = trbo->add_subcommand("check", "the twisted Rota-Baxter identity");
  t_check->add_option("operator", in_a)->required();
  auto* t_induce = trbo->add_subcommand("induce", "induced 3-Lie bracket on V");
  t_induce->add_option("operator", in_a)->required();
  t_induce->add_option("--emit", emit_path);
  auto* t_coh = trbo->add_subcommand("cohomology", "operator cohomology dimensions");
  t_coh->add_option("operator", in_a)->required();
  t_coh->add_option("--nmax", nmax, "top degree")->default_val(2);
  auto* t_gauge = trbo->add_subcommand("gauge", "gauge by a T-admissible 1-cocycle");
  t_gauge->add_option("operator", in_a)->required();
  t_gauge->add_option("cocycle", in_b)->required();
  t_gauge->add_option("--emit", emit_path);
  auto* t_deform = trbo->add_subcommand("deform", "one-parameter infinitesimal deformations");
  t_deform->require_subcommand(1);
  auto* t_dcheck = t_deform->add_subcommand("check", "the four coefficient identities");
  t_dcheck->add_option("deformation", in_a)->required();
  auto* t_dequiv = t_deform->add_subcommand("equiv", "equivalence of two deformation directions");
  t_dequiv->add_option("deformation", in_a)->required();

  // cohomology -----------------------------------------------------------------
  auto* coh = app.add_subcommand("cohomology", "algebra cohomology dimensions");
  coh->add_option("representation", in_a)->required();
  coh->add_option("--nmax", nmax, "top degree")->default_val(2);

  // family ----------------------------------------------------------------------
  auto* family = app.add_subcommand("family", "infinite-dimensional graded families");
  family->require_subcommand(1);
  auto* laurent = family->add_subcommand("laurent", "Laurent-polynomial 3-Lie algebra");
  laurent->require_subcommand(1);
  auto* l_rey = laurent->add_subcommand("reynolds", "sampled Reynolds identity");
  l_rey->add_option("--range", range_text, "exponent range lo..hi")->default_val("-5..6");
  auto* l_win = laurent->add_subcommand("window", "materialize a window and run restricted checks");
  l_win->add_option("--lo", window_lo)->required();
  l_win->add_option("--hi", window_hi)->required();
  l_win->add_option("--emit", emit_path, "write the windowed algebra file");
  auto* omega = family->add_subcommand("omega", "the omega-infinity 3-Lie algebra");
  omega->require_subcommand(1);
  auto* o_rey = omega->add_subcommand("reynolds", "sampled Reynolds identity");
  o_rey->add_option("--range", range_text, "mode range lo..hi")->default_val("-3..3");
  o_rey->add_option("--weight-range", weight_range_text, "weight range lo..hi (defaults to --range)");

  // selftest -----------------------------------------------------------------
  auto* selftest = app.add_subcommand("selftest", "randomized property sweep over the whole stack");
  selftest->add_option("--seed", seed)->default_val(1);
  selftest->add_option("--trials", trials)->default_val(25);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check_fi) {
      ThreeLieAlgebra a = io::load_algebra(in_a);
      return emit_report(check_fundamental_identity(a));
    }
    if (*check_der)
      return emit_report(derivation_report(load_verified_algebra(in_a), io::load_linear_map(in_b)));
    if (*check_rep) {
      Representation raw = io::load_representation(in_a);
      ThreeLieAlgebra carrier = raw.carrier();
      Report fi = verify_fundamental_identity(carrier);
      if (!fi.passed()) return emit_report(fi);
      return emit_report(check_representation(raw));
    }
    if (*check_coc)
      return emit_report(check_2cocycle(load_verified_representation(in_a),
                                        io::load_two_cochain(in_b)));
    if (*check_nij)
      return emit_report(nijenhuis_report(load_verified_algebra(in_a), io::load_linear_map(in_b)));
    if (*check_rey)
      return emit_report(reynolds_report(load_verified_algebra(in_a), io::load_linear_map(in_b)));
    if (*check_ns) return emit_report(check_ns_axioms(io::load_ns(in_a)));

    if (*c_semi) {
      Representation rep = load_verified_representation(in_a);
      TwoCochain phi = io::load_two_cochain(in_b);
      Report cr = verify_2cocycle(rep, phi);
      if (!cr.passed()) return emit_report(cr);
      emit_file(emit_path, io::to_json(twisted_semidirect(rep, phi)), "semidirect product");
      return 0;
    }
    if (*c_defn) {
      emit_file(emit_path,
                io::to_json(deformed_bracket(load_verified_algebra(in_a), io::load_linear_map(in_b))),
                "deformed algebra");
      return 0;
    }
    if (*c_reyb) {
      emit_file(emit_path,
                io::to_json(reynolds_bracket(load_verified_algebra(in_a), io::load_linear_map(in_b))),
                "Reynolds bracket");
      return 0;
    }
    if (*c_nst) {
      TwistedRbo op = io::load_twisted_rbo(in_a);
      Report r = verify_twisted_rbo(op);
      if (!r.passed()) return emit_report(r);
      emit_file(emit_path, io::to_json(ns_from_trbo(op)), "NS structure");
      return 0;
    }
    if (*c_nsn) {
      emit_file(emit_path,
                io::to_json(ns_from_nijenhuis(load_verified_algebra(in_a), io::load_linear_map(in_b))),
                "NS structure");
      return 0;
    }
    if (*c_tfr) {
      emit_file(emit_path,
                io::to_json(trbo_from_reynolds(load_verified_algebra(in_a), io::load_linear_map(in_b))),
                "twisted Rota-Baxter operator");
      return 0;
    }

    if (*t_check) return emit_report(check_twisted_rbo(io::load_twisted_rbo(in_a)));
    if (*t_induce) {
      TwistedRbo op = io::load_twisted_rbo(in_a);
      Report r = verify_twisted_rbo(op);
      if (!r.passed()) return emit_report(r);
      emit_file(emit_path, io::to_json(induced_bracket(op)), "induced bracket");
      return 0;
    }
    if (*t_coh) {
      TwistedRbo op = io::load_twisted_rbo(in_a);
      Report r = verify_twisted_rbo(op);
      if (!r.passed()) return emit_report(r);
      auto rows = trbo_cohomology_dims(op, nmax, CochainOptions{});
      std::cout << io::to_json(rows).dump(2) << "\n";
      for (const auto& row : rows)
        std::cerr << "H^" << row.degree << "_T: dim " << row.cohomology << " (z " << row.cocycles
                  << ", b " << row.coboundaries << ")\n";
      return 0;
    }
    if (*t_gauge) {
      TwistedRbo op = io::load_twisted_rbo(in_a);
      Report r = verify_twisted_rbo(op);
      if (!r.passed()) return emit_report(r);
      TwistedRbo gauged = t_admissible_gauge(op, io::load_linear_map(in_b));
      emit_file(emit_path, io::to_json(gauged), "gauged operator");
      return 0;
    }
    if (*t_dcheck || *t_dequiv) {
      io::DeformationBundle bundle = io::load_deformation(in_a);
      Report r = verify_twisted_rbo(bundle.op);
      if (!r.passed()) return emit_report(r);
      DeformationReport dr = check_deformation(bundle.op, bundle.frak_t);
      json identities = json::array();
      for (const auto& id : dr.identities) identities.push_back(io::to_json(id));
      json out{{"subject", "deformation"},
               {"identities", identities},
               {"frak_T_is_cocycle", dr.is_cocycle()},
               {"outcome", dr.all_passed() ? "pass" : "fail"}};
      if (*t_dequiv) {
        if (!bundle.frak_t2 || !bundle.x)
          throw Error(ErrorKind::parse, "equivalence needs frak_T2 and X in the deformation file");
        DeformationReport dr2 = check_deformation(bundle.op, *bundle.frak_t2);
        bool equivalent = dr.all_passed() && dr2.all_passed() &&
                          check_deformation_equivalence(bundle.op, bundle.frak_t, *bundle.frak_t2,
                                                        bundle.x->first, bundle.x->second);
        out["equivalent"] = equivalent;
        out["outcome"] = equivalent ? "pass" : "fail";
        std::cout << out.dump(2) << "\n";
        std::cerr << "deformation equivalence: " << (equivalent ? "pass" : "fail") << "\n";
        return equivalent ? 0 : 1;
      }
      std::cout << out.dump(2) << "\n";
      std::cerr << "deformation: " << (dr.all_passed() ? "pass" : "fail")
                << (dr.is_cocycle() ? " (frak_T is a 1-cocycle in C^2_T)" : "") << "\n";
      return dr.all_passed() ? 0 : 1;
    }

    if (*coh) {
      Representation rep = load_verified_representation(in_a);
      auto rows = cohomology_dims(rep, nmax, CochainOptions{});
      std::cout << io::to_json(rows).dump(2) << "\n";
      for (const auto& row : rows)
        std::cerr << "H^" << row.degree << ": dim " << row.cohomology << " (z " << row.cocycles
                  << ", b " << row.coboundaries << ")\n";
      return 0;
    }

    if (*l_rey) {
      auto [lo, hi] = parse_range(range_text);
      auto samples = laurent_sample_triples(lo, hi);
      std::cerr << samples.size() << " valid triples in " << range_text << "\n";
      return emit_report(check_laurent_reynolds(samples));
    }
    if (*l_win) {
      PartialAlgebra pa = materialize_laurent_window(window_lo, window_hi);
      Report r = check_fi_windowed(pa);
      if (!emit_path.empty()) io::save(emit_path, io::to_json(pa.algebra));
      return emit_report(r);
    }
    if (*o_rey) {
      auto [mlo, mhi] = parse_range(range_text);
      auto [alo, ahi] =
          weight_range_text.empty() ? std::pair(mlo, mhi) : parse_range(weight_range_text);
      auto samples = omega_sample_triples(mlo, mhi, alo, ahi);
      std::cerr << samples.size() << " valid triples on the grid\n";
      return emit_report(check_omega_reynolds(samples));
    }

    if (*selftest) return run_selftest(seed, trials);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

namespace {

int run_selftest(std::uint64_t seed, int trials) {
  std::mt19937_64 engine(seed);
  auto rat = [&]() {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(engine)) / Rational(den(engine));
  };
  auto rand_matrix = [&](std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rat();
    return m;
  };

  ThreeLieAlgebra a(3);
  a.set_bracket(0, 1, 2, Vec{1, 0, 0});
  a.mark_verified();
  Representation ad = adjoint(a);
  bool ok = true;
  auto report_line = [&](const char* name, bool pass) {
    std::cerr << (pass ? "[pass] " : "[FAIL] ") << name << "\n";
    if (!pass) ok = false;
  };

  for (int trial = 0; trial < trials; ++trial) {
    Matrix n = rand_matrix(3, 3);
    bool nij = check_nijenhuis(a, n);
    bool chain = false;
    if (nij) {
      Representation rep = rho_n(a, n);
      chain = check_representation(rep).passed() && check_2cocycle(rep, phi_n(a, n)).passed() &&
              check_twisted_rbo(nijenhuis_trbo(a, n)).passed() &&
              check_fundamental_identity(deformed_bracket(a, n)).passed() &&
              check_ns_axioms(ns_from_nijenhuis(a, n)).passed();
    }
    if (!(nij && chain)) {
      report_line("nijenhuis chain", false);
      break;
    }
    if (trial + 1 == trials) report_line("nijenhuis chain", true);
  }

  CochainOptions deep{.degree_cap = 5};
  bool dd = true;
  for (int trial = 0; trial < trials; ++trial) {
    NCochain f(1 + trial % 2, 3, 3);
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
      Vec v(3);
      for (auto& x : v) x = rat();
      f.value(t) = v;
    }
    if (!coboundary(ad, coboundary(ad, f, deep), deep).is_zero()) dd = false;
  }
  report_line("d compose d = 0", dd);

  bool inv = true;
  for (int trial = 0; trial < trials; ++trial) {
    Matrix f = rand_matrix(3, 3);
    if (!invert(f)) continue;
    TwistedRbo op = trbo_from_invertible_map(ad, f);
    if (!check_twisted_rbo(op).passed() || !graph_closure_check(op)) inv = false;
  }
  report_line("inverse maps are twisted Rota-Baxter operators", inv);

  std::cerr << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace
