// qres: invariants of radicial covers T^q = f over small prime fields.
//
// Subcommands operate on modules given by generator expressions over a ring
// declared with --p/--e/--vars, or on a job file for full blowup sequences.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qres/chart.hpp"
#include "qres/collection.hpp"
#include "qres/diffops.hpp"
#include "qres/jobfile.hpp"
#include "qres/parser.hpp"
#include "qres/qmodule.hpp"
#include "qres/sequence.hpp"

using nlohmann::json;
using namespace qres;

namespace {

int verbosity() {
  const char *env = std::getenv("QRES_VERBOSE");
  return env ? std::atoi(env) : 0;
}

struct RingArgs {
  int64_t p = 0;
  uint32_t e = 1;
  std::string vars;
  std::vector<std::string> gens;

  void attach(CLI::App *cmd, bool need_gens = true) {
    cmd->add_option("--p", p, "prime characteristic")->required();
    cmd->add_option("--e", e, "exponent e in q = p^e (default 1)");
    cmd->add_option("--vars", vars, "comma-separated variable names")
        ->required();
    auto *g = cmd->add_option("--gen", gens,
                              "generator expression (repeatable)");
    if (need_gens)
      g->required();
  }

  RingPtr ring() const {
    std::vector<std::string> names;
    std::string cur;
    for (char c : vars) {
      if (c == ',') {
        names.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    if (!cur.empty())
      names.push_back(cur);
    return make_ring(p, std::move(names));
  }

  QModule module(const RingPtr &r) const {
    std::vector<Polynomial> polys;
    for (const auto &src : gens)
      polys.push_back(parse_poly(src, r));
    return normal_form(r, e, std::move(polys));
  }
};

std::vector<PointSpec> parse_points(const std::vector<std::string> &texts,
                                    const RingPtr &ring) {
  std::vector<PointSpec> pts;
  for (const auto &t : texts)
    pts.push_back(parse_point(t, ring));
  return pts;
}

json point_json(const PointSpec &pt, const RingPtr &ring) {
  json j;
  if (pt.is_rational()) {
    j["kind"] = "rational";
    j["coords"] = pt.coords;
  } else {
    j["kind"] = "generic";
    j["subset"] = pt.subset;
  }
  j["display"] = pt.to_string(ring);
  return j;
}

json ideal_json(const Ideal &I) {
  json j = json::array();
  for (const auto &g : I.generators())
    j.push_back(g.to_string());
  return j;
}

json order_json(Order v) {
  if (v == kOrderInfinity)
    return json("inf");
  return json(v);
}

json rename_table(const RingPtr &ring) {
  json j = json::array();
  for (size_t i = 0; i < ring->nvars(); ++i)
    j.push_back({{"index", i}, {"name", ring->var(i)}});
  return j;
}

void print_report(const SequenceReport &rep, bool as_json) {
  if (as_json) {
    json out;
    out["q"] = rep.q;
    out["stop_reason"] = rep.stop_reason;
    out["chain_ok"] = rep.chain_ok;
    if (!rep.chain_ok)
      out["chain_note"] = rep.chain_note;
    out["stages"] = json::array();
    for (const auto &st : rep.stages) {
      json s;
      s["variables"] = rename_table(st.ring);
      s["module"] = json::array();
      for (const auto &g : st.module.generators())
        s["module"].push_back(g.to_string());
      s["lambda"] = st.ctx.lambda;
      s["L"] = Polynomial::monomial(st.ring, st.ctx.L, 1).to_string();
      s["collection"] = json::array();
      for (const auto &I : st.collection.ideals)
        s["collection"].push_back(ideal_json(I));
      s["max_eta_collection"] = order_json(st.max_eta_collection);
      s["max_eta_module"] = order_json(st.max_eta_module);
      s["argmax"] = json::array();
      for (const auto &pt : st.argmax)
        s["argmax"].push_back(point_json(pt, st.ring));
      s["eta_table"] = json::array();
      for (const auto &[pt, v] : st.eta_table)
        s["eta_table"].push_back(
            {{"point", point_json(pt, st.ring)}, {"eta", order_json(v)}});
      if (st.stepped) {
        s["step"] = {{"center", st.step.center},
                     {"chart", st.step.chart_var},
                     {"a", st.a},
                     {"b", st.b}};
      }
      out["stages"].push_back(std::move(s));
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << render_report(rep, verbosity());
}

// ---------------------------------------------------------------------------
// verify: randomized property suites runnable from the command line.

Polynomial random_poly(const RingPtr &ring, std::mt19937_64 &rng,
                       uint32_t max_exp, size_t max_terms) {
  std::uniform_int_distribution<size_t> nterms(0, max_terms);
  std::uniform_int_distribution<uint32_t> expd(0, max_exp);
  std::uniform_int_distribution<int64_t> coeff(1, ring->p() - 1);
  Polynomial f(ring);
  size_t n = nterms(rng);
  for (size_t t = 0; t < n; ++t) {
    ExpVec e(ring->nvars());
    for (auto &x : e)
      x = expd(rng);
    f.add_term(e, coeff(rng));
  }
  return f;
}

int run_verify(uint64_t seed, uint64_t trials) {
  std::mt19937_64 rng(seed);
  size_t failures = 0;
  auto check = [&](bool ok, const std::string &what) {
    if (!ok) {
      ++failures;
      std::cout << "FAIL: " << what << "\n";
    }
  };

  for (uint64_t t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> pick(0, 1);
    int64_t p = pick(rng) ? 3 : 2;
    uint32_t e = 1;
    uint64_t q = uint64_t(p);
    auto ring = make_ring(p, {"x1", "x2", "x3"});
    Polynomial f = random_poly(ring, rng, 6, 4);
    Polynomial g = random_poly(ring, rng, 6, 4);

    // q-expansion roundtrip and strip idempotence.
    check(q_expand(f, e).reassemble() == f, "expansion roundtrip");
    auto [fp1, fpow] = strip_q_power(f, e);
    auto [fp2, fpow2] = strip_q_power(fp1, e);
    check(fp1 == fp2 && fpow2 == fp1.is_zero(), "strip idempotence");

    // Taylor composition rule.
    ExpVec g1(3, 0), g2(3, 0);
    std::uniform_int_distribution<uint32_t> small(0, 2);
    for (size_t i = 0; i < 3; ++i) {
      g1[i] = small(rng);
      g2[i] = small(rng);
    }
    Polynomial lhs = hasse(g1, hasse(g2, f));
    Polynomial rhs =
        hasse(exp_add(g1, g2), f)
            .scaled(lucas_binom_vec(exp_add(g1, g2), g1, p));
    check(lhs == rhs, "operator composition");

    // Sandwich: nu^q <= eta < q(a+1); equality when q does not divide nu^q.
    QModule M = normal_form(ring, e, {f});
    if (!M.is_trivial()) {
      PointSpec pt = PointSpec::origin(3);
      Order nu = q_order_at(M, pt);
      Order eta = eta_at(M, pt);
      uint64_t a = nu / q;
      check(nu <= eta && eta < q * (a + 1), "order sandwich");
      check(eta == nu, "rational-point equality");
    }

    // Jacobian criterion at the origin.
    if (!f.is_zero()) {
      for (uint64_t n = 1; n <= 4; ++n) {
        bool lhsj = order_at(f, PointSpec::origin(3)) >= n;
        Ideal D = diff_ideal(Ideal(ring, {f}), n - 1);
        bool rhsj = ideal_order_at(D, PointSpec::origin(3)) >= 1;
        check(lhsj == rhsj, "derivative order criterion");
      }
    }
  }
  std::cout << (failures == 0 ? "verify: all properties hold ("
                              : "verify: FAILURES (")
            << trials << " trials)\n";
  return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"invariants of radicial covers over small prime fields"};
  app.require_subcommand(1);

  // qexpand ----------------------------------------------------------------
  RingArgs qe_args;
  auto *qe = app.add_subcommand("qexpand", "q-expansion of a polynomial");
  qe_args.attach(qe);
  bool qe_json = false;
  qe->add_flag("--json", qe_json, "machine-readable output");

  // qorder -----------------------------------------------------------------
  RingArgs qo_args;
  std::vector<std::string> qo_at;
  auto *qo = app.add_subcommand("qorder", "q-order of a module at points");
  qo_args.attach(qo);
  qo->add_option("--at", qo_at, "point (origin | point:... | generic:...)")
      ->required();

  // eta --------------------------------------------------------------------
  RingArgs eta_args;
  std::vector<std::string> eta_at_pts;
  bool eta_max = false, eta_box = false;
  auto *et = app.add_subcommand("eta", "eta invariant of a module");
  eta_args.attach(et);
  et->add_option("--at", eta_at_pts, "evaluation point (repeatable)");
  et->add_flag("--max", eta_max, "maximum over the candidate set");
  et->add_flag("--rational-box", eta_box,
               "include all rational points among the candidates");

  // diff -------------------------------------------------------------------
  RingArgs df_args;
  uint64_t df_i = 1;
  bool df_with_identity = false;
  std::string df_lambda, df_L;
  auto *df = app.add_subcommand("diff", "derivative ideals of a module");
  df_args.attach(df);
  df->add_option("--i", df_i, "derivative order i")->required();
  df->add_flag("--with-identity", df_with_identity,
               "include the generators themselves (ideal variant)");
  df->add_option("--lambda", df_lambda,
                 "comma-separated boundary variables (logarithmic variant)");
  df->add_option("--L", df_L, "monomial for the boundary context");

  // sing -------------------------------------------------------------------
  RingArgs sg_args;
  uint64_t sg_a = 1;
  std::vector<std::string> sg_at;
  auto *sg = app.add_subcommand("sing", "membership in Sing(M, a)");
  sg_args.attach(sg);
  sg->add_option("--a", sg_a, "exponent a")->required();
  sg->add_option("--at", sg_at, "point (repeatable)")->required();

  // permissible ------------------------------------------------------------
  RingArgs pm_args;
  uint64_t pm_a = 1;
  std::string pm_center;
  bool pm_max = false;
  auto *pm = app.add_subcommand("permissible",
                                "permissibility of a coordinate center");
  pm_args.attach(pm);
  pm->add_option("--a", pm_a, "exponent a (default 1)");
  pm->add_option("--center", pm_center, "comma-separated center variables")
      ->required();
  pm->add_flag("--max-a", pm_max, "also print the largest valid exponent");

  // blowup -----------------------------------------------------------------
  RingArgs bl_args;
  std::string bl_center, bl_chart = "all", bl_lambda, bl_L;
  uint64_t bl_a = 1;
  auto *bl = app.add_subcommand("blowup", "one blowup step of a module");
  bl_args.attach(bl);
  bl->add_option("--center", bl_center, "comma-separated center variables")
      ->required();
  bl->add_option("--chart", bl_chart, "chart variable name, or 'all'");
  bl->add_option("--a", bl_a, "transform exponent (default 1)");
  bl->add_option("--lambda", bl_lambda, "boundary variables to carry along");
  bl->add_option("--L", bl_L, "boundary monomial");

  // run --------------------------------------------------------------------
  std::string run_path;
  bool run_json = false;
  auto *rn = app.add_subcommand("run", "execute a job file");
  rn->add_option("job", run_path, "job file path")->required();
  rn->add_flag("--json", run_json, "machine-readable report");

  // verify -----------------------------------------------------------------
  uint64_t vf_seed = 1, vf_trials = 200;
  auto *vf = app.add_subcommand("verify", "randomized property suites");
  vf->add_option("--seed", vf_seed, "random seed (default 1)");
  vf->add_option("--trials", vf_trials, "trial count (default 200)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (qe->parsed()) {
      auto ring = qe_args.ring();
      for (const auto &src : qe_args.gens) {
        Polynomial f = parse_poly(src, ring);
        QExpansion exp = q_expand(f, qe_args.e);
        if (qe_json) {
          json out;
          out["q"] = exp.q;
          out["buckets"] = json::array();
          for (const auto &[alpha, c] : exp.buckets)
            out["buckets"].push_back(
                {{"alpha", alpha}, {"coefficient", c.to_string()}});
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << f.to_string() << ":\n";
          for (const auto &[alpha, c] : exp.buckets) {
            std::cout << "  alpha = (";
            for (size_t i = 0; i < alpha.size(); ++i)
              std::cout << (i ? "," : "") << alpha[i];
            std::cout << ")  c = " << c.to_string() << "\n";
          }
        }
      }
    } else if (qo->parsed()) {
      auto ring = qo_args.ring();
      QModule M = qo_args.module(ring);
      for (const auto &pt : parse_points(qo_at, ring))
        std::cout << order_to_string(q_order_at(M, pt)) << "\n";
    } else if (et->parsed()) {
      auto ring = eta_args.ring();
      QModule M = eta_args.module(ring);
      if (eta_max || eta_at_pts.empty()) {
        Order best = 0;
        bool any = false;
        for (const auto &pt : candidate_points(ring, eta_box)) {
          Order v = eta_at(M, pt);
          if (!any || v > best) {
            best = v;
            any = true;
          }
        }
        std::cout << "max over candidates: " << order_to_string(best) << "\n";
      }
      for (const auto &pt : parse_points(eta_at_pts, ring))
        std::cout << order_to_string(eta_at(M, pt)) << "\n";
    } else if (df->parsed()) {
      auto ring = df_args.ring();
      Ideal result = Ideal::zero(ring);
      if (df_with_identity) {
        std::vector<Polynomial> polys;
        for (const auto &src : df_args.gens)
          polys.push_back(parse_poly(src, ring));
        result = diff_ideal(Ideal(ring, std::move(polys)), df_i);
      } else {
        QModule M = df_args.module(ring);
        if (!df_lambda.empty()) {
          LogContext ctx = LogContext::trivial(ring);
          std::istringstream in(df_lambda);
          std::string name;
          while (std::getline(in, name, ',')) {
            size_t idx = ring->var_index(name);
            if (idx == Ring::npos)
              fail(ErrorCategory::usage, "unknown variable '" + name + "'");
            ctx.lambda.push_back(idx);
          }
          std::sort(ctx.lambda.begin(), ctx.lambda.end());
          if (!df_L.empty()) {
            Polynomial L = parse_poly(df_L, ring);
            if (!L.is_term())
              fail(ErrorCategory::usage, "--L must be a monomial");
            ctx.L = L.terms().begin()->first;
          } else {
            for (size_t j : ctx.lambda)
              ctx.L[j] = 1;
          }
          result = log_diff_plus_ideal(M, ctx, df_i);
        } else {
          result = diff_plus_ideal(M, df_i);
        }
      }
      std::cout << result.to_string() << "\n";
    } else if (sg->parsed()) {
      auto ring = sg_args.ring();
      QModule M = sg_args.module(ring);
      for (const auto &pt : parse_points(sg_at, ring))
        std::cout << (sing_test(M, sg_a, pt) ? "true" : "false") << "\n";
    } else if (pm->parsed()) {
      auto ring = pm_args.ring();
      QModule M = pm_args.module(ring);
      std::vector<size_t> Z;
      std::istringstream in(pm_center);
      std::string name;
      while (std::getline(in, name, ',')) {
        size_t idx = ring->var_index(name);
        if (idx == Ring::npos)
          fail(ErrorCategory::usage, "unknown variable '" + name + "'");
        Z.push_back(idx);
      }
      std::cout << (is_permissible_center(M, pm_a, Z) ? "true" : "false")
                << "\n";
      if (pm_max)
        std::cout << "max a: " << max_a_for_center(M, Z) << "\n";
    } else if (bl->parsed()) {
      auto ring = bl_args.ring();
      QModule M = bl_args.module(ring);
      std::vector<size_t> S;
      std::istringstream in(bl_center);
      std::string name;
      while (std::getline(in, name, ',')) {
        size_t idx = ring->var_index(name);
        if (idx == Ring::npos)
          fail(ErrorCategory::usage, "unknown variable '" + name + "'");
        S.push_back(idx);
      }
      std::vector<size_t> charts;
      if (bl_chart == "all") {
        charts = S;
      } else {
        size_t idx = ring->var_index(bl_chart);
        if (idx == Ring::npos)
          fail(ErrorCategory::usage, "unknown chart variable '" + bl_chart +
                                         "'");
        charts.push_back(idx);
      }
      for (size_t t : charts) {
        Chart c = blowup_chart(ring, S, t);
        std::cout << "-- chart " << ring->var(t) << " --\n";
        std::cout << "total transform: "
                  << total_transform_module(M, c).to_string() << "\n";
        std::cout << "a-transform (a=" << bl_a << "): "
                  << a_transform_module(M, c, bl_a).to_string() << "\n";
      }
    } else if (rn->parsed()) {
      SequenceJob job = load_job(run_path);
      print_report(run_sequence(job), run_json);
    } else if (vf->parsed()) {
      return run_verify(vf_seed, vf_trials);
    }
  } catch (const Error &err) {
    std::cerr << "error (" << to_string(err.category()) << "): " << err.what()
              << "\n";
    return err.category() == ErrorCategory::usage ? 2 : 1;
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
