#include "qres/sequence.hpp"

#include <algorithm>
#include <sstream>

namespace qres {

std::vector<PointSpec> candidate_points(const RingPtr &ring,
                                        bool include_rational_box) {
  const size_t n = ring->nvars();
  if (n > 16)
    fail(ErrorCategory::domain, "candidate enumeration capped at 16 variables");
  std::vector<PointSpec> pts;
  pts.push_back(PointSpec::origin(n));
  // The full subset denotes the same point as the origin; skip it.
  for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << n); ++mask) {
    std::vector<size_t> subset;
    for (size_t i = 0; i < n; ++i)
      if (mask & (uint64_t(1) << i))
        subset.push_back(i);
    pts.push_back(PointSpec::generic(std::move(subset)));
  }
  if (include_rational_box) {
    const int64_t p = ring->p();
    double count = 1;
    for (size_t i = 0; i < n; ++i)
      count *= double(p);
    if (count > 1e6)
      fail(ErrorCategory::domain, "rational box too large to enumerate");
    std::vector<int64_t> coords(n, 0);
    while (true) {
      bool origin = std::all_of(coords.begin(), coords.end(),
                                [](int64_t c) { return c == 0; });
      if (!origin)
        pts.push_back(PointSpec::rational(coords));
      size_t k = 0;
      while (k < n && ++coords[k] == p) {
        coords[k] = 0;
        ++k;
      }
      if (k == n)
        break;
    }
  }
  return pts;
}

namespace {

struct MaxScan {
  Order value = kOrderInfinity;
  std::vector<PointSpec> argmax;
};

// Maximum of eta over the candidate set, with the attaining candidates.
// Orders are compared with infinity largest; a trivial input yields infinity
// at every point, reported with an empty argmax.
template <typename EtaFn>
MaxScan scan_max(const std::vector<PointSpec> &cands, EtaFn &&eta) {
  MaxScan m;
  bool first = true;
  for (const auto &pt : cands) {
    Order v = eta(pt);
    if (first || v > m.value) {
      m.value = v;
      m.argmax.clear();
      first = false;
    }
    if (v == m.value)
      m.argmax.push_back(pt);
  }
  return m;
}

} // namespace

SequenceReport run_sequence(const SequenceJob &job) {
  if (!job.ring)
    fail(ErrorCategory::domain, "job has no ring");
  SequenceReport rep;
  QModule M = normal_form(job.ring, job.e, job.generators);
  rep.q = M.q();
  LogContext ctx = job.ctx;
  ctx.validate(job.ring);
  std::vector<PointSpec> queries = job.query_points;

  Order prev_max = kOrderInfinity;
  bool have_prev = false;
  size_t step_index = 0;
  while (true) {
    LogTriple triple{M, ctx};
    QDiffCollection G = make_G_log(triple);
    auto cands = candidate_points(M.ring(), job.include_rational_box);
    MaxScan coll = scan_max(cands, [&](const PointSpec &pt) {
      return eta_G_at(G, pt);
    });
    MaxScan mod = scan_max(cands, [&](const PointSpec &pt) {
      return eta_at(M, pt);
    });

    StageReport stage{M.ring(), M,  ctx, G, coll.value, coll.argmax,
                      mod.value, {}, false, {}, 0, 0};
    for (const auto &pt : queries)
      stage.eta_table.emplace_back(pt.normalized(M.ring()),
                                   eta_G_at(G, pt.normalized(M.ring())));

    if (have_prev && !(coll.value <= prev_max)) {
      rep.chain_ok = false;
      rep.chain_note = "collection eta maximum increased from " +
                       order_to_string(prev_max) + " to " +
                       order_to_string(coll.value);
    }
    prev_max = coll.value;
    have_prev = true;

    bool stop_small = coll.value == kOrderInfinity || coll.value < M.q();
    if (stop_small) {
      rep.stop_reason = coll.value == kOrderInfinity
                            ? "collection is zero"
                            : "max eta(G) = " + order_to_string(coll.value) +
                                  " < q = " + std::to_string(M.q());
      rep.stages.push_back(std::move(stage));
      break;
    }
    if (step_index >= job.steps.size()) {
      rep.stop_reason = "steps exhausted";
      rep.stages.push_back(std::move(stage));
      break;
    }

    StepSpec step = job.steps[step_index++];
    PointSpec xi = PointSpec::generic(step.center);
    Order center_eta = eta_G_at(G, xi);
    if (center_eta == kOrderInfinity)
      fail(ErrorCategory::domain, "eta is infinite along the chosen center");
    uint64_t a = step.auto_a ? center_eta / M.q() : step.a;
    if (a < 1)
      fail(ErrorCategory::domain,
           "center admits no transform: eta along it is below q");
    stage.stepped = true;
    stage.step = step;
    stage.a = a;
    stage.b = center_eta - M.q() * (center_eta / M.q());

    Chart chart = blowup_chart(M.ring(), step.center, step.chart_var);
    LogTriple next = triple_transform(triple, chart, a);
    rep.stages.push_back(std::move(stage));
    M = next.module;
    ctx = next.ctx;
    queries.clear(); // query points are meaningful on the original chart only
  }
  return rep;
}

std::string render_report(const SequenceReport &rep, int verbosity) {
  std::ostringstream out;
  for (size_t k = 0; k < rep.stages.size(); ++k) {
    const auto &st = rep.stages[k];
    out << "== stage " << k << " ==\n";
    out << "module: " << st.module.to_string() << "\n";
    if (!st.ctx.lambda.empty()) {
      out << "lambda: {";
      for (size_t i = 0; i < st.ctx.lambda.size(); ++i)
        out << (i ? ", " : "") << st.ring->var(st.ctx.lambda[i]);
      out << "}  L = "
          << Polynomial::monomial(st.ring, st.ctx.L, 1).to_string() << "\n";
    }
    for (size_t i = 0; i < st.collection.ideals.size(); ++i)
      out << "I_" << (i + 1) << " = " << st.collection.ideals[i].to_string()
          << "\n";
    out << "max eta(G) over candidates = "
        << order_to_string(st.max_eta_collection)
        << "   max eta(M) = " << order_to_string(st.max_eta_module) << "\n";
    if (verbosity > 0 || st.argmax.size() <= 4) {
      out << "attained at:";
      for (const auto &pt : st.argmax)
        out << " " << pt.to_string(st.ring);
      out << "\n";
    }
    for (const auto &[pt, v] : st.eta_table)
      out << "eta(G) at " << pt.to_string(st.ring) << " = "
          << order_to_string(v) << "\n";
    if (st.stepped)
      out << "step: blow up, chart " << st.ring->var(st.step.chart_var)
          << ", a = " << st.a << ", b = " << st.b << "\n";
  }
  out << rep.stop_reason << "\n";
  if (!rep.chain_ok)
    out << "WARNING (internal-consistency): " << rep.chain_note << "\n";
  return out.str();
}

} // namespace qres
