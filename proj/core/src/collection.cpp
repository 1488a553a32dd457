#include "qres/collection.hpp"

#include <algorithm>

namespace qres {

bool QDiffCollection::is_zero() const {
  for (const auto &I : ideals)
    if (!I.is_zero())
      return false;
  return true;
}

QDiffCollection make_G(const QModule &M) {
  QDiffCollection G;
  G.q = M.q();
  for (uint64_t i = 1; i <= M.q() - 1; ++i)
    G.ideals.push_back(diff_plus_ideal(M, i));
  return G;
}

QDiffCollection make_G_log(const LogTriple &t) {
  const QModule &M = t.module;
  t.ctx.validate(M.ring());
  QDiffCollection G;
  G.q = M.q();
  for (uint64_t i = 1; i <= M.q() - 1; ++i)
    G.ideals.push_back(
        colon_by_monomial(log_diff_plus_ideal(M, t.ctx, i), t.ctx.L_power(i)));
  return G;
}

bool validate_qdiff(const QDiffCollection &G) {
  for (const auto &I : G.ideals)
    if (!I.is_monomial())
      fail(ErrorCategory::unsupported_fragment,
           "collection validity is decidable only for monomial components");
  const uint64_t top = G.ideals.size();
  for (uint64_t i = 1; i < top; ++i)
    if (!ideal_included(G.component(i), G.component(i + 1)))
      return false;
  for (uint64_t i = 1; i <= top; ++i)
    for (uint64_t j = 1; i + j <= top; ++j)
      if (!ideal_included(diff_ideal(G.component(i), j), G.component(i + j)))
        return false;
  return true;
}

Order eta_G_at(const QDiffCollection &G, const PointSpec &pt) {
  Order best = kOrderInfinity;
  for (size_t k = 0; k < G.ideals.size(); ++k) {
    Order nu = ideal_order_at(G.ideals[k], pt);
    if (nu != kOrderInfinity)
      best = std::min<Order>(best, nu + (k + 1));
  }
  return best;
}

QDiffCollection collection_transform(const QDiffCollection &G, const Chart &c,
                                     uint64_t a) {
  if (a < 1)
    fail(ErrorCategory::domain, "transform exponent must be at least 1");
  QDiffCollection out;
  out.q = G.q;
  for (const auto &I : G.ideals)
    out.ideals.push_back(transform_ideal(I, c, G.q * a));
  return out;
}

LogTriple triple_transform(const LogTriple &t, const Chart &c, uint64_t a) {
  return LogTriple{a_transform_module(t.module, c, a),
                   transform_log_context(t.ctx, c)};
}

PointwiseReport check_pointwise(const QDiffCollection &G, const Chart &c,
                                uint64_t a,
                                const std::vector<PointSpec> &pts) {
  PointwiseReport rep;
  const RingPtr &parent = c.parent();
  // Precondition: eta of G is constant along the center; probe the generic
  // point and rational points lying on the center.
  PointSpec xi = PointSpec::generic(c.center());
  rep.center_eta = eta_G_at(G, xi);
  rep.precondition_ok = true;
  std::vector<PointSpec> probes;
  probes.push_back(PointSpec::origin(parent->nvars()));
  auto in_center = [&](size_t i) {
    return std::binary_search(c.center().begin(), c.center().end(), i);
  };
  for (size_t j = 0; j < parent->nvars(); ++j) {
    if (in_center(j))
      continue;
    for (int64_t v = 1; v < parent->p() && v <= 2; ++v) {
      std::vector<int64_t> coords(parent->nvars(), 0);
      coords[j] = v;
      probes.push_back(PointSpec::rational(std::move(coords)));
    }
  }
  for (const auto &probe : probes) {
    Order val = eta_G_at(G, probe);
    if (val != rep.center_eta) {
      rep.precondition_ok = false;
      rep.precondition_note = "eta is " + order_to_string(val) + " at " +
                              probe.to_string(parent) + " but " +
                              order_to_string(rep.center_eta) +
                              " along the center";
      break;
    }
  }
  QDiffCollection G1 = collection_transform(G, c, a);
  rep.all_hold = true;
  for (const auto &pt : pts) {
    PointwiseEntry entry;
    entry.chart_point = pt.normalized(c.ring());
    entry.eta_transform = eta_G_at(G1, entry.chart_point);
    entry.eta_source_at_image = eta_G_at(G, image_point(entry.chart_point, c));
    entry.holds = entry.eta_source_at_image >= entry.eta_transform;
    if (!entry.holds)
      rep.all_hold = false;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

} // namespace qres
