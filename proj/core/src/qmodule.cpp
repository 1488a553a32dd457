#include "qres/qmodule.hpp"

#include <algorithm>
#include <sstream>

#include "qres/diffops.hpp"

namespace qres {

QModule::QModule(RingPtr ring, uint32_t e)
    : ring_(std::move(ring)), e_(e), q_(q_power(ring_->p(), e)) {}

QModule normal_form(RingPtr ring, uint32_t e, std::vector<Polynomial> gens) {
  QModule M(std::move(ring), e);
  for (auto &g : gens) {
    check_same_ring(g.ring(), M.ring_);
    auto [stripped, is_power] = strip_q_power(g, e);
    if (!is_power)
      M.gens_.push_back(std::move(stripped));
  }
  std::sort(M.gens_.begin(), M.gens_.end(), poly_less);
  M.gens_.erase(std::unique(M.gens_.begin(), M.gens_.end(),
                            [](const Polynomial &x, const Polynomial &y) {
                              return x == y;
                            }),
                M.gens_.end());
  return M;
}

std::string QModule::to_string() const {
  std::ostringstream out;
  out << "<";
  for (size_t i = 0; i < gens_.size(); ++i)
    out << (i ? ", " : "") << gens_[i].to_string();
  if (gens_.empty())
    out << "0";
  out << ">";
  return out.str();
}

static Order q_order_of_generator(const Polynomial &g, uint64_t q, uint32_t e,
                                  const PointSpec &pt) {
  if (pt.is_rational()) {
    Polynomial moved = pt.is_origin() ? g : g.translate(pt.coords);
    auto [plus, is_power] = strip_q_power(moved, e);
    return plus.origin_order();
  }
  // Generic point of V(x_i : i in S): each expansion atom (c_alpha)^q x^alpha
  // contributes q * order_S(c_alpha) + sum_{i in S} alpha_i, and the order of
  // the sum is the minimum of the atom orders.
  QExpansion exp = q_expand(g, e);
  Order best = kOrderInfinity;
  const ExpVec zero(g.ring()->nvars(), 0);
  for (const auto &[alpha, c_alpha] : exp.buckets) {
    if (alpha == zero)
      continue;
    Order inner = c_alpha.subset_order(pt.subset);
    if (inner == kOrderInfinity)
      continue;
    uint64_t tail = 0;
    for (size_t i : pt.subset)
      tail += alpha[i];
    best = std::min<Order>(best, q * inner + tail);
  }
  return best;
}

Order q_order_at(const QModule &M, const PointSpec &pt) {
  PointSpec p = pt.normalized(M.ring());
  Order best = kOrderInfinity;
  for (const auto &g : M.generators())
    best = std::min(best, q_order_of_generator(g, M.q(), M.e(), p));
  return best;
}

Order eta_at(const QModule &M, const PointSpec &pt) {
  if (M.is_trivial())
    return kOrderInfinity;
  Order best = kOrderInfinity;
  for (uint64_t i = 1; i <= M.q() - 1; ++i) {
    Order nu = ideal_order_at(diff_plus_ideal(M, i), pt);
    if (nu != kOrderInfinity)
      best = std::min<Order>(best, nu + i);
  }
  return best;
}

bool sing_test(const QModule &M, uint64_t a, const PointSpec &pt) {
  if (a < 1)
    fail(ErrorCategory::domain, "the exponent a must be at least 1");
  if (M.is_trivial())
    return true;
  Order nu = ideal_order_at(diff_plus_ideal(M, M.q() - 1), pt);
  bool direct = nu != kOrderInfinity ? nu >= M.q() * (a - 1) + 1 : true;
  Order eta = eta_at(M, pt);
  bool via_eta = eta == kOrderInfinity || eta >= M.q() * a;
  if (direct != via_eta)
    fail(ErrorCategory::internal_consistency,
         "the two descriptions of the singular locus disagree at " +
             pt.to_string(M.ring()));
  return direct;
}

bool is_permissible_center(const QModule &M, uint64_t a,
                           const std::vector<size_t> &Z) {
  if (Z.empty())
    fail(ErrorCategory::domain, "center must involve at least one variable");
  if (M.is_trivial())
    return true;
  return sing_test(M, a, PointSpec::generic(Z));
}

uint64_t max_a_for_center(const QModule &M, const std::vector<size_t> &Z) {
  if (M.is_trivial())
    fail(ErrorCategory::domain,
         "the exponent is unbounded for the trivial module");
  PointSpec xi = PointSpec::generic(Z);
  Order eta = eta_at(M, xi);
  uint64_t a = eta == kOrderInfinity ? 0 : eta / M.q();
  // Cross-check against the direct permissibility condition.
  if (a > 0 && !is_permissible_center(M, a, Z))
    fail(ErrorCategory::internal_consistency,
         "eta-based exponent not confirmed by the direct condition");
  if (is_permissible_center(M, a + 1, Z))
    fail(ErrorCategory::internal_consistency,
         "eta-based exponent underestimates the direct condition");
  if (Z.size() == 1 && a > 0) {
    Order n = ideal_order_at(diff_plus_ideal(M, M.q() - 1), xi);
    if (n != M.q() * a)
      fail(ErrorCategory::internal_consistency,
           "hypersurface derivative order " + order_to_string(n) +
               " is not q times the exponent " + std::to_string(a));
  }
  return a;
}

} // namespace qres
