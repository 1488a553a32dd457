#include "qres/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace qres {

PointSpec PointSpec::generic(std::vector<size_t> s) {
  if (s.empty())
    fail(ErrorCategory::domain, "generic point needs a nonempty variable set");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  PointSpec pt;
  pt.kind = Kind::generic;
  pt.subset = std::move(s);
  return pt;
}

bool PointSpec::is_origin() const {
  if (kind != Kind::rational)
    return false;
  for (int64_t c : coords)
    if (c != 0)
      return false;
  return true;
}

PointSpec PointSpec::normalized(const RingPtr &ring) const {
  PointSpec pt = *this;
  if (kind == Kind::rational) {
    if (pt.coords.size() != ring->nvars())
      fail(ErrorCategory::domain, "point coordinate count mismatch");
    for (auto &c : pt.coords)
      c = fp::reduce(c, ring->p());
  } else {
    for (size_t i : pt.subset)
      if (i >= ring->nvars())
        fail(ErrorCategory::domain, "generic point variable index out of range");
  }
  return pt;
}

std::string PointSpec::to_string(const RingPtr &ring) const {
  std::ostringstream out;
  if (kind == Kind::rational) {
    if (is_origin())
      return "origin";
    out << "point:(";
    for (size_t i = 0; i < coords.size(); ++i)
      out << (i ? "," : "") << coords[i];
    out << ")";
  } else {
    out << "generic:V(";
    for (size_t k = 0; k < subset.size(); ++k)
      out << (k ? "," : "") << ring->var(subset[k]);
    out << ")";
  }
  return out.str();
}

Order order_at(const Polynomial &f, const PointSpec &pt) {
  PointSpec p = pt.normalized(f.ring());
  if (p.kind == PointSpec::Kind::rational) {
    if (p.is_origin())
      return f.origin_order();
    return f.translate(p.coords).origin_order();
  }
  return f.subset_order(p.subset);
}

bool poly_less(const Polynomial &a, const Polynomial &b) {
  auto ita = a.terms().begin(), enda = a.terms().end();
  auto itb = b.terms().begin(), endb = b.terms().end();
  GrlexLess less;
  for (; ita != enda && itb != endb; ++ita, ++itb) {
    if (less(ita->first, itb->first))
      return true;
    if (less(itb->first, ita->first))
      return false;
    if (ita->second != itb->second)
      return ita->second < itb->second;
  }
  return itb != endb;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
  for (auto &g : gens) {
    check_same_ring(g.ring(), ring_);
    if (!g.is_zero())
      gens_.push_back(std::move(g));
  }
  is_monomial_ = true;
  for (const auto &g : gens_)
    if (!g.is_term())
      is_monomial_ = false;
  if (is_monomial_) {
    // Normalize coefficients to 1 and keep the minimal generating set: drop
    // any monomial divisible by another generator.
    std::vector<ExpVec> exps;
    for (const auto &g : gens_)
      exps.push_back(g.terms().begin()->first);
    std::sort(exps.begin(), exps.end(), GrlexLess{});
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<ExpVec> minimal;
    for (const auto &e : exps) {
      bool redundant = false;
      for (const auto &m : minimal)
        if (exp_divides(m, e)) {
          redundant = true;
          break;
        }
      if (!redundant)
        minimal.push_back(e);
    }
    gens_.clear();
    for (const auto &e : minimal)
      gens_.push_back(Polynomial::monomial(ring_, e, 1));
  } else {
    std::sort(gens_.begin(), gens_.end(), poly_less);
    gens_.erase(std::unique(gens_.begin(), gens_.end(),
                            [](const Polynomial &x, const Polynomial &y) {
                              return x == y;
                            }),
                gens_.end());
  }
}

bool Ideal::is_unit() const {
  for (const auto &g : gens_)
    if (g.is_constant() && !g.is_zero())
      return true;
  return false;
}

bool Ideal::operator==(const Ideal &o) const {
  if (!same_ring(ring_, o.ring_) || gens_.size() != o.gens_.size())
    return false;
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] != o.gens_[i])
      return false;
  return true;
}

std::string Ideal::to_string() const {
  std::ostringstream out;
  out << "<";
  for (size_t i = 0; i < gens_.size(); ++i)
    out << (i ? ", " : "") << gens_[i].to_string();
  if (gens_.empty())
    out << "0";
  out << ">";
  return out.str();
}

Order ideal_order_at(const Ideal &I, const PointSpec &pt) {
  Order best = kOrderInfinity;
  for (const auto &g : I.generators())
    best = std::min(best, order_at(g, pt));
  return best;
}

bool monomial_contains(const Ideal &I, const Polynomial &f) {
  if (!I.is_monomial())
    fail(ErrorCategory::unsupported_fragment,
         "membership is exact only for monomial ideals");
  for (const auto &[e, c] : f.terms()) {
    bool covered = false;
    for (const auto &g : I.generators())
      if (exp_divides(g.terms().begin()->first, e)) {
        covered = true;
        break;
      }
    if (!covered)
      return false;
  }
  return true;
}

bool ideal_included(const Ideal &I, const Ideal &J) {
  check_same_ring(I.ring(), J.ring());
  for (const auto &g : I.generators())
    if (!monomial_contains(J, g))
      return false;
  return true;
}

Ideal colon_by_monomial(const Ideal &I, const ExpVec &m) {
  std::vector<Polynomial> gens;
  if (I.is_monomial()) {
    for (const auto &g : I.generators()) {
      const ExpVec &e = g.terms().begin()->first;
      gens.push_back(
          Polynomial::monomial(I.ring(), exp_sub(e, exp_gcd(e, m)), 1));
    }
  } else {
    for (const auto &g : I.generators()) {
      bool divisible = true;
      for (const auto &[e, c] : g.terms())
        if (!exp_divides(m, e)) {
          divisible = false;
          break;
        }
      if (!divisible)
        fail(ErrorCategory::unsupported_fragment,
             "colon outside the exact fragment: generator " + g.to_string() +
                 " is neither a monomial nor divisible by the divisor");
      gens.push_back(g.divide_exact_by_monomial(m));
    }
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal substitute_ideal(const Ideal &I, const std::vector<Polynomial> &images,
                       RingPtr target) {
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto &g : I.generators())
    gens.push_back(g.substitute(images, target));
  return Ideal(target, std::move(gens));
}

} // namespace qres
