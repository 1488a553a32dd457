#ifndef QRES_QMODULE_HPP
#define QRES_QMODULE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qres/ideal.hpp"
#include "qres/poly.hpp"

namespace qres {

// A finitely generated O^q-submodule of the coordinate ring, held in a normal
// form that is canonical for the equivalence M ~ M + O^q: every generator is
// q-power-stripped, zeros are dropped, and the list is sorted. The module is
// "trivial" (equivalent to 0) exactly when the list is empty.
class QModule {
public:
  QModule(RingPtr ring, uint32_t e);

  const RingPtr &ring() const { return ring_; }
  uint32_t e() const { return e_; }
  uint64_t q() const { return q_; }
  const std::vector<Polynomial> &generators() const { return gens_; }
  bool is_trivial() const { return gens_.empty(); }

  std::string to_string() const;

  friend QModule normal_form(RingPtr ring, uint32_t e,
                             std::vector<Polynomial> gens);

private:
  RingPtr ring_;
  uint32_t e_;
  uint64_t q_;
  std::vector<Polynomial> gens_;
};

// Strip each generator to its nontrivial q-expansion part, drop zeros, sort
// canonically; idempotent.
QModule normal_form(RingPtr ring, uint32_t e, std::vector<Polynomial> gens);

// The q-order of M at a point: the minimum over generators g of the order at
// the point of the nontrivial part of g (translated first at rational
// points). Infinity for the trivial module.
Order q_order_at(const QModule &M, const PointSpec &pt);

// eta at a point: min over i = 1..q-1 of (order of the i-th derivative ideal
// of M at the point) + i. Infinity iff M is trivial.
Order eta_at(const QModule &M, const PointSpec &pt);

// Whether pt lies in Sing(M, a): the (q-1)-th derivative ideal has order at
// least q(a-1)+1 there. Cross-checked internally against eta >= q*a.
bool sing_test(const QModule &M, uint64_t a, const PointSpec &pt);

// Condition for the coordinate subvariety V(x_i : i in Z) to be a permissible
// center for (M, a): the order of the (q-1)-th derivative ideal at the
// generic point of Z is at least q(a-1)+1.
bool is_permissible_center(const QModule &M, uint64_t a,
                           const std::vector<size_t> &Z);

// Largest a for which Z is permissible (0 when not even a = 1 works). For a
// hypersurface Z = {t} the order n of the (q-1)-th derivative ideal along Z
// must equal q*a exactly; a mismatch is an internal-consistency error.
uint64_t max_a_for_center(const QModule &M, const std::vector<size_t> &Z);

} // namespace qres

#endif
