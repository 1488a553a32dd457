#ifndef QRES_DIFFOPS_HPP
#define QRES_DIFFOPS_HPP

#include <cstdint>
#include <vector>

#include "qres/ideal.hpp"
#include "qres/poly.hpp"
#include "qres/qmodule.hpp"

namespace qres {

// Product over coordinates of the binomials C(alpha_k, gamma_k) mod p.
int64_t lucas_binom_vec(const ExpVec &alpha, const ExpVec &gamma, int64_t p);

// The divided-power (Hasse-Taylor) operator indexed by gamma:
// D_gamma(x^alpha) = C(alpha, gamma) x^{alpha - gamma}, extended additively.
Polynomial hasse(const ExpVec &gamma, const Polynomial &f);

// All exponent vectors of length nvars with 1 <= |gamma| <= max_order (or
// including 0 when include_zero), in a deterministic order.
std::vector<ExpVec> taylor_indices(size_t nvars, uint64_t max_order,
                                   bool include_zero);

// Diff^i_+(M): the ideal generated by D_gamma(g) over generators g of M and
// 0 < |gamma| <= i. Requires 1 <= i <= q-1 so the operators are O^q-linear
// and the ideal depends only on the equivalence class of M.
Ideal diff_plus_ideal(const QModule &M, uint64_t i);

// Diff^i(J): generated by D_gamma(g) with 0 <= |gamma| <= i (so J itself is
// included).
Ideal diff_ideal(const Ideal &J, uint64_t i);

// Logarithmic context: a set Lambda of coordinate hypersurfaces with normal
// crossings, plus a monomial invertible ideal L divisible by every x_j with
// j in Lambda.
struct LogContext {
  std::vector<size_t> lambda; // sorted variable indices
  ExpVec L;                   // exponent vector of the monomial generator

  static LogContext trivial(const RingPtr &ring) {
    LogContext ctx;
    ctx.L.assign(ring->nvars(), 0);
    return ctx;
  }

  bool in_lambda(size_t i) const;
  void validate(const RingPtr &ring) const;
  ExpVec L_power(uint64_t k) const;
};

// The Lambda-logarithmic version of Diff^i_+(M): generated by the family
// (prod_{j in Lambda} x_j^{gamma_j}) * D_gamma(g), 0 < |gamma| <= i.
Ideal log_diff_plus_ideal(const QModule &M, const LogContext &ctx, uint64_t i);

} // namespace qres

#endif
