#ifndef QRES_COLLECTION_HPP
#define QRES_COLLECTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qres/chart.hpp"
#include "qres/diffops.hpp"
#include "qres/ideal.hpp"
#include "qres/qmodule.hpp"

namespace qres {

// A tuple (I_1, ..., I_{q-1}) of ideals; the interesting ones form an
// ascending chain closed under derivatives (Diff^j(I_i) inside I_{i+j}).
struct QDiffCollection {
  uint64_t q = 0;
  std::vector<Ideal> ideals; // index i-1 holds I_i

  const Ideal &component(uint64_t i) const { return ideals.at(i - 1); }
  bool is_zero() const;
};

// A module together with its boundary data (Lambda, L).
struct LogTriple {
  QModule module;
  LogContext ctx;
};

// (Diff^1_+(M), ..., Diff^{q-1}_+(M)).
QDiffCollection make_G(const QModule &M);

// Component i = (LogDiff^i_+(M, Lambda) : L^i); contains make_G(M)
// componentwise.
QDiffCollection make_G_log(const LogTriple &t);

// Checks the ascending chain and the derivative law on monomial components.
bool validate_qdiff(const QDiffCollection &G);

// min_i (order of I_i at pt) + i.
Order eta_G_at(const QDiffCollection &G, const PointSpec &pt);

// Componentwise (I_i * O_chart : x_t^{q*a}).
QDiffCollection collection_transform(const QDiffCollection &G, const Chart &c,
                                     uint64_t a);

// (a-transform of the module, transformed boundary data).
LogTriple triple_transform(const LogTriple &t, const Chart &c, uint64_t a);

// Report for the pointwise comparison of eta through a transform.
struct PointwiseEntry {
  PointSpec chart_point;
  Order eta_transform = 0;       // eta of the transformed collection there
  Order eta_source_at_image = 0; // eta of the source at the image point
  bool holds = false;            // source >= transform
};
struct PointwiseReport {
  bool precondition_ok = false; // eta constant along the center
  std::string precondition_note;
  Order center_eta = 0;
  std::vector<PointwiseEntry> entries;
  bool all_hold = false;
};

// For each supplied chart point, compares eta of the transformed collection
// with eta of the source collection at the image point. The precondition
// (eta constant along the center, sampled at its generic point and rational
// points on it) is reported, not asserted.
PointwiseReport check_pointwise(const QDiffCollection &G, const Chart &c,
                                uint64_t a,
                                const std::vector<PointSpec> &pts);

} // namespace qres

#endif
