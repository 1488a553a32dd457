#ifndef QRES_CHART_HPP
#define QRES_CHART_HPP

#include <cstdint>
#include <vector>

#include "qres/diffops.hpp"
#include "qres/ideal.hpp"
#include "qres/qmodule.hpp"

namespace qres {

// One affine chart of the blowup of a coordinate subvariety V(x_i : i in S).
// On the chart of x_t (t in S) the pullback is x_i -> x_t * x_i for
// i in S \ {t} and the identity elsewhere; x_t cuts out the exceptional
// hypersurface. Variable indices are stable across the blowup; the chart ring
// renames the substituted variables by appending a prime for display.
class Chart {
public:
  const RingPtr &parent() const { return parent_; }
  const RingPtr &ring() const { return ring_; }
  const std::vector<size_t> &center() const { return center_; }
  size_t chart_var() const { return t_; }
  size_t exceptional() const { return t_; }
  // Images of the parent variables in the chart ring.
  const std::vector<Polynomial> &images() const { return images_; }

  friend Chart blowup_chart(const RingPtr &ring, std::vector<size_t> S,
                            size_t t);

private:
  RingPtr parent_;
  RingPtr ring_;
  std::vector<size_t> center_;
  size_t t_ = 0;
  std::vector<Polynomial> images_;
};

Chart blowup_chart(const RingPtr &ring, std::vector<size_t> S, size_t t);

// M * O^q of the chart, in normal form.
QModule total_transform_module(const QModule &M, const Chart &c);

// The a-transform: substitute, strip q-th powers, divide exactly by
// x_t^{q*a}. The center must be permissible for (M, a); this is re-verified
// here and any division failure is a domain error naming the generator.
QModule a_transform_module(const QModule &M, const Chart &c, uint64_t a);

// Per-component transform of an ideal: (I * O_chart : x_t^{qa}).
Ideal transform_ideal(const Ideal &I, const Chart &c, uint64_t qa);

// Boundary bookkeeping across the blowup: the hypersurfaces of Lambda carry
// over (same indices) and the exceptional one joins; L picks up one more
// factor of the exceptional variable on top of its pullback.
LogContext transform_log_context(const LogContext &ctx, const Chart &c);

// Image in the parent space of a chart point (composition with the blowup).
PointSpec image_point(const PointSpec &pt, const Chart &c);

} // namespace qres

#endif
