#ifndef QRES_SEQUENCE_HPP
#define QRES_SEQUENCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qres/collection.hpp"

namespace qres {

// One blowup step: center, chosen chart, and the transform exponent (either
// explicit or resolved automatically from eta along the center).
struct StepSpec {
  std::vector<size_t> center;
  size_t chart_var = 0;
  bool auto_a = true;
  uint64_t a = 0; // used when auto_a is false
};

struct SequenceJob {
  RingPtr ring;
  uint32_t e = 1;
  std::vector<Polynomial> generators;
  LogContext ctx;
  std::vector<StepSpec> steps;
  std::vector<PointSpec> query_points; // evaluated on stage 0's ring only
  bool include_rational_box = false;   // add all F_p-rational points to the
                                       // candidate set (small rings only)
};

// Default candidate set for "maximum over candidates": the origin and the
// generic points of all coordinate subvarieties, plus (optionally) every
// rational point of the chart.
std::vector<PointSpec> candidate_points(const RingPtr &ring,
                                        bool include_rational_box);

struct StageReport {
  RingPtr ring;
  QModule module;
  LogContext ctx;
  QDiffCollection collection;
  Order max_eta_collection = 0;   // max over candidates
  std::vector<PointSpec> argmax;  // candidates attaining it
  Order max_eta_module = 0;       // module-level eta max over candidates
  std::vector<std::pair<PointSpec, Order>> eta_table; // query points
  bool stepped = false;           // a step was taken from this stage
  StepSpec step;
  uint64_t a = 0, b = 0;          // eta along the center = q*a + b
};

struct SequenceReport {
  uint64_t q = 0;
  std::vector<StageReport> stages;
  std::string stop_reason;
  bool chain_ok = true;   // collection eta maxima never increase
  std::string chain_note;
};

SequenceReport run_sequence(const SequenceJob &job);

// Deterministic plain-text rendering of a report; shared by the CLI and the
// golden-file checks. Higher verbosity always prints the attainment sets.
std::string render_report(const SequenceReport &rep, int verbosity = 0);

} // namespace qres

#endif
