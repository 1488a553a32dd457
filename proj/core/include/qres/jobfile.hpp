#ifndef QRES_JOBFILE_HPP
#define QRES_JOBFILE_HPP

#include <string>

#include "qres/sequence.hpp"

namespace qres {

// Parses the line-oriented job format (see docs/jobfile.md):
//
//   qres-job v1
//   p = 3
//   e = 1
//   vars = x1, x2, x3, x4, x5
//   [module]
//   x1*x2*x3*x4*x5
//   [lambda]
//   x1
//   [L]
//   x1
//   [steps]
//   center = x1,x2,x3,x4,x5 ; chart = x1 ; a = auto
//   [points]
//   origin
//   point:0,1,0,0,0
//   generic:x1,x2
//   [options]
//   rational-box = true
//
// Step and point variable names may carry trailing primes (x2'); they resolve
// to the underlying stable index.
SequenceJob parse_job(const std::string &text);

SequenceJob load_job(const std::string &path);

// Point syntax shared with the CLI: "origin", "point:a1,...,an",
// "generic:v1,v2,...".
PointSpec parse_point(const std::string &text, const RingPtr &ring);

} // namespace qres

#endif
