#ifndef QRES_RING_HPP
#define QRES_RING_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "qres/error.hpp"
#include "qres/field.hpp"

namespace qres {

// Exponent vector of a monomial; length always equals the ambient ring's
// variable count. Entries are checked naturals: overflow and negative
// subtraction are hard errors, never silent wraparound.
using ExpVec = std::vector<uint32_t>;

inline uint64_t total_degree(const ExpVec &e) {
  uint64_t d = 0;
  for (uint32_t x : e)
    d += x;
  return d;
}

inline ExpVec exp_add(const ExpVec &a, const ExpVec &b) {
  if (a.size() != b.size())
    fail(ErrorCategory::domain, "exponent vector length mismatch");
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t s = uint64_t(a[i]) + uint64_t(b[i]);
    if (s > std::numeric_limits<uint32_t>::max())
      fail(ErrorCategory::domain, "exponent overflow");
    r[i] = static_cast<uint32_t>(s);
  }
  return r;
}

// Errors on any negative entry.
inline ExpVec exp_sub(const ExpVec &a, const ExpVec &b) {
  if (a.size() != b.size())
    fail(ErrorCategory::domain, "exponent vector length mismatch");
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i])
      fail(ErrorCategory::domain, "exponent subtraction below zero");
    r[i] = a[i] - b[i];
  }
  return r;
}

inline bool exp_divides(const ExpVec &a, const ExpVec &b) {
  // a | b as monomials
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

inline ExpVec exp_gcd(const ExpVec &a, const ExpVec &b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = std::min(a[i], b[i]);
  return r;
}

// Canonical term order: graded-lexicographic.
struct GrlexLess {
  bool operator()(const ExpVec &a, const ExpVec &b) const {
    uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db)
      return da < db;
    return a < b; // lexicographic tie-break
  }
};

// A polynomial ring F_p[x_1, ..., x_n]. Variable names are display metadata;
// all algebra works on stable indices. Blowup charts produce fresh rings with
// reprimed names (x2 -> x2') but the same index layout.
class Ring {
public:
  Ring(int64_t p, std::vector<std::string> vars)
      : p_(p), vars_(std::move(vars)) {
    fp::check_prime(p_);
    if (vars_.empty())
      fail(ErrorCategory::domain, "ring needs at least one variable");
  }

  int64_t p() const { return p_; }
  size_t nvars() const { return vars_.size(); }
  const std::vector<std::string> &vars() const { return vars_; }
  const std::string &var(size_t i) const { return vars_.at(i); }

  // Index of a named variable, or npos.
  static constexpr size_t npos = static_cast<size_t>(-1);
  size_t var_index(const std::string &name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name)
        return i;
    return npos;
  }

  bool operator==(const Ring &other) const {
    return p_ == other.p_ && vars_ == other.vars_;
  }

private:
  int64_t p_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(int64_t p, std::vector<std::string> vars) {
  return std::make_shared<const Ring>(p, std::move(vars));
}

inline bool same_ring(const RingPtr &a, const RingPtr &b) {
  return a == b || (*a == *b);
}

inline void check_same_ring(const RingPtr &a, const RingPtr &b) {
  if (!same_ring(a, b))
    fail(ErrorCategory::domain, "ring mismatch");
}

// Order values live in N u {infinity}.
using Order = uint64_t;
inline constexpr Order kOrderInfinity = std::numeric_limits<uint64_t>::max();

inline std::string order_to_string(Order v) {
  return v == kOrderInfinity ? "inf" : std::to_string(v);
}

} // namespace qres

#endif
