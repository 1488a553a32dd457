#ifndef QRES_POLY_HPP
#define QRES_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qres/ring.hpp"

namespace qres {

// Sparse multivariate polynomial over F_p. Terms are kept in canonical
// graded-lexicographic order with no stored zero coefficients; every value is
// immutable after construction and safe to share across threads.
class Polynomial {
public:
  using TermMap = std::map<ExpVec, int64_t, GrlexLess>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, int64_t c);
  static Polynomial variable(RingPtr ring, size_t index);
  static Polynomial monomial(RingPtr ring, ExpVec exps, int64_t c = 1);

  const RingPtr &ring() const { return ring_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Single-term test (monomial up to scalar).
  bool is_term() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }

  Polynomial operator+(const Polynomial &o) const;
  Polynomial operator-(const Polynomial &o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial &o) const;
  bool operator==(const Polynomial &o) const;
  bool operator!=(const Polynomial &o) const { return !(*this == o); }

  Polynomial scaled(int64_t c) const;
  Polynomial pow(uint64_t k) const;

  // Substitution along a total variable map into `target`; a ring
  // homomorphism. images.size() must equal the source variable count.
  Polynomial substitute(const std::vector<Polynomial> &images,
                        RingPtr target) const;

  // f(x + point); inverse of translating by the negated point.
  Polynomial translate(const std::vector<int64_t> &point) const;

  // Exact division by a monomial; errors when some term is not divisible.
  Polynomial divide_exact_by_monomial(const ExpVec &m) const;
  Polynomial multiply_by_monomial(const ExpVec &m) const;

  // Minimal total degree among terms (order at the origin); infinity for 0.
  Order origin_order() const;
  // Min over terms of the exponent sum restricted to `subset` (order along
  // the generic point of the coordinate subvariety V(x_i : i in subset)).
  Order subset_order(const std::vector<size_t> &subset) const;

  uint64_t degree() const; // max total degree; 0 for the zero polynomial

  std::string to_string() const;

  // Construction helper used by the arithmetic kernels and the parser.
  void add_term(const ExpVec &e, int64_t c);

private:
  RingPtr ring_;
  TermMap terms_;
};

// The q-expansion of f: the unique decomposition f = sum_alpha (c_alpha)^q
// x^alpha over indices alpha with entries in [0, q). The alpha = 0 bucket is
// the "trivial part" (a q-th power).
struct QExpansion {
  RingPtr ring;
  uint64_t q = 0;
  std::map<ExpVec, Polynomial, GrlexLess> buckets;

  Polynomial reassemble() const;
  const Polynomial *trivial_part() const; // alpha = 0 bucket or nullptr
};

uint64_t q_power(int64_t p, uint32_t e);

QExpansion q_expand(const Polynomial &f, uint32_t e);

// f minus the q-th power of its trivial bucket; the flag is true iff the
// remainder is zero (f itself is a q-th power).
std::pair<Polynomial, bool> strip_q_power(const Polynomial &f, uint32_t e);

} // namespace qres

#endif
