#ifndef QRES_IDEAL_HPP
#define QRES_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qres/poly.hpp"

namespace qres {

// A point of the ambient affine space at which orders are evaluated: either a
// rational point with coordinates in F_p, or the generic point of the
// coordinate subvariety V(x_i : i in subset).
struct PointSpec {
  enum class Kind { rational, generic };

  Kind kind = Kind::rational;
  std::vector<int64_t> coords; // rational: length = nvars, reduced mod p
  std::vector<size_t> subset;  // generic: sorted, unique variable indices

  static PointSpec origin(size_t nvars) {
    PointSpec pt;
    pt.coords.assign(nvars, 0);
    return pt;
  }
  static PointSpec rational(std::vector<int64_t> c) {
    PointSpec pt;
    pt.coords = std::move(c);
    return pt;
  }
  static PointSpec generic(std::vector<size_t> s);

  bool is_rational() const { return kind == Kind::rational; }
  bool is_origin() const;

  // Errors unless the point matches the ring (length / index range); reduces
  // rational coordinates mod p.
  PointSpec normalized(const RingPtr &ring) const;

  std::string to_string(const RingPtr &ring) const;
};

// Order of f at a point. Rational points translate to the origin and take the
// minimal total degree. Generic points take the minimum over terms of the
// exponent sum restricted to the subset, which equals the order along the
// coordinate prime because its ordinary and symbolic powers agree.
Order order_at(const Polynomial &f, const PointSpec &pt);

// An ideal given by generators. Generators are held canonically: zeros and
// duplicates removed, sorted; when every generator is a single term the ideal
// is flagged monomial and the list is the unique minimal monomial generating
// set. Membership, inclusion, and colon are exact on monomial data and fail
// loudly outside that fragment.
class Ideal {
public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  static Ideal unit(RingPtr ring) {
    auto r = ring;
    return Ideal(r, {Polynomial::constant(r, 1)});
  }

  const RingPtr &ring() const { return ring_; }
  const std::vector<Polynomial> &generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_monomial() const { return is_monomial_; }
  bool is_unit() const;

  bool operator==(const Ideal &o) const;
  bool operator!=(const Ideal &o) const { return !(*this == o); }

  std::string to_string() const;

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool is_monomial_ = true;
};

// Canonical comparison on polynomials of one ring (term-map lexicographic);
// used to sort generator lists deterministically.
bool poly_less(const Polynomial &a, const Polynomial &b);

Order ideal_order_at(const Ideal &I, const PointSpec &pt);

// Membership oracle; requires I monomial.
bool monomial_contains(const Ideal &I, const Polynomial &f);

// I included in J; requires J monomial.
bool ideal_included(const Ideal &I, const Ideal &J);

// (I : m) for a monomial m. Exact when I is monomial (generator g maps to
// g / gcd(g, m)) or when every generator of I is divisible by m.
Ideal colon_by_monomial(const Ideal &I, const ExpVec &m);

// Generator-wise image of I under a variable substitution.
Ideal substitute_ideal(const Ideal &I, const std::vector<Polynomial> &images,
                       RingPtr target);

} // namespace qres

#endif
