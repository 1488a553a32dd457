#ifndef QRES_TEST_HELPERS_HPP
#define QRES_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "qres/parser.hpp"
#include "qres/poly.hpp"

namespace qres::test {

inline RingPtr ring2(int64_t p = 3) { return make_ring(p, {"x1", "x2"}); }
inline RingPtr ring3(int64_t p = 3) {
  return make_ring(p, {"x1", "x2", "x3"});
}
inline RingPtr ring5(int64_t p = 3) {
  return make_ring(p, {"x1", "x2", "x3", "x4", "x5"});
}

inline Polynomial P(const RingPtr &r, const std::string &src) {
  return parse_poly(src, r);
}

inline ExpVec E(std::initializer_list<uint32_t> xs) { return ExpVec(xs); }

// Deterministic random polynomial with at most max_terms monomials and
// exponents bounded by max_exp.
inline Polynomial random_poly(const RingPtr &ring, std::mt19937_64 &rng,
                              uint32_t max_exp = 8, size_t max_terms = 5,
                              bool nonzero = false) {
  std::uniform_int_distribution<size_t> nterms(nonzero ? 1 : 0, max_terms);
  std::uniform_int_distribution<uint32_t> expd(0, max_exp);
  std::uniform_int_distribution<int64_t> coeff(1, ring->p() - 1);
  while (true) {
    Polynomial f(ring);
    size_t n = nterms(rng);
    for (size_t t = 0; t < n; ++t) {
      ExpVec e(ring->nvars());
      for (auto &x : e)
        x = expd(rng);
      f.add_term(e, coeff(rng));
    }
    if (!nonzero || !f.is_zero())
      return f;
  }
}

// Random single monomial (coefficient 1).
inline Polynomial random_monomial(const RingPtr &ring, std::mt19937_64 &rng,
                                  uint32_t max_exp = 8) {
  std::uniform_int_distribution<uint32_t> expd(0, max_exp);
  ExpVec e(ring->nvars());
  for (auto &x : e)
    x = expd(rng);
  return Polynomial::monomial(ring, e, 1);
}

} // namespace qres::test

#endif
