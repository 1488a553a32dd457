#ifndef QRES_FIELD_HPP
#define QRES_FIELD_HPP

#include <cstdint>

#include "qres/error.hpp"

namespace qres {

// Arithmetic in the prime field F_p. Coefficients are kept as residues in
// [0, p); the prime is validated once, at ring construction.
namespace fp {

inline bool is_prime(int64_t p) {
  if (p < 2)
    return false;
  if (p % 2 == 0)
    return p == 2;
  for (int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0)
      return false;
  return true;
}

inline void check_prime(int64_t p) {
  if (p < 2 || p > (int64_t(1) << 31) || !is_prime(p))
    fail(ErrorCategory::domain, "characteristic must be a prime in [2, 2^31]");
}

inline int64_t reduce(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}

inline int64_t add(int64_t a, int64_t b, int64_t p) { return (a + b) % p; }

inline int64_t sub(int64_t a, int64_t b, int64_t p) {
  return reduce(a - b, p);
}

inline int64_t neg(int64_t a, int64_t p) { return a == 0 ? 0 : p - a; }

inline int64_t mul(int64_t a, int64_t b, int64_t p) {
  return static_cast<int64_t>(
      static_cast<__int128>(a) * static_cast<__int128>(b) % p);
}

inline int64_t pow(int64_t a, uint64_t k, int64_t p) {
  int64_t r = 1 % p;
  a = reduce(a, p);
  while (k > 0) {
    if (k & 1)
      r = mul(r, a, p);
    a = mul(a, a, p);
    k >>= 1;
  }
  return r;
}

inline int64_t inv(int64_t a, int64_t p) {
  if (a % p == 0)
    fail(ErrorCategory::domain, "division by zero in F_p");
  return pow(a, static_cast<uint64_t>(p - 2), p);
}

// Binomial coefficient C(a, b) mod p via Lucas: the product of the digitwise
// binomials in base p. Nonzero exactly when every base-p digit of b is at
// most the matching digit of a.
inline int64_t lucas_binom(uint64_t a, uint64_t b, int64_t p) {
  int64_t result = 1;
  const uint64_t up = static_cast<uint64_t>(p);
  while (b > 0 || a > 0) {
    uint64_t ad = a % up;
    uint64_t bd = b % up;
    if (bd > ad)
      return 0;
    // C(ad, bd) with ad, bd < p; small, exact in the field.
    int64_t num = 1, den = 1;
    for (uint64_t i = 0; i < bd; ++i) {
      num = mul(num, static_cast<int64_t>((ad - i) % up), p);
      den = mul(den, static_cast<int64_t>((i + 1) % up), p);
    }
    result = mul(result, mul(num, inv(den, p), p), p);
    a /= up;
    b /= up;
  }
  return result;
}

} // namespace fp
} // namespace qres

#endif
