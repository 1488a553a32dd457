#include "qres/diffops.hpp"

#include <algorithm>

namespace qres {

int64_t lucas_binom_vec(const ExpVec &alpha, const ExpVec &gamma, int64_t p) {
  if (alpha.size() != gamma.size())
    fail(ErrorCategory::domain, "exponent vector length mismatch");
  int64_t r = 1;
  for (size_t k = 0; k < alpha.size(); ++k) {
    r = fp::mul(r, fp::lucas_binom(alpha[k], gamma[k], p), p);
    if (r == 0)
      return 0;
  }
  return r;
}

Polynomial hasse(const ExpVec &gamma, const Polynomial &f) {
  if (gamma.size() != f.ring()->nvars())
    fail(ErrorCategory::domain, "operator index length mismatch");
  const int64_t p = f.ring()->p();
  Polynomial out(f.ring());
  for (const auto &[alpha, c] : f.terms()) {
    if (!exp_divides(gamma, alpha))
      continue;
    int64_t coeff = fp::mul(c, lucas_binom_vec(alpha, gamma, p), p);
    if (coeff != 0)
      out.add_term(exp_sub(alpha, gamma), coeff);
  }
  return out;
}

static void enumerate_rec(size_t pos, uint64_t remaining, ExpVec &cur,
                          std::vector<ExpVec> &out) {
  if (pos == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (uint64_t v = 0; v <= remaining; ++v) {
    cur[pos] = static_cast<uint32_t>(v);
    enumerate_rec(pos + 1, remaining - v, cur, out);
  }
  cur[pos] = 0;
}

std::vector<ExpVec> taylor_indices(size_t nvars, uint64_t max_order,
                                   bool include_zero) {
  std::vector<ExpVec> out;
  ExpVec cur(nvars, 0);
  enumerate_rec(0, max_order, cur, out);
  if (!include_zero) {
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const ExpVec &g) {
                               return total_degree(g) == 0;
                             }),
              out.end());
  }
  return out;
}

Ideal diff_plus_ideal(const QModule &M, uint64_t i) {
  if (i < 1 || i > M.q() - 1)
    fail(ErrorCategory::domain,
         "derivative order must lie in [1, q-1]; got " + std::to_string(i));
  std::vector<Polynomial> gens;
  for (const auto &gamma :
       taylor_indices(M.ring()->nvars(), i, /*include_zero=*/false))
    for (const auto &g : M.generators())
      gens.push_back(hasse(gamma, g));
  return Ideal(M.ring(), std::move(gens));
}

Ideal diff_ideal(const Ideal &J, uint64_t i) {
  std::vector<Polynomial> gens;
  for (const auto &gamma :
       taylor_indices(J.ring()->nvars(), i, /*include_zero=*/true))
    for (const auto &g : J.generators())
      gens.push_back(hasse(gamma, g));
  return Ideal(J.ring(), std::move(gens));
}

bool LogContext::in_lambda(size_t i) const {
  return std::binary_search(lambda.begin(), lambda.end(), i);
}

void LogContext::validate(const RingPtr &ring) const {
  if (L.size() != ring->nvars())
    fail(ErrorCategory::domain, "log context monomial length mismatch");
  if (!std::is_sorted(lambda.begin(), lambda.end()) ||
      std::adjacent_find(lambda.begin(), lambda.end()) != lambda.end())
    fail(ErrorCategory::domain, "log context variable set must be sorted/unique");
  for (size_t j : lambda) {
    if (j >= ring->nvars())
      fail(ErrorCategory::domain, "log context variable index out of range");
    if (L[j] < 1)
      fail(ErrorCategory::domain,
           "the invertible monomial must be divisible by every boundary "
           "hypersurface variable");
  }
}

ExpVec LogContext::L_power(uint64_t k) const {
  ExpVec r(L.size());
  for (size_t i = 0; i < L.size(); ++i) {
    uint64_t v = uint64_t(L[i]) * k;
    if (v > std::numeric_limits<uint32_t>::max())
      fail(ErrorCategory::domain, "exponent overflow");
    r[i] = static_cast<uint32_t>(v);
  }
  return r;
}

Ideal log_diff_plus_ideal(const QModule &M, const LogContext &ctx,
                          uint64_t i) {
  if (i < 1 || i > M.q() - 1)
    fail(ErrorCategory::domain,
         "derivative order must lie in [1, q-1]; got " + std::to_string(i));
  ctx.validate(M.ring());
  std::vector<Polynomial> gens;
  for (const auto &gamma :
       taylor_indices(M.ring()->nvars(), i, /*include_zero=*/false)) {
    ExpVec boundary(gamma.size(), 0);
    for (size_t j : ctx.lambda)
      boundary[j] = gamma[j];
    for (const auto &g : M.generators())
      gens.push_back(hasse(gamma, g).multiply_by_monomial(boundary));
  }
  return Ideal(M.ring(), std::move(gens));
}

} // namespace qres
