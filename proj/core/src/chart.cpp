#include "qres/chart.hpp"

#include <algorithm>

namespace qres {

Chart blowup_chart(const RingPtr &ring, std::vector<size_t> S, size_t t) {
  if (S.empty())
    fail(ErrorCategory::domain, "blowup center must be nonempty");
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (size_t i : S)
    if (i >= ring->nvars())
      fail(ErrorCategory::domain, "center variable index out of range");
  if (!std::binary_search(S.begin(), S.end(), t))
    fail(ErrorCategory::domain, "chart variable must belong to the center");

  Chart c;
  c.parent_ = ring;
  c.center_ = S;
  c.t_ = t;

  std::vector<std::string> names = ring->vars();
  for (size_t i : S)
    if (i != t)
      names[i] += "'";
  c.ring_ = make_ring(ring->p(), std::move(names));

  for (size_t i = 0; i < ring->nvars(); ++i) {
    bool scaled = i != t && std::binary_search(S.begin(), S.end(), i);
    if (scaled) {
      ExpVec e(ring->nvars(), 0);
      e[i] = 1;
      e[t] = 1;
      c.images_.push_back(Polynomial::monomial(c.ring_, e, 1));
    } else {
      c.images_.push_back(Polynomial::variable(c.ring_, i));
    }
  }
  return c;
}

QModule total_transform_module(const QModule &M, const Chart &c) {
  check_same_ring(M.ring(), c.parent());
  std::vector<Polynomial> gens;
  gens.reserve(M.generators().size());
  for (const auto &g : M.generators())
    gens.push_back(g.substitute(c.images(), c.ring()));
  return normal_form(c.ring(), M.e(), std::move(gens));
}

QModule a_transform_module(const QModule &M, const Chart &c, uint64_t a) {
  check_same_ring(M.ring(), c.parent());
  if (a < 1)
    fail(ErrorCategory::domain, "transform exponent must be at least 1");
  if (!is_permissible_center(M, a, c.center()))
    fail(ErrorCategory::domain,
         "center is not permissible for the requested exponent " +
             std::to_string(a));
  ExpVec divisor(c.ring()->nvars(), 0);
  uint64_t qa = M.q() * a;
  if (qa > std::numeric_limits<uint32_t>::max())
    fail(ErrorCategory::domain, "exponent overflow");
  divisor[c.exceptional()] = static_cast<uint32_t>(qa);
  std::vector<Polynomial> gens;
  for (const auto &g : M.generators()) {
    Polynomial moved = g.substitute(c.images(), c.ring());
    auto [plus, is_power] = strip_q_power(moved, M.e());
    if (is_power)
      continue;
    try {
      gens.push_back(plus.divide_exact_by_monomial(divisor));
    } catch (const Error &) {
      fail(ErrorCategory::domain,
           "center is not permissible: the transform of generator " +
               g.to_string() + " is not divisible by the required power of " +
               c.ring()->var(c.exceptional()));
    }
  }
  return normal_form(c.ring(), M.e(), std::move(gens));
}

Ideal transform_ideal(const Ideal &I, const Chart &c, uint64_t qa) {
  check_same_ring(I.ring(), c.parent());
  Ideal moved = substitute_ideal(I, c.images(), c.ring());
  if (qa == 0)
    return moved;
  if (qa > std::numeric_limits<uint32_t>::max())
    fail(ErrorCategory::domain, "exponent overflow");
  ExpVec divisor(c.ring()->nvars(), 0);
  divisor[c.exceptional()] = static_cast<uint32_t>(qa);
  return colon_by_monomial(moved, divisor);
}

LogContext transform_log_context(const LogContext &ctx, const Chart &c) {
  ctx.validate(c.parent());
  LogContext out;
  out.lambda = ctx.lambda;
  if (!std::binary_search(out.lambda.begin(), out.lambda.end(),
                          c.exceptional())) {
    out.lambda.push_back(c.exceptional());
    std::sort(out.lambda.begin(), out.lambda.end());
  }
  // Pull back the monomial: x_i -> x_t x_i for scaled variables, then one
  // extra factor of the exceptional variable.
  out.L.assign(c.ring()->nvars(), 0);
  uint64_t t_exp = 1;
  for (size_t i = 0; i < ctx.L.size(); ++i) {
    out.L[i] = ctx.L[i];
    bool scaled = i != c.chart_var() &&
                  std::binary_search(c.center().begin(), c.center().end(), i);
    if (scaled)
      t_exp += ctx.L[i];
  }
  uint64_t total = t_exp + out.L[c.exceptional()];
  if (total > std::numeric_limits<uint32_t>::max())
    fail(ErrorCategory::domain, "exponent overflow");
  out.L[c.exceptional()] = static_cast<uint32_t>(total);
  return out;
}

PointSpec image_point(const PointSpec &pt, const Chart &c) {
  PointSpec p = pt.normalized(c.ring());
  const auto &S = c.center();
  const size_t t = c.chart_var();
  if (p.is_rational()) {
    std::vector<int64_t> out(p.coords);
    for (size_t i : S)
      if (i != t)
        out[i] = fp::mul(p.coords[t], p.coords[i], c.parent()->p());
    return PointSpec::rational(std::move(out));
  }
  auto in_T = [&](size_t i) {
    return std::binary_search(p.subset.begin(), p.subset.end(), i);
  };
  std::vector<size_t> T1;
  for (size_t i = 0; i < c.parent()->nvars(); ++i) {
    bool scaled = i != t && std::binary_search(S.begin(), S.end(), i);
    bool vanishes = scaled ? (in_T(t) || in_T(i)) : in_T(i);
    if (vanishes)
      T1.push_back(i);
  }
  return PointSpec::generic(std::move(T1));
}

} // namespace qres
