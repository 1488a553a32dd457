#include "qres/poly.hpp"

#include <sstream>

namespace qres {

Polynomial Polynomial::constant(RingPtr ring, int64_t c) {
  Polynomial f(ring);
  f.add_term(ExpVec(ring->nvars(), 0), c);
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, size_t index) {
  if (index >= ring->nvars())
    fail(ErrorCategory::domain, "variable index out of range");
  ExpVec e(ring->nvars(), 0);
  e[index] = 1;
  return monomial(std::move(ring), e, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, ExpVec exps, int64_t c) {
  if (exps.size() != ring->nvars())
    fail(ErrorCategory::domain, "exponent vector length mismatch");
  Polynomial f(ring);
  f.add_term(exps, c);
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

void Polynomial::add_term(const ExpVec &e, int64_t c) {
  c = fp::reduce(c, ring_->p());
  if (c == 0)
    return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = fp::add(it->second, c, ring_->p());
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
  check_same_ring(ring_, o.ring_);
  Polynomial r = *this;
  for (const auto &[e, c] : o.terms_)
    r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial &o) const {
  check_same_ring(ring_, o.ring_);
  Polynomial r = *this;
  for (const auto &[e, c] : o.terms_)
    r.add_term(e, fp::neg(c, ring_->p()));
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto &[e, c] : terms_)
    r.add_term(e, fp::neg(c, ring_->p()));
  return r;
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
  check_same_ring(ring_, o.ring_);
  Polynomial r(ring_);
  for (const auto &[ea, ca] : terms_)
    for (const auto &[eb, cb] : o.terms_)
      r.add_term(exp_add(ea, eb), fp::mul(ca, cb, ring_->p()));
  return r;
}

bool Polynomial::operator==(const Polynomial &o) const {
  return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Polynomial Polynomial::scaled(int64_t c) const {
  Polynomial r(ring_);
  for (const auto &[e, coeff] : terms_)
    r.add_term(e, fp::mul(coeff, fp::reduce(c, ring_->p()), ring_->p()));
  return r;
}

Polynomial Polynomial::pow(uint64_t k) const {
  Polynomial result = Polynomial::constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1)
      result = result * base;
    if (k >>= 1)
      base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial> &images,
                                  RingPtr target) const {
  if (images.size() != ring_->nvars())
    fail(ErrorCategory::domain, "substitution must map every variable");
  for (const auto &img : images)
    check_same_ring(img.ring(), target);
  // Cache per-variable powers; exponents stay small at desk scale.
  std::vector<std::unordered_map<uint32_t, Polynomial>> powers(images.size());
  auto var_power = [&](size_t i, uint32_t k) -> const Polynomial & {
    auto it = powers[i].find(k);
    if (it == powers[i].end())
      it = powers[i].emplace(k, images[i].pow(k)).first;
    return it->second;
  };
  Polynomial result(target);
  for (const auto &[e, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0)
        term = term * var_power(i, e[i]);
    result = result + term;
  }
  return result;
}

Polynomial Polynomial::translate(const std::vector<int64_t> &point) const {
  if (point.size() != ring_->nvars())
    fail(ErrorCategory::domain, "translation point length mismatch");
  std::vector<Polynomial> images;
  images.reserve(point.size());
  for (size_t i = 0; i < point.size(); ++i) {
    Polynomial img = Polynomial::variable(ring_, i);
    if (fp::reduce(point[i], ring_->p()) != 0)
      img = img + Polynomial::constant(ring_, point[i]);
    images.push_back(std::move(img));
  }
  return substitute(images, ring_);
}

Polynomial Polynomial::divide_exact_by_monomial(const ExpVec &m) const {
  Polynomial r(ring_);
  for (const auto &[e, c] : terms_) {
    if (!exp_divides(m, e))
      fail(ErrorCategory::domain,
           "term " + Polynomial::monomial(ring_, e, c).to_string() +
               " not divisible by the requested monomial");
    r.add_term(exp_sub(e, m), c);
  }
  return r;
}

Polynomial Polynomial::multiply_by_monomial(const ExpVec &m) const {
  Polynomial r(ring_);
  for (const auto &[e, c] : terms_)
    r.add_term(exp_add(e, m), c);
  return r;
}

Order Polynomial::origin_order() const {
  if (terms_.empty())
    return kOrderInfinity;
  // grlex: the first term has minimal total degree
  return total_degree(terms_.begin()->first);
}

Order Polynomial::subset_order(const std::vector<size_t> &subset) const {
  if (terms_.empty())
    return kOrderInfinity;
  Order best = kOrderInfinity;
  for (const auto &[e, c] : terms_) {
    uint64_t d = 0;
    for (size_t i : subset)
      d += e.at(i);
    if (d < best)
      best = d;
  }
  return best;
}

uint64_t Polynomial::degree() const {
  if (terms_.empty())
    return 0;
  return total_degree(terms_.rbegin()->first);
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  // Print highest terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    if (!first)
      out << " + ";
    first = false;
    bool constant_term = total_degree(e) == 0;
    bool printed = false;
    if (c != 1 || constant_term) {
      out << c;
      printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (printed)
        out << "*";
      out << ring_->var(i);
      if (e[i] > 1)
        out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

uint64_t q_power(int64_t p, uint32_t e) {
  if (e < 1)
    fail(ErrorCategory::domain, "q-expansion requires e >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (q > (uint64_t(1) << 40) / uint64_t(p))
      fail(ErrorCategory::domain, "q = p^e overflows the supported range");
    q *= uint64_t(p);
  }
  return q;
}

Polynomial QExpansion::reassemble() const {
  Polynomial sum(ring);
  for (const auto &[alpha, coeff] : buckets) {
    // (c_alpha)^q: Frobenius is the identity on F_p, so coefficients are
    // fixed and only exponents scale.
    Polynomial part(ring);
    for (const auto &[e, c] : coeff.terms()) {
      ExpVec scaled(e.size());
      for (size_t i = 0; i < e.size(); ++i) {
        uint64_t v = uint64_t(e[i]) * q;
        if (v > std::numeric_limits<uint32_t>::max())
          fail(ErrorCategory::domain, "exponent overflow");
        scaled[i] = static_cast<uint32_t>(v);
      }
      part.add_term(scaled, c);
    }
    sum = sum + part.multiply_by_monomial(alpha);
  }
  return sum;
}

const Polynomial *QExpansion::trivial_part() const {
  auto it = buckets.find(ExpVec(ring->nvars(), 0));
  return it == buckets.end() ? nullptr : &it->second;
}

QExpansion q_expand(const Polynomial &f, uint32_t e) {
  const RingPtr &ring = f.ring();
  uint64_t q = q_power(ring->p(), e);
  QExpansion exp;
  exp.ring = ring;
  exp.q = q;
  for (const auto &[ev, c] : f.terms()) {
    ExpVec alpha(ev.size()), mu(ev.size());
    for (size_t i = 0; i < ev.size(); ++i) {
      alpha[i] = static_cast<uint32_t>(ev[i] % q);
      mu[i] = static_cast<uint32_t>(ev[i] / q);
    }
    auto [it, inserted] =
        exp.buckets.emplace(alpha, Polynomial::zero(ring));
    // q-th root of c is c itself on the prime field.
    it->second.add_term(mu, c);
  }
  // drop buckets that cancelled to zero
  for (auto it = exp.buckets.begin(); it != exp.buckets.end();) {
    if (it->second.is_zero())
      it = exp.buckets.erase(it);
    else
      ++it;
  }
  return exp;
}

std::pair<Polynomial, bool> strip_q_power(const Polynomial &f, uint32_t e) {
  uint64_t q = q_power(f.ring()->p(), e);
  // The trivial bucket consists exactly of the terms with every exponent
  // divisible by q; removing them subtracts (c_0)^q.
  Polynomial rest(f.ring());
  for (const auto &[ev, c] : f.terms()) {
    bool all_divisible = true;
    for (uint32_t x : ev)
      if (x % q != 0) {
        all_divisible = false;
        break;
      }
    if (!all_divisible)
      rest.add_term(ev, c);
  }
  return {rest, rest.is_zero()};
}

} // namespace qres
