#include <doctest.h>

#include "helpers.hpp"
#include "qres/field.hpp"
#include "qres/poly.hpp"

using namespace qres;
using namespace qres::test;

TEST_SUITE_BEGIN("ffpoly");

TEST_CASE("field arithmetic basics") {
  CHECK(fp::reduce(-1, 3) == 2);
  CHECK(fp::add(2, 2, 3) == 1);
  CHECK(fp::mul(2, 2, 3) == 1);
  CHECK(fp::inv(2, 5) == 3);
  for (int64_t a = 1; a < 7; ++a)
    CHECK(fp::mul(a, fp::inv(a, 7), 7) == 1);
  CHECK(fp::is_prime(2));
  CHECK(fp::is_prime(31));
  CHECK(!fp::is_prime(1));
  CHECK(!fp::is_prime(9));
  CHECK_THROWS_AS(fp::check_prime(6), Error);
}

TEST_CASE("frobenius fixes the prime field") {
  for (int64_t p : {2, 3, 5, 7})
    for (int64_t a = 0; a < p; ++a)
      CHECK(fp::pow(a, uint64_t(p), p) == a);
}

TEST_CASE("product expansion over F_3") {
  auto r = ring2();
  CHECK(P(r, "x1 + x2") * P(r, "x1 + 2*x2") == P(r, "x1^2 + 2*x2^2"));
}

TEST_CASE("multiplicative identity and annihilator") {
  auto r = ring2();
  Polynomial f = P(r, "x1^4*x2 + 2*x1^3");
  CHECK(f * Polynomial::constant(r, 1) == f);
  CHECK((f * Polynomial::zero(r)).is_zero());
}

TEST_CASE("product degree is additive") {
  std::mt19937_64 rng(11);
  auto r = ring3();
  for (int t = 0; t < 50; ++t) {
    Polynomial f = random_poly(r, rng, 5, 3, true);
    Polynomial g = random_poly(r, rng, 5, 3, true);
    if ((f * g).is_zero())
      continue; // cancellation cannot happen in a domain; guard anyway
    CHECK((f * g).degree() == f.degree() + g.degree());
  }
}

TEST_CASE("substitution: blowup chart of the intro curve") {
  auto r = ring2();
  Polynomial f = P(r, "x1*x2*(x2 - 2*x1 + x1^3)");
  std::vector<Polynomial> images = {P(r, "x1"), P(r, "x1*x2")};
  CHECK(f.substitute(images, r) == P(r, "x1^3*x2*(x2 - 2 + x1^2)"));
}

TEST_CASE("substitution identity and kill-a-variable") {
  auto r = ring2();
  Polynomial f = P(r, "x1^4*x2 + 2*x1^3 + x2^2");
  std::vector<Polynomial> id = {P(r, "x1"), P(r, "x2")};
  CHECK(f.substitute(id, r) == f);
  std::vector<Polynomial> kill = {Polynomial::zero(r), P(r, "x2")};
  CHECK(P(r, "x1*x2").substitute(kill, r).is_zero());
}

TEST_CASE("translation moves a rational point to the origin") {
  auto r = ring2();
  Polynomial f = P(r, "x1^3*x2");
  for (int64_t lam = 0; lam < 3; ++lam) {
    Polynomial g = f.translate({0, lam});
    Polynomial expected = P(r, "x1^3*x2") +
                          P(r, "x1^3").scaled(lam);
    CHECK(g == expected);
  }
  CHECK(f.translate({0, 0}) == f);
  Polynomial c = Polynomial::constant(r, 2);
  CHECK(c.translate({1, 2}) == c);
}

TEST_CASE("translation is inverted by the negated point") {
  std::mt19937_64 rng(12);
  auto r = ring3(5);
  for (int t = 0; t < 30; ++t) {
    Polynomial f = random_poly(r, rng);
    std::vector<int64_t> pt = {int64_t(rng() % 5), int64_t(rng() % 5),
                               int64_t(rng() % 5)};
    std::vector<int64_t> neg = {-pt[0], -pt[1], -pt[2]};
    CHECK(f.translate(pt).translate(neg) == f);
  }
}

TEST_CASE("expansion buckets exponents mod q") {
  auto r = ring2();
  QExpansion exp = q_expand(P(r, "x1^4*x2 + 2*x1^3 + x2^2"), 1);
  REQUIRE(exp.buckets.size() == 3);
  CHECK(exp.buckets.at(E({1, 1})) == P(r, "x1"));
  CHECK(exp.buckets.at(E({0, 0})) == P(r, "2*x1"));
  CHECK(exp.buckets.at(E({0, 2})) == Polynomial::constant(r, 1));
}

TEST_CASE("pure power has only the trivial bucket") {
  auto r = ring2();
  QExpansion exp = q_expand(P(r, "x1^3"), 1);
  REQUIRE(exp.buckets.size() == 1);
  REQUIRE(exp.trivial_part() != nullptr);
  CHECK(*exp.trivial_part() == P(r, "x1"));
  CHECK(q_expand(Polynomial::zero(r), 1).buckets.empty());
}

TEST_CASE("stripping drops exactly the trivial bucket") {
  auto r = ring2();
  auto [plus, is_power] = strip_q_power(P(r, "x1^4*x2 + 2*x1^3 + x2^2"), 1);
  CHECK(plus == P(r, "x1^4*x2 + x2^2"));
  CHECK(!is_power);

  auto [plus2, is_power2] = strip_q_power(P(r, "x1^3 + 2"), 1);
  CHECK(plus2.is_zero());
  CHECK(is_power2); // (x1 + 2)^3 = x1^3 + 2 over F_3

  auto [plus3, is_power3] = strip_q_power(Polynomial::zero(r), 1);
  CHECK(plus3.is_zero());
  CHECK(is_power3);
}

TEST_CASE("expansion roundtrip on random polynomials") {
  std::mt19937_64 rng(13);
  for (int64_t p : {2, 3, 5}) {
    for (uint32_t e : {1u, 2u}) {
      auto r = make_ring(p, {"x1", "x2", "x3", "x4"});
      for (int t = 0; t < 40; ++t) {
        Polynomial f = random_poly(r, rng, 12, 6);
        CHECK(q_expand(f, e).reassemble() == f);
      }
    }
  }
}

TEST_CASE("distinct buckets have disjoint supports") {
  std::mt19937_64 rng(14);
  auto r = ring3();
  for (int t = 0; t < 30; ++t) {
    Polynomial f = random_poly(r, rng, 10, 6);
    QExpansion exp = q_expand(f, 1);
    std::map<ExpVec, int, GrlexLess> seen;
    for (const auto &[alpha, c] : exp.buckets) {
      Polynomial part(r);
      for (const auto &[mu, coeff] : c.terms()) {
        ExpVec scaled(mu.size());
        for (size_t i = 0; i < mu.size(); ++i)
          scaled[i] = mu[i] * uint32_t(exp.q);
        part.add_term(exp_add(scaled, alpha), coeff);
      }
      for (const auto &[ev, coeff] : part.terms())
        CHECK(++seen[ev] == 1);
    }
  }
}

TEST_CASE("strip is idempotent") {
  std::mt19937_64 rng(15);
  auto r = ring3();
  for (int t = 0; t < 40; ++t) {
    Polynomial f = random_poly(r, rng);
    auto [plus, ignored] = strip_q_power(f, 1);
    auto [plus2, flag2] = strip_q_power(plus, 1);
    CHECK(plus2 == plus);
    CHECK(flag2 == plus.is_zero());
  }
}

TEST_CASE("power detection agrees with exponent divisibility") {
  std::mt19937_64 rng(16);
  for (int64_t p : {2, 3, 5}) {
    auto r = make_ring(p, {"x1", "x2", "x3"});
    for (int t = 0; t < 40; ++t) {
      Polynomial f = random_poly(r, rng, 9, 4);
      auto [plus, is_power] = strip_q_power(f, 1);
      bool all_divisible = true;
      for (const auto &[ev, c] : f.terms())
        for (uint32_t x : ev)
          if (x % uint64_t(p) != 0)
            all_divisible = false;
      CHECK(is_power == all_divisible);
    }
  }
}

TEST_CASE("substitution and translation are ring maps") {
  std::mt19937_64 rng(17);
  auto r = ring2(5);
  for (int t = 0; t < 30; ++t) {
    Polynomial f = random_poly(r, rng, 5, 3);
    Polynomial g = random_poly(r, rng, 5, 3);
    std::vector<Polynomial> images = {random_poly(r, rng, 3, 2),
                                      random_poly(r, rng, 3, 2)};
    CHECK((f * g).substitute(images, r) ==
          f.substitute(images, r) * g.substitute(images, r));
    CHECK((f + g).substitute(images, r) ==
          f.substitute(images, r) + g.substitute(images, r));
    std::vector<int64_t> pt = {int64_t(rng() % 5), int64_t(rng() % 5)};
    CHECK((f * g).translate(pt) == f.translate(pt) * g.translate(pt));
  }
}

TEST_CASE("checked exponent arithmetic") {
  CHECK_THROWS_AS(exp_sub(E({1, 0}), E({0, 1})), Error);
  CHECK(exp_add(E({1, 2}), E({3, 4})) == E({4, 6}));
  CHECK_THROWS_AS(exp_add(E({4294967295u}), E({1})), Error);
}

TEST_SUITE_END();
