#include <doctest.h>

#include <random>

#include "chromaglue/qpoly.hpp"

using namespace chromaglue;

namespace {

QPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Int> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

QPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), coeff(-9, 9);
  std::vector<Int> v(deg(rng) + 1);
  for (Int& c : v) c = coeff(rng);
  return QPoly(std::move(v));
}

}  // namespace

TEST_CASE("q_integer") {
  CHECK(q_integer(0) == QPoly());
  CHECK(q_integer(1) == QPoly(1));
  CHECK(q_integer(3) == poly({1, 1, 1}));
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0) == QPoly(1));
  CHECK(q_factorial(2) == poly({1, 1}));
  // expand (1+q)(1+q+q^2)
  CHECK(q_factorial(3) == poly({1, 2, 2, 1}));
}

TEST_CASE("q_integer splitting identity") {
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; b <= 20; ++b)
      CHECK(q_integer(a + b) == q_integer(a) + QPoly::monomial(1, a) * q_integer(b));
}

TEST_CASE("eval of q_factorial at 1 is the factorial") {
  Int expect = 1;
  for (int k = 0; k <= 10; ++k) {
    if (k > 0) expect *= k;
    CHECK(QRat(q_factorial(k)).eval_q1() == Rational(expect));
  }
}

TEST_CASE("qrat_reduce") {
  QRat a = qrat_reduce(QPoly::monomial(1, 1) * q_integer(2), q_integer(3));
  CHECK(a.num() == poly({0, 1, 1}));
  CHECK(a.den() == poly({1, 1, 1}));

  QRat b = qrat_reduce(poly({0, 1, 1}), poly({1, 1}));
  CHECK(b.num() == poly({0, 1}));
  CHECK(b.den() == QPoly(1));
  CHECK(b.is_polynomial());

  QRat c = qrat_reduce(q_integer(4) * q_integer(2), q_integer(2));
  CHECK(c.num() == q_integer(4));
  CHECK(c.den() == QPoly(1));
}

TEST_CASE("qrat_reduce scale invariance and idempotence") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    if (b.is_zero() || c.is_zero()) continue;
    QRat lhs = qrat_reduce(a * c, b * c);
    QRat rhs = qrat_reduce(a, b);
    CHECK(lhs == rhs);
    // reduced: primitive parts coprime
    QPoly g = poly_gcd(lhs.num(), lhs.den());
    CHECK(g.degree() <= 0);
    CHECK(qrat_reduce(lhs.num(), lhs.den()) == lhs);
  }
}

TEST_CASE("eval_q1") {
  CHECK(QRat(q_integer(5)).eval_q1() == 5);
  QPoly p = QPoly::monomial(1, 2) * q_integer(2) * q_integer(2);
  CHECK(QRat(p).eval_q1() == 4);
  CHECK((QRat(q_integer(4)) / QRat(q_integer(3))).eval_q1() == Rational(4, 3));
  CHECK_THROWS_AS(QRat(QPoly(1), poly({-1, 1})).eval_q1(), invariant_error);
}

TEST_CASE("zero denominator rejected") {
  CHECK_THROWS_AS(qrat_reduce(QPoly(1), QPoly()), invariant_error);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == QPoly());
  }
}

TEST_CASE("exact division and gcd") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    QPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(div_exact(a * b, b) == a);
    QPoly g = poly_gcd(a * b, b);
    QPoly q;
    CHECK(try_div_exact(b, g, &q));
  }
  CHECK_FALSE(try_div_exact(poly({1, 0, 1}), poly({1, 1}), nullptr));
}

TEST_CASE("factor_as_qbrackets") {
  auto f = factor_as_qbrackets(poly({0, 1, 3, 4, 3, 1}));
  REQUIRE(f.has_value());
  CHECK(f->scalar == 1);
  CHECK(f->qpower == 1);
  CHECK(f->brackets == std::vector<int>{3, 2, 2});

  auto g = factor_as_qbrackets(poly({1, 1}));
  REQUIRE(g.has_value());
  CHECK(g->scalar == 1);
  CHECK(g->qpower == 0);
  CHECK(g->brackets == std::vector<int>{2});

  CHECK_FALSE(factor_as_qbrackets(poly({1, 1, 0, 1})).has_value());
}

TEST_CASE("text forms") {
  CHECK(to_string(q_factorial(3)) == "1+2q+2q^2+q^3");
  CHECK(to_string(QPoly()) == "0");
  CHECK(to_string(poly({-1, 0, 2})) == "-1+2q^2");
  CHECK(to_pretty_string(poly({0, 1, 3, 4, 3, 1})) == "q[3]_q[2]_q[2]_q");
  CHECK(to_pretty_string(QPoly(6)) == "6");
  CHECK(to_string(qrat_reduce(QPoly::monomial(1, 1) * q_integer(2), q_integer(3))) ==
        "(q+q^2)/(1+q+q^2)");
}
