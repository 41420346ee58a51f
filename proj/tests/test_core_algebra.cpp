#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gi/error.hpp"
#include "support.hpp"

using namespace gi;
using gi::test::P;

TEST_CASE("field arithmetic") {
  Field Q = Field::rationals();
  CHECK(Q.add(Q.from_int(1), Q.from_fraction(1, 2)) == mpq_class(3, 2));
  CHECK(Q.inv(Q.from_int(-4)) == mpq_class(-1, 4));
  CHECK_THROWS_AS(Q.inv(Q.from_int(0)), Error);

  Field F7 = Field::prime(7);
  CHECK(F7.from_int(-1) == 6);
  CHECK(F7.mul(F7.from_int(3), F7.from_int(5)) == 1);
  CHECK(F7.inv(F7.from_int(3)) == 5);
  CHECK(F7.from_fraction(1, 2) == 4);
  CHECK_THROWS_AS(Field::prime(8), InputError);
  CHECK_THROWS_AS(Field::prime(1), InputError);
  CHECK(Field::prime(2147483647).characteristic() == 2147483647u);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (Field K : {Field::rationals(), Field::prime(101), Field::prime(2)}) {
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int k = 0; k < 200; ++k) {
      Scalar a = K.from_fraction(d(rng), 1), b = K.from_fraction(d(rng), 1), c = K.from_int(d(rng));
      CHECK(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
      CHECK(K.add(a, K.neg(a)) == 0);
      if (!Field::is_zero(a)) CHECK(K.mul(a, K.inv(a)) == 1);
    }
  }
}

TEST_CASE("monomial orders") {
  Monomial a({2, 0, 1}), b({1, 2, 0}), c({0, 0, 3});
  auto lex = MonomialOrder::lex();
  auto grevlex = MonomialOrder::degrevlex();
  CHECK(lex.compare(a, b) > 0);
  CHECK(lex.compare(b, c) > 0);
  // degree 3 all; revlex: smaller last exponent wins
  CHECK(grevlex.compare(b, a) > 0);
  CHECK(grevlex.compare(a, c) > 0);
  auto w = MonomialOrder::weighted_degrevlex({1, 1, 3});
  CHECK(w.compare(c, a) > 0);
  auto e = MonomialOrder::elimination(1);
  CHECK(e.compare(Monomial({1, 0, 0}), Monomial({0, 5, 5})) > 0);
  CHECK_THROWS_AS(lex.compare(Monomial({1, 0}), a), InputError);
}

TEST_CASE("monomial order axioms (property)") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 4);
  auto rnd = [&] { return Monomial({e(rng), e(rng), e(rng), e(rng)}); };
  std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                                       MonomialOrder::weighted_degrevlex({1, 2, 3, 1}),
                                       MonomialOrder::elimination(2), MonomialOrder::elimination(1, {2, 1, 1, 3})};
  for (const auto& o : orders) {
    for (int k = 0; k < 300; ++k) {
      Monomial a = rnd(), b = rnd(), c = rnd();
      auto ab = o.compare(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK(o.compare(b, a) == (0 <=> ab));
      if (ab > 0) CHECK(o.compare(a * c, b * c) > 0);
      if (ab > 0 && o.compare(b, c) > 0) CHECK(o.compare(a, c) > 0);
      CHECK(o.compare(a * c, a) >= 0);
    }
  }
}

TEST_CASE("polynomial arithmetic and printing") {
  auto R = test::qring({"x", "y", "z"});
  Polynomial f = P(R, "(x+y)^2");
  CHECK(f == P(R, "x^2 + 2x y + y^2"));
  CHECK(f.to_string() == "x^2 + 2*x*y + y^2");
  CHECK((f - f).is_zero());
  CHECK(P(R, "x/2 - 1/3").to_string() == "1/2*x - 1/3");
  CHECK(P(R, "x^2 y - y z").is_homogeneous() == false);
  CHECK(P(R, "x^2 y - y z^2").degree() == 3);
  CHECK(P(R, "x^3 + x y").derivative(0) == P(R, "3x^2 + y"));
  CHECK_THROWS_AS(P(R, "x + w"), InputError);
  CHECK_THROWS_AS(P(R, "x / y"), InputError);
  CHECK_THROWS_AS(P(R, "(x + y"), InputError);
}

TEST_CASE("polynomial ring axioms (property)") {
  std::mt19937_64 rng(3);
  for (Field K : {Field::rationals(), Field::prime(5)}) {
    auto R = PolyRing::standard(K, {"a", "b", "c"});
    for (int k = 0; k < 60; ++k) {
      auto f = test::random_poly(R, rng, 3, 4), g = test::random_poly(R, rng, 3, 4),
           h = test::random_poly(R, rng, 2, 3);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * g == g * f);
      CHECK(f + g - g == f);
    }
  }
}

TEST_CASE("frobenius is additive in characteristic p (property)") {
  std::mt19937_64 rng(5);
  for (unsigned p : {2u, 3u, 5u}) {
    auto R = PolyRing::standard(Field::prime(p), {"a", "b"});
    for (int k = 0; k < 30; ++k) {
      auto f = test::random_poly(R, rng, 2, 3), g = test::random_poly(R, rng, 2, 3);
      CHECK((f + g).pow(p) == f.pow(p) + g.pow(p));
    }
  }
}

TEST_CASE("substitution") {
  auto R = test::qring({"u", "v"});
  auto S = test::qring({"x", "y"});
  Polynomial f = P(R, "u^2 - v");
  Polynomial g = substitute(f, {P(S, "x + y"), P(S, "2x y")}, S);
  CHECK(g == P(S, "x^2 + y^2"));
}

TEST_CASE("weighted rings") {
  auto R = PolyRing::make(Field::rationals(), {"x", "y"}, {1, 2});
  CHECK(!R->is_standard_graded());
  CHECK(P(R, "x^2 + y").is_homogeneous());
  CHECK(P(R, "x^2 + y").degree() == 2);
  CHECK(R->weight_sum() == 3);
  CHECK_THROWS_AS(PolyRing::make(Field::rationals(), {"x", "y"}, {1, 0}), InputError);
  CHECK_THROWS_AS(PolyRing::make(Field::rationals(), {"x", "x"}, {1, 1}), InputError);
}
