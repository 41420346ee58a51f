#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gi/error.hpp"
#include "gi/resolution.hpp"
#include "support.hpp"

using namespace gi;
using gi::test::P;
using gi::test::quotient;

namespace {

// Consecutive maps compose to zero and entries have no constant terms.
void check_complex(const FreeResolution& res) {
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    for (const auto& col : res.maps[i])
      for (const auto& t : col.terms()) CHECK(!t.mono.is_one());
    if (i == 0) continue;
    for (const auto& col : res.maps[i]) {
      Vector img(res.modules[i - 1]);
      for (const auto& t : col.terms())
        img = img + res.maps[i - 1][t.comp].mul_term(t.mono, t.coeff);
      CHECK(img.is_zero());
    }
  }
}

}  // namespace

TEST_CASE("syzygies") {
  auto R = test::qring({"x", "y"});
  auto F = rank_one(R);
  auto s = syzygy_module(F, {as_vector(F, P(R, "x")), as_vector(F, P(R, "y"))});
  REQUIRE(s.size() == 1);
  CHECK(s[0].components()[0] == P(R, "y").scale(s[0].components()[0].lead_coeff()));
  CHECK(syzygy_module(F, {as_vector(F, P(R, "x^2 + y^2"))}).empty());
}

TEST_CASE("resolutions and betti tables") {
  auto R3 = test::qring({"u", "v", "w"});
  auto hyp = quotient(R3, {"v^3 - u^2*w"});
  auto res = minimal_free_resolution(hyp);
  check_complex(res);
  auto b = res.betti();
  CHECK(b(0, 0) == 1);
  CHECK(b(1, 3) == 1);
  CHECK(b.projective_dimension() == 1);
  CHECK(depth(hyp) == 2);
  CHECK(is_cohen_macaulay(hyp));
  CHECK(regularity(hyp) == 2);

  auto R4 = test::qring({"u", "v", "w", "z"});
  auto tc = quotient(R4, {"u*w - v^2", "v*z - w^2", "u*z - v*w"});
  auto rt = minimal_free_resolution(tc);
  check_complex(rt);
  CHECK(rt.betti()(1, 2) == 3);
  CHECK(rt.betti()(2, 3) == 2);
  CHECK(rt.betti().projective_dimension() == 2);
  CHECK(regularity(tc) == 1);
  CHECK(is_cohen_macaulay(tc));
  CHECK(rt.betti().alternating_sum() == hilbert_series(tc).numerator());

  auto R2 = test::qring({"x", "y"});
  auto emb = quotient(R2, {"x^2", "x*y"}, false);
  auto re = minimal_free_resolution(emb);
  check_complex(re);
  CHECK(re.betti()(1, 2) == 2);
  CHECK(re.betti()(2, 3) == 1);
  CHECK(depth(emb) == 0);
  CHECK(!is_cohen_macaulay(emb));

  auto S = Presentation::polynomial_ring(R2);
  CHECK(minimal_free_resolution(S).length() == 0);
  CHECK(depth(S) == 2);
  CHECK(is_cohen_macaulay(S));
  CHECK(regularity(S) == 0);
}

TEST_CASE("canonical module and a-invariant") {
  auto R2 = test::qring({"x", "y"});
  auto S = Presentation::polynomial_ring(R2);
  auto w = canonical_module(S);
  CHECK(w.generator_degrees == std::vector<long>{2});
  CHECK(a_invariant(S) == -2);

  auto R3 = test::qring({"u", "v", "w"});
  auto hyp = quotient(R3, {"v^3 - u^2*w"});
  auto wh = canonical_module(hyp);
  CHECK(wh.generator_degrees == std::vector<long>{0});
  REQUIRE(wh.relations.size() == 1);
  CHECK(a_invariant(hyp) == 0);
  CHECK(a_invariant(quotient(R3, {"u*w - v^2"})) == -1);

  auto R4 = test::qring({"a", "b", "c", "d"});
  auto tc = quotient(R4, {"a*c - b^2", "b*d - c^2", "a*d - b*c"});
  auto wt = canonical_module(tc);
  CHECK(wt.generator_degrees.size() == 2);
  CHECK(a_invariant(tc) == -1);

  auto W = PolyRing::make(Field::rationals(), {"a", "b"}, {2, 2});
  CHECK(a_invariant(Presentation::polynomial_ring(W)) == -4);
}

TEST_CASE("embedding dimension and singular locus") {
  auto R3 = test::qring({"u", "v", "w"});
  CHECK(embedding_dimension(quotient(R3, {"u*w - v^2"})) == 3);
  CHECK(embedding_dimension(quotient(R3, {"w - u - v", "u^2"}, false)) == 2);
  auto R4 = test::qring({"a", "b", "c", "d"});
  auto tc = quotient(R4, {"a*c - b^2", "b*d - c^2", "a*d - b*c"});
  CHECK(embedding_dimension(tc) == 4);

  auto cone = quotient(R3, {"u*w - v^2"});
  CHECK(singular_locus_dimension(cone) == 0);
  CHECK(is_r1(cone));
  auto hyp = quotient(R3, {"v^3 - u^2*w"});
  CHECK(singular_locus_dimension(hyp) == 1);
  CHECK(!is_r1(hyp));
  auto S = Presentation::polynomial_ring(R3);
  CHECK(singular_locus_dimension(S) == -1);
  CHECK(is_r1(S));
  CHECK(singular_locus_dimension(tc) == 0);
  CHECK(is_r1(tc));

  auto R2 = PolyRing::standard(Field::prime(2), {"x", "y", "z"});
  auto q2 = quotient(R2, {"z^2 - x*y"});
  CHECK(singular_locus_dimension(q2) == 0);
  CHECK(is_r1(q2));

  // generators of different degrees: cone over a smooth curve
  auto ci = quotient(R4, {"a^2 + b^2 + c^2 + d^2", "a^3 + b^3 + c^3 + d^3"});
  CHECK(singular_locus_dimension(ci) == 0);
  CHECK(is_r1(ci));
  // a weighted hypersurface singular along a line
  auto W = PolyRing::make(Field::rationals(), {"x", "y", "z"}, {1, 2, 3});
  auto wh = Presentation(W, {P(W, "y^3 - z^2")});
  CHECK(singular_locus_dimension(wh) == 1);
  CHECK(!is_r1(wh));
}

TEST_CASE("rational normal curves have Eagon-Northcott betti numbers") {
  for (long n : {3, 4, 5, 6}) {
    // ideal of 2x2 minors of the 2 x n Hankel matrix of z_0..z_n
    std::vector<std::string> names;
    for (long i = 0; i <= n; ++i) names.push_back("z" + std::to_string(i));
    auto R = test::qring(names);
    std::vector<Polynomial> gens;
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        gens.push_back(P(R, names[i] + "*" + names[j + 1] + " - " + names[i + 1] + "*" + names[j]));
    Presentation A(R, gens, true);
    auto res = minimal_free_resolution(A);
    check_complex(res);
    auto b = res.betti();
    long binom = n;  // C(n, i + 1) for i = 0
    for (long i = 1; i < n; ++i) {
      binom = binom * (n - i) / (i + 1);
      CHECK(b(i, i + 1) == i * binom);
    }
    CHECK(b.projective_dimension() == n - 1);
    CHECK(b.alternating_sum() == hilbert_series(A).numerator());
  }
}

TEST_CASE("property: resolutions of random ideals are minimal complexes matching the Hilbert series") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    auto R = test::qring(trial % 2 ? std::vector<std::string>{"x", "y", "z"}
                                   : std::vector<std::string>{"x", "y", "z", "w"});
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      Polynomial f = test::random_poly(R, rng, 3, 4, true);
      if (!f.is_zero() && f.degree() > 0) gens.push_back(f);
    }
    Presentation A(R, gens);
    auto res = minimal_free_resolution(A);
    check_complex(res);
    CHECK(res.betti().alternating_sum() == hilbert_series(A).numerator());
  }
}

TEST_CASE("parameter systems") {
  std::mt19937_64 rng(1);
  auto R = PolyRing::standard(Field::prime(2), {"x", "y", "z"});
  auto q = quotient(R, {"z^2 - x*y"});
  auto th = parameter_system(q, rng);
  REQUIRE(th);
  CHECK(th->size() == 2);
}
