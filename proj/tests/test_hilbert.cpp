#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gi/error.hpp"
#include "gi/hilbert.hpp"
#include "support.hpp"

using namespace gi;
using gi::test::P;
using gi::test::quotient;

namespace {

// Independent oracle: dim_k (S/I)_d = #monomials of degree d minus the rank
// of the span of {m * g} in degree d, by Gaussian elimination.
long truncated_dim(const Presentation& A, long deg) {
  const RingPtr& R = A.ring();
  const Field& K = R->field();
  std::vector<Monomial> mons;
  std::vector<std::int32_t> e(R->nvars(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == R->nvars()) {
      if (left == 0) mons.push_back(Monomial(std::span<const std::int32_t>(e)));
      return;
    }
    for (long k = 0; k * R->weights()[i] <= left; ++k) {
      e[i] = static_cast<std::int32_t>(k);
      rec(i + 1, left - k * R->weights()[i]);
    }
    e[i] = 0;
  };
  rec(0, deg);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    std::vector<int> key;
    for (std::size_t k = 0; k < mons[i].size(); ++k) key.push_back(mons[i][k]);
    index[key] = i;
  }
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : A.generators()) {
    long gd = g.degree();
    if (gd > deg) continue;
    // multipliers of degree deg - gd
    std::vector<Monomial> ms;
    std::vector<std::int32_t> f(R->nvars(), 0);
    std::function<void(std::size_t, long)> rec2 = [&](std::size_t i, long left) {
      if (i == R->nvars()) {
        if (left == 0) ms.push_back(Monomial(std::span<const std::int32_t>(f)));
        return;
      }
      for (long k = 0; k * R->weights()[i] <= left; ++k) {
        f[i] = static_cast<std::int32_t>(k);
        rec2(i + 1, left - k * R->weights()[i]);
      }
      f[i] = 0;
    };
    rec2(0, deg - gd);
    for (const auto& m : ms) {
      std::vector<Scalar> row(mons.size(), 0);
      Polynomial prod = g.mul_term(m, K.from_int(1));
      for (const auto& t : prod.terms()) {
        std::vector<int> key;
        for (std::size_t k = 0; k < t.mono.size(); ++k) key.push_back(t.mono[k]);
        row[index.at(key)] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < mons.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && Field::is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Scalar inv = K.inv(rows[rank][col]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || Field::is_zero(rows[r][col])) continue;
      Scalar f = K.mul(rows[r][col], inv);
      for (std::size_t k = col; k < mons.size(); ++k) rows[r][k] = K.sub(rows[r][k], K.mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return static_cast<long>(mons.size() - rank);
}

}  // namespace

TEST_CASE("monomial numerators") {
  std::vector<int> w{1, 1};
  CHECK(hilbert_numerator({Monomial({2, 0})}, w) == IntPoly{1, 0, -1});
  CHECK(hilbert_numerator({Monomial({2, 0}), Monomial({1, 1})}, w) == IntPoly{1, 0, -2, 1});
  CHECK(hilbert_numerator({}, w) == IntPoly{1});
  CHECK(hilbert_numerator({Monomial({0, 0})}, w).is_zero());
}

TEST_CASE("series of small algebras") {
  auto R = test::qring({"u", "v", "w"});
  auto hyp = quotient(R, {"v^3 - u^2*w"});
  auto hs = hilbert_series(hyp);
  CHECK(hs.numerator() == IntPoly{1, 0, 0, -1});
  CHECK(hs.dimension() == 2);
  CHECK(hs.multiplicity() == 3);
  CHECK(h_vector(hyp) == std::vector<long>{1, 1, 1});
  CHECK(a_invariant_fastpath(hyp, true) == 0);
  CHECK_THROWS_AS(a_invariant_fastpath(hyp, false), PreconditionError);

  auto cone = quotient(R, {"u*w - v^2"});
  CHECK(hilbert_series(cone).numerator() == IntPoly{1, 0, -1});
  CHECK(hilbert_series(cone).expansion(4) == std::vector<mpz_class>{1, 3, 5, 7, 9});
  CHECK(multiplicity(cone) == 2);
  CHECK(h_vector(cone) == std::vector<long>{1, 1});
  CHECK(hilbert_series(cone).to_string() == "(1 + t) / (1 - t)^2");

  auto S = Presentation::polynomial_ring(test::qring({"x", "y"}));
  CHECK(hilbert_series(S).numerator() == IntPoly{1});
  CHECK(krull_dimension(S) == 2);
  CHECK(multiplicity(S) == 1);
  CHECK(a_invariant_fastpath(S, true) == -2);
}

TEST_CASE("weighted series") {
  auto R = PolyRing::make(Field::rationals(), {"a", "b"}, {2, 2});
  auto S = Presentation::polynomial_ring(R);
  CHECK(a_invariant_fastpath(S, true) == -4);
  CHECK(krull_dimension(S) == 2);
  CHECK_THROWS_AS(multiplicity(S), UnsupportedError);
  auto W = PolyRing::make(Field::rationals(), {"x", "y", "z"}, {1, 2, 3});
  auto A = quotient(W, {"x*z - y^2"});
  CHECK(krull_dimension(A) == 2);
  CHECK(hilbert_series(A).expansion(8)[4] == truncated_dim(A, 4));
}

TEST_CASE("floor division toward minus infinity") {
  CHECK(floor_div(-3, 2) == -2);
  CHECK(floor_div(-2, 2) == -1);
  CHECK(floor_div(3, 2) == 1);
  CHECK(floor_div(0, 5) == 0);
  CHECK(floor_div(-1, 4) == -1);
}

TEST_CASE("series agrees under lex and degrevlex") {
  auto R = test::qring({"a", "b", "c", "d"});
  auto lexR = R->with_order(MonomialOrder::lex());
  const char* g[] = {"a*c - b^2", "b*d - c^2", "a*d - b*c"};
  auto A = quotient(R, {g[0], g[1], g[2]});
  auto B = quotient(lexR, {g[0], g[1], g[2]});
  CHECK(hilbert_series(A).numerator() == hilbert_series(B).numerator());
  CHECK(hilbert_series(A).numerator() == IntPoly{1, 0, -3, 2});
}

TEST_CASE("truncated series oracle on random ideals (property)") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 20; ++k) {
    auto K = k % 2 ? Field::prime(7) : Field::rationals();
    auto R = PolyRing::standard(K, {"x", "y", "z"});
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2 + k % 2; ++i) {
      Polynomial f = test::random_poly(R, rng, 3, 3, true);
      if (!f.is_zero() && f.degree() > 0) gens.push_back(f);
    }
    Presentation A(R, gens);
    auto series = hilbert_series(A).expansion(8);
    for (long d = 0; d <= 8; ++d) CHECK(series[d] == truncated_dim(A, d));
  }
}
