#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gi/error.hpp"
#include "gi/toric.hpp"

#include <algorithm>
#include <random>

using namespace gi;

namespace {

ExponentLattice L(std::vector<std::vector<long>> g) { return lattice_of_monomial_algebra(g); }

mpz_class det2(const IntMatrix& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

}  // namespace

TEST_CASE("lattices of monomial algebras") {
  auto v = L({{2, 0}, {1, 1}, {0, 2}});
  REQUIRE(v.rank() == 2);
  CHECK(v.basis() == IntMatrix{{1, 1}, {0, 2}});
  CHECK(L({{1, 0}, {0, 1}}).basis() == IntMatrix{{1, 0}, {0, 1}});
  // same lattice as the full cubic Veronese, of index 3 in Z^2
  auto pinch = L({{3, 0}, {2, 1}, {0, 3}});
  CHECK(pinch == L({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  CHECK(extension_index(pinch, L({{1, 0}, {0, 1}})) == 3);
  CHECK(v.contains(IntVector{3, 1}));
  CHECK(!v.contains(IntVector{1, 0}));
  CHECK_THROWS_AS(L({{0, 0}}), InputError);
}

TEST_CASE("extension index") {
  auto Z2 = L({{1, 0}, {0, 1}});
  auto twoZ2 = L({{2, 0}, {0, 2}});
  CHECK(extension_index(twoZ2, Z2) == 4);
  CHECK(extension_index(L({{2, 0}, {1, 1}, {0, 2}}), Z2) == 2);
  CHECK(extension_index(Z2, Z2) == 1);
  CHECK_THROWS_AS(extension_index(Z2, twoZ2), InputError);
  CHECK_THROWS_AS(extension_index(L({{1, 0}}), Z2), InputError);
}

TEST_CASE("inseparable degree") {
  auto Z2 = L({{1, 0}, {0, 1}});
  auto twoZ2 = L({{2, 0}, {0, 2}});
  CHECK(inseparable_degree(twoZ2, Z2, 2) == 4);
  CHECK(inseparable_degree(twoZ2, Z2, 3) == 1);
  // z = sqrt(xy) in doubled coordinates
  auto quad = L({{2, 0}, {0, 2}, {1, 1}});
  CHECK(extension_index(twoZ2, quad) == 2);
  CHECK(inseparable_degree(twoZ2, quad, 2) == 2);
  CHECK(inseparable_degree(twoZ2, quad, 3) == 1);
  // rank one: k(t^6) in k(t), char 2 gives degree 2 inseparable, 3 separable
  auto t6 = L({{6}});
  auto t1 = L({{1}});
  CHECK(extension_index(t6, t1) == 6);
  CHECK(inseparable_degree(t6, t1, 2) == 2);
  CHECK(inseparable_degree(t6, t1, 3) == 3);
  CHECK(inseparable_degree(L({{8}}), t1, 2) == 8);
}

TEST_CASE("smith and hermite forms agree with determinants (property)") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int k = 0; k < 200; ++k) {
    std::vector<std::vector<long>> g = {{d(rng), d(rng)}, {d(rng), d(rng)}};
    mpz_class det = mpz_class(g[0][0] * g[1][1] - g[0][1] * g[1][0]);
    if (det == 0) continue;
    auto LA = L(g);
    auto Z2 = L({{1, 0}, {0, 1}});
    CHECK(extension_index(LA, Z2) == abs(det));
    CHECK(abs(det2(LA.basis())) == abs(det));
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      mpz_class ins = inseparable_degree(LA, Z2, p);
      mpz_class idx = extension_index(LA, Z2);
      CHECK(idx % ins == 0);
      mpz_class rest = idx / ins;
      CHECK(rest % p != 0);
      mpz_class r = ins;
      while (r % p == 0) r /= p;
      CHECK(r == 1);
    }
    CHECK(inseparable_degree(LA, LA, 2) == 1);
  }
}

TEST_CASE("inseparable degree is the p-part of the index in ranks 1 and 3 (property)") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-6, 6);
  auto p_part = [](mpz_class n, unsigned long p) {
    mpz_class r = 1;
    while (n % p == 0) {
      n /= p;
      r *= p;
    }
    return r;
  };
  for (int k = 0; k < 100; ++k) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    auto LA = L({{a}, {b}}), Z1 = L({{1}});
    for (unsigned long p : {2ul, 3ul})
      CHECK(inseparable_degree(LA, Z1, p) == p_part(extension_index(LA, Z1), p));
  }
  const auto Z3 = L({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  int tried = 0;
  for (int k = 0; k < 200; ++k) {
    std::vector<std::vector<long>> g(3, std::vector<long>(3));
    for (auto& row : g)
      for (auto& x : row) x = d(rng);
    if (std::any_of(g.begin(), g.end(), [](const auto& row) { return row == std::vector<long>(3, 0); })) continue;
    auto LA = L(g);
    if (LA.rank() != 3) continue;
    ++tried;
    // an overlattice strictly between L_A and Z^3 as well
    auto LB = LA + L({{1, 1, 0}});
    if (LB.rank() != 3) continue;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      CHECK(inseparable_degree(LA, Z3, p) == p_part(extension_index(LA, Z3), p));
      CHECK(inseparable_degree(LA, LB, p) == p_part(extension_index(LA, LB), p));
    }
  }
  CHECK(tried > 100);
}
