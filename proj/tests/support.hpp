#pragma once

#include "gi/groebner.hpp"
#include "gi/parse.hpp"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace gi::test {

inline RingPtr qring(std::vector<std::string> names) {
  return PolyRing::standard(Field::rationals(), std::move(names));
}

inline Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }

inline Ideal I(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(parse_polynomial(R, g));
  return Ideal(R, std::move(v));
}

/// Random polynomial with small coefficients, total degree <= maxdeg.
inline Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int maxdeg, int nterms,
                              bool homogeneous = false) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> var(0, R->nvars() - 1);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::vector<Term> ts;
  int hd = deg(rng);
  for (int k = 0; k < nterms; ++k) {
    Monomial m(R->nvars());
    int d = homogeneous ? hd : deg(rng);
    int total = 0;
    while (total < d) {
      std::size_t i = var(rng);
      m = m * Monomial::variable(R->nvars(), i, 1);
      total += R->weights()[i];
    }
    if (homogeneous && total != d) continue;
    int c = coeff(rng);
    if (c == 0) continue;
    ts.push_back({m, R->field().from_int(c)});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

}  // namespace gi::test

#include "gi/presentation.hpp"

namespace gi::test {

inline Presentation quotient(const RingPtr& R, std::initializer_list<const char*> gens, bool domain = true) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(parse_polynomial(R, g));
  return Presentation(R, std::move(v), domain);
}

}  // namespace gi::test
