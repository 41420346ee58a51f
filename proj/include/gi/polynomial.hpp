#pragma once

#include "gi/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gi {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Polynomial over a PolyRing. Terms are distinct, nonzero and sorted in
/// decreasing order for the ring's monomial order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial from_int(RingPtr ring, long c);
  static Polynomial monomial(RingPtr ring, Monomial m, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& lead_term() const;
  const Monomial& lead_monomial() const { return lead_term().mono; }
  const Scalar& lead_coeff() const { return lead_term().coeff; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  /// All terms share one weighted degree (zero counts as homogeneous).
  bool is_homogeneous() const;
  /// Weighted degree; throws PreconditionError on 0 or inhomogeneous input.
  long degree() const;
  /// Largest weighted degree of a term; -1 for zero.
  long max_degree() const;

  /// Partial derivative with respect to variable i.
  Polynomial derivative(std::size_t i) const;
  /// Same polynomial stored in a ring with the same variables and any order.
  Polynomial in_ring(RingPtr other) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Substitute images[i] for variable i of p (all images in one ring).
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images,
                      const RingPtr& target);

/// Standalone weighted homogeneity test.
/// The same terms read in another ring with as many variables over the same
/// field (renaming or regrading).
Polynomial transfer(const Polynomial& p, const RingPtr& target);

bool is_homogeneous(const Polynomial& f, std::span<const int> weights);
/// Weighted degree of a homogeneous polynomial; throws on 0 or inhomogeneous input.
long degree_of(const Polynomial& f, std::span<const int> weights);

}  // namespace gi
