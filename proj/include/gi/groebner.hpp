#pragma once

#include "gi/module.hpp"
#include "gi/polynomial.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace gi {

/// Reduced Gröbner basis of an ideal: monic generators sorted by increasing
/// lead monomial, with respect to the order of ring().
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_reduced() const { return true; }
  bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_constant(); }

  std::vector<Monomial> lead_monomials() const;
  /// Remainder of f (mapped into ring()) modulo the basis.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.gens_ == b.gens_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Reduced Gröbner basis of (gens) in ring with the ring's own order.
GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens);
/// Reduced Gröbner basis for `order`; the result lives in a copy of the
/// generators' ring carrying that order.
GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                             const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Homogeneous ideal of a polynomial ring (inhomogeneous generators are
/// accepted where an operation permits them). Gröbner basis is cached.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_homogeneous() const;
  bool is_zero() const;

  /// Reduced Gröbner basis in the ring's order (computed once).
  const GroebnerBasis& groebner() const;
  bool contains(const Polynomial& f) const { return groebner().contains(f); }
  bool is_unit() const { return groebner().is_unit_ideal(); }

  Ideal operator+(const Ideal& other) const;
  Ideal with(const std::vector<Polynomial>& extra) const;

  /// Ideal equality (same reduced basis).
  friend bool operator==(const Ideal& a, const Ideal& b);

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& I);
/// I ∩ k[x_{k}, ..., x_{n-1}], returned in the same ring.
Ideal elimination_ideal(const Ideal& I, std::size_t k);
/// I : f. Throws PreconditionError for f = 0.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);
/// I : J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
/// I : J^∞, by iterating I : J to a fixed point.
Ideal saturation(const Ideal& I, const Ideal& J);
/// I ∩ J through the syzygies of [1 1], [f_i 0], [0 g_j].
Ideal intersection(const Ideal& I, const Ideal& J);
/// Minimal homogeneous generators.
std::vector<Polynomial> minimal_generators(const Ideal& I);
/// The ideal generated by all variables.
Ideal maximal_ideal(const RingPtr& ring);

/// Rank-1 module view of a ring, and conversions.
ModulePtr rank_one(const RingPtr& ring);
Vector as_vector(const ModulePtr& rank1, const Polynomial& p);
Polynomial as_polynomial(const Vector& v);

}  // namespace gi
