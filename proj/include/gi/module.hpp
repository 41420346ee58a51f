#pragma once

#include "gi/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace gi {

class FreeModule;
using ModulePtr = std::shared_ptr<const FreeModule>;

/// Graded free module F = S(-d_0) ⊕ ... ⊕ S(-d_{r-1}); basis element e_i has
/// degree d_i. Terms are ordered position-over-term: a smaller component
/// index dominates, ties broken by the ring's monomial order.
///
/// A Schreyer module instead carries the order induced by lead terms
/// (c_i, m_i) in a base module: m*e_i > n*e_j iff (c_i, m*m_i) > (c_j, n*m_j)
/// in the base, ties going to the smaller index. Degrees are inherited.
class FreeModule {
 public:
  static ModulePtr make(RingPtr ring, std::vector<long> degrees);
  static ModulePtr make_schreyer(ModulePtr base, std::vector<std::uint32_t> lead_comps,
                                 std::vector<Monomial> lead_monos);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return degrees_.size(); }
  const std::vector<long>& degrees() const { return degrees_; }

  std::strong_ordering compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb,
                               const Monomial& b) const {
    if (base_) return schreyer_compare(ca, a, cb, b);
    if (ca != cb) return ca < cb ? std::strong_ordering::greater : std::strong_ordering::less;
    return ring_->compare(a, b);
  }
  long degree(std::uint32_t comp, const Monomial& m) const { return ring_->degree(m) + degrees_[comp]; }

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    if (!(*a.ring_ == *b.ring_) || a.degrees_ != b.degrees_ || bool(a.base_) != bool(b.base_)) return false;
    if (!a.base_) return true;
    return *a.base_ == *b.base_ && a.lead_comps_ == b.lead_comps_ && a.lead_monos_ == b.lead_monos_;
  }

 private:
  FreeModule(RingPtr ring, std::vector<long> degrees)
      : ring_(std::move(ring)), degrees_(std::move(degrees)) {}

  std::strong_ordering schreyer_compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb,
                                        const Monomial& b) const;

  RingPtr ring_;
  std::vector<long> degrees_;
  ModulePtr base_;
  std::vector<std::uint32_t> lead_comps_;
  std::vector<Monomial> lead_monos_;
};

struct VTerm {
  std::uint32_t comp;
  Monomial mono;
  Scalar coeff;
};

/// Element of a FreeModule; terms sorted decreasingly, no zero coefficients.
class Vector {
 public:
  Vector() = default;
  explicit Vector(ModulePtr module) : module_(std::move(module)) {}

  static Vector from_components(ModulePtr module, const std::vector<Polynomial>& comps);
  static Vector basis(ModulePtr module, std::size_t i);
  /// Sorts and merges arbitrary terms.
  static Vector from_terms(ModulePtr module, std::vector<VTerm> terms);

  const ModulePtr& module() const { return module_; }
  const std::vector<VTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VTerm& lead() const { return terms_.front(); }

  Polynomial component(std::size_t i) const;
  std::vector<Polynomial> components() const;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  Vector operator-() const;
  Vector scale(const Scalar& c) const;
  Vector mul_poly(const Polynomial& p) const;
  Vector mul_term(const Monomial& m, const Scalar& c) const;
  Vector monic() const;

  bool is_homogeneous() const;
  /// Degree of a homogeneous nonzero vector.
  long degree() const;

  std::string to_string() const;

  friend bool operator==(const Vector& a, const Vector& b);

 private:
  friend class GbEngine;
  ModulePtr module_;
  std::vector<VTerm> terms_;
};

struct ModuleGbOptions {
  /// The first `ambient` generators are always included but never reported
  /// as minimal generators; used to minimalize a submodule relative to a
  /// smaller one.
  std::size_t ambient = 0;
  /// Tail-reduce the final basis (making it the reduced basis).
  bool interreduce = true;
};

struct ModuleGbResult {
  /// Gröbner basis sorted by increasing lead term; reduced unless
  /// interreduce was switched off.
  std::vector<Vector> basis;
  /// For homogeneous input: indices of the non-ambient generators forming a
  /// minimal generating set (modulo the ambient ones). Empty otherwise.
  std::vector<std::size_t> minimal;
  bool homogeneous = false;
};

/// Buchberger's algorithm on a submodule of a free module (rank 1 covers
/// ideals). Normal selection strategy with Gebauer–Möller pruning;
/// homogeneous input is processed degree by degree.
ModuleGbResult module_groebner(const ModulePtr& module, const std::vector<Vector>& gens,
                               const ModuleGbOptions& options = {});

/// Full reduction of f by a Gröbner basis.
Vector module_normal_form(const Vector& f, const std::vector<Vector>& gb);

/// Division of f by nonzero `basis` elements: f = sum q_i basis_i + remainder
/// with no remainder term divisible by a lead. Returns the q_i as an element of
/// quotient_module, whose rank must equal basis.size().
Vector divide(const Vector& f, const std::vector<Vector>& basis, const ModulePtr& quotient_module,
              Vector& remainder);

struct SyzygyResult {
  /// Free module with basis degrees equal to the given element degrees.
  ModulePtr module;
  std::vector<Vector> generators;
};

/// Generators of the syzygy module of `elems` (all in one free module).
/// `degrees[i]` is the degree assigned to elems[i] (needed when it is zero).
/// Homogeneous input gives homogeneous syzygies. Not minimalized.
SyzygyResult syzygies(const ModulePtr& module, const std::vector<Vector>& elems,
                      const std::vector<long>& degrees);

/// Minimal generators of the submodule spanned by gens (homogeneous input).
std::vector<Vector> minimal_generators(const ModulePtr& module, const std::vector<Vector>& gens);

}  // namespace gi
