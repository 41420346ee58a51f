#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gi {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

/// Row-style Hermite normal form: nonzero rows only, pivots positive and
/// strictly moving right, entries above a pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t ncols);
/// Diagonal of the Smith normal form (nonzero invariant factors).
std::vector<mpz_class> smith_invariants(IntMatrix m);

/// Subgroup of Z^n given by its HNF basis.
class ExponentLattice {
 public:
  ExponentLattice() = default;
  ExponentLattice(IntMatrix generators, std::size_t ambient_rank);

  const IntMatrix& basis() const { return basis_; }
  std::size_t ambient_rank() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  bool contains(const IntVector& v) const;
  bool contains(const ExponentLattice& other) const;
  /// Coordinates of v in the basis; throws InputError when v is not in it.
  IntVector coordinates(const IntVector& v) const;
  ExponentLattice operator+(const ExponentLattice& other) const;
  ExponentLattice scaled(const mpz_class& k) const;

  std::string to_string() const;
  friend bool operator==(const ExponentLattice& a, const ExponentLattice& b) = default;

 private:
  IntMatrix basis_;
  std::size_t n_ = 0;
};

/// Lattice generated by the exponent vectors of monomial algebra generators.
ExponentLattice lattice_of_monomial_algebra(const std::vector<std::vector<long>>& generators);

/// [L_B : L_A] via the Smith form of the change-of-basis matrix. Throws
/// InputError when ranks differ or L_A is not inside L_B.
mpz_class extension_index(const ExponentLattice& LA, const ExponentLattice& LB);

/// Stable value of [L_B : L_A + p^e L_B] as e grows; a power of p.
mpz_class inseparable_degree(const ExponentLattice& LA, const ExponentLattice& LB, unsigned long p);

}  // namespace gi
