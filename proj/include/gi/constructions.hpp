#pragma once

#include "gi/ring_map.hpp"

#include <vector>

namespace gi {

enum class VeroneseConvention {
  regraded,  ///< A_{ni} sits in degree i
  ambient,   ///< degrees stay multiples of n
};

/// A^(n) presented on one variable per standard monomial of A_n, with the
/// inclusion into A.
struct Veronese {
  Presentation ring;
  /// Images in A of the new variables (standard monomials, decreasing).
  std::vector<Polynomial> generators;
  /// ring -> A; uses the ambient grading on the source side.
  GradedRingMap inclusion;
};

/// Standard graded A only; UnsupportedError otherwise.
Veronese veronese(const Presentation& A, int n, VeroneseConvention conv = VeroneseConvention::regraded);
Presentation veronese_presentation(const Presentation& A, int n,
                                   VeroneseConvention conv = VeroneseConvention::regraded);

/// B^q for q a power of the characteristic: B with every weight scaled by q.
Presentation frobenius_power_presentation(const Presentation& B, long q);
/// The subalgebra k[x_1^q, ..., x_n^q] of B, presented via a kernel
/// computation (for cross-checks), with its inclusion into B.
GradedRingMap frobenius_subalgebra(const Presentation& B, long q);

/// Whether B is a finite module over the image of the source.
bool is_module_finite(const GradedRingMap& phi);

/// S/(I : m^infinity). The zero ring comes back with the unit ideal.
Presentation irrelevant_saturation(const Presentation& A);
bool is_zero_ring(const Presentation& A);

/// Map from a free polynomial ring onto k[gens] inside B (weights = degrees
/// of the gens, which must be homogeneous of positive degree).
GradedRingMap subalgebra_map(const Presentation& B, const std::vector<Polynomial>& gens);
/// Whether k[small] is contained in k[big] inside B.
bool subalgebra_contains(const Presentation& B, const std::vector<Polynomial>& big,
                         const std::vector<Polynomial>& small);

/// Standard monomials of degree `deg` modulo the ideal, decreasing.
std::vector<Polynomial> standard_monomials(const Presentation& A, long deg);

}  // namespace gi
