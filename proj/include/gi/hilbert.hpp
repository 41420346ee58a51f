#pragma once

#include "gi/presentation.hpp"

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace gi {

/// Polynomial in t with integer coefficients; c[i] is the coefficient of t^i.
/// No trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> c);
  explicit IntPoly(std::vector<mpz_class> c);
  static IntPoly monomial(long deg, const mpz_class& c = 1);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  mpz_class operator[](std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  mpz_class at_one() const;
  /// Multiplicity of t = 1 as a root.
  long order_at_one() const;
  /// Exact division by 1 - t^w; throws PreconditionError if inexact.
  IntPoly divide_one_minus(long w) const;
  bool divisible_by_one_minus(long w) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly shift(long k) const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// N(t) / prod (1 - t^{w}) over `weights`. The numerator is kept uncancelled.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(IntPoly numerator, std::vector<int> weights)
      : num_(std::move(numerator)), weights_(std::move(weights)) {}

  const IntPoly& numerator() const { return num_; }
  const std::vector<int>& denominator_weights() const { return weights_; }

  /// Pole order at t = 1; -1 for the zero ring.
  long dimension() const;
  /// Numerator and denominator after cancelling (1 - t^w) factors.
  std::pair<IntPoly, std::vector<int>> cancelled() const;
  /// Numerator over (1 - t)^dim; standard graded only.
  IntPoly h_polynomial() const;
  /// h(1); standard graded only.
  long multiplicity() const;
  /// Degree of the series as a rational function.
  long degree() const;

  /// dim_k of degrees 0..maxdeg.
  std::vector<mpz_class> expansion(long maxdeg) const;

  std::string to_string() const;
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) = default;

 private:
  bool standard() const;
  IntPoly num_;
  std::vector<int> weights_;
};

/// Numerator of the Hilbert series of S/(gens) for a monomial ideal.
IntPoly hilbert_numerator(std::vector<Monomial> gens, std::span<const int> weights);

HilbertSeries hilbert_series(const Presentation& A);
long krull_dimension(const Presentation& A);
/// Standard graded only; UnsupportedError otherwise.
long multiplicity(const Presentation& A);
std::vector<long> h_vector(const Presentation& A);
/// deg N - sum of weights; valid for Cohen-Macaulay A only, so the caller
/// must pass the result of is_cohen_macaulay. Throws PreconditionError
/// when cm_certificate is false.
long a_invariant_fastpath(const Presentation& A, bool cm_certificate);

/// floor(a / b) rounding toward minus infinity, b > 0.
long floor_div(long a, long b);

}  // namespace gi
