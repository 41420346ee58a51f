#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gi {

/// Exponent vector, one entry per ring variable. Arithmetic is
/// overflow-checked; exponents stay non-negative.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::int32_t, 20>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::int32_t> e);
  explicit Monomial(Exponents e);
  explicit Monomial(std::span<const std::int32_t> e);

  static Monomial variable(std::size_t nvars, std::size_t i, std::int32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  const Exponents& exponents() const { return exps_; }

  /// Sum of weights[i] * exponent[i]; empty weights means all 1.
  long degree(std::span<const int> weights) const;
  long total_degree() const;
  bool is_one() const { return mask_ == 0; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const;

  /// Bit i set iff variable (i mod 64) occurs.
  std::uint64_t mask() const { return mask_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial quotient(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  Monomial pow(std::int32_t e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void refresh_mask();

  Exponents exps_;
  std::uint64_t mask_ = 0;
};

/// Monomial order. Degree-type orders use the stored weights (empty = 1).
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex, weighted_degrevlex, elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, {}, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}, 0); }
  static MonomialOrder weighted_degrevlex(std::vector<int> weights);
  /// Block order: weighted degrevlex on the first `block` variables, ties
  /// broken by weighted degrevlex on the rest. Eliminates the first block.
  static MonomialOrder elimination(std::size_t block, std::vector<int> weights = {});

  Kind kind() const { return kind_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t block() const { return block_; }

  /// Throws InputError on mismatched variable counts.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// Same as compare but without the size check.
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const;

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::vector<int> w, std::size_t b)
      : kind_(k), weights_(std::move(w)), block_(b) {}

  Kind kind_;
  std::vector<int> weights_;
  std::size_t block_;
};

}  // namespace gi
