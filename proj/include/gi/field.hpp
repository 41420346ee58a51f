#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gi {

/// Field element. Rationals use the full value; prime-field elements are
/// stored as integers in [0, p).
using Scalar = mpq_class;

/// The coefficient field: Q or F_p with p < 2^31.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }

  Scalar from_int(long v) const;
  /// Image of num/den; throws InputError if den vanishes in the field.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  static bool is_one(const Scalar& a) { return a == 1; }

  /// "QQ" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Scalar reduce(const mpz_class& v) const;

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace gi
