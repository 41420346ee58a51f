#include "gi/field.hpp"

#include "gi/error.hpp"

namespace gi {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

Scalar Field::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Scalar(r);
}

Scalar Field::from_int(long v) const {
  if (is_rationals()) return Scalar(v);
  return reduce(mpz_class(v));
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (is_rationals()) {
    if (den == 0) throw InputError("division by zero in coefficient");
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }
  Scalar d = reduce(den);
  if (is_zero(d))
    throw InputError("denominator " + den.get_str() + " vanishes in " + to_string());
  return mul(reduce(num), inv(d));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a + b;
  unsigned long s = a.get_num().get_ui() + b.get_num().get_ui();
  if (s >= p_) s -= p_;
  return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a - b;
  unsigned long x = a.get_num().get_ui(), y = b.get_num().get_ui();
  return Scalar(x >= y ? x - y : x + p_ - y);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rationals()) return a * b;
  std::uint64_t x = a.get_num().get_ui(), y = b.get_num().get_ui();
  return Scalar(static_cast<unsigned long>((x * y) % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rationals()) return -a;
  unsigned long x = a.get_num().get_ui();
  return Scalar(x == 0 ? 0UL : p_ - x);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw PreconditionError("inverse of zero");
  if (is_rationals()) return 1 / a;
  mpz_class r;
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), m.get_mpz_t());
  return Scalar(r);
}

std::string Field::to_string() const {
  if (is_rationals()) return "QQ";
  return "GF(" + std::to_string(p_) + ")";
}

}  // namespace gi
