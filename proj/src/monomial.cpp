#include "gi/monomial.hpp"

#include "gi/error.hpp"

#include <algorithm>
#include <limits>

namespace gi {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int32_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("monomial exponent overflow");
  return r;
}

long weighted_degree(const Monomial& m, const std::vector<int>& w, std::size_t lo,
                     std::size_t hi) {
  long d = 0;
  if (w.empty()) {
    for (std::size_t i = lo; i < hi; ++i) d += m[i];
  } else {
    for (std::size_t i = lo; i < hi; ++i) d += static_cast<long>(w[i]) * m[i];
  }
  return d;
}

// Reverse lexicographic tie-break on [lo, hi): the monomial with the smaller
// exponent in the last differing variable is larger.
std::strong_ordering revlex(const Monomial& a, const Monomial& b, std::size_t lo,
                            std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering wdegrevlex(const Monomial& a, const Monomial& b, const std::vector<int>& w,
                                std::size_t lo, std::size_t hi) {
  long da = weighted_degree(a, w, lo, hi), db = weighted_degree(b, w, lo, hi);
  if (da != db) return da <=> db;
  return revlex(a, b, lo, hi);
}

}  // namespace

Monomial::Monomial(std::initializer_list<std::int32_t> e) : exps_(e.begin(), e.end()) {
  refresh_mask();
}

Monomial::Monomial(Exponents e) : exps_(std::move(e)) { refresh_mask(); }

Monomial::Monomial(std::span<const std::int32_t> e) : exps_(e.begin(), e.end()) {
  refresh_mask();
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::int32_t power) {
  Monomial m(nvars);
  m.exps_[i] = power;
  m.refresh_mask();
  return m;
}

void Monomial::refresh_mask() {
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < 0) throw Error("negative exponent");
    if (exps_[i] != 0) mask_ |= std::uint64_t{1} << (i % 64);
  }
}

long Monomial::degree(std::span<const int> weights) const {
  if (weights.empty()) return total_degree();
  long d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += static_cast<long>(weights[i]) * exps_[i];
  return d;
}

long Monomial::total_degree() const {
  long d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::coprime(const Monomial& other) const {
  if ((mask_ & other.mask_) == 0) return true;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw InputError("monomials from different rings");
  Monomial r;
  r.exps_.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = checked_add(a.exps_[i], b.exps_[i]);
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = a.exps_[i] - b.exps_[i];
    if (r.exps_[i] < 0) throw Error("monomial quotient is not exact");
  }
  r.refresh_mask();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  r.refresh_mask();
  return r;
}

Monomial Monomial::pow(std::int32_t e) const {
  Monomial r = *this;
  for (auto& x : r.exps_) {
    if (__builtin_mul_overflow(x, e, &x)) throw Error("monomial exponent overflow");
  }
  r.refresh_mask();
  return r;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

MonomialOrder MonomialOrder::weighted_degrevlex(std::vector<int> weights) {
  for (int w : weights)
    if (w <= 0) throw InputError("monomial order weights must be positive");
  return MonomialOrder(Kind::weighted_degrevlex, std::move(weights), 0);
}

MonomialOrder MonomialOrder::elimination(std::size_t block, std::vector<int> weights) {
  for (int w : weights)
    if (w <= 0) throw InputError("monomial order weights must be positive");
  return MonomialOrder(Kind::elimination, std::move(weights), block);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size())
    throw InputError("monomial_compare: mismatched variable counts");
  if (!weights_.empty() && weights_.size() != a.size())
    throw InputError("monomial_compare: weight vector does not match variable count");
  return compare_unchecked(a, b);
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::degrevlex:
    case Kind::weighted_degrevlex:
      return wdegrevlex(a, b, weights_, 0, n);
    case Kind::elimination: {
      std::size_t k = std::min(block_, n);
      auto c = wdegrevlex(a, b, weights_, 0, k);
      if (c != 0) return c;
      return wdegrevlex(a, b, weights_, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::degrevlex: return "degrevlex";
    case Kind::weighted_degrevlex: return "weighted-degrevlex";
    case Kind::elimination: return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace gi
