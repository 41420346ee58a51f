#include "gi/polynomial.hpp"

#include "gi/error.hpp"

#include <algorithm>

namespace gi {

void Polynomial::check_same(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ == b.ring_) return;
  if (!a.ring_ || !b.ring_ || !(*a.ring_ == *b.ring_))
    throw InputError("polynomial arithmetic across different rings");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!Field::is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::from_int(RingPtr ring, long c) {
  Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Scalar& c) {
  if (m.size() != ring->nvars()) throw InputError("monomial does not match ring");
  Polynomial p(ring);
  if (!Field::is_zero(c)) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Scalar one = ring->field().from_int(1);
  auto n = ring->nvars();
  return monomial(std::move(ring), Monomial::variable(n, i), one);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolyRing& R = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (t.mono.size() != R.nvars()) throw InputError("monomial does not match ring");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = R.field().add(p.terms_.back().coeff, t.coeff);
      if (Field::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!Field::is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty()) throw PreconditionError("lead term of zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field().neg(t.coeff)});
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && !a.ring_) return b;
  if (b.is_zero() && !b.ring_) return a;
  Polynomial::check_same(a, b);
  const PolyRing& R = *a.ring_;
  Polynomial r(a.ring_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    auto c = R.compare(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar s = R.field().add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (!Field::is_zero(s)) r.terms_.push_back({a.terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial::check_same(a, b);
  Polynomial r(a.ring_);
  for (const auto& t : b.terms_) r = r + a.mul_term(t.mono, t.coeff);
  return r;
}

Polynomial Polynomial::scale(const Scalar& c) const {
  Polynomial r(ring_);
  if (Field::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  // Multiplication by a monomial preserves the order of terms.
  Polynomial r(ring_);
  if (Field::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar s = ring_->field().mul(t.coeff, c);
    if (!Field::is_zero(s)) r.terms_.push_back({t.mono * m, s});
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = from_int(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv(lead_coeff()));
}

bool Polynomial::is_homogeneous() const { return gi::is_homogeneous(*this, ring_->weights()); }

long Polynomial::degree() const { return degree_of(*this, ring_->weights()); }

long Polynomial::max_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->degree(t.mono));
  return d;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[i];
    if (e == 0) continue;
    Monomial::Exponents ex = t.mono.exponents();
    ex[i] -= 1;
    out.push_back({Monomial(std::move(ex)), ring_->field().mul(t.coeff, ring_->field().from_int(e))});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(RingPtr other) const {
  if (!ring_->same_variables(*other)) throw InputError("in_ring: variables differ");
  if (*ring_ == *other) {
    Polynomial r = *this;
    r.ring_ = std::move(other);
    return r;
  }
  return from_terms(std::move(other), terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.get_str();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += t.mono.to_string(ring_->names());
    }
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images,
                      const RingPtr& target) {
  if (images.size() != p.ring()->nvars())
    throw InputError("substitute: need one image per variable");
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] > 0) term = term * images[i].pow(static_cast<unsigned>(t.mono[i]));
    result += term;
  }
  return result;
}

bool is_homogeneous(const Polynomial& f, std::span<const int> weights) {
  if (f.is_zero()) return true;
  long d = f.terms().front().mono.degree(weights);
  for (const auto& t : f.terms())
    if (t.mono.degree(weights) != d) return false;
  return true;
}

long degree_of(const Polynomial& f, std::span<const int> weights) {
  if (f.is_zero()) throw PreconditionError("degree of the zero polynomial");
  if (!is_homogeneous(f, weights)) throw PreconditionError("degree of an inhomogeneous polynomial");
  return f.terms().front().mono.degree(weights);
}

Polynomial transfer(const Polynomial& p, const RingPtr& target) {
  if (!p.ring()) return Polynomial(target);
  if (p.ring()->nvars() != target->nvars() || p.ring()->field() != target->field())
    throw InputError("transfer: rings differ in field or variable count");
  return Polynomial::from_terms(target, p.terms());
}

}  // namespace gi
