#include "gi/module.hpp"

#include "gi/error.hpp"

#include <algorithm>

namespace gi {

ModulePtr FreeModule::make(RingPtr ring, std::vector<long> degrees) {
  return ModulePtr(new FreeModule(std::move(ring), std::move(degrees)));
}

ModulePtr FreeModule::make_schreyer(ModulePtr base, std::vector<std::uint32_t> lead_comps,
                                    std::vector<Monomial> lead_monos) {
  if (lead_monos.size() != lead_comps.size()) throw InputError("schreyer module: inconsistent lead data");
  std::vector<long> degrees;
  for (std::size_t i = 0; i < lead_comps.size(); ++i) {
    if (lead_comps[i] >= base->rank()) throw InputError("schreyer module: lead outside the base module");
    degrees.push_back(base->degree(lead_comps[i], lead_monos[i]));
  }
  auto* F = new FreeModule(base->ring(), std::move(degrees));
  F->base_ = std::move(base);
  F->lead_comps_ = std::move(lead_comps);
  F->lead_monos_ = std::move(lead_monos);
  return ModulePtr(F);
}

std::strong_ordering FreeModule::schreyer_compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb,
                                                  const Monomial& b) const {
  auto c = base_->compare(lead_comps_[ca], a * lead_monos_[ca], lead_comps_[cb], b * lead_monos_[cb]);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

Vector Vector::from_components(ModulePtr module, const std::vector<Polynomial>& comps) {
  if (comps.size() != module->rank()) throw InputError("vector: wrong number of components");
  Vector v(module);
  for (std::uint32_t i = 0; i < comps.size(); ++i) {
    Polynomial p = comps[i].ring() ? comps[i].in_ring(module->ring()) : comps[i];
    for (const auto& t : p.terms()) v.terms_.push_back({i, t.mono, t.coeff});
  }
  return v;
}

Vector Vector::basis(ModulePtr module, std::size_t i) {
  Vector v(module);
  v.terms_.push_back({static_cast<std::uint32_t>(i), Monomial(module->ring()->nvars()),
                      module->ring()->field().from_int(1)});
  return v;
}

Vector Vector::from_terms(ModulePtr module, std::vector<VTerm> terms) {
  const FreeModule& F = *module;
  std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) {
    return F.compare(a.comp, a.mono, b.comp, b.mono) > 0;
  });
  Vector v(module);
  const Field& K = F.ring()->field();
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().comp == t.comp && v.terms_.back().mono == t.mono) {
      v.terms_.back().coeff = K.add(v.terms_.back().coeff, t.coeff);
      if (Field::is_zero(v.terms_.back().coeff)) v.terms_.pop_back();
    } else if (!Field::is_zero(t.coeff)) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

Polynomial Vector::component(std::size_t i) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.comp == i) ts.push_back({t.mono, t.coeff});
  return Polynomial::from_terms(module_->ring(), std::move(ts));
}

std::vector<Polynomial> Vector::components() const {
  std::vector<std::vector<Term>> parts(module_->rank());
  for (const auto& t : terms_) parts[t.comp].push_back({t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(module_->ring(), std::move(p)));
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (!a.module_) return b;
  if (!b.module_) return a;
  if (a.module_ != b.module_ && !(*a.module_ == *b.module_))
    throw InputError("vector arithmetic across different modules");
  const FreeModule& F = *a.module_;
  const Field& K = F.ring()->field();
  Vector r(a.module_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[j];
    auto c = F.compare(x.comp, x.mono, y.comp, y.mono);
    if (c > 0) {
      r.terms_.push_back(x);
      ++i;
    } else if (c < 0) {
      r.terms_.push_back(y);
      ++j;
    } else {
      Scalar s = K.add(x.coeff, y.coeff);
      if (!Field::is_zero(s)) r.terms_.push_back({x.comp, x.mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Vector Vector::operator-() const {
  Vector r(module_);
  const Field& K = module_->ring()->field();
  for (const auto& t : terms_) r.terms_.push_back({t.comp, t.mono, K.neg(t.coeff)});
  return r;
}

Vector operator-(const Vector& a, const Vector& b) { return a + (-b); }

Vector Vector::scale(const Scalar& c) const {
  Vector r(module_);
  if (Field::is_zero(c)) return r;
  const Field& K = module_->ring()->field();
  for (const auto& t : terms_) r.terms_.push_back({t.comp, t.mono, K.mul(t.coeff, c)});
  return r;
}

Vector Vector::mul_term(const Monomial& m, const Scalar& c) const {
  Vector r(module_);
  if (Field::is_zero(c)) return r;
  const Field& K = module_->ring()->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.comp, t.mono * m, K.mul(t.coeff, c)});
  return r;
}

Vector Vector::mul_poly(const Polynomial& p) const {
  Vector r(module_);
  Polynomial q = p.in_ring(module_->ring());
  for (const auto& t : q.terms()) r = r + mul_term(t.mono, t.coeff);
  return r;
}

Vector Vector::monic() const {
  if (is_zero()) return *this;
  return scale(module_->ring()->field().inv(lead().coeff));
}

bool Vector::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = module_->degree(terms_.front().comp, terms_.front().mono);
  for (const auto& t : terms_)
    if (module_->degree(t.comp, t.mono) != d) return false;
  return true;
}

long Vector::degree() const {
  if (terms_.empty()) throw PreconditionError("degree of the zero vector");
  if (!is_homogeneous()) throw PreconditionError("degree of an inhomogeneous vector");
  return module_->degree(terms_.front().comp, terms_.front().mono);
}

std::string Vector::to_string() const {
  auto comps = components();
  std::string s = "(";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ", ";
    s += comps[i].to_string();
  }
  return s + ")";
}

bool operator==(const Vector& a, const Vector& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.comp != y.comp || x.mono != y.mono || x.coeff != y.coeff) return false;
  }
  return true;
}

}  // namespace gi
