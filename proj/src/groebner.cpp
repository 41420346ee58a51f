#include "gi/groebner.hpp"

#include "gi/error.hpp"

#include <algorithm>

namespace gi {

ModulePtr rank_one(const RingPtr& ring) { return FreeModule::make(ring, {0}); }

Vector as_vector(const ModulePtr& rank1, const Polynomial& p) {
  if (!p.ring()) return Vector(rank1);
  return Vector::from_components(rank1, {p});
}

Polynomial as_polynomial(const Vector& v) { return v.component(0); }

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.lead_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  Polynomial g = f.in_ring(ring_);
  if (g.is_zero() || gens_.empty()) return g;
  ModulePtr F = rank_one(ring_);
  std::vector<Vector> basis;
  basis.reserve(gens_.size());
  for (const auto& p : gens_) basis.push_back(as_vector(F, p));
  return as_polynomial(module_normal_form(as_vector(F, g), basis));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  ModulePtr F = rank_one(ring);
  std::vector<Vector> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.ring() && !g.ring()->same_variables(*ring))
      throw InputError("groebner_basis: generators from different rings");
    vs.push_back(as_vector(F, g.ring() ? g.in_ring(ring) : g));
  }
  auto res = module_groebner(F, vs);
  std::vector<Polynomial> out;
  out.reserve(res.basis.size());
  for (const auto& v : res.basis) out.push_back(as_polynomial(v));
  return GroebnerBasis(ring, std::move(out));
}

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                             const MonomialOrder& order) {
  return groebner_basis(ring->with_order(order), gens);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.ring() && !g.ring()->same_variables(*ring_))
      throw InputError("ideal generator from a different ring");
    Polynomial p = g.ring() ? g.in_ring(ring_) : Polynomial(ring_);
    if (!p.is_zero()) gens_.push_back(std::move(p));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
}

bool Ideal::is_zero() const { return gens_.empty(); }

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [&] { cache_->gb = groebner_basis(ring_, gens_); });
  return *cache_->gb;
}

Ideal Ideal::operator+(const Ideal& other) const { return with(other.gens_); }

Ideal Ideal::with(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(g));
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!a.ring_->same_variables(*b.ring_)) return false;
  if (*a.ring_ == *b.ring_) return a.groebner() == b.groebner();
  return a.groebner() == Ideal(a.ring_, b.gens_).groebner();
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

bool ideal_membership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

Ideal elimination_ideal(const Ideal& I, std::size_t k) {
  const RingPtr& R = I.ring();
  if (k > R->nvars()) throw InputError("elimination_ideal: block larger than variable count");
  auto gb = groebner_basis(R, I.generators(), MonomialOrder::elimination(k, R->weights()));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.generators()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < k && free; ++i)
        if (t.mono[i] != 0) free = false;
      if (!free) break;
    }
    if (free) kept.push_back(g.in_ring(R));
  }
  return Ideal(R, std::move(kept));
}

namespace {

// Generators of {a : a * lead ∈ (others)} through syzygies of [lead, others...].
Ideal colon_via_syzygies(const RingPtr& R, const Polynomial& f, const std::vector<Polynomial>& others) {
  ModulePtr F = rank_one(R);
  std::vector<Vector> elems;
  std::vector<long> degs;
  elems.push_back(as_vector(F, f));
  degs.push_back(f.max_degree());
  for (const auto& g : others) {
    elems.push_back(as_vector(F, g));
    degs.push_back(g.max_degree());
  }
  auto syz = syzygies(F, elems, degs);
  std::vector<Polynomial> out;
  for (const auto& s : syz.generators) {
    Polynomial a = s.component(0);
    if (!a.is_zero()) out.push_back(a);
  }
  return Ideal(R, std::move(out));
}

}  // namespace

namespace {

// Minimal generators for homogeneous ideals, the reduced basis otherwise.
Ideal tidy(const Ideal& I) {
  if (I.is_homogeneous()) return Ideal(I.ring(), minimal_generators(I));
  return Ideal(I.ring(), I.groebner().generators());
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("ideal_quotient by the zero polynomial");
  const RingPtr& R = I.ring();
  Polynomial g = f.in_ring(R);
  if (I.is_zero()) return Ideal(R, {});
  return tidy(colon_via_syzygies(R, g, I.groebner().generators()));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  if (J.is_zero()) return Ideal(R, {Polynomial::from_int(R, 1)});
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal q = ideal_quotient(I, g);
    acc = acc ? intersection(*acc, q) : q;
  }
  return *acc;
}

Ideal saturation(const Ideal& I, const Ideal& J) {
  Ideal current = I;
  for (;;) {
    Ideal next = ideal_quotient(current, J);
    if (next == current) return tidy(current);
    current = next;
  }
}

Ideal intersection(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  if (!R->same_variables(*J.ring())) throw InputError("intersection: ideals in different rings");
  if (I.is_zero() || J.is_zero()) return Ideal(R, {});
  ModulePtr F = FreeModule::make(R, {0, 0});
  Polynomial zero(R);
  Polynomial one = Polynomial::from_int(R, 1);
  std::vector<Vector> cols;
  std::vector<long> degs;
  cols.push_back(Vector::from_components(F, {one, one}));
  degs.push_back(0);
  for (const auto& f : I.generators()) {
    cols.push_back(Vector::from_components(F, {f, zero}));
    degs.push_back(f.max_degree());
  }
  for (const auto& g : J.generators()) {
    cols.push_back(Vector::from_components(F, {zero, g.in_ring(R)}));
    degs.push_back(g.max_degree());
  }
  auto syz = syzygies(F, cols, degs);
  std::vector<Polynomial> out;
  for (const auto& s : syz.generators) {
    Polynomial a = s.component(0);
    if (!a.is_zero()) out.push_back(a);
  }
  return tidy(Ideal(R, std::move(out)));
}

std::vector<Polynomial> minimal_generators(const Ideal& I) {
  if (!I.is_homogeneous()) throw PreconditionError("minimal_generators: inhomogeneous ideal");
  ModulePtr F = rank_one(I.ring());
  std::vector<Vector> vs;
  for (const auto& g : I.generators()) vs.push_back(as_vector(F, g));
  std::vector<Polynomial> out;
  for (const auto& v : minimal_generators(F, vs)) out.push_back(as_polynomial(v).monic());
  return out;
}

Ideal maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

}  // namespace gi
