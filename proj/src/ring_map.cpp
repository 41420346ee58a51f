#include "gi/ring_map.hpp"

#include "gi/error.hpp"

namespace gi {

GradedRingMap::GradedRingMap(Presentation source, Presentation target, std::vector<Polynomial> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      once_(std::make_shared<std::once_flag>()),
      graph_(std::make_shared<std::optional<Graph>>()) {
  const RingPtr& S = source_.ring();
  const RingPtr& T = target_.ring();
  if (S->field() != T->field()) throw InputError("ring map: source and target fields differ");
  if (images.size() != S->nvars())
    throw InputError("ring map: expected " + std::to_string(S->nvars()) + " images, got " +
                     std::to_string(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    Polynomial p = images[i].ring() ? images[i].in_ring(T) : Polynomial(T);
    if (!p.is_zero()) {
      if (!p.is_homogeneous())
        throw InputError("ring map: image of " + S->names()[i] + " is not homogeneous");
      if (p.degree() != S->weights()[i])
        throw InputError("ring map: image of " + S->names()[i] + " has degree " +
                         std::to_string(p.degree()) + ", expected " + std::to_string(S->weights()[i]));
    }
    images_.push_back(std::move(p));
  }
  for (const auto& g : source_.generators())
    if (!target_.ideal().contains(apply(g)))
      throw PreconditionError("ring map: relation " + g.to_string() + " does not map to zero");
}

Polynomial GradedRingMap::apply(const Polynomial& f) const {
  return substitute(f.in_ring(source_.ring()), images_, target_.ring());
}

const GradedRingMap::Graph& GradedRingMap::graph() const {
  std::call_once(*once_, [&] {
    const RingPtr& S = source_.ring();
    const RingPtr& T = target_.ring();
    const std::size_t k = T->nvars(), m = S->nvars();
    std::vector<std::string> names;
    std::vector<int> weights;
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back("t_" + T->names()[i]);
      weights.push_back(T->weights()[i]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back("s_" + S->names()[i]);
      weights.push_back(S->weights()[i]);
    }
    RingPtr G = PolyRing::make(T->field(), names, weights, MonomialOrder::elimination(k, weights));
    std::vector<Polynomial> tvars, gens;
    for (std::size_t i = 0; i < k; ++i) tvars.push_back(Polynomial::variable(G, i));
    for (const auto& r : target_.generators()) gens.push_back(substitute(r, tvars, G));
    for (std::size_t j = 0; j < m; ++j)
      gens.push_back(Polynomial::variable(G, k + j) - substitute(images_[j], tvars, G));
    *graph_ = Graph{G, groebner_basis(G, gens)};
  });
  return **graph_;
}

namespace {

bool free_of_block(const Polynomial& g, std::size_t k) {
  for (const auto& t : g.terms())
    for (std::size_t i = 0; i < k; ++i)
      if (t.mono[i] != 0) return false;
  return true;
}

Polynomial to_source(const Polynomial& g, std::size_t k, const RingPtr& S) {
  std::vector<Term> ts;
  for (const auto& t : g.terms()) {
    std::vector<std::int32_t> e(S->nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[k + i];
    ts.push_back({Monomial(std::span<const std::int32_t>(e)), t.coeff});
  }
  return Polynomial::from_terms(S, std::move(ts));
}

Ideal contracted(const GroebnerBasis& gb, std::size_t k, const RingPtr& S) {
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators())
    if (free_of_block(g, k)) out.push_back(to_source(g, k, S));
  Ideal I(S, std::move(out));
  if (I.is_homogeneous()) return Ideal(S, minimal_generators(I));
  return I;
}

}  // namespace

std::vector<Polynomial> ring_map_kernel(const GradedRingMap& phi) {
  const auto& g = phi.graph();
  return contracted(g.gb, phi.target().nvars(), phi.source().ring()).generators();
}

Ideal preimage(const GradedRingMap& phi, const std::vector<Polynomial>& target_gens) {
  const auto& g = phi.graph();
  const std::size_t k = phi.target().nvars();
  std::vector<Polynomial> tvars;
  for (std::size_t i = 0; i < k; ++i) tvars.push_back(Polynomial::variable(g.ring, i));
  std::vector<Polynomial> gens = g.gb.generators();
  for (const auto& f : target_gens) gens.push_back(substitute(f.in_ring(phi.target().ring()), tvars, g.ring));
  return contracted(groebner_basis(g.ring, gens), k, phi.source().ring());
}

bool in_image(const GradedRingMap& phi, const Polynomial& f) {
  const auto& g = phi.graph();
  const std::size_t k = phi.target().nvars();
  std::vector<Polynomial> tvars;
  for (std::size_t i = 0; i < k; ++i) tvars.push_back(Polynomial::variable(g.ring, i));
  Polynomial r = g.gb.normal_form(substitute(f.in_ring(phi.target().ring()), tvars, g.ring));
  return free_of_block(r, k);
}

}  // namespace gi
