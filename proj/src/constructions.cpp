#include "gi/constructions.hpp"

#include "gi/error.hpp"
#include "gi/hilbert.hpp"

#include <algorithm>

namespace gi {

namespace {

void monomials_rec(const RingPtr& R, long deg, std::size_t i, std::vector<std::int32_t>& e,
                   std::vector<Monomial>& out) {
  if (i == R->nvars()) {
    if (deg == 0) out.push_back(Monomial(std::span<const std::int32_t>(e)));
    return;
  }
  const int w = R->weights()[i];
  for (long k = deg / w; k >= 0; --k) {
    e[i] = static_cast<std::int32_t>(k);
    monomials_rec(R, deg - k * w, i + 1, e, out);
  }
  e[i] = 0;
}

bool is_power_of(long q, unsigned p) {
  if (q < 1) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

std::vector<Polynomial> standard_monomials(const Presentation& A, long deg) {
  const RingPtr& R = A.ring();
  std::vector<Monomial> all;
  std::vector<std::int32_t> e(R->nvars(), 0);
  monomials_rec(R, deg, 0, e, all);
  auto leads = A.ideal().groebner().lead_monomials();
  std::vector<Monomial> keep;
  for (auto& m : all)
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); }))
      keep.push_back(std::move(m));
  std::sort(keep.begin(), keep.end(), [&](const Monomial& a, const Monomial& b) { return R->compare(a, b) > 0; });
  std::vector<Polynomial> out;
  for (auto& m : keep) out.push_back(Polynomial::monomial(R, std::move(m), R->field().from_int(1)));
  return out;
}

Veronese veronese(const Presentation& A, int n, VeroneseConvention conv) {
  if (!A.is_standard_graded()) throw UnsupportedError("veronese: weighted input");
  if (n < 1) throw InputError("veronese: n must be positive");
  auto gens = standard_monomials(A, n);
  if (gens.empty()) throw PreconditionError("veronese: A_n is zero");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("z" + std::to_string(i));
  RingPtr amb = PolyRing::make(A.field(), names, std::vector<int>(gens.size(), n));
  GradedRingMap inc(Presentation::polynomial_ring(amb), A, gens);
  auto ker = ring_map_kernel(inc);
  Presentation ambient_pres(amb, ker, A.asserted_domain());
  GradedRingMap inclusion(ambient_pres, A, gens);
  if (conv == VeroneseConvention::ambient) return {ambient_pres, gens, inclusion};
  RingPtr reg = PolyRing::standard(A.field(), names);
  std::vector<Polynomial> rk;
  for (const auto& k : ker) rk.push_back(transfer(k, reg));
  return {Presentation(reg, rk, A.asserted_domain()), gens, inclusion};
}

Presentation veronese_presentation(const Presentation& A, int n, VeroneseConvention conv) {
  return veronese(A, n, conv).ring;
}

Presentation frobenius_power_presentation(const Presentation& B, long q) {
  const unsigned p = B.field().characteristic();
  if (p == 0) throw PreconditionError("frobenius power needs positive characteristic");
  if (!is_power_of(q, p)) throw InputError("frobenius power: " + std::to_string(q) + " is not a power of " + std::to_string(p));
  std::vector<int> w = B.ring()->weights();
  for (int& x : w) x = static_cast<int>(x * q);
  RingPtr R = PolyRing::make(B.field(), B.ring()->names(), w);
  std::vector<Polynomial> gens;
  for (const auto& g : B.generators()) gens.push_back(transfer(g, R));
  return Presentation(R, gens, B.asserted_domain());
}

GradedRingMap frobenius_subalgebra(const Presentation& B, long q) {
  const unsigned p = B.field().characteristic();
  if (p == 0) throw PreconditionError("frobenius power needs positive characteristic");
  if (!is_power_of(q, p)) throw InputError("frobenius power: " + std::to_string(q) + " is not a power of " + std::to_string(p));
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < B.nvars(); ++i)
    gens.push_back(Polynomial::variable(B.ring(), i).pow(static_cast<unsigned>(q)));
  GradedRingMap free = subalgebra_map(B, gens);
  Presentation src(free.source().ring(), ring_map_kernel(free), B.asserted_domain());
  return GradedRingMap(src, B, gens);
}

bool is_module_finite(const GradedRingMap& phi) {
  std::vector<Polynomial> ext;
  for (const auto& im : phi.images())
    if (!im.is_zero()) ext.push_back(im);
  const Presentation& B = phi.target();
  Presentation Q(B.ring(), B.ideal().with(ext).generators());
  return hilbert_series(Q).dimension() <= 0;
}

Presentation irrelevant_saturation(const Presentation& A) {
  Ideal sat = saturation(A.ideal(), maximal_ideal(A.ring()));
  return Presentation(A.ring(), sat.generators(), A.asserted_domain());
}

bool is_zero_ring(const Presentation& A) { return A.ideal().is_unit(); }

GradedRingMap subalgebra_map(const Presentation& B, const std::vector<Polynomial>& gens) {
  std::vector<std::string> names;
  std::vector<int> w;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Polynomial& g = gens[i];
    if (g.is_zero() || !g.is_homogeneous() || g.degree() <= 0)
      throw InputError("subalgebra generator " + g.to_string() + " must be homogeneous of positive degree");
    names.push_back("g" + std::to_string(i));
    w.push_back(static_cast<int>(g.degree()));
  }
  RingPtr R = PolyRing::make(B.field(), names, w);
  return GradedRingMap(Presentation::polynomial_ring(R), B, gens);
}

bool subalgebra_contains(const Presentation& B, const std::vector<Polynomial>& big,
                         const std::vector<Polynomial>& small) {
  GradedRingMap phi = subalgebra_map(B, big);
  return std::all_of(small.begin(), small.end(), [&](const Polynomial& f) { return in_image(phi, f); });
}

}  // namespace gi
