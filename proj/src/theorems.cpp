#include "gi/theorems.hpp"

#include "gi/error.hpp"
#include "gi/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace gi {

namespace {

using HS = HypothesisStatus;

HS from_bool(bool ok) { return ok ? HS::verified : HS::violated; }
HS from_optional(const std::optional<bool>& ok) { return ok ? from_bool(*ok) : HS::unverified; }
HS domain_status(const Presentation& P) { return P.asserted_domain() ? HS::user_asserted : HS::unverified; }

// CM + R1 is sufficient for normality; failing R1 rules it out.
HS normal_status(const InvariantReport& r) {
  if (r.is_r1 && !*r.is_r1) return HS::violated;
  if (r.is_r1 && r.is_cm) return HS::verified;
  return HS::unverified;
}

bool has_linear_form(const Presentation& A) {
  for (std::size_t i = 0; i < A.nvars(); ++i)
    if (A.ring()->weights()[i] == 1 && !A.ideal().contains(Polynomial::variable(A.ring(), i))) return true;
  return false;
}

std::optional<HS> separable_status(const ExtensionInstance& inst) {
  if (inst.characteristic == 0) return HS::verified;
  if (inst.computed_field_data) {
    if (inst.p_power == 1) return HS::verified;
    return std::nullopt;
  }
  if (inst.separability == Separability::separable || inst.p_power == 1) return HS::user_asserted;
  return std::nullopt;
}

std::optional<HS> purely_inseparable_status(const ExtensionInstance& inst) {
  if (inst.characteristic == 0) return std::nullopt;
  if (inst.computed_field_data) {
    if (inst.field_degree && inst.p_power == *inst.field_degree) return HS::verified;
    return std::nullopt;
  }
  if (inst.separability == Separability::purely_inseparable) return HS::user_asserted;
  return std::nullopt;
}

long require_p_power(const ExtensionInstance& inst, const std::string& theorem) {
  if (!inst.p_power)
    throw PreconditionError(theorem + " on " + inst.name + ": the inseparable degree p^e is unknown; supply it");
  return *inst.p_power;
}

// The Jacobian criterion behind is_r1 gets unreliable when p divides the
// degree of a relation (the Euler relation degenerates).
std::string jacobian_caveat(const Presentation& P, const std::string& label) {
  const unsigned p = P.field().characteristic();
  if (p == 0) return "";
  for (const auto& f : P.generators())
    if (f.degree() % p == 0) return "caveat: R1 of " + label + " via Jacobian with char dividing a relation degree";
  return "";
}

void add_note(TheoremVerdict& v, const std::string& note) {
  if (note.empty()) return;
  v.notes += (v.notes.empty() ? "" : "; ") + note;
}

TheoremVerdict not_applicable(TheoremVerdict v, std::string why) {
  v.conclusion = Conclusion::not_applicable;
  v.notes = std::move(why);
  return v;
}

TheoremVerdict conclude(TheoremVerdict v) {
  if (!v.comparisons.empty()) {
    v.lhs = v.comparisons.front().lhs;
    v.rhs = v.comparisons.front().rhs;
  }
  if (v.inequality_holds())
    v.conclusion = Conclusion::pass;
  else if (std::any_of(v.hypotheses.begin(), v.hypotheses.end(),
                       [](const Hypothesis& h) { return h.status == HS::violated; }))
    v.conclusion = Conclusion::counterexample_consistent;
  else
    v.conclusion = Conclusion::fail;
  return v;
}

TheoremVerdict verdict(std::string theorem, std::string instance) {
  TheoremVerdict v;
  v.theorem = std::move(theorem);
  v.instance = std::move(instance);
  return v;
}

long b2l(bool b) { return b ? 1 : 0; }

long zero_dim_length(const RingPtr& R, const std::vector<Polynomial>& gens) {
  auto hs = hilbert_series(Presentation(R, gens));
  if (hs.dimension() > 0) throw PreconditionError("length of a positive-dimensional quotient");
  return hs.cancelled().first.at_one().get_si();
}

// Relations of B must be homogeneous for the torus weights, and the image of
// each A variable a term of the declared weight.
void check_toric_consistency(const GradedRingMap& phi, const ToricData& t) {
  const std::size_t na = phi.source().nvars(), nb = phi.target().nvars();
  if (t.a_exponents.size() != na || t.b_exponents.size() != nb)
    throw InputError("toric data: expected one exponent vector per variable");
  const std::size_t r = t.a_exponents.empty() ? 0 : t.a_exponents[0].size();
  auto same_rank = [r](const std::vector<long>& v) { return v.size() == r; };
  if (!std::all_of(t.a_exponents.begin(), t.a_exponents.end(), same_rank) ||
      !std::all_of(t.b_exponents.begin(), t.b_exponents.end(), same_rank))
    throw InputError("toric data: exponent vectors of different lengths");
  auto weight = [&](const Monomial& m) {
    std::vector<long> w(r, 0);
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < r; ++k) w[k] += m[j] * t.b_exponents[j][k];
    return w;
  };
  for (const auto& g : phi.target().generators())
    for (const auto& term : g.terms())
      if (weight(term.mono) != weight(g.lead_term().mono))
        throw InputError("toric data: relation " + g.to_string() + " of B is not homogeneous for the exponents");
  for (std::size_t i = 0; i < na; ++i) {
    const Polynomial& im = phi.images()[i];
    if (im.terms().size() != 1)
      throw InputError("toric data: image of " + phi.source().ring()->names()[i] + " is not a monomial");
    if (weight(im.lead_term().mono) != t.a_exponents[i])
      throw InputError("toric data: exponent of " + phi.source().ring()->names()[i] +
                       " does not match its image");
  }
}

}  // namespace

InvariantReport invariant_report(const Presentation& A) {
  InvariantReport r;
  r.hilbert = hilbert_series(A);
  r.dim = r.hilbert.dimension();
  if (r.dim < 0) throw PreconditionError("invariant report of the zero ring");
  BettiTable b = betti_table(A);
  r.depth = static_cast<long>(A.nvars()) - b.projective_dimension();
  r.is_cm = r.depth == r.dim;
  const bool standard = A.is_standard_graded();
  if (standard) {
    r.edim = embedding_dimension(A);
    r.multiplicity = r.hilbert.multiplicity();
    r.regularity = b.regularity();
  }
  r.a_invariant = a_invariant(A);
  try {
    r.is_r1 = is_r1(A);
  } catch (const UnsupportedError&) {
  }
  r.has_min_mult = standard && (r.is_cm || A.asserted_domain()) && *r.multiplicity == *r.edim - r.dim + 1;
  return r;
}

std::string to_string(Separability s) {
  switch (s) {
    case Separability::separable: return "separable";
    case Separability::purely_inseparable: return "purely_inseparable";
    case Separability::mixed: return "mixed";
    case Separability::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HS::verified: return "verified";
    case HS::user_asserted: return "user-asserted";
    case HS::violated: return "violated";
    case HS::unverified: return "unverified";
  }
  return "unverified";
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::pass: return "pass";
    case Conclusion::fail: return "fail";
    case Conclusion::counterexample_consistent: return "counterexample-consistent";
    case Conclusion::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

ExtensionInstance make_instance(std::string name, GradedRingMap inclusion, std::optional<long> p_power,
                                Separability claim, std::optional<ToricData> toric) {
  ExtensionInstance inst;
  inst.name = std::move(name);
  inst.A = inclusion.source();
  inst.B = inclusion.target();
  if (inst.A.field() != inst.B.field()) throw InputError(inst.name + ": A and B over different fields");
  inst.characteristic = inst.A.field().characteristic();
  if (p_power && *p_power < 1) throw InputError(inst.name + ": p-power must be positive");
  inst.inclusion = std::move(inclusion);
  inst.separability = claim;
  if (toric) {
    check_toric_consistency(inst.inclusion, *toric);
    auto LA = lattice_of_monomial_algebra(toric->a_exponents);
    auto LB = lattice_of_monomial_algebra(toric->b_exponents);
    inst.field_degree = extension_index(LA, LB).get_si();
    long pe = inst.characteristic ? inseparable_degree(LA, LB, inst.characteristic).get_si() : 1;
    if (p_power && *p_power != pe)
      throw InputError(inst.name + ": supplied p-power " + std::to_string(*p_power) +
                       " differs from the computed inseparable degree " + std::to_string(pe));
    inst.p_power = pe;
    if (pe == 1)
      inst.separability = Separability::separable;
    else if (pe == *inst.field_degree)
      inst.separability = Separability::purely_inseparable;
    else
      inst.separability = Separability::mixed;
    inst.computed_field_data = true;
    inst.toric = std::move(toric);
  } else if (inst.characteristic == 0) {
    if (p_power && *p_power != 1) throw InputError(inst.name + ": p-power must be 1 in characteristic zero");
    inst.p_power = 1;
    inst.separability = Separability::separable;
    inst.computed_field_data = true;
  } else {
    if (p_power) {
      long q = *p_power;
      while (q % inst.characteristic == 0) q /= inst.characteristic;
      if (q != 1) throw InputError(inst.name + ": p-power is not a power of the characteristic");
    }
    inst.p_power = p_power;
  }
  return inst;
}

bool TheoremVerdict::inequality_holds() const {
  return std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return c.holds(); });
}

bool TheoremVerdict::hypothesis_violated(const std::string& name) const {
  const Hypothesis* h = hypothesis(name);
  return h && h->status == HS::violated;
}

const Hypothesis* TheoremVerdict::hypothesis(const std::string& name) const {
  for (const auto& h : hypotheses)
    if (h.name == name) return &h;
  return nullptr;
}

InstanceAnalysis::InstanceAnalysis(ExtensionInstance inst, std::uint64_t seed)
    : inst_(std::move(inst)), seed_(seed) {}

const InvariantReport& InstanceAnalysis::report_A() {
  if (!a_) a_ = invariant_report(inst_.A);
  return *a_;
}

const InvariantReport& InstanceAnalysis::report_B() {
  if (!b_) b_ = invariant_report(inst_.B);
  return *b_;
}

bool InstanceAnalysis::integral() {
  if (!integral_) integral_ = is_module_finite(inst_.inclusion);
  return *integral_;
}

bool InstanceAnalysis::injective() {
  if (!injective_) {
    auto ker = ring_map_kernel(inst_.inclusion);
    injective_ = std::all_of(ker.begin(), ker.end(), [&](const Polynomial& f) { return inst_.A.ideal().contains(f); });
  }
  return *injective_;
}

bool InstanceAnalysis::proper() {
  if (!proper_) {
    const auto& B = inst_.B;
    bool p = false;
    for (std::size_t j = 0; j < B.nvars() && !p; ++j) {
      Polynomial z = Polynomial::variable(B.ring(), j);
      p = !B.ideal().contains(z) && !in_image(inst_.inclusion, z);
    }
    proper_ = p;
  }
  return *proper_;
}

TheoremVerdict check_separable_bound(InstanceAnalysis& an) {
  const auto& inst = an.instance();
  TheoremVerdict v = verdict("sep", inst.name);
  auto sep = separable_status(inst);
  if (!sep) return not_applicable(v, "extension not known to be separable");
  const auto& ra = an.report_A();
  const auto& rb = an.report_B();
  v.hypotheses = {{"injective", from_bool(an.injective())},
                  {"integral", from_bool(an.integral())},
                  {"A domain", domain_status(inst.A)},
                  {"B domain", domain_status(inst.B)},
                  {"R1 of A", from_optional(ra.is_r1)},
                  {"separable", *sep}};
  v.comparisons.push_back({"a(A) <= a(B)", ra.a_invariant, rb.a_invariant, false});
  if (ra.regularity && rb.regularity && ra.is_cm) {
    long mid = rb.a_invariant + ra.dim;
    v.comparisons.push_back({"reg A <= a(B) + d", *ra.regularity, mid, false});
    v.comparisons.push_back({"a(B) + d <= reg B", mid, *rb.regularity, false});
  }
  add_note(v, jacobian_caveat(inst.A, "A"));
  return conclude(std::move(v));
}

TheoremVerdict check_dim2_bound(InstanceAnalysis& an) {
  const auto& inst = an.instance();
  TheoremVerdict v = verdict("dim2", inst.name);
  if (inst.characteristic == 0) return not_applicable(v, "characteristic zero");
  const auto& ra = an.report_A();
  const auto& rb = an.report_B();
  if (ra.dim != 2 || rb.dim != 2) return not_applicable(v, "dim A and dim B must both be 2");
  const long q = require_p_power(inst, "dim2");
  const bool integral = an.integral();
  HS sing = HS::unverified;
  if (ra.is_r1 && !*ra.is_r1)
    sing = HS::violated;
  else if (ra.is_r1 && integral)
    sing = HS::verified;
  v.hypotheses = {{"injective", from_bool(an.injective())},
                  {"integral", from_bool(integral)},
                  {"A domain", domain_status(inst.A)},
                  {"B domain", domain_status(inst.B)},
                  {"A contains a linear form", from_bool(has_linear_form(inst.A))},
                  {"Sing condition on J", sing}};
  v.comparisons.push_back({"floor(a(A)/q) <= a(B)", floor_div(ra.a_invariant, q), rb.a_invariant, false});
  if (ra.regularity && ra.is_cm)
    v.comparisons.push_back(
        {"floor((reg A - 2)/q) <= a(B)", floor_div(*ra.regularity - 2, q), rb.a_invariant, false});
  v.notes = "q = " + std::to_string(q);
  add_note(v, jacobian_caveat(inst.A, "A"));
  return conclude(std::move(v));
}

TheoremVerdict check_purely_inseparable(InstanceAnalysis& an) {
  const auto& inst = an.instance();
  TheoremVerdict v = verdict("pure-insep", inst.name);
  auto pure = purely_inseparable_status(inst);
  if (!pure) return not_applicable(v, "extension not known to be purely inseparable");
  if (!inst.A.is_standard_graded()) return not_applicable(v, "A must be standard graded");
  const auto& ra = an.report_A();
  const auto& rb = an.report_B();
  if (ra.dim != 2 || rb.dim != 2) return not_applicable(v, "dim A and dim B must both be 2");
  const long q = require_p_power(inst, "pure-insep");
  v.hypotheses = {{"injective", from_bool(an.injective())},
                  {"integral", from_bool(an.integral())},
                  {"A domain", domain_status(inst.A)},
                  {"B domain", domain_status(inst.B)},
                  {"A normal", normal_status(ra)},
                  {"purely inseparable", *pure}};

  const Presentation& B = inst.B;
  std::vector<Polynomial> aq, bq;
  for (const auto& m : standard_monomials(inst.A, q)) {
    Polynomial im = inst.inclusion.apply(m);
    if (!B.ideal().contains(im)) aq.push_back(im);
  }
  for (std::size_t j = 0; j < B.nvars(); ++j) {
    Polynomial z = Polynomial::variable(B.ring(), j).pow(static_cast<unsigned>(q));
    if (!B.ideal().contains(z)) bq.push_back(z);
  }
  const bool contained = subalgebra_contains(B, aq, bq);
  const bool equal = contained && subalgebra_contains(B, bq, aq);
  if (equal)
    v.comparisons.push_back({"floor(a(A)/q) = a(B)", floor_div(ra.a_invariant, q), rb.a_invariant, true});
  v.comparisons.push_back({"B^q in A^(q)", b2l(contained), 1, true});
  HS b_normal = normal_status(rb);
  if (b_normal != HS::unverified)
    v.comparisons.push_back({"B normal iff B^q = A^(q)", b2l(b_normal == HS::verified), b2l(equal), true});
  v.notes = "q = " + std::to_string(q) + (equal ? ", B^q = A^(q)" : ", B^q != A^(q)");
  add_note(v, jacobian_caveat(inst.A, "A"));
  add_note(v, jacobian_caveat(inst.B, "B"));
  return conclude(std::move(v));
}

TheoremVerdict check_general_bound(InstanceAnalysis& an) {
  const auto& inst = an.instance();
  TheoremVerdict v = verdict("general", inst.name);
  if (inst.characteristic == 0) return not_applicable(v, "characteristic zero");
  if (!inst.A.is_standard_graded() || !inst.B.is_standard_graded())
    return not_applicable(v, "A and B must be standard graded");
  const long q = require_p_power(inst, "general");
  const auto& ra = an.report_A();
  const auto& rb = an.report_B();
  v.hypotheses = {{"injective", from_bool(an.injective())},
                  {"integral", from_bool(an.integral())},
                  {"A domain", domain_status(inst.A)},
                  {"B domain", domain_status(inst.B)},
                  {"R1 of A", from_optional(ra.is_r1)}};
  v.comparisons.push_back(
      {"floor((a(A) + d - 2)/q) <= reg B - 2", floor_div(ra.a_invariant + ra.dim - 2, q), *rb.regularity - 2, false});
  v.notes = "q = " + std::to_string(q);
  add_note(v, jacobian_caveat(inst.A, "A"));
  return conclude(std::move(v));
}

TheoremVerdict check_min_mult_equivalences(const Presentation& A, const std::string& name, std::uint64_t seed) {
  TheoremVerdict v = verdict("minmult-eq", name);
  if (!A.is_standard_graded()) return not_applicable(v, "A must be standard graded");
  InvariantReport r = invariant_report(A);
  if (!r.is_cm && !A.asserted_domain()) return not_applicable(v, "A must be Cohen-Macaulay or an asserted domain");
  v.hypotheses = {{"standard graded", HS::verified},
                  {"Cohen-Macaulay", from_bool(r.is_cm)},
                  {"A domain", domain_status(A)}};

  std::mt19937_64 rng(seed);
  auto theta = parameter_system(A, rng, 40, 1);
  if (!theta) throw PreconditionError("minmult-eq on " + name + ": no linear system of parameters found");
  Ideal J = A.ideal().with(*theta);
  bool m2 = true;
  for (std::size_t i = 0; i < A.nvars() && m2; ++i)
    for (std::size_t j = i; j < A.nvars() && m2; ++j)
      m2 = J.contains(Polynomial::variable(A.ring(), i) * Polynomial::variable(A.ring(), j));

  const bool c1 = *r.multiplicity == *r.edim - r.dim + 1;
  const bool c2 = *r.regularity <= 1;
  const bool c3 = r.is_cm && r.a_invariant <= 1 - r.dim;
  const bool c4 = r.is_cm && m2;
  v.comparisons = {{"e = edim - d + 1 iff reg <= 1", b2l(c1), b2l(c2), true},
                   {"e = edim - d + 1 iff CM and a <= 1 - d", b2l(c1), b2l(c3), true},
                   {"e = edim - d + 1 iff CM and m^2 in J", b2l(c1), b2l(c4), true}};
  v.notes = std::string("conditions: ") + (c1 ? "1" : "0") + (c2 ? "1" : "0") + (c3 ? "1" : "0") + (c4 ? "1" : "0");
  return conclude(std::move(v));
}

TheoremVerdict check_min_mult_descent(InstanceAnalysis& an) {
  const auto& inst = an.instance();
  TheoremVerdict v = verdict("minmult-descent", inst.name);
  if (!inst.A.is_standard_graded() || !inst.B.is_standard_graded())
    return not_applicable(v, "A and B must be standard graded");
  Hypothesis route{"", HS::unverified};
  if (auto sep = separable_status(inst))
    route = {"separable", *sep};
  else if (inst.characteristic != 0 && inst.p_power)
    route = {"inseparable degree known", inst.computed_field_data ? HS::verified : HS::user_asserted};
  else
    return not_applicable(v, "neither separable nor of known inseparable degree");
  const auto& ra = an.report_A();
  const auto& rb = an.report_B();
  v.hypotheses = {{"injective", from_bool(an.injective())},
                  {"integral", from_bool(an.integral())},
                  {"A domain", domain_status(inst.A)},
                  {"B domain", domain_status(inst.B)},
                  {"A normal", normal_status(ra)},
                  {"A Cohen-Macaulay", from_bool(ra.is_cm)},
                  route};
  if (!rb.has_min_mult) {
    v.notes = "B does not have minimal multiplicity";
    return conclude(std::move(v));
  }
  v.comparisons.push_back({"A has minimal multiplicity", b2l(ra.has_min_mult), 1, true});
  return conclude(std::move(v));
}

ContractionResult contraction_criterion(const GradedRingMap& inclusion, std::uint64_t seed) {
  const Presentation& A = inclusion.source();
  std::mt19937_64 rng(seed);
  auto theta = parameter_system(A, rng, 40, 1);
  if (!theta) throw PreconditionError("contraction: no linear system of parameters of A found");
  std::vector<Polynomial> images;
  for (const auto& t : *theta) images.push_back(inclusion.apply(t));
  Ideal C = preimage(inclusion, images);
  Ideal J = A.ideal().with(*theta);
  ContractionResult res{*theta, C == J, 0};
  if (!res.equal)
    res.excess = zero_dim_length(A.ring(), J.generators()) - zero_dim_length(A.ring(), C.generators());
  return res;
}

TheoremVerdict check_mcm_quotient(InstanceAnalysis& an) {
  const auto& inst = an.instance();
  TheoremVerdict v = verdict("mcm-quotient", inst.name);
  if (!inst.A.is_standard_graded()) return not_applicable(v, "A must be standard graded");
  if (!an.proper()) return not_applicable(v, "A = B: the extension is not proper");
  const auto& ra = an.report_A();
  const auto& rb = an.report_B();
  v.hypotheses = {{"injective", from_bool(an.injective())},
                  {"integral", from_bool(an.integral())},
                  {"A Cohen-Macaulay", from_bool(ra.is_cm)},
                  {"B Cohen-Macaulay", from_bool(rb.is_cm)},
                  {"A minimal multiplicity", from_bool(ra.has_min_mult)}};
  auto c = contraction_criterion(inst.inclusion, an.seed());
  v.comparisons.push_back({"length (JB cap A)/J = 0", c.excess, 0, true});
  if (!c.equal && c.excess == 0) v.comparisons.push_back({"JB cap A = J", 0, 1, true});
  return conclude(std::move(v));
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"sep",     "dim2",       "pure-insep",     "general",
                                            "minmult-eq", "minmult-descent", "mcm-quotient"};
  return ids;
}

TheoremVerdict run_check(const std::string& theorem, InstanceAnalysis& an) {
  if (theorem == "sep") return check_separable_bound(an);
  if (theorem == "dim2") return check_dim2_bound(an);
  if (theorem == "pure-insep") return check_purely_inseparable(an);
  if (theorem == "general") return check_general_bound(an);
  if (theorem == "minmult-eq") return check_min_mult_equivalences(an.instance().A, an.instance().name, an.seed());
  if (theorem == "minmult-descent") return check_min_mult_descent(an);
  if (theorem == "mcm-quotient") return check_mcm_quotient(an);
  throw InputError("unknown theorem '" + theorem + "'");
}

namespace {

Field field_for(unsigned characteristic) {
  return characteristic ? Field::prime(characteristic) : Field::rationals();
}

std::string field_suffix(unsigned characteristic) {
  return characteristic ? "-gf" + std::to_string(characteristic) : "-qq";
}

std::vector<Polynomial> vars(const RingPtr& R) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < R->nvars(); ++i) v.push_back(Polynomial::variable(R, i));
  return v;
}

// k[x,y] inside k[x,y,z]/(z^2 - xy).
ExtensionInstance quadric_instance(unsigned characteristic) {
  Field k = field_for(characteristic);
  auto RA = PolyRing::standard(k, {"x", "y"});
  auto RB = PolyRing::standard(k, {"x", "y", "z"});
  auto x = Polynomial::variable(RB, 0), y = Polynomial::variable(RB, 1), z = Polynomial::variable(RB, 2);
  Presentation B(RB, {z * z - x * y}, true);
  GradedRingMap inc(Presentation::polynomial_ring(RA), B, {x, y});
  return make_instance("quadric" + field_suffix(characteristic), inc, {}, Separability::unknown,
                       ToricData{{{2, 0}, {0, 2}}, {{2, 0}, {0, 2}, {1, 1}}});
}

ExtensionInstance trivial_instance(unsigned characteristic) {
  auto R = PolyRing::standard(field_for(characteristic), {"x", "y"});
  auto S = Presentation::polynomial_ring(R);
  return make_instance("trivial" + field_suffix(characteristic), GradedRingMap(S, S, vars(R)), {},
                       Separability::unknown, ToricData{{{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}});
}

Presentation twisted_cubic(const Field& k) {
  auto R = PolyRing::standard(k, {"a", "b", "c", "d"});
  auto v = vars(R);
  return Presentation(R, {v[0] * v[2] - v[1] * v[1], v[1] * v[3] - v[2] * v[2], v[0] * v[3] - v[1] * v[2]}, true);
}

// Twisted cubic inside Ver_3(k[x,y]); the inclusion is an isomorphism.
ExtensionInstance tc_veronese_instance() {
  Field k = Field::rationals();
  auto S = Presentation::polynomial_ring(PolyRing::standard(k, {"x", "y"}));
  auto ver = veronese(S, 3);
  Presentation A = twisted_cubic(k);
  GradedRingMap inc(A, ver.ring, vars(ver.ring.ring()));
  ToricData t{{{3, 0}, {2, 1}, {1, 2}, {0, 3}}, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}};
  return make_instance("tc-ver3", inc, {}, Separability::unknown, t);
}

// Twisted cubic inside its double cover adjoining t with t^2 = ad.
ExtensionInstance tc_double_instance() {
  Field k = Field::rationals();
  Presentation A = twisted_cubic(k);
  auto RB = PolyRing::standard(k, {"a", "b", "c", "d", "t"});
  auto v = vars(RB);
  Presentation B(RB,
                 {v[0] * v[2] - v[1] * v[1], v[1] * v[3] - v[2] * v[2], v[0] * v[3] - v[1] * v[2],
                  v[4] * v[4] - v[0] * v[3]},
                 true);
  GradedRingMap inc(A, B, {v[0], v[1], v[2], v[3]});
  ToricData t{{{6, 0}, {4, 2}, {2, 4}, {0, 6}}, {{6, 0}, {4, 2}, {2, 4}, {0, 6}, {3, 3}}};
  return make_instance("tc-double", inc, {}, Separability::unknown, t);
}

}  // namespace

ExtensionInstance pinchpoint_family(int n, unsigned characteristic) {
  if (n < 2) throw InputError("pinch point family needs n >= 2");
  Field k = field_for(characteristic);
  auto S = Presentation::polynomial_ring(PolyRing::standard(k, {"x", "y"}));
  Presentation B = veronese(S, n).ring;
  auto RA = PolyRing::standard(k, {"u", "v", "w"});
  auto u = Polynomial::variable(RA, 0), v = Polynomial::variable(RA, 1), w = Polynomial::variable(RA, 2);
  Presentation A(RA, {v.pow(n) - u.pow(n - 1) * w}, true);
  const auto& RB = B.ring();
  GradedRingMap inc(A, B,
                    {Polynomial::variable(RB, 0), Polynomial::variable(RB, 1),
                     Polynomial::variable(RB, static_cast<std::size_t>(n))});
  ToricData t;
  t.a_exponents = {{n, 0}, {n - 1, 1}, {0, n}};
  for (long i = 0; i <= n; ++i) t.b_exponents.push_back({n - i, i});
  return make_instance("pinch" + std::to_string(n) + field_suffix(characteristic), inc, {}, Separability::unknown,
                       t);
}

std::vector<SuiteEntry> builtin_suite() {
  std::vector<SuiteEntry> s;
  s.push_back({quadric_instance(0), {"sep", "minmult-eq", "minmult-descent", "mcm-quotient"}});
  s.push_back({quadric_instance(2),
               {"dim2", "pure-insep", "general", "minmult-eq", "minmult-descent", "mcm-quotient"}});
  s.push_back({quadric_instance(3), {"dim2", "general", "minmult-descent", "mcm-quotient"}});
  s.push_back({trivial_instance(0), {"sep", "minmult-eq", "minmult-descent"}});
  s.push_back({trivial_instance(2), {"dim2", "pure-insep", "general", "minmult-descent"}});
  for (int n = 3; n <= 6; ++n) s.push_back({pinchpoint_family(n), {"sep", "minmult-eq", "minmult-descent"}});
  s.push_back({pinchpoint_family(3, 2), {"dim2", "general", "minmult-descent"}});
  s.push_back({pinchpoint_family(5, 2), {"dim2", "general"}});
  s.push_back({tc_veronese_instance(), {"sep", "minmult-eq", "minmult-descent"}});
  s.push_back({tc_double_instance(), {"sep", "minmult-eq", "minmult-descent", "mcm-quotient"}});
  return s;
}

SuiteReport run_suite(const std::vector<SuiteEntry>& entries, std::uint64_t seed, unsigned parallel) {
  struct Slot {
    SuiteReport::InstanceRecord record;
    std::vector<TheoremVerdict> verdicts;
  };
  std::vector<std::optional<Slot>> slots(entries.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      try {
        const SuiteEntry& e = entries[i];
        InstanceAnalysis an(e.instance, seed);
        Slot slot{{e.instance, an.report_A(), an.report_B()}, {}};
        for (const auto& th : e.theorems) {
          if (th == "minmult-eq") {
            slot.verdicts.push_back(check_min_mult_equivalences(e.instance.A, e.instance.name + ".A", seed));
            slot.verdicts.push_back(check_min_mult_equivalences(e.instance.B, e.instance.name + ".B", seed));
          } else {
            slot.verdicts.push_back(run_check(th, an));
          }
        }
        slots[i] = std::move(slot);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = entries.size();
      }
    }
  };

  const unsigned nthreads = std::max(1u, std::min<unsigned>(parallel, static_cast<unsigned>(entries.size())));
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SuiteReport rep{seed, {}, {}};
  for (auto& s : slots) {
    rep.instances.push_back(std::move(s->record));
    for (auto& v : s->verdicts) rep.verdicts.push_back(std::move(v));
  }
  std::stable_sort(rep.instances.begin(), rep.instances.end(),
                   [](const auto& a, const auto& b) { return a.instance.name < b.instance.name; });
  std::stable_sort(rep.verdicts.begin(), rep.verdicts.end(), [](const TheoremVerdict& a, const TheoremVerdict& b) {
    return std::tie(a.instance, a.theorem) < std::tie(b.instance, b.theorem);
  });
  return rep;
}

}  // namespace gi
