#include "gi/error.hpp"
#include "gi/module.hpp"

#include <algorithm>
#include <numeric>

namespace gi {

class GbEngine {
 public:
  explicit GbEngine(const ModulePtr& module)
      : module_(module),
        F_(*module),
        K_(module->ring()->field()),
        ideal_(module->rank() == 1),
        by_comp_(module->rank()) {}

  /// Full reduction against the active basis elements, skipping `skip`.
  /// With `quotients`, records (reducer, multiplier, coefficient) per step.
  Vector reduce(const Vector& f, std::size_t skip = npos, std::vector<VTerm>* quotients = nullptr) const {
    // Working copy in increasing order so the lead sits at the back.
    std::vector<VTerm> work(f.terms_.rbegin(), f.terms_.rend());
    std::vector<VTerm> rem;
    std::vector<VTerm> buffer;
    while (!work.empty()) {
      const VTerm& t = work.back();
      std::size_t r = find_reducer(t.comp, t.mono, skip);
      if (r == npos) {
        rem.push_back(std::move(work.back()));
        work.pop_back();
        continue;
      }
      const Vector& g = basis_[r];
      Monomial q = quotient(t.mono, g.terms_.front().mono);
      Scalar c = K_.neg(t.coeff);  // g is monic
      if (quotients) quotients->push_back({static_cast<std::uint32_t>(r), q, t.coeff});
      work.pop_back();
      merge_tail(work, g, q, c, buffer);
    }
    Vector out(module_);
    out.terms_ = std::move(rem);
    return out;
  }

  /// Reduces only until the lead is irreducible; the tail is left as is.
  Vector top_reduce(const Vector& f) const {
    std::vector<VTerm> work(f.terms_.rbegin(), f.terms_.rend());
    std::vector<VTerm> buffer;
    while (!work.empty()) {
      const VTerm& t = work.back();
      std::size_t r = find_reducer(t.comp, t.mono, npos);
      if (r == npos) break;
      const Vector& g = basis_[r];
      Monomial q = quotient(t.mono, g.terms_.front().mono);
      Scalar c = K_.neg(t.coeff);
      work.pop_back();
      merge_tail(work, g, q, c, buffer);
    }
    Vector out(module_);
    out.terms_.assign(std::make_move_iterator(work.rbegin()), std::make_move_iterator(work.rend()));
    return out;
  }

  /// Adds a nonzero element whose lead is not divisible by any active lead.
  void insert(Vector h) {
    h = h.monic();
    const std::size_t k = basis_.size();
    const VTerm& lh = h.terms_.front();

    // Gebauer–Möller: candidate pairs with h.
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g : by_comp_[lh.comp]) {
      if (!active_[g]) continue;
      const Monomial& lg = basis_[g].terms_.front().mono;
      cands.push_back({g, lcm(lh.mono, lg), ideal_ && lh.mono.coprime(lg)});
    }
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) {
        kept.push_back(cands[a]);
        continue;
      }
      bool drop = false;
      for (std::size_t b = a + 1; b < cands.size() && !drop; ++b)
        if (cands[b].lcm.divides(cands[a].lcm)) drop = true;
      for (std::size_t b = 0; b < kept.size() && !drop; ++b)
        if (kept[b].lcm.divides(cands[a].lcm)) drop = true;
      if (!drop) kept.push_back(cands[a]);
    }

    // Chain criterion on existing pairs.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != lh.comp || !lh.mono.divides(p.lcm)) return false;
      const Monomial& li = basis_[p.i].terms_.front().mono;
      const Monomial& lj = basis_[p.j].terms_.front().mono;
      return lcm(li, lh.mono) != p.lcm && lcm(lj, lh.mono) != p.lcm;
    });

    for (auto& c : kept) {
      if (c.coprime) continue;
      long deg = F_.degree(lh.comp, c.lcm);
      pairs_.push_back({c.g, k, std::move(c.lcm), lh.comp, deg});
    }

    for (std::size_t g : by_comp_[lh.comp])
      if (active_[g] && lh.mono.divides(basis_[g].terms_.front().mono)) active_[g] = 0;

    basis_.push_back(std::move(h));
    active_.push_back(1);
    by_comp_[lh.comp].push_back(k);
  }

  /// Adds a reducer without forming pairs (for normal forms against a known basis).
  void add_reducer(const Vector& g) {
    const std::size_t k = basis_.size();
    basis_.push_back(g.monic());
    active_.push_back(1);
    by_comp_[basis_.back().terms_.front().comp].push_back(k);
  }

  bool has_pairs() const { return !pairs_.empty(); }
  long min_pair_degree() const {
    long d = pairs_.front().deg;
    for (const auto& p : pairs_) d = std::min(d, p.deg);
    return d;
  }

  /// Processes every pending pair of degree d, in a fixed order.
  void process_pairs_of_degree(long d) {
    std::vector<Pair> batch;
    std::vector<Pair> rest;
    for (auto& p : pairs_) (p.deg == d ? batch : rest).push_back(std::move(p));
    pairs_ = std::move(rest);
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      auto c = F_.compare(a.comp, a.lcm, b.comp, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    for (const auto& p : batch) {
      Vector s = spoly(p);
      Vector r = top_reduce(s);
      if (!r.is_zero()) insert(std::move(r));
    }
  }

  /// Active elements, tail-reduced when `interreduce` is set, sorted by
  /// increasing lead.
  std::vector<Vector> reduced_basis(bool interreduce = true) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) keep.push_back(i);
    std::vector<Vector> out;
    out.reserve(keep.size());
    for (std::size_t i : keep) out.push_back(interreduce ? reduce_tail(i).monic() : basis_[i]);
    std::sort(out.begin(), out.end(), [&](const Vector& a, const Vector& b) {
      const auto& x = a.terms_.front();
      const auto& y = b.terms_.front();
      return F_.compare(x.comp, x.mono, y.comp, y.mono) < 0;
    });
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    long deg;
  };

  std::size_t find_reducer(std::uint32_t comp, const Monomial& m, std::size_t skip) const {
    for (std::size_t g : by_comp_[comp]) {
      if (!active_[g] || g == skip) continue;
      if (basis_[g].terms_.front().mono.divides(m)) return g;
    }
    return npos;
  }

  Vector reduce_tail(std::size_t i) const {
    const Vector& g = basis_[i];
    Vector tail(module_);
    tail.terms_.assign(g.terms_.begin() + 1, g.terms_.end());
    Vector r = reduce(tail, i);
    Vector out(module_);
    out.terms_.reserve(r.terms_.size() + 1);
    out.terms_.push_back(g.terms_.front());
    for (auto& t : r.terms_) out.terms_.push_back(std::move(t));
    return out;
  }

  // work (increasing order) += c * q * (g without its lead).
  void merge_tail(std::vector<VTerm>& work, const Vector& g, const Monomial& q, const Scalar& c,
                  std::vector<VTerm>& buffer) const {
    buffer.clear();
    buffer.reserve(work.size() + g.terms_.size());
    std::size_t i = 0;
    std::size_t j = g.terms_.size();  // walk g's tail from its smallest term
    Monomial m;
    bool have_m = false;
    while (i < work.size() || j > 1) {
      if (j <= 1) {
        buffer.push_back(std::move(work[i++]));
        continue;
      }
      const VTerm& gt = g.terms_[j - 1];
      if (!have_m) {
        m = gt.mono * q;
        have_m = true;
      }
      auto cmp = i == work.size() ? std::strong_ordering::greater
                                  : F_.compare(work[i].comp, work[i].mono, gt.comp, m);
      if (cmp < 0) {
        buffer.push_back(std::move(work[i++]));
      } else if (cmp > 0) {
        buffer.push_back({gt.comp, std::move(m), K_.mul(gt.coeff, c)});
        --j;
        have_m = false;
      } else {
        Scalar s = K_.add(work[i].coeff, K_.mul(gt.coeff, c));
        if (!Field::is_zero(s)) buffer.push_back({gt.comp, std::move(m), std::move(s)});
        ++i;
        --j;
        have_m = false;
      }
    }
    work.swap(buffer);
  }

  Vector spoly(const Pair& p) const {
    const Vector& a = basis_[p.i];
    const Vector& b = basis_[p.j];
    Monomial qa = quotient(p.lcm, a.terms_.front().mono);
    Monomial qb = quotient(p.lcm, b.terms_.front().mono);
    std::vector<VTerm> work;
    std::vector<VTerm> buffer;
    merge_tail(work, a, qa, K_.from_int(1), buffer);
    merge_tail(work, b, qb, K_.from_int(-1), buffer);
    Vector s(module_);
    s.terms_.assign(std::make_move_iterator(work.rbegin()), std::make_move_iterator(work.rend()));
    return s;
  }

  ModulePtr module_;
  const FreeModule& F_;
  const Field& K_;
  bool ideal_;
  std::vector<Vector> basis_;
  std::vector<char> active_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<Pair> pairs_;
};

namespace {

void check_member(const ModulePtr& module, const Vector& v) {
  if (v.module() && v.module() != module && !(*v.module() == *module))
    throw InputError("generator lives in a different free module");
}

}  // namespace

ModuleGbResult module_groebner(const ModulePtr& module, const std::vector<Vector>& gens,
                               const ModuleGbOptions& options) {
  ModuleGbResult result;
  std::vector<Vector> inputs;
  inputs.reserve(gens.size());
  for (const auto& g : gens) {
    check_member(module, g);
    Vector v(module);
    if (!g.is_zero()) v = Vector::from_terms(module, g.terms());
    inputs.push_back(std::move(v));
  }
  result.homogeneous = std::all_of(inputs.begin(), inputs.end(),
                                   [](const Vector& v) { return v.is_homogeneous(); });

  GbEngine engine(module);
  if (!result.homogeneous) {
    for (const auto& v : inputs) {
      if (v.is_zero()) continue;
      Vector r = engine.top_reduce(v);
      if (!r.is_zero()) engine.insert(std::move(r));
    }
    while (engine.has_pairs()) engine.process_pairs_of_degree(engine.min_pair_degree());
    result.basis = engine.reduced_basis(options.interreduce);
    return result;
  }

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (!inputs[i].is_zero()) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    long da = inputs[a].degree(), db = inputs[b].degree();
    if (da != db) return da < db;
    return (a < options.ambient) > (b < options.ambient);
  });

  std::size_t next = 0;
  while (next < order.size() || engine.has_pairs()) {
    long d = next < order.size() ? inputs[order[next]].degree() : 0;
    if (engine.has_pairs() && (next == order.size() || engine.min_pair_degree() <= d))
      d = engine.min_pair_degree();
    while (engine.has_pairs() && engine.min_pair_degree() == d) engine.process_pairs_of_degree(d);
    while (next < order.size() && inputs[order[next]].degree() == d) {
      std::size_t idx = order[next++];
      Vector r = engine.top_reduce(inputs[idx]);
      if (r.is_zero()) continue;
      engine.insert(std::move(r));
      if (idx >= options.ambient) result.minimal.push_back(idx);
    }
  }
  std::sort(result.minimal.begin(), result.minimal.end());
  result.basis = engine.reduced_basis(options.interreduce);
  return result;
}

Vector module_normal_form(const Vector& f, const std::vector<Vector>& gb) {
  if (f.is_zero()) return f;
  GbEngine engine(f.module());
  for (const auto& g : gb)
    if (!g.is_zero()) engine.add_reducer(g);
  return engine.reduce(f);
}

Vector divide(const Vector& f, const std::vector<Vector>& basis, const ModulePtr& quotient_module,
              Vector& remainder) {
  if (quotient_module->rank() != basis.size()) throw InputError("divide: quotient module rank mismatch");
  GbEngine engine(f.module());
  for (const auto& g : basis) {
    if (g.is_zero()) throw InputError("divide: zero divisor");
    engine.add_reducer(g);
  }
  std::vector<VTerm> qs;
  remainder = engine.reduce(f, GbEngine::npos, &qs);
  const Field& K = quotient_module->ring()->field();
  for (auto& t : qs) t.coeff = K.div(t.coeff, basis[t.comp].lead().coeff);
  return Vector::from_terms(quotient_module, std::move(qs));
}

SyzygyResult syzygies(const ModulePtr& module, const std::vector<Vector>& elems,
                      const std::vector<long>& degrees) {
  if (elems.size() != degrees.size()) throw InputError("syzygies: one degree per element");
  const std::size_t r = module->rank();
  std::vector<long> aug_degrees = module->degrees();
  aug_degrees.insert(aug_degrees.end(), degrees.begin(), degrees.end());
  ModulePtr aug = FreeModule::make(module->ring(), aug_degrees);
  Scalar one = module->ring()->field().from_int(1);

  std::vector<Vector> gens;
  gens.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    check_member(module, elems[i]);
    std::vector<VTerm> ts = elems[i].terms();
    if (!elems[i].is_zero() && elems[i].is_homogeneous() && elems[i].degree() != degrees[i])
      throw PreconditionError("syzygies: element degree does not match the given degree");
    ts.push_back({static_cast<std::uint32_t>(r + i), Monomial(module->ring()->nvars()), one});
    gens.push_back(Vector::from_terms(aug, std::move(ts)));
  }
  // Position-over-term with the original components first eliminates them.
  ModuleGbOptions opt;
  opt.interreduce = false;
  auto gb = module_groebner(aug, gens, opt);

  SyzygyResult out;
  out.module = FreeModule::make(module->ring(), degrees);
  for (const auto& g : gb.basis) {
    if (g.lead().comp < r) continue;
    std::vector<VTerm> ts;
    for (const auto& t : g.terms()) ts.push_back({static_cast<std::uint32_t>(t.comp - r), t.mono, t.coeff});
    out.generators.push_back(Vector::from_terms(out.module, std::move(ts)));
  }
  return out;
}

std::vector<Vector> minimal_generators(const ModulePtr& module, const std::vector<Vector>& gens) {
  ModuleGbOptions opt;
  opt.interreduce = false;
  auto gb = module_groebner(module, gens, opt);
  if (!gb.homogeneous) throw PreconditionError("minimal_generators: inhomogeneous input");
  std::vector<Vector> out;
  for (std::size_t i : gb.minimal) out.push_back(Vector::from_terms(module, gens[i].terms()));
  return out;
}

}  // namespace gi
