#include "gi/resolution.hpp"

#include "gi/error.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <climits>
#include <numeric>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

namespace gi {

void BettiTable::add(long i, long j, long count) {
  if (count == 0) return;
  entries_[{i, j}] += count;
}

long BettiTable::operator()(long i, long j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

long BettiTable::projective_dimension() const {
  long p = -1;
  for (const auto& [k, v] : entries_) p = std::max(p, k.first);
  return p;
}

long BettiTable::regularity() const {
  long r = LONG_MIN;
  for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
  return r;
}

IntPoly BettiTable::alternating_sum() const {
  IntPoly s;
  for (const auto& [k, v] : entries_) {
    IntPoly m = IntPoly::monomial(k.second, k.first % 2 == 0 ? v : -v);
    s = s + m;
  }
  return s;
}

std::string BettiTable::to_string() const {
  if (entries_.empty()) return "(empty)\n";
  long pd = projective_dimension();
  long lo = LONG_MAX, hi = LONG_MIN;
  for (const auto& [k, v] : entries_) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  std::ostringstream os;
  os << "      ";
  for (long i = 0; i <= pd; ++i) os << ' ' << std::setw(5) << i;
  os << "\n total:";
  for (long i = 0; i <= pd; ++i) {
    long t = 0;
    for (const auto& [k, v] : entries_)
      if (k.first == i) t += v;
    os << ' ' << std::setw(5) << t;
  }
  os << '\n';
  for (long r = lo; r <= hi; ++r) {
    os << std::setw(5) << r << ':';
    for (long i = 0; i <= pd; ++i) {
      long v = (*this)(i, i + r);
      os << ' ' << std::setw(5) << (v ? std::to_string(v) : std::string("."));
    }
    os << '\n';
  }
  return os.str();
}

BettiTable FreeResolution::betti() const {
  BettiTable b;
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (long d : modules[i]->degrees()) b.add(static_cast<long>(i), d);
  return b;
}

namespace {

std::vector<long> degrees_of(const std::vector<Vector>& vs) {
  std::vector<long> d;
  d.reserve(vs.size());
  for (const auto& v : vs) d.push_back(v.degree());
  return d;
}

// One level of a Schreyer resolution: the images of the basis of `module`
// (a Schreyer module over the previous level) in the previous level.
struct Level {
  ModulePtr module;
  std::vector<Vector> images;
};

// Schreyer's algorithm: the minimal S-pairs of a Gröbner basis, reduced with
// recorded quotients, form a Gröbner basis of its syzygies for the induced
// order, so the construction repeats level by level.
std::vector<Level> schreyer_frame(const ModulePtr& F, const std::vector<Vector>& gens, std::size_t levels) {
  ModuleGbOptions opt;
  opt.interreduce = false;
  std::vector<Vector> G = module_groebner(F, gens, opt).basis;
  std::vector<Level> out;
  ModulePtr base = F;
  while (!G.empty() && out.size() < levels) {
    std::vector<std::uint32_t> comps;
    std::vector<Monomial> monos;
    for (const auto& g : G) {
      comps.push_back(g.lead().comp);
      monos.push_back(g.lead().mono);
    }
    ModulePtr Fk = FreeModule::make_schreyer(base, comps, monos);
    const Field& K = Fk->ring()->field();
    std::vector<std::vector<std::size_t>> by_comp(base->rank());
    for (std::size_t i = 0; i < G.size(); ++i) by_comp[comps[i]].push_back(i);

    std::vector<Vector> next;
    for (std::size_t a = 0; a < G.size(); ++a) {
      // Minimal generators of (lcm(m_a, m_b) / m_a : b > a, same component).
      std::vector<std::pair<Monomial, std::size_t>> cands;
      for (std::size_t b : by_comp[comps[a]])
        if (b > a) cands.emplace_back(quotient(lcm(monos[a], monos[b]), monos[a]), b);
      std::vector<std::pair<Monomial, std::size_t>> mins;
      for (std::size_t x = 0; x < cands.size(); ++x) {
        bool redundant = false;
        for (std::size_t y = 0; y < cands.size() && !redundant; ++y) {
          if (x == y || !cands[y].first.divides(cands[x].first)) continue;
          redundant = cands[y].first != cands[x].first || y < x;
        }
        if (!redundant) mins.push_back(cands[x]);
      }
      for (const auto& [qa, b] : mins) {
        Monomial qb = quotient(qa * monos[a], monos[b]);
        Scalar ca = K.inv(G[a].lead().coeff), cb = K.neg(K.inv(G[b].lead().coeff));
        Vector v = G[a].mul_term(qa, ca) + G[b].mul_term(qb, cb);
        Vector rem;
        Vector q = divide(v, G, Fk, rem);
        if (!rem.is_zero()) throw Error("schreyer frame: S-vector does not reduce to zero");
        std::vector<VTerm> ts{{static_cast<std::uint32_t>(a), qa, ca}, {static_cast<std::uint32_t>(b), qb, cb}};
        for (const auto& t : q.terms()) ts.push_back({t.comp, t.mono, K.neg(t.coeff)});
        next.push_back(Vector::from_terms(Fk, std::move(ts)));
      }
    }
    out.push_back({Fk, std::move(G)});
    G = std::move(next);
    base = Fk;
  }
  return out;
}

using Column = std::map<std::uint32_t, Polynomial>;

Column to_column(const Vector& v) {
  std::map<std::uint32_t, std::vector<Term>> parts;
  for (const auto& t : v.terms()) parts[t.comp].push_back({t.mono, t.coeff});
  Column c;
  for (auto& [k, ts] : parts) c.emplace(k, Polynomial::from_terms(v.module()->ring(), std::move(ts)));
  return c;
}

// Cancels unit entries of maps 2.. of a (graded) resolution by change of
// basis; what remains is a minimal resolution of the same module.
FreeResolution minimize(const ModulePtr& F, const std::vector<Level>& frame, std::size_t max_len) {
  const std::size_t L = frame.size();
  std::vector<std::vector<Column>> cols(L);  // cols[k][a]: image of basis a of level k+1
  std::vector<std::vector<char>> alive(L);
  for (std::size_t k = 0; k < L; ++k) {
    for (const auto& v : frame[k].images) cols[k].push_back(to_column(v));
    alive[k].assign(frame[k].images.size(), 1);
  }
  const Field& K = F->ring()->field();
  for (std::size_t k = 1; k < L; ++k) {
    bool found = true;
    while (found) {
      found = false;
      for (std::size_t a = 0; a < cols[k].size(); ++a) {
        if (!alive[k][a]) continue;
        std::optional<std::pair<std::uint32_t, Scalar>> pivot;
        for (const auto& [b, p] : cols[k][a])
          if (p.is_constant()) {
            pivot.emplace(b, p.terms().front().coeff);
            break;
          }
        if (!pivot) continue;
        found = true;
        const auto [b, u] = *pivot;
        const Column colA = cols[k][a];
        for (std::size_t c = 0; c < cols[k].size(); ++c) {
          if (c == a || !alive[k][c]) continue;
          auto it = cols[k][c].find(b);
          if (it == cols[k][c].end()) continue;
          Polynomial lambda = it->second.scale(K.inv(u));
          Column& col = cols[k][c];
          for (const auto& [r, p] : colA) {
            auto jt = col.find(r);
            Polynomial np = (jt == col.end() ? Polynomial(F->ring()) : jt->second) - lambda * p;
            if (np.is_zero()) {
              if (jt != col.end()) col.erase(jt);
            } else if (jt == col.end()) {
              col.emplace(r, std::move(np));
            } else {
              jt->second = std::move(np);
            }
          }
        }
        alive[k][a] = 0;
        alive[k - 1][b] = 0;
        if (k + 1 < L)
          for (auto& col : cols[k + 1]) col.erase(static_cast<std::uint32_t>(a));
      }
    }
  }
  FreeResolution R;
  R.modules.push_back(F);
  const std::size_t len = std::min(L, max_len);
  std::vector<std::uint32_t> prev_index;  // old -> new basis index in the previous module
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<long> degs;
    std::vector<std::uint32_t> index(cols[k].size(), UINT32_MAX);
    for (std::size_t a = 0; a < cols[k].size(); ++a)
      if (alive[k][a]) {
        index[a] = static_cast<std::uint32_t>(degs.size());
        degs.push_back(frame[k].module->degrees()[a]);
      }
    if (degs.empty()) break;
    const ModulePtr& target = R.modules.back();
    std::vector<Vector> images;
    for (std::size_t a = 0; a < cols[k].size(); ++a) {
      if (!alive[k][a]) continue;
      std::vector<VTerm> ts;
      for (const auto& [r, p] : cols[k][a]) {
        std::uint32_t nr = k == 0 ? r : prev_index[r];
        if (nr == UINT32_MAX) throw Error("minimize: entry in a cancelled row");
        for (const auto& t : p.terms()) ts.push_back({nr, t.mono, t.coeff});
      }
      images.push_back(Vector::from_terms(target, std::move(ts)));
    }
    R.maps.push_back(std::move(images));
    R.modules.push_back(FreeModule::make(F->ring(), std::move(degs)));
    prev_index = std::move(index);
  }
  return R;
}

FreeResolution resolve(const ModulePtr& F, const std::vector<Vector>& gens, std::size_t max_len) {
  std::vector<Vector> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return FreeResolution{{F}, {}};
  // Level 1 must be minimal too: start from minimal generators, whose
  // Gröbner basis is only the frame's first level.
  std::vector<Vector> mins = minimal_generators(F, nonzero);
  std::size_t levels = max_len == SIZE_MAX ? SIZE_MAX : max_len + 1;
  auto frame = schreyer_frame(F, mins, levels);
  return minimize(F, frame, max_len);
}

std::vector<Vector> ideal_vectors(const Presentation& A, const ModulePtr& F) {
  std::vector<Vector> v;
  for (const auto& g : A.generators()) v.push_back(as_vector(F, g));
  return v;
}

}  // namespace

std::vector<Vector> syzygy_module(const ModulePtr& F, const std::vector<Vector>& vectors) {
  std::vector<long> degs;
  for (const auto& v : vectors) degs.push_back(v.is_zero() ? 0 : v.degree());
  auto syz = syzygies(F, vectors, degs);
  std::vector<Vector> out;
  for (auto& s : syz.generators)
    if (!s.is_zero()) out.push_back(std::move(s));
  return out;
}

FreeResolution minimal_free_resolution(const ModulePtr& F, const std::vector<Vector>& gens) {
  return resolve(F, gens, SIZE_MAX);
}

FreeResolution minimal_free_resolution(const Presentation& A) {
  ModulePtr F = rank_one(A.ring());
  return resolve(F, ideal_vectors(A, F), SIZE_MAX);
}

BettiTable betti_table(const Presentation& A) { return minimal_free_resolution(A).betti(); }

long depth(const Presentation& A) {
  if (A.ideal().is_unit()) throw PreconditionError("depth of the zero ring");
  return static_cast<long>(A.nvars()) - betti_table(A).projective_dimension();
}

namespace {

long lcm_of_weights(const RingPtr& R) {
  long l = 1;
  for (int w : R->weights()) l = std::lcm(l, static_cast<long>(w));
  return l;
}

void monomials_of_degree(const RingPtr& R, long deg, std::size_t i, std::vector<std::int32_t>& e,
                         std::vector<Monomial>& out) {
  if (i == R->nvars()) {
    if (deg == 0) out.push_back(Monomial(std::span<const std::int32_t>(e)));
    return;
  }
  const int w = R->weights()[i];
  for (long k = deg / w; k >= 0; --k) {
    e[i] = static_cast<std::int32_t>(k);
    monomials_of_degree(R, deg - k * w, i + 1, e, out);
  }
  e[i] = 0;
}

Polynomial combination(const RingPtr& R, const std::vector<Monomial>& basis, const std::vector<long>& c) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0) ts.push_back({basis[i], R->field().from_int(c[i])});
  return Polynomial::from_terms(R, std::move(ts));
}

long quotient_dimension(const Presentation& A, const std::vector<Polynomial>& extra) {
  return hilbert_series(Presentation(A.ring(), A.ideal().with(extra).generators())).dimension();
}

bool search(const Presentation& A, const std::vector<Polynomial>& cands, long d,
            std::vector<Polynomial>& chosen, std::size_t start, long& budget) {
  if (static_cast<long>(chosen.size()) == d) return true;
  for (std::size_t i = start; i < cands.size() && budget > 0; ++i) {
    --budget;
    chosen.push_back(cands[i]);
    if (quotient_dimension(A, chosen) == d - static_cast<long>(chosen.size()) &&
        search(A, cands, d, chosen, i + 1, budget))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Polynomial>> parameter_system(const Presentation& A, std::mt19937_64& rng,
                                                        int attempts, long deg) {
  const RingPtr& R = A.ring();
  long d = krull_dimension(A);
  if (d < 0) throw PreconditionError("parameter system of the zero ring");
  if (d == 0) return std::vector<Polynomial>{};
  if (deg <= 0) deg = lcm_of_weights(R);
  std::vector<Monomial> basis;
  std::vector<std::int32_t> e(R->nvars(), 0);
  monomials_of_degree(R, deg, 0, e, basis);
  if (basis.empty()) return std::nullopt;

  const unsigned p = R->field().characteristic();
  std::uniform_int_distribution<long> coeff(p ? 0 : -20, p ? static_cast<long>(p) - 1 : 20);
  for (int k = 0; k < attempts; ++k) {
    std::vector<Polynomial> theta;
    for (long i = 0; i < d; ++i) {
      std::vector<long> c(basis.size());
      for (auto& x : c) x = coeff(rng);
      theta.push_back(combination(R, basis, c));
    }
    if (quotient_dimension(A, theta) == 0) return theta;
  }
  // Over a small prime field enumerate all elements up to scaling.
  if (p == 0) return std::nullopt;
  double count = std::pow(static_cast<double>(p), static_cast<double>(basis.size()));
  if (count > 5000) return std::nullopt;
  std::vector<Polynomial> cands;
  std::vector<long> c(basis.size(), 0);
  for (long idx = 1; idx < static_cast<long>(count); ++idx) {
    long v = idx;
    for (auto& x : c) {
      x = v % p;
      v /= p;
    }
    // keep the representative whose first nonzero coefficient is 1
    auto first = std::find_if(c.begin(), c.end(), [](long x) { return x != 0; });
    if (*first != 1) continue;
    cands.push_back(combination(R, basis, c));
  }
  std::vector<Polynomial> chosen;
  long budget = 20000;
  if (search(A, cands, d, chosen, 0, budget)) return chosen;
  return std::nullopt;
}

bool is_cohen_macaulay(const Presentation& A) {
  long d = krull_dimension(A);
  if (d < 0) throw PreconditionError("Cohen-Macaulay test on the zero ring");
  if (d == 0) return true;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  if (auto theta = parameter_system(A, rng, 20)) {
    long D = (*theta)[0].degree();
    IntPoly lhs = hilbert_series(Presentation(A.ring(), A.ideal().with(*theta).generators())).numerator();
    IntPoly rhs = hilbert_series(A).numerator();
    IntPoly f = IntPoly{1} - IntPoly::monomial(D);
    for (long i = 0; i < d; ++i) rhs = rhs * f;
    return lhs == rhs;
  }
  return depth(A) == d;
}

long regularity(const Presentation& A) {
  if (!A.is_standard_graded()) throw UnsupportedError("regularity needs a standard grading");
  return betti_table(A).regularity();
}

namespace {

ModulePtr dual(const ModulePtr& F, long sigma) {
  std::vector<long> d;
  for (long a : F->degrees()) d.push_back(sigma - a);
  return FreeModule::make(F->ring(), std::move(d));
}

// Rows of the matrix whose columns are `cols` (elements of a module of rank
// `nrows`), as elements of `target` (one component per column).
std::vector<Vector> rows_of(const std::vector<Vector>& cols, std::size_t nrows, const ModulePtr& target) {
  std::vector<std::vector<VTerm>> rows(nrows);
  for (std::uint32_t j = 0; j < cols.size(); ++j)
    for (const auto& t : cols[j].terms()) rows[t.comp].push_back({j, t.mono, t.coeff});
  std::vector<Vector> out;
  for (auto& r : rows) out.push_back(Vector::from_terms(target, std::move(r)));
  return out;
}

}  // namespace

CanonicalModulePresentation canonical_module(const Presentation& A, bool with_relations) {
  const RingPtr& R = A.ring();
  const long n = static_cast<long>(R->nvars());
  const long d = krull_dimension(A);
  if (d < 0) throw PreconditionError("canonical module of the zero ring");
  const long c = n - d;
  const long sigma = R->weight_sum();

  ModulePtr F0 = rank_one(R);
  FreeResolution res = resolve(F0, ideal_vectors(A, F0), static_cast<std::size_t>(c + 1));
  if (static_cast<long>(res.length()) < c)
    throw PreconditionError("canonical module: projective dimension below the codimension");

  ModulePtr Fc = dual(res.modules[c], sigma);
  std::vector<Vector> kernel;
  if (static_cast<long>(res.length()) > c) {
    ModulePtr Fc1 = dual(res.modules[c + 1], sigma);
    auto rows = rows_of(res.maps[c], res.modules[c]->rank(), Fc1);
    std::vector<long> degs = Fc->degrees();
    auto syz = syzygies(Fc1, rows, degs);
    Fc = syz.module;
    for (auto& s : syz.generators)
      if (!s.is_zero()) kernel.push_back(std::move(s));
  } else {
    for (std::size_t k = 0; k < Fc->rank(); ++k) kernel.push_back(Vector::basis(Fc, k));
  }

  std::vector<Vector> image;
  if (c >= 1)
    for (auto& r : rows_of(res.maps[c - 1], res.modules[c - 1]->rank(), Fc))
      if (!r.is_zero()) image.push_back(std::move(r));

  std::vector<Vector> all = image;
  all.insert(all.end(), kernel.begin(), kernel.end());
  ModuleGbOptions opt;
  opt.ambient = image.size();
  opt.interreduce = false;
  auto gb = module_groebner(Fc, all, opt);
  std::vector<Vector> kept;
  for (std::size_t i : gb.minimal) kept.push_back(all[i]);
  if (kept.empty()) throw PreconditionError("canonical module is zero; check the dimension");

  CanonicalModulePresentation out;
  out.generator_degrees = degrees_of(kept);
  out.module = FreeModule::make(R, out.generator_degrees);
  if (with_relations) {
    std::vector<Vector> gens = kept;
    gens.insert(gens.end(), image.begin(), image.end());
    auto syz = syzygies(Fc, gens, degrees_of(gens));
    std::vector<Vector> proj;
    for (const auto& s : syz.generators) {
      std::vector<VTerm> ts;
      for (const auto& t : s.terms())
        if (t.comp < kept.size()) ts.push_back(t);
      Vector v = Vector::from_terms(out.module, std::move(ts));
      if (!v.is_zero()) proj.push_back(std::move(v));
    }
    if (!proj.empty()) out.relations = minimal_generators(out.module, proj);
  }
  return out;
}

long a_invariant(const Presentation& A) {
  auto w = canonical_module(A, false);
  return -*std::min_element(w.generator_degrees.begin(), w.generator_degrees.end());
}

long embedding_dimension(const Presentation& A) {
  if (!A.is_standard_graded()) throw UnsupportedError("embedding dimension needs a standard grading");
  long linear = 0;
  for (const auto& g : A.ideal().groebner().generators())
    if (g.degree() == 1) ++linear;
  return static_cast<long>(A.nvars()) - linear;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r > 1e18 ? SIZE_MAX : static_cast<std::size_t>(r + 0.5);
}

// Determinant of a square matrix of polynomials, reduced modulo gb after
// every product (expansion over column subsets, row by row).
Polynomial det_mod(const std::vector<std::vector<Polynomial>>& M, const GroebnerBasis& gb) {
  const std::size_t c = M.size();
  const RingPtr& R = gb.ring();
  std::map<unsigned, Polynomial> cur{{0u, Polynomial::from_int(R, 1)}};
  for (std::size_t r = 0; r < c; ++r) {
    std::map<unsigned, Polynomial> next;
    for (const auto& [mask, val] : cur) {
      for (std::size_t j = 0; j < c; ++j) {
        if (mask & (1u << j)) continue;
        if (M[r][j].is_zero()) continue;
        // sign: number of used columns greater than j
        int greater = 0;
        for (std::size_t k = j + 1; k < c; ++k)
          if (mask & (1u << k)) ++greater;
        Polynomial term = gb.normal_form(val * M[r][j]);
        if (greater % 2) term = -term;
        auto [it, fresh] = next.try_emplace(mask | (1u << j), term);
        if (!fresh) it->second = it->second + term;
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find((1u << c) - 1);
  return it == cur.end() ? Polynomial(R) : it->second;
}

struct Jacobian {
  std::vector<std::vector<Polynomial>> M;  // rows = generators, cols = variables
  std::vector<long> gen_degrees;
  long d;
  long c;
};

Jacobian jacobian(const Presentation& A) {
  Jacobian J;
  J.d = krull_dimension(A);
  if (J.d < 0) throw PreconditionError("singular locus of the zero ring");
  J.c = static_cast<long>(A.nvars()) - J.d;
  std::vector<Polynomial> gens =
      A.ideal().is_zero() ? std::vector<Polynomial>{} : minimal_generators(A.ideal());
  for (const auto& g : gens) {
    J.gen_degrees.push_back(g.degree());
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < A.nvars(); ++i) row.push_back(g.derivative(i));
    J.M.push_back(std::move(row));
  }
  return J;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), 0);
  if (k > n) return;
  for (;;) {
    f(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

long exact_locus(const Presentation& A, const Jacobian& J, std::size_t max_minors) {
  if (J.c == 0) return -1;
  const std::size_t g = J.M.size(), n = A.nvars(), c = static_cast<std::size_t>(J.c);
  if (g < c) return J.d;
  std::size_t count = binomial(g, c);
  std::size_t cols = binomial(n, c);
  if (count == SIZE_MAX || cols == SIZE_MAX || count * cols > max_minors)
    throw UnsupportedError("singular locus: too many Jacobian minors (" + std::to_string(count) + " x " +
                           std::to_string(cols) + ")");
  const GroebnerBasis& gb = A.ideal().groebner();
  std::vector<Polynomial> minors;
  for_each_subset(g, c, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(n, c, [&](const std::vector<std::size_t>& cs) {
      std::vector<std::vector<Polynomial>> sub(c, std::vector<Polynomial>(c));
      for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = 0; b < c; ++b) sub[a][b] = J.M[rs[a]][cs[b]];
      Polynomial m = det_mod(sub, gb);
      if (!m.is_zero()) minors.push_back(std::move(m));
    });
  });
  return quotient_dimension(A, minors);
}

constexpr std::uint64_t kCertificatePrime = 2147483629;

// Clears denominators of f (up to the content) and reduces into Rp.
Polynomial integral_mod_p(const Polynomial& f, const RingPtr& Rp) {
  mpz_class l = 1;
  for (const auto& t : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    mpz_class v = t.coeff.get_num() * (l / t.coeff.get_den());
    Scalar s = Rp->field().from_fraction(v, 1);
    if (!Field::is_zero(s)) ts.push_back({t.mono, s});
  }
  return Polynomial::from_terms(Rp, std::move(ts));
}

// Minors of P*Jac*Q lie in the Jacobian ideal; a few generic ones usually
// already cut the locus down. True when they certify codim >= 2.
bool random_minor_certificate(const Presentation& A, const Jacobian& J) {
  const std::size_t g = J.M.size(), n = A.nvars(), c = static_cast<std::size_t>(J.c);
  const RingPtr& R = A.ring();
  const GroebnerBasis& gb = A.ideal().groebner();
  const unsigned p = R->field().characteristic();
  std::mt19937_64 rng(0x2545f4914f6cdd1dULL);
  std::uniform_int_distribution<long> coeff(p ? 0 : -9, p ? static_cast<long>(p) - 1 : 9);
  std::vector<Polynomial> minors;
  // Homogeneous multipliers keep every entry of P*Jac*Q of one degree:
  // row k is scaled into degree top, column b into degree w_b - wmin.
  const long top = *std::max_element(J.gen_degrees.begin(), J.gen_degrees.end());
  const long wmin = *std::min_element(R->weights().begin(), R->weights().end());
  auto random_form = [&](long deg) {
    std::vector<Monomial> basis;
    std::vector<std::int32_t> e(n, 0);
    monomials_of_degree(R, deg, 0, e, basis);
    std::vector<long> cs(basis.size());
    for (auto& x : cs) x = coeff(rng);
    return combination(R, basis, cs);
  };
  for (int attempt = 0; attempt < 3 * static_cast<int>(J.d) + 6; ++attempt) {
    std::vector<std::vector<Polynomial>> PM(c, std::vector<Polynomial>(n, Polynomial(R)));
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t k = 0; k < g; ++k) {
        Polynomial f = random_form(top - J.gen_degrees[k]);
        if (f.is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (!J.M[k][b].is_zero()) PM[a][b] += f * J.M[k][b];
      }
    std::vector<std::vector<Polynomial>> sub(c, std::vector<Polynomial>(c, Polynomial(R)));
    for (std::size_t b = 0; b < c; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial f = random_form(R->weights()[k] - wmin);
        if (f.is_zero()) continue;
        for (std::size_t a = 0; a < c; ++a)
          if (!PM[a][k].is_zero()) sub[a][b] += PM[a][k] * f;
      }
    Polynomial m = det_mod(sub, gb);
    if (m.is_zero()) continue;
    minors.push_back(std::move(m));
    if (minors.size() < 2) continue;
    if (quotient_dimension(A, minors) <= J.d - 2) return true;
  }
  return false;
}

}  // namespace

long singular_locus_dimension(const Presentation& A, std::size_t max_minors) {
  return exact_locus(A, jacobian(A), max_minors);
}

bool is_r1(const Presentation& A, std::size_t max_minors) {
  Jacobian J = jacobian(A);
  if (J.c == 0) return true;
  const std::size_t g = J.M.size(), c = static_cast<std::size_t>(J.c);
  if (g < c) return J.d <= J.d - 2;
  if (c > 20) throw UnsupportedError("is_r1: codimension too large");
  if (A.field().is_rationals()) {
    // The ideals involved are homogeneous, so fibre dimension over Spec Z is
    // upper semicontinuous: a bound modulo p also holds over Q.
    RingPtr Rp = PolyRing::make(Field::prime(kCertificatePrime), A.ring()->names(), A.ring()->weights());
    std::vector<Polynomial> gens;
    for (const auto& f : A.ideal().generators()) gens.push_back(integral_mod_p(f, Rp));
    Presentation Ap(Rp, std::move(gens));
    Jacobian Jp = J;
    for (auto& row : Jp.M)
      for (auto& e : row) e = integral_mod_p(e, Rp);
    if (random_minor_certificate(Ap, Jp)) return true;
  } else if (random_minor_certificate(A, J)) {
    return true;
  }
  return exact_locus(A, J, max_minors) <= J.d - 2;
}

}  // namespace gi
