#include "gi/hilbert.hpp"

#include "gi/error.hpp"

#include <algorithm>
#include <numeric>

namespace gi {

IntPoly::IntPoly(std::initializer_list<long> c) {
  for (long v : c) c_.emplace_back(v);
  trim();
}

IntPoly::IntPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }

IntPoly IntPoly::monomial(long deg, const mpz_class& c) {
  std::vector<mpz_class> v(deg + 1, 0);
  v[deg] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

bool IntPoly::divisible_by_one_minus(long w) const {
  // Sum of coefficients in each residue class mod w must vanish.
  for (long r = 0; r < w; ++r) {
    mpz_class s = 0;
    for (std::size_t i = r; i < c_.size(); i += w) s += c_[i];
    if (s != 0) return false;
  }
  return true;
}

IntPoly IntPoly::divide_one_minus(long w) const {
  if (!divisible_by_one_minus(w)) throw PreconditionError("IntPoly: not divisible by 1 - t^w");
  if (c_.empty()) return {};
  // q(t)(1 - t^w) = p(t)  =>  q_i = p_i + q_{i-w}
  std::vector<mpz_class> q(c_.size() > static_cast<std::size_t>(w) ? c_.size() - w : 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = c_[i];
    if (i >= static_cast<std::size_t>(w)) q[i] += q[i - w];
  }
  return IntPoly(std::move(q));
}

long IntPoly::order_at_one() const {
  if (is_zero()) throw PreconditionError("order at one of the zero polynomial");
  long k = 0;
  IntPoly p = *this;
  while (p.at_one() == 0) {
    p = p.divide_one_minus(1);
    ++k;
  }
  return k;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::shift(long k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> r(k, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class a = abs(c_[i]);
    if (s.empty()) {
      if (c_[i] < 0) s += "-";
    } else {
      s += c_[i] < 0 ? " - " : " + ";
    }
    if (i == 0 || a != 1) s += a.get_str();
    if (i > 0) {
      if (a != 1) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

long floor_div(long a, long b) {
  if (b <= 0) throw InputError("floor_div: divisor must be positive");
  long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

bool HilbertSeries::standard() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

long HilbertSeries::dimension() const {
  if (num_.is_zero()) return -1;
  return static_cast<long>(weights_.size()) - num_.order_at_one();
}

std::pair<IntPoly, std::vector<int>> HilbertSeries::cancelled() const {
  IntPoly n = num_;
  std::vector<int> left;
  std::vector<int> ws = weights_;
  std::sort(ws.rbegin(), ws.rend());
  for (int w : ws) {
    if (!n.is_zero() && n.divisible_by_one_minus(w))
      n = n.divide_one_minus(w);
    else
      left.push_back(w);
  }
  std::sort(left.begin(), left.end());
  return {n, left};
}

IntPoly HilbertSeries::h_polynomial() const {
  if (!standard()) throw UnsupportedError("h-polynomial needs a standard grading");
  IntPoly n = num_;
  long k = static_cast<long>(weights_.size()) - dimension();
  for (long i = 0; i < k; ++i) n = n.divide_one_minus(1);
  return n;
}

long HilbertSeries::multiplicity() const {
  if (!standard()) throw UnsupportedError("multiplicity needs a standard grading");
  if (num_.is_zero()) throw PreconditionError("multiplicity of the zero ring");
  return h_polynomial().at_one().get_si();
}

long HilbertSeries::degree() const {
  if (num_.is_zero()) throw PreconditionError("degree of the zero series");
  return num_.degree() - std::accumulate(weights_.begin(), weights_.end(), 0L);
}

std::vector<mpz_class> HilbertSeries::expansion(long maxdeg) const {
  std::vector<mpz_class> s(maxdeg + 1, 0);
  for (long i = 0; i <= maxdeg; ++i) s[i] = num_[i];
  // multiply by 1/(1 - t^w) as a running prefix sum with stride w
  for (int w : weights_)
    for (long i = w; i <= maxdeg; ++i) s[i] += s[i - w];
  return s;
}

std::string HilbertSeries::to_string() const {
  auto [n, left] = cancelled();
  std::string den;
  for (std::size_t i = 0; i < left.size();) {
    std::size_t j = i;
    while (j < left.size() && left[j] == left[i]) ++j;
    std::string f = left[i] == 1 ? "(1 - t)" : "(1 - t^" + std::to_string(left[i]) + ")";
    if (j - i > 1) f += "^" + std::to_string(j - i);
    den += den.empty() ? f : "*" + f;
    i = j;
  }
  std::string num = n.to_string();
  if (den.empty()) return num;
  if (n.coeffs().size() > 1 && n.coeffs().size() - std::count(n.coeffs().begin(), n.coeffs().end(), 0) > 1)
    num = "(" + num + ")";
  return num + " / " + den;
}

namespace {

void minimalize(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  std::vector<Monomial> out;
  for (auto& m : g) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(m));
  }
  g = std::move(out);
}

IntPoly one_minus(long d) { return IntPoly{1} - IntPoly::monomial(d); }

IntPoly numerator_rec(std::vector<Monomial> g, std::span<const int> w) {
  if (g.empty()) return IntPoly{1};
  minimalize(g);
  for (const auto& m : g)
    if (m.is_one()) return {};
  const std::size_t n = g.front().size();

  std::vector<int> count(n, 0);
  for (const auto& m : g)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) ++count[i];
  if (std::all_of(count.begin(), count.end(), [](int c) { return c <= 1; })) {
    IntPoly r{1};
    for (const auto& m : g) r = r * one_minus(m.degree(w));
    return r;
  }

  // Split off generators in variables disjoint from the rest.
  {
    std::vector<std::size_t> comp(g.size());
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](std::size_t x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    std::vector<long> owner(n, -1);
    for (std::size_t k = 0; k < g.size(); ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (g[k][i] > 0) {
          if (owner[i] < 0)
            owner[i] = static_cast<long>(k);
          else
            comp[find(k)] = find(static_cast<std::size_t>(owner[i]));
        }
    std::size_t root = find(0);
    std::vector<Monomial> a, b;
    for (std::size_t k = 0; k < g.size(); ++k) (find(k) == root ? a : b).push_back(g[k]);
    if (!b.empty()) return numerator_rec(std::move(a), w) * numerator_rec(std::move(b), w);
  }

  std::size_t x = std::max_element(count.begin(), count.end()) - count.begin();
  std::vector<int> ex;
  for (const auto& m : g)
    if (m[x] > 0) ex.push_back(m[x]);
  std::nth_element(ex.begin(), ex.begin() + ex.size() / 2, ex.end());
  int a = ex[ex.size() / 2];
  // The median keeps both branches balanced, but I + (x^a) must lose a
  // generator; otherwise fall back to the smallest exponent.
  if (std::count_if(ex.begin(), ex.end(), [&](int e) { return e > a; }) == 0 &&
      std::count(ex.begin(), ex.end(), a) < 2)
    a = *std::min_element(ex.begin(), ex.end());
  Monomial p = Monomial::variable(n, x, a);

  std::vector<Monomial> plus, colon;
  plus.reserve(g.size() + 1);
  colon.reserve(g.size());
  for (const auto& m : g) {
    if (!p.divides(m)) plus.push_back(m);
    colon.push_back(quotient(m, gcd(m, p)));
  }
  plus.push_back(p);
  return numerator_rec(std::move(plus), w) + numerator_rec(std::move(colon), w).shift(p.degree(w));
}

}  // namespace

IntPoly hilbert_numerator(std::vector<Monomial> gens, std::span<const int> weights) {
  for (const auto& m : gens)
    if (m.size() != weights.size()) throw InputError("hilbert_numerator: monomial size mismatch");
  return numerator_rec(std::move(gens), weights);
}

HilbertSeries hilbert_series(const Presentation& A) {
  const RingPtr& R = A.ring();
  auto leads = A.ideal().groebner().lead_monomials();
  return HilbertSeries(hilbert_numerator(std::move(leads), R->weights()), R->weights());
}

long krull_dimension(const Presentation& A) { return hilbert_series(A).dimension(); }

long multiplicity(const Presentation& A) {
  if (!A.is_standard_graded()) throw UnsupportedError("multiplicity needs a standard grading");
  return hilbert_series(A).multiplicity();
}

std::vector<long> h_vector(const Presentation& A) {
  auto [n, left] = hilbert_series(A).cancelled();
  std::vector<long> out;
  for (const auto& c : n.coeffs()) out.push_back(c.get_si());
  return out;
}

long a_invariant_fastpath(const Presentation& A, bool cm_certificate) {
  if (!cm_certificate)
    throw PreconditionError("a_invariant_fastpath requires a Cohen-Macaulay certificate");
  return hilbert_series(A).degree();
}

}  // namespace gi
