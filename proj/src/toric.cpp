#include "gi/toric.hpp"

#include "gi/error.hpp"

#include <algorithm>

namespace gi {

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t ncols) {
  for (const auto& r : rows)
    if (r.size() != ncols) throw InputError("hermite_normal_form: ragged matrix");
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
    // Euclid on column col among rows top..end
    for (;;) {
      std::size_t piv = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (piv == rows.size() || abs(rows[r][col]) < abs(rows[piv][col]))) piv = r;
      if (piv == rows.size()) break;
      std::swap(rows[top], rows[piv]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t k = col; k < ncols; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top < rows.size() && rows[top][col] != 0) {
      if (rows[top][col] < 0)
        for (auto& x : rows[top]) x = -x;
      for (std::size_t r = 0; r < top; ++r) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        if (q != 0)
          for (std::size_t k = col; k < ncols; ++k) rows[r][k] -= q * rows[top][k];
      }
      ++top;
    }
  }
  rows.resize(top);
  return rows;
}

std::vector<mpz_class> smith_invariants(IntMatrix m) {
  const std::size_t R = m.size(), C = R ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < R && t < C) {
    // smallest nonzero entry in the trailing block becomes the pivot
    std::size_t pr = R, pc = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (m[i][j] != 0 && (pr == R || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == R) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < R; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
      for (std::size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < C; ++j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
      for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // divisibility: fold a non-multiple into the pivot row and retry
    bool divides = true;
    for (std::size_t i = t + 1; i < R && divides; ++i)
      for (std::size_t j = t + 1; j < C; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < C; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
    if (divides) ++t;
  }
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < t; ++i) d.push_back(abs(m[i][i]));
  return d;
}

ExponentLattice::ExponentLattice(IntMatrix generators, std::size_t ambient_rank)
    : basis_(hermite_normal_form(std::move(generators), ambient_rank)), n_(ambient_rank) {}

IntVector ExponentLattice::coordinates(const IntVector& v) const {
  if (v.size() != n_) throw InputError("lattice: vector has the wrong length");
  IntVector rest = v, coords(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t col = 0;
    while (basis_[i][col] == 0) ++col;
    for (std::size_t k = 0; k < col; ++k)
      if (rest[k] != 0) throw InputError("lattice: vector not in the lattice");
    if (rest[col] % basis_[i][col] != 0) throw InputError("lattice: vector not in the lattice");
    coords[i] = rest[col] / basis_[i][col];
    for (std::size_t k = col; k < n_; ++k) rest[k] -= coords[i] * basis_[i][k];
  }
  for (const auto& x : rest)
    if (x != 0) throw InputError("lattice: vector not in the lattice");
  return coords;
}

bool ExponentLattice::contains(const IntVector& v) const {
  try {
    coordinates(v);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

bool ExponentLattice::contains(const ExponentLattice& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const IntVector& v) { return contains(v); });
}

ExponentLattice ExponentLattice::operator+(const ExponentLattice& other) const {
  if (n_ != other.n_) throw InputError("lattice sum: ambient ranks differ");
  IntMatrix g = basis_;
  g.insert(g.end(), other.basis_.begin(), other.basis_.end());
  return ExponentLattice(std::move(g), n_);
}

ExponentLattice ExponentLattice::scaled(const mpz_class& k) const {
  IntMatrix g = basis_;
  for (auto& r : g)
    for (auto& x : r) x *= k;
  return ExponentLattice(std::move(g), n_);
}

std::string ExponentLattice::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ", ";
    s += "(";
    for (std::size_t k = 0; k < n_; ++k) {
      if (k) s += ",";
      s += basis_[i][k].get_str();
    }
    s += ")";
  }
  return s + "]";
}

ExponentLattice lattice_of_monomial_algebra(const std::vector<std::vector<long>>& generators) {
  if (generators.empty()) throw InputError("lattice: no generators");
  const std::size_t n = generators[0].size();
  IntMatrix m;
  for (const auto& g : generators) {
    if (g.size() != n) throw InputError("lattice: generators of different lengths");
    if (std::all_of(g.begin(), g.end(), [](long x) { return x == 0; }))
      throw InputError("lattice: zero generator");
    IntVector r;
    for (long x : g) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  return ExponentLattice(std::move(m), n);
}

mpz_class extension_index(const ExponentLattice& LA, const ExponentLattice& LB) {
  if (LA.ambient_rank() != LB.ambient_rank()) throw InputError("extension_index: ambient ranks differ");
  if (LA.rank() != LB.rank()) throw InputError("extension_index: lattice ranks differ");
  if (!LB.contains(LA)) throw InputError("extension_index: not a sublattice");
  IntMatrix T;
  for (const auto& v : LA.basis()) T.push_back(LB.coordinates(v));
  mpz_class idx = 1;
  for (const auto& d : smith_invariants(T)) idx *= d;
  return idx;
}

mpz_class inseparable_degree(const ExponentLattice& LA, const ExponentLattice& LB, unsigned long p) {
  mpz_class index = extension_index(LA, LB);
  long vp = 0;
  for (mpz_class r = index; r % p == 0; r /= p) ++vp;
  mpz_class pe = 1;
  mpz_class prev = extension_index(LA + LB.scaled(pe), LB);
  for (long e = 1; e <= vp + 1; ++e) {
    pe *= p;
    mpz_class cur = extension_index(LA + LB.scaled(pe), LB);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw Error("inseparable_degree: no stabilization within the expected bound");
}

}  // namespace gi
