#pragma once

#include "gi/hilbert.hpp"
#include "gi/module.hpp"
#include "gi/presentation.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gi {

/// beta_{i,j}: rank of the degree-j part of the i-th free module.
class BettiTable {
 public:
  void add(long i, long j, long count = 1);
  long operator()(long i, long j) const;
  const std::map<std::pair<long, long>, long>& entries() const { return entries_; }

  long projective_dimension() const;
  /// max{j - i}; -inf (LONG_MIN) for the empty table.
  long regularity() const;
  /// sum_i (-1)^i sum_j beta_{i,j} t^j.
  IntPoly alternating_sum() const;
  /// Macaulay2-style table (rows j - i, columns i).
  std::string to_string() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) = default;

 private:
  std::map<std::pair<long, long>, long> entries_;
};

/// F_0 <- F_1 <- ... <- F_p; maps[i] lists the images of the basis of
/// F_{i+1} in F_i.
struct FreeResolution {
  std::vector<ModulePtr> modules;
  std::vector<std::vector<Vector>> maps;

  std::size_t length() const { return maps.size(); }
  BettiTable betti() const;
};

/// Generators of all relations among `vectors`.
std::vector<Vector> syzygy_module(const ModulePtr& F, const std::vector<Vector>& vectors);

/// Minimal graded free resolution of coker(gens -> F). F itself is taken as
/// F_0, so gens should lie in the maximal ideal times F for minimality.
FreeResolution minimal_free_resolution(const ModulePtr& F, const std::vector<Vector>& gens);
FreeResolution minimal_free_resolution(const Presentation& A);
BettiTable betti_table(const Presentation& A);

/// n - projective dimension.
long depth(const Presentation& A);
/// Exact. Uses a homogeneous system of parameters theta when one is found:
/// A is Cohen-Macaulay iff HS(A/theta A) = prod(1 - t^{deg theta_i}) HS(A).
/// Otherwise compares depth with dimension.
bool is_cohen_macaulay(const Presentation& A);
/// max{j - i : beta_{i,j} != 0}; standard graded only.
long regularity(const Presentation& A);

/// dim(A) homogeneous elements of degree `deg` (lcm of the weights when 0)
/// generating an ideal of finite colength in A, or nullopt. Tries random
/// combinations first, then an exhaustive search over small prime fields.
std::optional<std::vector<Polynomial>> parameter_system(const Presentation& A, std::mt19937_64& rng,
                                                        int attempts = 40, long deg = 0);

struct CanonicalModulePresentation {
  /// Degrees of the minimal generators.
  std::vector<long> generator_degrees;
  /// Relations among the generators, elements of the free module on them.
  ModulePtr module;
  std::vector<Vector> relations;
};

/// Ext^{n-d}_S(A, S(-sum w)) as (kernel generators) modulo (image),
/// minimalized. Throws PreconditionError when it is zero.
CanonicalModulePresentation canonical_module(const Presentation& A, bool with_relations = true);
/// -(initial degree of the canonical module).
long a_invariant(const Presentation& A);

/// Standard graded only.
long embedding_dimension(const Presentation& A);

/// dim V(I + (n-d)-minors of the Jacobian); -1 when empty. Throws
/// UnsupportedError when there are more than `max_minors` minors.
long singular_locus_dimension(const Presentation& A, std::size_t max_minors = 20000);
/// Singular locus of dimension <= d - 2. Random combinations of minors
/// (elements of the Jacobian ideal) certify a positive answer; a negative
/// answer needs all minors and throws UnsupportedError beyond max_minors.
bool is_r1(const Presentation& A, std::size_t max_minors = 20000);

}  // namespace gi
