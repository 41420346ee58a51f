#pragma once

#include "gi/constructions.hpp"
#include "gi/hilbert.hpp"
#include "gi/toric.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gi {

inline constexpr std::uint64_t kDefaultSeed = 20140101;

struct InvariantReport {
  long dim = 0;
  long depth = 0;
  /// Standard graded rings only.
  std::optional<long> edim;
  std::optional<long> multiplicity;
  std::optional<long> regularity;
  long a_invariant = 0;
  bool is_cm = false;
  /// Empty when the Jacobian computation was out of reach.
  std::optional<bool> is_r1;
  bool has_min_mult = false;
  HilbertSeries hilbert;
};

/// Every field from the hilbert and resolution modules; the a-invariant
/// through the canonical module.
InvariantReport invariant_report(const Presentation& A);

enum class Separability { separable, purely_inseparable, mixed, unknown };
std::string to_string(Separability s);

/// Monomial generators of A and B inside one Laurent polynomial ring, for
/// extensions of monomial algebras.
struct ToricData {
  std::vector<std::vector<long>> a_exponents;
  std::vector<std::vector<long>> b_exponents;
};

struct ExtensionInstance {
  std::string name;
  Presentation A, B;
  GradedRingMap inclusion;
  unsigned characteristic = 0;
  /// Inseparable degree p^e; 1 in characteristic zero.
  std::optional<long> p_power;
  Separability separability = Separability::unknown;
  /// Field degree [Quot B : Quot A], known for toric instances.
  std::optional<long> field_degree;
  std::optional<ToricData> toric;
  /// p_power and separability were computed rather than supplied.
  bool computed_field_data = false;
};

/// Builds an instance from an inclusion. With toric data the field degree,
/// the inseparable degree and the separability are computed (and must agree
/// with any supplied p_power). In characteristic zero p_power is 1 and the
/// extension separable.
ExtensionInstance make_instance(std::string name, GradedRingMap inclusion, std::optional<long> p_power = {},
                                Separability claim = Separability::unknown,
                                std::optional<ToricData> toric = {});

enum class HypothesisStatus { verified, user_asserted, violated, unverified };
enum class Conclusion { pass, fail, counterexample_consistent, not_applicable };
std::string to_string(HypothesisStatus s);
std::string to_string(Conclusion c);

struct Hypothesis {
  std::string name;
  HypothesisStatus status;
};

struct Comparison {
  std::string label;
  long lhs;
  long rhs;
  bool equality;  ///< lhs = rhs required, otherwise lhs <= rhs
  bool holds() const { return equality ? lhs == rhs : lhs <= rhs; }
};

struct TheoremVerdict {
  std::string theorem;
  std::string instance;
  std::vector<Hypothesis> hypotheses;
  /// The first comparison (0, 0 when not applicable).
  long lhs = 0;
  long rhs = 0;
  std::vector<Comparison> comparisons;
  Conclusion conclusion = Conclusion::not_applicable;
  std::string notes;

  bool inequality_holds() const;
  bool hypothesis_violated(const std::string& name) const;
  const Hypothesis* hypothesis(const std::string& name) const;
};

/// Lazily computed data shared by the checks on one instance.
class InstanceAnalysis {
 public:
  explicit InstanceAnalysis(ExtensionInstance inst, std::uint64_t seed = kDefaultSeed);

  const ExtensionInstance& instance() const { return inst_; }
  std::uint64_t seed() const { return seed_; }

  const InvariantReport& report_A();
  const InvariantReport& report_B();
  bool integral();
  bool injective();
  /// Some generator of B lies outside the image of A.
  bool proper();

 private:
  ExtensionInstance inst_;
  std::uint64_t seed_;
  std::optional<InvariantReport> a_, b_;
  std::optional<bool> integral_, injective_, proper_;
};

TheoremVerdict check_separable_bound(InstanceAnalysis& an);
TheoremVerdict check_dim2_bound(InstanceAnalysis& an);
TheoremVerdict check_purely_inseparable(InstanceAnalysis& an);
TheoremVerdict check_general_bound(InstanceAnalysis& an);
TheoremVerdict check_min_mult_descent(InstanceAnalysis& an);
TheoremVerdict check_mcm_quotient(InstanceAnalysis& an);
/// Throws PreconditionError when no linear system of parameters is found.
TheoremVerdict check_min_mult_equivalences(const Presentation& A, const std::string& name,
                                           std::uint64_t seed = kDefaultSeed);

/// Theorem ids: sep, dim2, pure-insep, general, minmult-eq, minmult-descent,
/// mcm-quotient. minmult-eq runs on A. Throws InputError for unknown ids.
TheoremVerdict run_check(const std::string& theorem, InstanceAnalysis& an);
const std::vector<std::string>& theorem_ids();

/// Contraction test: for a sampled linear system of parameters x of A,
/// whether (x)B ∩ A = (x)A. Throws PreconditionError when A has no linear
/// system of parameters.
struct ContractionResult {
  std::vector<Polynomial> parameters;
  bool equal;
  /// length of (JB ∩ A)/J
  long excess;
};
ContractionResult contraction_criterion(const GradedRingMap& inclusion, std::uint64_t seed = kDefaultSeed);

/// A = k[u,v,w]/(v^n - u^{n-1} w) inside B = Ver_n(k[x,y]), both standard
/// graded, u, v, w mapping to x^n, x^{n-1}y, y^n. char 0 or a prime.
ExtensionInstance pinchpoint_family(int n, unsigned characteristic = 0);

struct SuiteEntry {
  ExtensionInstance instance;
  std::vector<std::string> theorems;
};
std::vector<SuiteEntry> builtin_suite();

struct SuiteReport {
  std::uint64_t seed;
  struct InstanceRecord {
    ExtensionInstance instance;
    InvariantReport A, B;
  };
  std::vector<InstanceRecord> instances;  ///< sorted by name
  std::vector<TheoremVerdict> verdicts;   ///< sorted by (instance, theorem)
};
/// Runs the suite entries on up to `parallel` threads; the report does not
/// depend on the thread count.
SuiteReport run_suite(const std::vector<SuiteEntry>& entries, std::uint64_t seed = kDefaultSeed,
                      unsigned parallel = 1);

}  // namespace gi
