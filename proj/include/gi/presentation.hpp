#pragma once

#include "gi/groebner.hpp"

#include <string>
#include <vector>

namespace gi {

/// A = S/I for a weighted polynomial ring S and a homogeneous ideal I.
/// Whether A is a domain is never checked; it is recorded as an assertion.
class GradedQuotientPresentation {
 public:
  GradedQuotientPresentation() = default;
  /// Throws InputError when a generator is inhomogeneous.
  GradedQuotientPresentation(RingPtr ring, std::vector<Polynomial> gens, bool asserted_domain = false);

  static GradedQuotientPresentation polynomial_ring(RingPtr ring) { return {std::move(ring), {}, true}; }

  const RingPtr& ring() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  const std::vector<Polynomial>& generators() const { return ideal_.generators(); }
  bool asserted_domain() const { return asserted_domain_; }
  GradedQuotientPresentation with_domain_assertion(bool d) const;
  std::size_t nvars() const { return ring()->nvars(); }
  bool is_standard_graded() const { return ring()->is_standard_graded(); }
  const Field& field() const { return ring()->field(); }

  std::string to_string() const;

 private:
  Ideal ideal_;
  bool asserted_domain_ = false;
};

using Presentation = GradedQuotientPresentation;

}  // namespace gi
