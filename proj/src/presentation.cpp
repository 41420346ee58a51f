#include "gi/presentation.hpp"

#include "gi/error.hpp"

namespace gi {

GradedQuotientPresentation::GradedQuotientPresentation(RingPtr ring, std::vector<Polynomial> gens,
                                                       bool asserted_domain)
    : ideal_(std::move(ring), std::move(gens)), asserted_domain_(asserted_domain) {
  for (const auto& g : ideal_.generators())
    if (!g.is_homogeneous())
      throw InputError("presentation: generator " + g.to_string() + " is not homogeneous");
}

GradedQuotientPresentation GradedQuotientPresentation::with_domain_assertion(bool d) const {
  GradedQuotientPresentation p = *this;
  p.asserted_domain_ = d;
  return p;
}

std::string GradedQuotientPresentation::to_string() const {
  std::string s = ring()->to_string();
  if (!ideal_.is_zero()) s += " / " + ideal_.to_string();
  return s;
}

}  // namespace gi
