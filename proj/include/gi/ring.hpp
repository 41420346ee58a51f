#pragma once

#include "gi/field.hpp"
#include "gi/monomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gi {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Positively graded polynomial ring k[x_1..x_n], deg x_i = weights[i] >= 1,
/// together with the monomial order used to store its polynomials.
class PolyRing {
 public:
  /// Default order: weighted degrevlex with respect to the grading.
  static RingPtr make(Field field, std::vector<std::string> names, std::vector<int> weights);
  static RingPtr make(Field field, std::vector<std::string> names, std::vector<int> weights,
                      MonomialOrder order);
  /// Standard graded ring with the given variable names.
  static RingPtr standard(Field field, std::vector<std::string> names);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  bool is_standard_graded() const;
  long weight_sum() const;

  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same variables and grading, different monomial order.
  RingPtr with_order(MonomialOrder order) const;
  /// Same variables and order, different grading.
  RingPtr with_weights(std::vector<int> weights) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare_unchecked(a, b);
  }
  long degree(const Monomial& m) const { return m.degree(weights_); }

  /// Structural equality (field, names, weights, order).
  friend bool operator==(const PolyRing& a, const PolyRing& b);
  /// Field, names and weights agree; the order may differ.
  bool same_variables(const PolyRing& other) const;

  std::string to_string() const;

 private:
  PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights,
           MonomialOrder order);

  Field field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

}  // namespace gi
