#include "gi/ring.hpp"

#include "gi/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gi {

PolyRing::PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights,
                   MonomialOrder order)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)), order_(std::move(order)) {
  if (names_.size() != weights_.size())
    throw InputError("ring: one weight per variable required");
  for (int w : weights_)
    if (w <= 0) throw InputError("ring: variable weights must be positive");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw InputError("ring: duplicate variable " + n);
  if (!order_.weights().empty() && order_.weights().size() != names_.size())
    throw InputError("ring: order weights do not match variable count");
}

RingPtr PolyRing::make(Field field, std::vector<std::string> names, std::vector<int> weights) {
  bool standard = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
  MonomialOrder order =
      standard ? MonomialOrder::degrevlex() : MonomialOrder::weighted_degrevlex(weights);
  return make(field, std::move(names), std::move(weights), std::move(order));
}

RingPtr PolyRing::make(Field field, std::vector<std::string> names, std::vector<int> weights,
                       MonomialOrder order) {
  return RingPtr(new PolyRing(field, std::move(names), std::move(weights), std::move(order)));
}

RingPtr PolyRing::standard(Field field, std::vector<std::string> names) {
  std::vector<int> w(names.size(), 1);
  return make(field, std::move(names), std::move(w));
}

bool PolyRing::is_standard_graded() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

long PolyRing::weight_sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0L);
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return make(field_, names_, weights_, std::move(order));
}

RingPtr PolyRing::with_weights(std::vector<int> weights) const {
  bool standard = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
  MonomialOrder order = order_;
  if (order_.kind() == MonomialOrder::Kind::degrevlex ||
      order_.kind() == MonomialOrder::Kind::weighted_degrevlex)
    order = standard ? MonomialOrder::degrevlex() : MonomialOrder::weighted_degrevlex(weights);
  return make(field_, names_, std::move(weights), std::move(order));
}

bool operator==(const PolyRing& a, const PolyRing& b) {
  return a.same_variables(b) && a.order_ == b.order_;
}

bool PolyRing::same_variables(const PolyRing& other) const {
  return field_ == other.field_ && names_ == other.names_ && weights_ == other.weights_;
}

std::string PolyRing::to_string() const {
  std::string s = field_.to_string() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ", ";
    s += names_[i];
    if (weights_[i] != 1) s += ":" + std::to_string(weights_[i]);
  }
  return s + "]";
}

}  // namespace gi
