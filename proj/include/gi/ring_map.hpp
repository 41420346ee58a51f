#pragma once

#include "gi/presentation.hpp"

#include <memory>
#include <vector>

namespace gi {

/// Homogeneous map source -> target given by the images of the source
/// variables; image i must have degree equal to the weight of variable i.
class GradedRingMap {
 public:
  GradedRingMap() = default;
  /// Throws InputError on wrong arity, inhomogeneous images or degree
  /// mismatch, PreconditionError when the source relations do not map to 0.
  GradedRingMap(Presentation source, Presentation target, std::vector<Polynomial> images);

  const Presentation& source() const { return source_; }
  const Presentation& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& f) const;

  /// Graph ring T[s] with target variables first, its ideal
  /// (target relations, s_j - image_j), and that ideal's basis in the
  /// order eliminating the target block. Computed once.
  struct Graph {
    RingPtr ring;
    GroebnerBasis gb;
  };
  const Graph& graph() const;

 private:
  Presentation source_;
  Presentation target_;
  std::vector<Polynomial> images_;
  std::shared_ptr<std::once_flag> once_;
  std::shared_ptr<std::optional<Graph>> graph_;
};

/// Homogeneous generators of ker(source ring -> target), minimal.
std::vector<Polynomial> ring_map_kernel(const GradedRingMap& phi);

/// Preimage in the source polynomial ring of the ideal of the target
/// generated by `target_gens` (plus the target relations).
Ideal preimage(const GradedRingMap& phi, const std::vector<Polynomial>& target_gens);

/// Whether f (in the target ring) lies in the image k[images] modulo the
/// target relations.
bool in_image(const GradedRingMap& phi, const Polynomial& f);

}  // namespace gi
