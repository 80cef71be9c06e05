#pragma once

// Decision procedures: the frame intersection property, two-flatness and the
// quasi-periodicity classifier.

#include "zonotile/zonotope.hpp"

#include <optional>
#include <vector>

namespace zonotile {

struct IntersectionVerdict {
  bool holds = true;
  /// Primitive integer u != 0 orthogonal to a member of every frame; present iff !holds.
  std::optional<Vec3> witness;
  /// For each frame, which member (0 = e, 1 = tau1, 2 = tau2) is orthogonal to the witness.
  std::vector<int> satisfied_by;
};

/// Throws InputError on an empty frame list.
IntersectionVerdict intersection_property(const std::vector<Frame>& frames);

/// Exact certificate check: every frame has a member orthogonal to u.
bool witness_valid(const std::vector<Frame>& frames, const Vec3& u);

struct TwoFlatVerdict {
  bool is_two_flat = false;
  std::vector<std::size_t> h1_indices;  ///< generator indices; h1 always spans a plane when two-flat
  std::vector<std::size_t> h2_indices;
  Vec3 h1_normal;
  Vec3 h2_normal;
};

TwoFlatVerdict two_flat(const Zonotope& z);

enum class Verdict { NotTwoFlat, TwoFlatRationalDiscrete, TwoFlatOther };

const char* to_string(Verdict v);

struct Classification {
  Verdict kind = Verdict::NotTwoFlat;
  /// Every multiple tiling is a finite union of translated lattices.
  bool quasi_periodic_guarantee = false;
  /// true / false, or nullopt when unknown.
  std::optional<bool> weird_tiling_available;
  IntersectionVerdict intersection;
  TwoFlatVerdict flats;
  std::size_t frame_count = 0;
  std::size_t degenerate_frames = 0;
};

/// Raised when the intersection property fails on a zonotope that is not two-flat.
class ConsistencyError : public Error {
 public:
  ConsistencyError() : Error("theorem contradiction — implementation bug") {}
};

Classification classify(const Zonotope& z);

}  // namespace zonotile
