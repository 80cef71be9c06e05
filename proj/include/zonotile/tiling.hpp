#pragma once

// Translate multisets, exact coverage counting and windowed level checks.

#include "zonotile/lattice.hpp"
#include "zonotile/zonotope.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace zonotile {

struct LatticeComponent {
  Lattice lattice;  ///< rank 3
  Vec3 offset;
  int weight = 1;
};

/// Weighted union of translated full-rank lattices.
struct LatticeUnion {
  std::vector<LatticeComponent> components;
};

enum class Slab { S, T };

const char* to_string(Slab s);

/// Lambda = union over cosets j of (E_j + rep(j)), with E_j = g + s_offsets
/// (choice S, the default) or g + t_offsets (choice T).
struct SlabChoice {
  CosetEnumeration cosets;
  std::vector<Vec3> s_offsets;
  std::vector<Vec3> t_offsets;
  std::map<std::int64_t, Slab> choice;
  std::optional<std::int64_t> expected_level;

  const Lattice& gamma() const { return cosets.gamma(); }
  const Lattice& g() const { return cosets.g(); }
  Slab at(std::int64_t j) const {
    auto it = choice.find(j);
    return it == choice.end() ? Slab::S : it->second;
  }
};

using TranslateSet = std::variant<LatticeUnion, SlabChoice>;

/// Raised when a sample point lies on the boundary of some translate.
class BoundaryHit : public Error {
 public:
  BoundaryHit() : Error("resample: point on the boundary of a translate") {}
};

/// Visits every point of Lambda inside the box with its multiplicity
/// contribution (a point may be visited more than once).
void for_each_translate(const TranslateSet& lam, const Box& box, const std::function<void(const Vec3&, int)>& visit);

/// Exact multiplicity of x in the multiset Lambda.
int multiplicity_at(const TranslateSet& lam, const Vec3& x);

/// Aggregated points of Lambda inside the box, sorted, with multiplicities.
std::vector<std::pair<Vec3, int>> materialize(const TranslateSet& lam, const Box& box);

TranslateSet translated(const TranslateSet& lam, const Vec3& t);

/// Number of lambda (with multiplicity) with x - lambda in P. Throws BoundaryHit.
int coverage(const Zonotope& z, const TranslateSet& lam, const Vec3& x);

Rational density(const TranslateSet& lam);

struct CoverageReport {
  std::optional<std::int64_t> level;
  std::vector<std::pair<Vec3, int>> violations;  ///< samples whose coverage differs from the modal value
  std::map<int, std::size_t> histogram;
  std::size_t samples = 0;
  std::size_t resamples = 0;
  Box window;
  Rational density;
  std::uint64_t seed = 0;
  /// density * volume(z) == level; false when level is null.
  bool density_consistent = false;
};

/// Draws `samples` rational points from the window (mt19937_64 seeded with
/// `seed`, denominators 1048573) and counts coverage at each.
CoverageReport verify_level(const Zonotope& z, const TranslateSet& lam, const Box& window, std::size_t samples, std::uint64_t seed);

/// Uniform rational point in the box with the given denominator.
template <class Rng>
Vec3 sample_point(const Box& box, Rng& rng, long denominator = 1048573) {
  Vec3 p;
  for (int i = 0; i < 3; ++i) {
    long r = static_cast<long>(rng() % static_cast<unsigned long>(denominator));
    p[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * make_rational(r, denominator);
  }
  return p;
}

}  // namespace zonotile
