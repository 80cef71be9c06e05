#pragma once

// Zonotopes in R^3 given by rational segment generators: facets, 4-legged
// frames, half-open parallelepiped pavings, volume and exact membership.

#include "zonotile/exact.hpp"
#include "zonotile/lattice.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace zonotile {

enum class Location { Interior, Boundary, Outside };

const char* to_string(Location loc);

/// Generators sharing a line. `merged` is the sum of the members after
/// flipping each onto the direction of `key`.
struct DirectionClass {
  Vec3 key;
  std::vector<std::size_t> members;
  Vec3 merged;
};

struct Facet {
  Vec3 normal;  ///< primitive integer, outward
  std::vector<std::size_t> plane_generators;
  std::vector<std::size_t> plane_classes;
  Vec3 offset;  ///< translate + sum of generators g with <g, normal> > 0
  std::size_t opposite = 0;
  /// Polygon vertices, counter-clockwise seen from outside.
  std::vector<Vec3> polygon;
};

/// Four legs [e]+base, +tau1, +tau2, +tau1+tau2. The first two lie on `facet`,
/// the other two on `opposite_facet`. `base` is the lexicographically smallest
/// of the four leg starts.
struct Frame {
  Vec3 e;
  Vec3 base;
  Vec3 tau1;
  Vec3 tau2;
  std::size_t facet = 0;
  std::size_t opposite_facet = 0;
  std::size_t direction_class = 0;

  bool degenerate() const { return sign(det(e, tau1, tau2)) == 0; }
  std::array<Vec3, 4> leg_starts() const { return {base, base + tau1, base + tau2, base + tau1 + tau2}; }
};

struct FrameSet {
  std::vector<Frame> frames;      ///< e, tau1, tau2 independent
  std::vector<Frame> degenerate;  ///< excluded from every decision procedure
};

/// Half-open parallelepiped anchor + {sum t_i edges_i : t_i in [0, 1)}.
struct PavingCell {
  Vec3 anchor;
  std::array<std::size_t, 3> generators{};
  std::array<Vec3, 3> edges;
  /// true: t_i = 0 is included and t_i = 1 excluded.
  std::array<bool, 3> closed_at_anchor{true, true, true};
  Mat3 inverse;

  Rational volume() const { return abs(det(edges[0], edges[1], edges[2])); }
  bool contains(const Vec3& x) const;
  /// True when x lies on the closure of the cell's boundary.
  bool on_boundary(const Vec3& x) const;
};

struct Paving {
  std::vector<PavingCell> cells;

  Rational volume() const;
  /// Number of cells whose half-open body contains x.
  int multiplicity(const Vec3& x) const;
  bool on_any_boundary(const Vec3& x) const;
};

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::vector<std::size_t>> faces;  ///< outward (counter-clockwise) orientation
};

class Zonotope {
 public:
  /// Throws InputError("zero segment") or InputError("degenerate zonotope").
  static Zonotope build(std::vector<Vec3> generators, Vec3 translate = Vec3::zero());

  const std::vector<Vec3>& generators() const { return generators_; }
  const Vec3& translate() const { return translate_; }
  const Vec3& center() const { return center_; }
  const std::vector<DirectionClass>& classes() const { return classes_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Index of the direction class of each generator.
  std::size_t class_of(std::size_t generator) const { return class_of_[generator]; }
  /// +1 when the generator points along its class key, -1 otherwise.
  int orientation(std::size_t generator) const { return orientation_[generator]; }

  Box bounding_box() const;
  std::vector<Vec3> vertices() const;
  Mesh mesh() const;

  Location locate(const Vec3& x) const;

 private:
  Zonotope() = default;

  std::vector<Vec3> generators_;
  Vec3 translate_;
  Vec3 center_;
  std::vector<DirectionClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<int> orientation_;
  std::vector<Facet> facets_;
  // One entry per facet pair: normal and support values in +normal / -normal.
  std::vector<Vec3> plane_normals_;
  std::vector<Rational> upper_;
  std::vector<Rational> lower_;
};

FrameSet frames(const Zonotope& z);

/// Regular fine tiling by the parallelepipeds of all independent generator
/// triples, lifted with symbolic heights eps^index (first generators dominate).
Paving pave(const Zonotope& z);

/// Sum of |det| over independent generator triples.
Rational volume(const Zonotope& z);

/// Interior / Boundary / Outside, decided exactly.
Location contains(const Zonotope& z, const Vec3& x);

}  // namespace zonotile
