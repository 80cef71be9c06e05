#pragma once

// Lattices in Q^3 of rank 1..3: duals, sublattice membership, coset indexing
// and lattice-point enumeration in boxes.

#include "zonotile/exact.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace zonotile {

/// Closed axis-aligned box.
struct Box {
  Vec3 lo, hi;

  bool contains(const Vec3& p) const;
  Box translated(const Vec3& t) const { return {lo + t, hi + t}; }
};

class Lattice {
 public:
  /// Throws InputError when the basis is empty, longer than 3, or dependent.
  explicit Lattice(std::vector<Vec3> basis);

  /// Lattice generated by an arbitrary finite set of rational vectors; the
  /// basis is extracted through a Smith decomposition of the scaled generators.
  static Lattice generated_by(const std::vector<Vec3>& generators);

  static Lattice integer_lattice() { return Lattice({Vec3::axis(0), Vec3::axis(1), Vec3::axis(2)}); }

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec3>& basis() const { return basis_; }

  /// |det| of the basis; rank-3 lattices only.
  Rational covolume() const;
  /// Determinant of the Gram matrix (covolume squared for any rank).
  Rational gram_determinant() const;

  /// Coordinates of v in the basis, if v lies in the rational span.
  std::optional<std::vector<Rational>> coordinates(const Vec3& v) const;
  /// Integer coordinates of v, if v is a lattice point.
  std::optional<std::vector<Integer>> integer_coordinates(const Vec3& v) const;
  bool contains(const Vec3& v) const { return integer_coordinates(v).has_value(); }
  bool in_span(const Vec3& v) const { return coordinates(v).has_value(); }

  Vec3 point(const std::vector<Integer>& coords) const;

  /// Mutual basis membership.
  bool same_lattice(const Lattice& other) const;
  bool is_sublattice_of(const Lattice& other) const;

  /// Calls visit(p) for every point p of (offset + lattice) inside the box.
  void for_each_point_in_box(const Box& box, const Vec3& offset, const std::function<void(const Vec3&)>& visit) const;

 private:
  std::vector<Vec3> basis_;
  // Rows picked to form an invertible rank x rank minor, and its inverse.
  std::vector<int> pivot_rows_;
  std::vector<Rational> minor_inverse_;
};

/// Dual of a full-rank lattice: B* = B^{-T}. Throws InputError("full-rank lattice required").
Lattice dual_lattice(const Lattice& l);

/// Dual of a rank-2 lattice inside its own plane: basis B (B^T B)^{-1}.
Lattice subspace_dual(const Lattice& g);

/// Z-indexed enumeration of the cosets of a rank-2 sublattice g in a rank-3
/// lattice gamma. Gamma / g is isomorphic to Z/d1 x Z/d2 x Z; the torsion part
/// (order d1 * d2) is folded into the index as j = free * torsion_order + t.
class CosetEnumeration {
 public:
  CosetEnumeration(Lattice gamma, Lattice g);

  const Lattice& gamma() const { return gamma_; }
  const Lattice& g() const { return g_; }
  std::int64_t torsion_order() const { return torsion_order_; }
  const std::array<Integer, 2>& invariant_factors() const { return factors_; }

  /// Canonical representative of coset j; rep(0) = 0.
  Vec3 rep(std::int64_t j) const;
  /// Index of the coset containing p. Throws InputError when p is not in gamma.
  std::int64_t index_of(const Vec3& p) const;
  /// Index from integer gamma-coordinates.
  std::int64_t index_of_coords(const std::vector<Integer>& coords) const;

 private:
  Lattice gamma_;
  Lattice g_;
  IntMatrix u_;      // u * inclusion * v = diag(d1, d2) stacked over a zero row
  IntMatrix u_inv_;
  std::array<Integer, 2> factors_;
  std::int64_t torsion_order_ = 1;
};

/// Throws InputError("not a sublattice") or on rank mismatch.
CosetEnumeration coset_reps(const Lattice& gamma, const Lattice& g);

}  // namespace zonotile
