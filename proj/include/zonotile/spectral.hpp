#pragma once

// Fourier side: closed-form transforms of leg measures, exact zero-set
// membership, the support bound for periodic translate sets and the
// level-zero pairing of leg measures.

#include "zonotile/tiling.hpp"
#include "zonotile/zonotope.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace zonotile {

/// H(x) = {xi : <xi, x> in Z}; the punctured family drops <xi, x> = 0.
struct PlaneFamily {
  Vec3 x;
  bool punctured = false;

  PlaneFamily(Vec3 x_, bool punctured_);

  bool contains(const Vec3& xi) const;
  /// x / |x|^2, the spacing vector between consecutive planes.
  Vec3 inverse() const { return x / norm2(x); }
};

/// Signed arc length on the four legs of a frame. The standard leg measure
/// has weights (+1, -1, -1, +1) on legs base, +tau1, +tau2, +tau1+tau2.
struct LegMeasure {
  Frame frame;
  std::array<int, 4> weights{1, -1, -1, 1};

  static LegMeasure of(const Frame& f) { return {f, {1, -1, -1, 1}}; }
  bool standard() const { return weights == std::array<int, 4>{1, -1, -1, 1}; }
};

/// Fourier transform int exp(-2 pi i <xi, t>) dmu(t). Throws InputError on a degenerate frame.
std::complex<double> leg_ft(const LegMeasure& m, const std::array<double, 3>& xi);

/// <xi,e> in Z \ {0}, or <xi,tau1> in Z, or <xi,tau2> in Z.
bool zero_set_member(const Frame& f, const Vec3& xi);

/// Exact test of sum_k c_k exp(2 pi i r_k) == 0 for rational c_k, r_k.
bool root_of_unity_sum_is_zero(const std::vector<std::pair<Rational, Rational>>& terms);

struct SupportCandidate {
  Vec3 xi;
  bool zero_weight = false;
};

struct SupportReport {
  Rational radius;
  std::size_t candidates = 0;
  std::size_t frames_checked = 0;
  std::vector<Vec3> exempt;      ///< candidates whose Poisson weights cancel
  std::vector<Vec3> violations;  ///< nonzero-weight candidates outside the frame zero sets
  bool passed() const { return violations.empty(); }
};

/// Candidate support of the transform of delta_Lambda inside |xi| <= radius for
/// a weighted lattice union, checked against every nondegenerate frame.
/// Throws InputError("periodic description required") for a slab-choice set.
SupportReport support_bound_check(const Zonotope& z, const TranslateSet& lam, const Rational& radius);

struct LevelZeroReport {
  std::vector<double> pairings;
  double max_abs = 0;
  double tol = 0;
  bool passed = false;
};

/// Pairs the leg measure, periodized over Lambda, with `trials` unit-width
/// Gaussians at random centers; composite Gauss-Legendre per leg.
LevelZeroReport leg_level_zero_check(const LegMeasure& m, const TranslateSet& lam, std::size_t trials, double tol, std::uint64_t seed);

}  // namespace zonotile
