#pragma once

// Multiple tilings of two-flat zonotopes that are not finite unions of
// translated lattices: the S/T slab construction, its verification, the
// arithmetic-progression coloring and the multiplicity irregularity check.

#include "zonotile/lattice.hpp"
#include "zonotile/structure.hpp"
#include "zonotile/tiling.hpp"
#include "zonotile/zonotope.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace zonotile {

struct WeirdConstruction {
  Zonotope p;
  std::vector<std::size_t> v_indices;  ///< generators spanning the first flat H1
  std::vector<std::size_t> w_indices;  ///< generators in the second flat H2
  Lattice g;                           ///< generated by the v's (rank 2)
  Lattice gamma;                       ///< generated by all generators (rank 3)
  CosetEnumeration cosets;
  std::vector<Rational> coefficients;  ///< c_i, nonzero
  std::vector<Vec3> s_offsets;         ///< subset sums sum_{i in I} c_i v_i, |I| even
  std::vector<Vec3> t_offsets;         ///< |I| odd
  std::int64_t n_value = 0;            ///< N = 2^(n-1)
  std::int64_t base_level = 0;         ///< level of the gamma-tiling

  std::vector<Vec3> v() const;
};

/// c_i = 1/p for the smallest prime p making every nonempty subset sum of the
/// c_i v_i avoid g. Falls back to distinct primes per generator when some
/// subset of the v's sums to zero. Throws Error if no candidate up to 997 works.
std::vector<Rational> choose_coefficients(const Lattice& g, const std::vector<Vec3>& v);

/// Throws InputError when the zonotope is not two-flat or the first flat is not spanned.
WeirdConstruction build_construction(const Zonotope& z, const TwoFlatVerdict& flats);

/// Same construction with caller-provided coefficients.
WeirdConstruction build_construction(const Zonotope& z, const TwoFlatVerdict& flats, const std::vector<Rational>& coefficients);

struct SlabIdentityReport {
  bool holds = true;
  std::size_t samples = 0;
  std::size_t resamples = 0;
  std::optional<Vec3> mismatch;
  int lhs = 0;  ///< counts at the mismatch (or the last sample)
  int rhs = 0;
};

/// Compares #{g : x - u - g in P} summed over the S offsets and over the T
/// offsets at sampled points x.
SlabIdentityReport slab_identity_check(const WeirdConstruction& c, const Box& window, std::size_t samples, std::uint64_t seed);

/// Slab-choice translate set for the given finite choice map (default S).
SlabChoice build_weird(const WeirdConstruction& c, std::map<std::int64_t, Slab> choice = {});

enum class Color { Red, Black };

const char* to_string(Color c);

struct Coloring {
  std::map<std::int64_t, Color> colored;
  std::vector<std::pair<std::int64_t, std::int64_t>> processed_aps;  ///< (difference d, offset a)

  /// Uncolored integers are Red.
  Color color(std::int64_t n) const;
  /// Every processed progression has a Red and a Black colored member.
  bool audit() const;
};

/// The k-th progression (0-based) of the schedule: rounds r = 1, 2, ... each
/// revisit all (d, a) with 0 <= a < d and d + a <= r, ordered by (d + a, d).
std::pair<std::int64_t, std::int64_t> ap_schedule(std::size_t k);

/// Greedy two-coloring: each processed progression gets its two smallest
/// (by |n|, nonnegative first) uncolored members colored Red then Black.
Coloring ap_coloring(std::size_t num_aps);

struct IrregularityReport {
  std::int64_t lo = 0, hi = 0;
  Vec3 line_generator;  ///< gamma_1 = rep(1)
  std::vector<std::pair<std::int64_t, int>> multiplicities;  ///< (l, multiplicity of l * gamma_1)
  bool matches_coloring = true;
  bool both_values_occur = false;
  bool passed() const { return matches_coloring && both_values_occur; }
};

/// Builds Lambda-dagger (E_j = T exactly on cosets of Black points l * gamma_1)
/// and checks multiplicity 1 at Red and 0 at Black points for l in [lo, hi].
/// Throws InputError when the coset representatives do not contain gamma_1 * Z.
IrregularityReport irregularity_certificate(const WeirdConstruction& c, const Coloring& coloring, std::int64_t lo, std::int64_t hi);

/// Lambda-dagger for the given coloring.
SlabChoice dagger_set(const WeirdConstruction& c, const Coloring& coloring);

}  // namespace zonotile
