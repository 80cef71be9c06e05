#pragma once

// Shared fixtures and brute-force oracles for the test suites. Oracles here are
// written independently of the library's algorithms.

#include "zonotile/zonotile.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>

#include <random>
#include <set>
#include <vector>

namespace zt_test {

using namespace zonotile;

inline Rational q(long n, long d = 1) { return make_rational(n, d); }
inline Vec3 V(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }
inline Vec3 V(Rational x, Rational y, Rational z) { return {std::move(x), std::move(y), std::move(z)}; }

inline Zonotope cube() { return Zonotope::build({V(1, 0, 0), V(0, 1, 0), V(0, 0, 1)}); }
inline Zonotope rhombic() { return Zonotope::build({V(1, 0, 0), V(0, 1, 0), V(0, 0, 1), V(1, 1, 1)}); }
inline Zonotope five_general() {
  return Zonotope::build({V(1, 0, 0), V(0, 1, 0), V(0, 0, 1), V(1, 1, 1), V(1, 2, 3)});
}
/// Hexagonal prism: three directions in the xy-plane plus the z segment.
inline Zonotope hex_prism() { return Zonotope::build({V(1, 0, 0), V(0, 1, 0), V(1, 1, 0), V(0, 0, 1)}); }

inline LatticeUnion single_lattice(const Lattice& l, Vec3 offset = Vec3::zero(), int weight = 1) {
  return LatticeUnion{{LatticeComponent{l, std::move(offset), weight}}};
}

/// Random zonotope with small integer (or half-integer) generators spanning R^3.
inline Zonotope random_zonotope(std::mt19937_64& rng, std::size_t min_gens, std::size_t max_gens, bool halves = false) {
  std::uniform_int_distribution<long> coord(-2, 2);
  std::uniform_int_distribution<std::size_t> count(min_gens, max_gens);
  for (;;) {
    std::vector<Vec3> gens;
    const std::size_t n = count(rng);
    while (gens.size() < n) {
      Vec3 g = V(coord(rng), coord(rng), coord(rng));
      if (g.is_zero()) continue;
      if (halves && rng() % 3 == 0) g = g / Rational(2);
      gens.push_back(g);
    }
    if (rank_of(gens) == 3) return Zonotope::build(gens);
  }
}

/// Random two-flat zonotope: `n` generators in the xy-plane and `m` in the
/// plane spanned by (1, -1, 0) and e3.
inline Zonotope random_two_flat(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<long> coord(-3, 3);
  for (;;) {
    std::vector<Vec3> gens;
    while (gens.size() < n) {
      Vec3 g = V(coord(rng), coord(rng), 0);
      if (!g.is_zero()) gens.push_back(g);
    }
    for (std::size_t i = 0; i < m; ++i) {
      long a = coord(rng), b = coord(rng);
      if (b == 0) b = 1;
      gens.push_back(V(a, -a, b));
    }
    if (rank_of(gens) == 3 && rank_of({gens.begin(), gens.begin() + static_cast<long>(n)}) == 2) return Zonotope::build(gens);
  }
}

// Oracles -------------------------------------------------------------------

/// Every frame has a member orthogonal to u.
inline bool orthogonal_to_every_frame(const std::vector<Frame>& fs, const Vec3& u) {
  for (const Frame& f : fs)
    if (sign(dot(u, f.e)) != 0 && sign(dot(u, f.tau1)) != 0 && sign(dot(u, f.tau2)) != 0) return false;
  return true;
}

/// Brute force: the property fails iff some nonzero u is orthogonal to a member
/// of each frame. If the chosen members span a plane, u is the cross product of
/// two of them; if they are all parallel to d, every frame has a member parallel
/// to d.
inline bool intersection_oracle(const std::vector<Frame>& fs) {
  std::vector<Vec3> members;
  for (const Frame& f : fs) {
    members.push_back(f.e);
    members.push_back(f.tau1);
    members.push_back(f.tau2);
  }
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      Vec3 u = cross(members[a], members[b]);
      if (!u.is_zero() && orthogonal_to_every_frame(fs, u)) return false;
    }
  for (const Vec3& d : members) {
    bool all = true;
    for (const Frame& f : fs)
      if (!parallel(f.e, d) && !parallel(f.tau1, d) && !parallel(f.tau2, d)) all = false;
    if (all) return false;
  }
  return true;
}

/// Brute force over all 2-colorings of the generator lines.
inline bool two_flat_oracle(const std::vector<Vec3>& gens) {
  std::vector<Vec3> lines;
  for (const Vec3& g : gens) {
    bool seen = false;
    for (const Vec3& l : lines) seen = seen || parallel(l, g);
    if (!seen) lines.push_back(g);
  }
  const std::size_t n = lines.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Vec3> a, b;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1U ? a : b).push_back(lines[i]);
    if (rank_of(a) <= 2 && rank_of(b) <= 2) return true;
  }
  return false;
}

/// Sum of |det| over independent generator triples.
inline Rational triple_volume(const std::vector<Vec3>& g) {
  Rational v = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k) v += abs(det(g[i], g[j], g[k]));
  return v;
}

/// Vertices of the zonotope as the distinct maximizers of random generic
/// linear functionals.
inline std::set<Vec3> vertex_oracle(const Zonotope& z, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> c(-1000000, 1000000);
  std::set<Vec3> out;
  for (std::size_t t = 0; t < trials; ++t) {
    Vec3 dir = V(c(rng), c(rng), c(rng));
    Vec3 p = z.translate();
    bool generic = true;
    for (const Vec3& g : z.generators()) {
      int s = sign(dot(dir, g));
      if (s == 0) generic = false;
      if (s > 0) p += g;
    }
    if (generic) out.insert(p);
  }
  return out;
}

/// Each plane spanned by two generator lines carries a pair of opposite facets,
/// so facets = 2 * (distinct normal lines).
inline std::size_t facet_count_oracle(const std::vector<Vec3>& g) {
  std::set<Vec3> normals;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Vec3 n = cross(g[i], g[j]);
      if (n.is_zero()) continue;
      normals.insert(primitive(n));
      normals.insert(primitive(-n));
    }
  return normals.size();
}

inline double dotd(const std::array<double, 3>& a, const std::array<double, 3>& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Direct integration of exp(-2 pi i <xi, t>) along each weighted leg.
inline std::complex<double> quadrature_ft(const Frame& f, const std::array<int, 4>& w, const std::array<double, 3>& xi) {
  using boost::math::quadrature::gauss_kronrod;
  const auto e = to_double(f.e);
  const double len = std::sqrt(dotd(e, e));
  std::complex<double> total = 0;
  auto starts = f.leg_starts();
  for (std::size_t k = 0; k < 4; ++k) {
    const double a = dotd(xi, to_double(starts[k])), b = dotd(xi, e);
    auto re = [&](double t) { return std::cos(-2 * M_PI * (a + t * b)); };
    auto im = [&](double t) { return std::sin(-2 * M_PI * (a + t * b)); };
    double r = gauss_kronrod<double, 61>::integrate(re, 0.0, 1.0, 15, 1e-14);
    double i = gauss_kronrod<double, 61>::integrate(im, 0.0, 1.0, 15, 1e-14);
    total += static_cast<double>(w[k]) * len * std::complex<double>(r, i);
  }
  return total;
}

}  // namespace zt_test
