#include "zonotile/weird.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace zonotile {

std::vector<Vec3> WeirdConstruction::v() const {
  std::vector<Vec3> out;
  for (std::size_t i : v_indices) out.push_back(p.generators()[i]);
  return out;
}

const char* to_string(Color c) { return c == Color::Red ? "red" : "black"; }

namespace {

std::vector<long> primes_upto(long n) {
  std::vector<long> ps;
  for (long k = 2; k <= n; ++k)
    if (std::all_of(ps.begin(), ps.end(), [&](long p) { return k % p != 0; })) ps.push_back(k);
  return ps;
}

Rational inverse_of(long p) { return make_rational(1, p); }

bool subset_sums_avoid(const Lattice& g, const std::vector<Vec3>& v, const std::vector<Rational>& c) {
  const std::size_t n = v.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Vec3 s = Vec3::zero();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s += c[i] * v[i];
    if (g.contains(s)) return false;
  }
  return true;
}

}  // namespace

std::vector<Rational> choose_coefficients(const Lattice& g, const std::vector<Vec3>& v) {
  if (v.empty()) throw InputError("no generators in the first flat");
  if (v.size() > 20) throw InputError("too many generators in the first flat");
  const std::vector<long> primes = primes_upto(997);
  for (long p : primes) {
    std::vector<Rational> c(v.size(), inverse_of(p));
    if (subset_sums_avoid(g, v, c)) return c;
  }
  // Equal coefficients cannot work when some subset of the v's sums to zero.
  for (std::size_t start = 0; start + v.size() <= primes.size(); ++start) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < v.size(); ++i) c.push_back(inverse_of(primes[start + i]));
    if (subset_sums_avoid(g, v, c)) return c;
  }
  throw Error("no admissible coefficients found");
}

WeirdConstruction build_construction(const Zonotope& z, const TwoFlatVerdict& flats) {
  if (!flats.is_two_flat) throw InputError("zonotope is not two-flat");
  std::vector<Vec3> v;
  for (std::size_t i : flats.h1_indices) v.push_back(z.generators()[i]);
  std::vector<Vec3> w;
  for (std::size_t i : flats.h2_indices) w.push_back(z.generators()[i]);
  const std::vector<Vec3>& first = rank_of(v) == 2 ? v : w;
  if (rank_of(first) != 2) throw InputError("generators of the first flat do not span a plane");
  return build_construction(z, flats, choose_coefficients(Lattice::generated_by(first), first));
}

WeirdConstruction build_construction(const Zonotope& z, const TwoFlatVerdict& flats, const std::vector<Rational>& coefficients) {
  if (!flats.is_two_flat) throw InputError("zonotope is not two-flat");
  std::vector<std::size_t> vi = flats.h1_indices, wi = flats.h2_indices;
  auto gens_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec3> out;
    for (std::size_t i : idx) out.push_back(z.generators()[i]);
    return out;
  };
  if (rank_of(gens_of(vi)) != 2) std::swap(vi, wi);
  const std::vector<Vec3> v = gens_of(vi);
  if (rank_of(v) != 2) throw InputError("generators of the first flat do not span a plane");
  if (coefficients.size() != v.size()) throw InputError("one coefficient per first-flat generator required");
  for (const Rational& c : coefficients)
    if (sign(c) == 0) throw InputError("coefficients must be nonzero");
  if (v.size() > 20) throw InputError("too many generators in the first flat");

  Lattice g = Lattice::generated_by(v);
  Lattice gamma = Lattice::generated_by(z.generators());
  if (gamma.rank() != 3) throw Error("generator group is not full rank");
  CosetEnumeration cosets = coset_reps(gamma, g);

  std::vector<Vec3> s_off, t_off;
  const std::size_t n = v.size();
  // prod_i (delta_0 - delta_{c_i v_i}) = sum_I (-1)^{|I|} delta_{sum_I c_i v_i}
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vec3 s = Vec3::zero();
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) {
        s += coefficients[i] * v[i];
        ++bits;
      }
    (bits % 2 == 0 ? s_off : t_off).push_back(s);
  }

  Rational k = volume(z) / gamma.covolume();
  if (!is_integer(k)) throw Error("zonotope volume is not a multiple of the lattice covolume");

  return WeirdConstruction{z,
                           vi,
                           wi,
                           std::move(g),
                           std::move(gamma),
                           std::move(cosets),
                           coefficients,
                           std::move(s_off),
                           std::move(t_off),
                           std::int64_t{1} << (n - 1),
                           k.get_num().get_si()};
}

SlabIdentityReport slab_identity_check(const WeirdConstruction& c, const Box& window, std::size_t samples, std::uint64_t seed) {
  SlabIdentityReport report;
  const Box body = c.p.bounding_box();
  std::mt19937_64 rng(seed);

  auto side = [&](const Vec3& x, const std::vector<Vec3>& offsets) {
    int count = 0;
    for (const Vec3& u : offsets) {
      Box reach{x - u - body.hi, x - u - body.lo};
      c.g.for_each_point_in_box(reach, Vec3::zero(), [&](const Vec3& gp) {
        Location loc = c.p.locate(x - u - gp);
        if (loc == Location::Boundary) throw BoundaryHit();
        if (loc == Location::Interior) ++count;
      });
    }
    return count;
  };

  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t attempt = 0;; ++attempt) {
      Vec3 x = sample_point(window, rng);
      try {
        int lhs = side(x, c.s_offsets);
        int rhs = side(x, c.t_offsets);
        report.lhs = lhs;
        report.rhs = rhs;
        ++report.samples;
        if (lhs != rhs) {
          report.holds = false;
          report.mismatch = x;
          return report;
        }
        break;
      } catch (const BoundaryHit&) {
        ++report.resamples;
        if (attempt >= 1000) throw Error("too many boundary hits while sampling");
      }
    }
  }
  return report;
}

SlabChoice build_weird(const WeirdConstruction& c, std::map<std::int64_t, Slab> choice) {
  return SlabChoice{c.cosets, c.s_offsets, c.t_offsets, std::move(choice), c.n_value * c.base_level};
}

// Coloring -------------------------------------------------------------------

Color Coloring::color(std::int64_t n) const {
  auto it = colored.find(n);
  return it == colored.end() ? Color::Red : it->second;
}

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t d) {
  std::int64_t r = a % d;
  return r < 0 ? r + d : r;
}

}  // namespace

bool Coloring::audit() const {
  for (const auto& [d, a] : processed_aps) {
    bool red = false, black = false;
    for (const auto& [n, col] : colored) {
      if (mod_floor(n, d) != a) continue;
      (col == Color::Red ? red : black) = true;
    }
    if (!red || !black) return false;
  }
  return true;
}

std::pair<std::int64_t, std::int64_t> ap_schedule(std::size_t k) {
  for (std::int64_t round = 1;; ++round) {
    for (std::int64_t sum = 1; sum <= round; ++sum)
      for (std::int64_t d = (sum + 2) / 2; d <= sum; ++d) {
        // d + a = sum with 0 <= a < d
        std::int64_t a = sum - d;
        if (a < 0 || a >= d) continue;
        if (k == 0) return {d, a};
        --k;
      }
  }
}

Coloring ap_coloring(std::size_t num_aps) {
  if (num_aps == 0) throw InputError("at least one progression required");
  Coloring c;
  for (std::size_t k = 0; k < num_aps; ++k) {
    auto [d, a] = ap_schedule(k);
    c.processed_aps.emplace_back(d, a);
    int picked = 0;
    // 0, 1, -1, 2, -2, ...
    for (std::int64_t step = 0; picked < 2; ++step) {
      std::int64_t n = step % 2 == 1 ? (step + 1) / 2 : -(step / 2);
      if (mod_floor(n, d) != a || c.colored.count(n)) continue;
      c.colored[n] = picked == 0 ? Color::Red : Color::Black;
      ++picked;
    }
  }
  return c;
}

// Irregularity ------------------------------------------------------------------

namespace {

std::int64_t line_index(const CosetEnumeration& cosets, const Vec3& gamma1, std::int64_t l) {
  Vec3 p = Rational(static_cast<long>(l)) * gamma1;
  std::int64_t j = cosets.index_of(p);
  if (cosets.rep(j) != p) throw InputError("coset representatives do not contain gamma_1 * Z");
  return j;
}

}  // namespace

SlabChoice dagger_set(const WeirdConstruction& c, const Coloring& coloring) {
  const Vec3 gamma1 = c.cosets.rep(1);
  std::map<std::int64_t, Slab> choice;
  for (const auto& [n, col] : coloring.colored)
    if (col == Color::Black) choice[line_index(c.cosets, gamma1, n)] = Slab::T;
  return build_weird(c, std::move(choice));
}

IrregularityReport irregularity_certificate(const WeirdConstruction& c, const Coloring& coloring, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("empty window");
  IrregularityReport report;
  report.lo = lo;
  report.hi = hi;
  report.line_generator = c.cosets.rep(1);
  const SlabChoice dagger = dagger_set(c, coloring);
  const TranslateSet lam = dagger;
  std::set<int> seen;
  for (std::int64_t l = lo; l <= hi; ++l) {
    line_index(c.cosets, report.line_generator, l);
    int m = multiplicity_at(lam, Rational(static_cast<long>(l)) * report.line_generator);
    report.multiplicities.emplace_back(l, m);
    seen.insert(m);
    int expected = coloring.color(l) == Color::Red ? 1 : 0;
    if (m != expected) report.matches_coloring = false;
  }
  report.both_values_occur = seen.count(0) && seen.count(1);
  return report;
}

}  // namespace zonotile
