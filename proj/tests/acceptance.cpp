// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace zt_test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  Clock::time_point t0 = Clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("[%s] criterion %2d: %s (%s; %.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const Box kCube4{V(-4, -4, -4), V(4, 4, 4)};
const Box kCube5{V(-5, -5, -5), V(5, 5, 5)};
const Box kCube3{V(-3, -3, -3), V(3, 3, 3)};

// Verified tilings from criteria 1 and 2, for the density law.
struct Verified {
  Rational density;
  Rational volume;
  std::int64_t level;
};
std::vector<Verified> verified;

bool record(const Zonotope& z, const CoverageReport& r) {
  if (!r.level) return false;
  verified.push_back({r.density, volume(z), *r.level});
  return true;
}

}  // namespace

int main() {
  const Zonotope cube_z = cube();
  const TranslateSet z3 = single_lattice(Lattice::integer_lattice());

  report(1, "cube + Z^3 is a 1-tiling over [-4,4]^3, 10^4 samples, < 10 s", [&] {
    Clock::time_point t0 = Clock::now();
    CoverageReport r = verify_level(cube_z, z3, kCube4, 10000, 1);
    double t = seconds_since(t0);
    record(cube_z, r);
    bool ok = r.level == 1 && r.violations.empty() && r.samples == 10000 && t < 10;
    return Outcome{ok, "level " + (r.level ? std::to_string(*r.level) : std::string("null")) + ", violations " +
                           std::to_string(r.violations.size()) + fmt(", %.2f s", t)};
  });

  report(2, "slab-choice tilings of the cube verify at level N k = 2 over [-5,5]^3", [&] {
    WeirdConstruction c = build_construction(cube_z, two_flat(cube_z));
    if (c.coefficients != std::vector<Rational>{q(1, 2), q(1, 2)}) return Outcome{false, "unexpected coefficients"};
    const std::int64_t target = c.n_value * c.base_level;
    Clock::time_point t0 = Clock::now();
    CoverageReport first = verify_level(cube_z, build_weird(c, {{0, Slab::T}}), kCube5, 10000, 1);
    double t = seconds_since(t0);
    bool ok = target == 2 && first.level == target && t < 60 && record(cube_z, first);
    std::mt19937_64 rng(2);
    int agreeing = 0;
    for (int m = 0; m < 10; ++m) {
      std::map<std::int64_t, Slab> choice;
      for (std::int64_t j = -8; j <= 8; ++j)
        if (rng() % 2) choice[j] = Slab::T;
      CoverageReport r = verify_level(cube_z, build_weird(c, choice), kCube5, 10000, 100 + static_cast<std::uint64_t>(m));
      if (r.level == target && record(cube_z, r)) ++agreeing;
    }
    ok = ok && agreeing == 10;
    return Outcome{ok, "E_0 = T level " + (first.level ? std::to_string(*first.level) : std::string("null")) + fmt(" in %.2f s", t) +
                           ", random maps at level 2: " + std::to_string(agreeing) + "/10"};
  });

  report(3, "slab equality at 10^3 points (cube; random two-flat n = 3, m = 2)", [&] {
    WeirdConstruction c = build_construction(cube_z, two_flat(cube_z));
    SlabIdentityReport a = slab_identity_check(c, kCube3, 1000, 3);
    std::mt19937_64 rng(33);
    Zonotope z = random_two_flat(rng, 3, 2);
    WeirdConstruction w = build_construction(z, two_flat(z));
    SlabIdentityReport b = slab_identity_check(w, kCube3, 1000, 3);
    bool ok = a.holds && b.holds && a.samples == 1000 && b.samples == 1000 && w.v().size() == 3 && w.w_indices.size() == 2;
    return Outcome{ok, std::string("cube ") + (a.holds ? "holds" : "fails") + ", random " + (b.holds ? "holds" : "fails")};
  });

  report(4, "intersection decider matches the brute-force oracle", [&] {
    std::mt19937_64 rng(404);
    int agree = 0;
    for (int t = 0; t < 20; ++t) {
      Zonotope z = random_zonotope(rng, 3, 6);
      FrameSet fs = frames(z);
      IntersectionVerdict v = intersection_property(fs.frames);
      bool witness_ok = v.holds || (v.witness && witness_valid(fs.frames, *v.witness) && orthogonal_to_every_frame(fs.frames, *v.witness));
      if (v.holds == intersection_oracle(fs.frames) && witness_ok) ++agree;
    }
    FrameSet cf = frames(cube_z);
    IntersectionVerdict cv = intersection_property(cf.frames);
    bool cube_ok = !cv.holds && cv.witness && orthogonal_to_every_frame(cf.frames, *cv.witness);
    bool five_ok = intersection_property(frames(five_general()).frames).holds;
    return Outcome{agree == 20 && cube_ok && five_ok, "oracle agreement " + std::to_string(agree) + "/20, cube witness " +
                                                          (cube_ok ? "verified" : "missing") + ", 5-generator " + (five_ok ? "holds" : "fails")};
  });

  report(5, "intersection failure implies two-flat on 50 random zonotopes", [&] {
    std::mt19937_64 rng(505);
    int contradictions = 0, failures_seen = 0;
    for (int t = 0; t < 50; ++t) {
      Zonotope z = random_zonotope(rng, 3, 6, true);
      bool holds = intersection_property(frames(z).frames).holds;
      if (!holds) {
        ++failures_seen;
        if (!two_flat(z).is_two_flat) ++contradictions;
      }
      try {
        classify(z);
      } catch (const ConsistencyError&) {
        ++contradictions;
      }
    }
    return Outcome{contradictions == 0, std::to_string(contradictions) + " contradictions, " + std::to_string(failures_seen) + " failures of the property"};
  });

  report(6, "paving: 10^4 interior points each in exactly one cell; volumes exact", [&] {
    std::vector<Zonotope> zs{cube(), rhombic(), Zonotope::build({V(1, 0, 0), V(0, 1, 0), V(0, 0, 1), V(2, 0, 0)}), five_general(), hex_prism()};
    bool ok = true;
    std::size_t checked = 0;
    for (const Zonotope& z : zs) {
      Paving p = pave(z);
      ok = ok && p.volume() == triple_volume(z.generators()) && p.volume() == volume(z);
      std::mt19937_64 rng(6);
      const Box box = z.bounding_box();
      std::size_t interior = 0;
      while (interior < 10000) {
        Vec3 x = sample_point(box, rng);
        if (contains(z, x) != Location::Interior) continue;
        if (p.on_any_boundary(x)) continue;
        ++interior;
        if (p.multiplicity(x) != 1) ok = false;
      }
      checked += interior;
    }
    return Outcome{ok, std::to_string(checked) + " interior points over 5 zonotopes"};
  });

  report(7, "leg transforms vanish on plane families and match quadrature", [&] {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> level(-3, 3), num(-30, 30), den(1, 11);
    std::uniform_real_distribution<double> u(-3, 3);
    double worst_zero = 0, worst_quad = 0;
    std::size_t zero_pts = 0, quad_pts = 0;
    for (const Zonotope& z : {cube(), rhombic()})
      for (const Frame& f : frames(z).frames) {
        LegMeasure m = LegMeasure::of(f);
        for (int family = 0; family < 3; ++family) {
          const Vec3& x = family == 0 ? f.e : (family == 1 ? f.tau1 : f.tau2);
          Vec3 a = cross(x, V(1, 0, 0));
          if (a.is_zero()) a = cross(x, V(0, 1, 0));
          Vec3 b = cross(x, a);
          for (int i = 0; i < 100; ++i) {
            long k = level(rng);
            if (family == 0 && k == 0) k = 1 + static_cast<long>(rng() % 3);
            Vec3 xi = Rational(k) * x / norm2(x) + q(num(rng), den(rng)) / norm2(a) * a + q(num(rng), den(rng)) / norm2(b) * b;
            if (!zero_set_member(f, xi)) return Outcome{false, "constructed point outside the zero set"};
            worst_zero = std::max(worst_zero, std::abs(leg_ft(m, to_double(xi))));
            ++zero_pts;
          }
        }
        for (int i = 0; i < 100; ++i) {
          std::array<double, 3> xi{u(rng), u(rng), u(rng)};
          worst_quad = std::max(worst_quad, std::abs(leg_ft(m, xi) - quadrature_ft(f, m.weights, xi)));
          ++quad_pts;
        }
      }
    bool ok = worst_zero <= 1e-9 && worst_quad <= 1e-8;
    return Outcome{ok, std::to_string(zero_pts) + " zero-set points, max |ft| " + fmt("%.2e", worst_zero) + "; " + std::to_string(quad_pts) +
                           " random points, max |ft - quad| " + fmt("%.2e", worst_quad)};
  });

  report(8, "support bound for cube + Z^3 at radius 5", [&] {
    SupportReport r = support_bound_check(cube_z, z3, q(5));
    return Outcome{r.passed() && r.candidates > 0, std::to_string(r.candidates) + " candidates, " + std::to_string(r.violations.size()) + " violations"};
  });

  report(9, "leg measures pair to zero with 20 Gaussians against cube + Z^3", [&] {
    double worst = 0;
    bool ok = true;
    for (const Frame& f : frames(cube_z).frames) {
      LevelZeroReport r = leg_level_zero_check(LegMeasure::of(f), z3, 20, 1e-6, 9);
      ok = ok && r.passed && r.pairings.size() == 20;
      worst = std::max(worst, r.max_abs);
    }
    return Outcome{ok && worst <= 1e-6, "max |pairing| " + fmt("%.2e", worst) + " over 6 frames"};
  });

  report(10, "AP coloring: every one of 200 progressions has both colors", [&] {
    Coloring c = ap_coloring(200);
    bool ok = c.processed_aps.size() == 200 && c.audit();
    for (const auto& [d, a] : c.processed_aps) {
      bool red = false, black = false;
      for (const auto& [n, col] : c.colored)
        if (((n % d) + d) % d == a) (col == Color::Red ? red : black) = true;
      ok = ok && red && black;
    }
    return Outcome{ok, std::to_string(c.colored.size()) + " integers colored"};
  });

  report(11, "irregularity along gamma_1 Z matches the coloring for l in [-50, 50]", [&] {
    WeirdConstruction c = build_construction(cube_z, two_flat(cube_z));
    Coloring col = ap_coloring(200);
    IrregularityReport r = irregularity_certificate(c, col, -50, 50);
    int ones = 0, zeros = 0;
    for (const auto& [l, m] : r.multiplicities) (m == 1 ? ones : zeros) += 1;
    return Outcome{r.passed() && r.multiplicities.size() == 101,
                   "multiplicity 1 at " + std::to_string(ones) + " points, 0 at " + std::to_string(zeros)};
  });

  report(12, "density x volume = level for every verified tiling above", [&] {
    bool ok = verified.size() == 12;
    for (const Verified& v : verified) ok = ok && v.density * v.volume == Rational(static_cast<long>(v.level));
    return Outcome{ok, std::to_string(verified.size()) + " tilings checked"};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
