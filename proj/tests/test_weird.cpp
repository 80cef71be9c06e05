#include "support.hpp"

#include <doctest.h>

using namespace zt_test;

namespace {

// All nonempty subset sums of c_i v_i avoid g.
bool subset_condition(const Lattice& g, const std::vector<Vec3>& v, const std::vector<Rational>& c) {
  for (std::size_t mask = 1; mask < (std::size_t{1} << v.size()); ++mask) {
    Vec3 s = Vec3::zero();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask >> i & 1U) s += c[i] * v[i];
    if (g.contains(s)) return false;
  }
  return true;
}

WeirdConstruction cube_construction() {
  Zonotope z = cube();
  return build_construction(z, two_flat(z));
}

const Box kSmall{V(-3, -3, -3), V(3, 3, 3)};

}  // namespace

TEST_CASE("coefficient choice") {
  Lattice xy({V(1, 0, 0), V(0, 1, 0)});
  CHECK(choose_coefficients(xy, {V(1, 0, 0), V(0, 1, 0)}) == std::vector<Rational>{q(1, 2), q(1, 2)});
  CHECK(choose_coefficients(Lattice({V(1, 0, 0)}), {V(1, 0, 0)}) == std::vector<Rational>{q(1, 2)});

  std::vector<Vec3> v2{V(2, 0, 0), V(0, 2, 0)};
  Lattice g2(v2);
  auto c2 = choose_coefficients(g2, v2);
  CHECK(subset_condition(g2, v2, c2));
  CHECK(c2 == std::vector<Rational>{q(1, 2), q(1, 2)});

  // e1 and -e1 cancel under equal coefficients; distinct primes are used.
  std::vector<Vec3> v3{V(1, 0, 0), V(-1, 0, 0), V(0, 1, 0)};
  auto c3 = choose_coefficients(xy, v3);
  CHECK(subset_condition(xy, v3, c3));
  CHECK(c3[0] != c3[1]);

  // Equal-coefficient search takes the smallest working prime.
  std::vector<Vec3> v4{V(1, 0, 0), V(0, 1, 0), V(1, 1, 0)};
  Lattice g4 = Lattice::generated_by(v4);
  auto c4 = choose_coefficients(g4, v4);
  CHECK(subset_condition(g4, v4, c4));
  CHECK(!subset_condition(g4, v4, {q(1, 2), q(1, 2), q(1, 2)}));
  CHECK(c4 == std::vector<Rational>{q(1, 3), q(1, 3), q(1, 3)});
}

TEST_CASE("cube construction") {
  WeirdConstruction c = cube_construction();
  CHECK(c.v() == std::vector<Vec3>{V(1, 0, 0), V(0, 1, 0)});
  CHECK(c.w_indices == std::vector<std::size_t>{2});
  CHECK(c.coefficients == std::vector<Rational>{q(1, 2), q(1, 2)});
  CHECK(std::set<Vec3>(c.s_offsets.begin(), c.s_offsets.end()) == std::set<Vec3>{V(0, 0, 0), V(q(1, 2), q(1, 2), 0)});
  CHECK(std::set<Vec3>(c.t_offsets.begin(), c.t_offsets.end()) == std::set<Vec3>{V(q(1, 2), 0, 0), V(0, q(1, 2), 0)});
  CHECK(c.n_value == 2);
  CHECK(c.base_level == 1);
  CHECK(c.gamma.same_lattice(Lattice::integer_lattice()));
  CHECK(c.g.same_lattice(Lattice({V(1, 0, 0), V(0, 1, 0)})));
  CHECK(c.cosets.torsion_order() == 1);
  CHECK(build_weird(c).expected_level == 2);
}

TEST_CASE("hexagonal prism construction") {
  Zonotope z = hex_prism();
  WeirdConstruction c = build_construction(z, two_flat(z));
  CHECK(c.v().size() == 3);
  CHECK(c.n_value == 4);
  CHECK(c.base_level == volume(z) / c.gamma.covolume());
  CHECK(c.base_level == 3);
  CHECK(subset_condition(c.g, c.v(), c.coefficients));
  SlabChoice lam = build_weird(c, {{1, Slab::T}});
  CoverageReport r = verify_level(z, lam, kSmall, 300, 4);
  CHECK(r.level == 12);
  CHECK(r.density * volume(z) == 12);
}

TEST_CASE("construction preconditions") {
  Zonotope z = five_general();
  CHECK_THROWS_AS(build_construction(z, two_flat(z)), InputError);
  Zonotope c = cube();
  CHECK_THROWS_AS(build_construction(c, two_flat(c), {q(1, 2)}), InputError);
  CHECK_THROWS_AS(build_construction(c, two_flat(c), {q(1, 2), q(0)}), InputError);
}

TEST_CASE("slab identity") {
  WeirdConstruction c = cube_construction();
  SUBCASE("cube construction") {
    SlabIdentityReport r = slab_identity_check(c, kSmall, 1000, 1);
    CHECK(r.holds);
    CHECK(r.samples == 1000);
    CHECK(r.lhs == r.rhs);
  }
  SUBCASE("corrupted offset") {
    WeirdConstruction bad = c;
    bad.t_offsets[0] += V(0, 0, q(1, 3));
    SlabIdentityReport r = slab_identity_check(bad, kSmall, 1000, 1);
    CHECK(!r.holds);
    REQUIRE(r.mismatch);
    CHECK(r.lhs != r.rhs);
  }
  SUBCASE("other admissible coefficients") {
    Zonotope z = cube();
    WeirdConstruction other = build_construction(z, two_flat(z), {q(1, 3), q(1, 5)});
    CHECK(slab_identity_check(other, kSmall, 500, 2).holds);
    CHECK(verify_level(z, build_weird(other, {{0, Slab::T}}), kSmall, 500, 2).level == 2);
  }
  SUBCASE("single segment") {
    // One generator: both sides are the Z e1 periodization, shifted by half a step.
    WeirdConstruction one = c;
    one.v_indices = {0};
    one.g = Lattice({V(1, 0, 0)});
    one.s_offsets = {Vec3::zero()};
    one.t_offsets = {V(q(1, 2), 0, 0)};
    CHECK(slab_identity_check(one, kSmall, 500, 3).holds);
  }
  SUBCASE("random two-flat zonotope with n = 3, m = 2") {
    std::mt19937_64 rng(40);
    Zonotope z = random_two_flat(rng, 3, 2);
    WeirdConstruction w = build_construction(z, two_flat(z));
    CHECK(slab_identity_check(w, kSmall, 300, 5).holds);
  }
}

TEST_CASE("slab choices all tile at level N k") {
  WeirdConstruction c = cube_construction();
  const Zonotope& z = c.p;
  CHECK(verify_level(z, build_weird(c), kSmall, 500, 1).level == 2);
  CHECK(verify_level(z, build_weird(c, {{0, Slab::T}}), kSmall, 500, 1).level == 2);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 3; ++t) {
    std::map<std::int64_t, Slab> choice;
    for (std::int64_t j = -4; j <= 4; ++j)
      if (rng() % 2) choice[j] = Slab::T;
    SlabChoice lam = build_weird(c, choice);
    CoverageReport r = verify_level(z, lam, kSmall, 500, t + 1);
    CHECK(r.level == 2);
    CHECK(r.density * volume(z) == 2);
  }
}

TEST_CASE("S and T differ at the origin") {
  WeirdConstruction c = cube_construction();
  CHECK(multiplicity_at(build_weird(c), Vec3::zero()) == 1);
  CHECK(multiplicity_at(build_weird(c, {{0, Slab::T}}), Vec3::zero()) == 0);
}

TEST_CASE("progression schedule") {
  std::vector<std::pair<std::int64_t, std::int64_t>> head;
  for (std::size_t k = 0; k < 7; ++k) head.push_back(ap_schedule(k));
  using P = std::pair<std::int64_t, std::int64_t>;
  CHECK(head == std::vector<P>{{1, 0}, {1, 0}, {2, 0}, {1, 0}, {2, 0}, {2, 1}, {3, 0}});
  // Every progression with d + a <= 6 recurs within the first 200 steps.
  std::map<P, int> seen;
  for (std::size_t k = 0; k < 200; ++k) ++seen[ap_schedule(k)];
  for (std::int64_t d = 1; d <= 6; ++d)
    for (std::int64_t a = 0; a < d && d + a <= 6; ++a) CHECK(seen[{d, a}] >= 2);
}

TEST_CASE("greedy coloring") {
  Coloring one = ap_coloring(1);
  CHECK(one.colored.size() == 2);
  CHECK(one.colored.at(0) == Color::Red);
  CHECK(one.colored.at(1) == Color::Black);
  CHECK(one.audit());
  CHECK(one.color(1000) == Color::Red);

  Coloring c = ap_coloring(200);
  CHECK(c.processed_aps.size() == 200);
  CHECK(c.colored.size() == 400);
  CHECK(c.audit());
  // Independent audit straight from the definition.
  for (const auto& [d, a] : c.processed_aps) {
    bool red = false, black = false;
    for (const auto& [n, col] : c.colored)
      if (((n % d) + d) % d == a) (col == Color::Red ? red : black) = true;
    CHECK(red);
    CHECK(black);
  }
  CHECK_THROWS_AS(ap_coloring(0), InputError);
}

TEST_CASE("irregularity certificate") {
  WeirdConstruction c = cube_construction();
  Coloring coloring = ap_coloring(200);
  IrregularityReport r = irregularity_certificate(c, coloring, -50, 50);
  CHECK(r.passed());
  CHECK(r.multiplicities.size() == 101);
  CHECK(parallel(r.line_generator, V(0, 0, 1)));
  for (const auto& [l, m] : r.multiplicities) CHECK(m == (coloring.color(l) == Color::Red ? 1 : 0));

  // All-S and all-T along the line.
  const Vec3 g1 = c.cosets.rep(1);
  std::map<std::int64_t, Slab> all_t;
  for (std::int64_t l = -50; l <= 50; ++l) all_t[c.cosets.index_of(Rational(static_cast<long>(l)) * g1)] = Slab::T;
  const TranslateSet s_set = build_weird(c), t_set = build_weird(c, all_t);
  for (std::int64_t l = -50; l <= 50; ++l) {
    Vec3 p = Rational(static_cast<long>(l)) * g1;
    CHECK(multiplicity_at(s_set, p) == 1);
    CHECK(multiplicity_at(t_set, p) == 0);
  }
  CHECK_THROWS_AS(irregularity_certificate(c, coloring, 3, 2), InputError);
}

TEST_CASE("torsion that breaks the line of representatives is reported") {
  Zonotope z = Zonotope::build({V(2, 0, 0), V(0, 1, 0), V(0, 0, 1), V(1, 0, 1)});
  TwoFlatVerdict flats;
  flats.is_two_flat = true;
  flats.h1_indices = {0, 1};
  flats.h2_indices = {2, 3};
  flats.h1_normal = V(0, 0, 1);
  flats.h2_normal = V(0, 1, 0);
  WeirdConstruction c = build_construction(z, flats);
  CHECK(c.cosets.torsion_order() == 2);
  CHECK_THROWS_AS(irregularity_certificate(c, ap_coloring(10), -5, 5), InputError);
}
