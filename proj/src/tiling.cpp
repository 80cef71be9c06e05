#include "zonotile/tiling.hpp"

#include <algorithm>
#include <random>

namespace zonotile {

const char* to_string(Slab s) { return s == Slab::S ? "S" : "T"; }

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// Calls visit(offset, tag) for each slab offset.
template <class F>
void for_each_offset(const SlabChoice& s, F&& visit) {
  for (const Vec3& u : s.s_offsets) visit(u, Slab::S);
  for (const Vec3& u : s.t_offsets) visit(u, Slab::T);
}

}  // namespace

void for_each_translate(const TranslateSet& lam, const Box& box, const std::function<void(const Vec3&, int)>& visit) {
  std::visit(overloaded{
                 [&](const LatticeUnion& u) {
                   for (const LatticeComponent& c : u.components)
                     c.lattice.for_each_point_in_box(box, c.offset, [&](const Vec3& p) { visit(p, c.weight); });
                 },
                 [&](const SlabChoice& s) {
                   for_each_offset(s, [&](const Vec3& u, Slab tag) {
                     s.gamma().for_each_point_in_box(box.translated(-u), Vec3::zero(), [&](const Vec3& gamma_pt) {
                       if (s.at(s.cosets.index_of(gamma_pt)) == tag) visit(gamma_pt + u, 1);
                     });
                   });
                 }},
             lam);
}

int multiplicity_at(const TranslateSet& lam, const Vec3& x) {
  return std::visit(overloaded{
                        [&](const LatticeUnion& u) {
                          int m = 0;
                          for (const LatticeComponent& c : u.components)
                            if (c.lattice.contains(x - c.offset)) m += c.weight;
                          return m;
                        },
                        [&](const SlabChoice& s) {
                          // x lies in g + u + rep(j) iff x - u is in gamma and in coset j.
                          int m = 0;
                          for_each_offset(s, [&](const Vec3& u, Slab tag) {
                            auto coords = s.gamma().integer_coordinates(x - u);
                            if (coords && s.at(s.cosets.index_of_coords(*coords)) == tag) ++m;
                          });
                          return m;
                        }},
                    lam);
}

std::vector<std::pair<Vec3, int>> materialize(const TranslateSet& lam, const Box& box) {
  std::map<Vec3, int> points;
  for_each_translate(lam, box, [&](const Vec3& p, int m) { points[p] += m; });
  return {points.begin(), points.end()};
}

TranslateSet translated(const TranslateSet& lam, const Vec3& t) {
  return std::visit(overloaded{
                        [&](const LatticeUnion& u) -> TranslateSet {
                          LatticeUnion out = u;
                          for (LatticeComponent& c : out.components) c.offset += t;
                          return out;
                        },
                        [&](const SlabChoice& s) -> TranslateSet {
                          SlabChoice out = s;
                          for (Vec3& u : out.s_offsets) u += t;
                          for (Vec3& u : out.t_offsets) u += t;
                          return out;
                        }},
                    lam);
}

int coverage(const Zonotope& z, const TranslateSet& lam, const Vec3& x) {
  const Box body = z.bounding_box();
  // lambda ranges over x - P, whose bounding box is [x - hi, x - lo].
  const Box reach{x - body.hi, x - body.lo};
  int count = 0;
  std::visit(overloaded{
                 [&](const LatticeUnion& u) {
                   for (const LatticeComponent& c : u.components)
                     c.lattice.for_each_point_in_box(reach, c.offset, [&](const Vec3& lambda) {
                       Location loc = z.locate(x - lambda);
                       if (loc == Location::Boundary) throw BoundaryHit();
                       if (loc == Location::Interior) count += c.weight;
                     });
                 },
                 [&](const SlabChoice& s) {
                   for_each_offset(s, [&](const Vec3& u, Slab tag) {
                     s.gamma().for_each_point_in_box(reach.translated(-u), Vec3::zero(), [&](const Vec3& gamma_pt) {
                       Location loc = z.locate(x - u - gamma_pt);
                       if (loc == Location::Outside) return;
                       if (s.at(s.cosets.index_of(gamma_pt)) != tag) return;
                       if (loc == Location::Boundary) throw BoundaryHit();
                       ++count;
                     });
                   });
                 }},
             lam);
  return count;
}

Rational density(const TranslateSet& lam) {
  return std::visit(overloaded{
                        [](const LatticeUnion& u) -> Rational {
                          Rational d = 0;
                          for (const LatticeComponent& c : u.components) d += Rational(c.weight) / c.lattice.covolume();
                          return d;
                        },
                        [](const SlabChoice& s) -> Rational {
                          // Every coset carries |offsets| translates of g whichever slab is chosen,
                          // so the count per fundamental domain of gamma is unchanged.
                          if (s.s_offsets.size() != s.t_offsets.size()) throw InputError("slab offset lists differ in size");
                          return Rational(static_cast<long>(s.s_offsets.size())) / s.gamma().covolume();
                        }},
                    lam);
}

CoverageReport verify_level(const Zonotope& z, const TranslateSet& lam, const Box& window, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw InputError("samples must be at least 1");
  CoverageReport report;
  report.window = window;
  report.seed = seed;
  report.samples = samples;
  report.density = density(lam);

  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vec3, int>> values;
  values.reserve(samples);
  constexpr std::size_t kMaxResamples = 1000;
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t attempt = 0;; ++attempt) {
      Vec3 x = sample_point(window, rng);
      try {
        int c = coverage(z, lam, x);
        values.emplace_back(std::move(x), c);
        ++report.histogram[c];
        break;
      } catch (const BoundaryHit&) {
        ++report.resamples;
        if (attempt >= kMaxResamples) throw Error("too many boundary hits while sampling");
      }
    }
  }

  // Modal coverage; ties resolved towards the smaller value.
  int mode = report.histogram.begin()->first;
  for (const auto& [value, count] : report.histogram)
    if (count > report.histogram[mode]) mode = value;
  for (auto& [x, c] : values)
    if (c != mode) report.violations.emplace_back(x, c);
  if (report.violations.empty()) {
    report.level = mode;
    report.density_consistent = report.density * volume(z) == Rational(mode);
  }
  return report;
}

}  // namespace zonotile
