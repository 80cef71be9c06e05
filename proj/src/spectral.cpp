#include "zonotile/spectral.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <map>
#include <random>
#include <set>

namespace zonotile {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

double dotd(const std::array<double, 3>& a, const std::array<double, 3>& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// sin(pi t) with the argument reduced to [-1/2, 1/2] first.
double sin_pi(double t) {
  double n = std::round(t);
  double s = std::sin(kPi * (t - n));
  return std::fmod(std::abs(n), 2.0) == 1.0 ? -s : s;
}

// exp(-2 pi i t)
std::complex<double> phase(double t) {
  double r = t - std::round(t);
  return std::polar(1.0, -2.0 * kPi * r);
}

double sinc_pi(double t) {
  if (std::abs(t) < 1e-12) return 1.0;
  return sin_pi(t) / (kPi * t);
}

}  // namespace

PlaneFamily::PlaneFamily(Vec3 x_, bool punctured_) : x(std::move(x_)), punctured(punctured_) {
  if (x.is_zero()) throw InputError("plane family needs a nonzero vector");
}

bool PlaneFamily::contains(const Vec3& xi) const {
  Rational t = dot(xi, x);
  if (!is_integer(t)) return false;
  return !punctured || sign(t) != 0;
}

std::complex<double> leg_ft(const LegMeasure& m, const std::array<double, 3>& xi) {
  const Frame& f = m.frame;
  if (f.degenerate()) throw InputError("degenerate frame");
  const auto e = to_double(f.e);
  const double len = std::sqrt(dotd(e, e));
  const double s = dotd(xi, e);
  const std::complex<double> nu = len * sinc_pi(s);
  const Vec3 mid = f.base + f.e / Rational(2);
  const double shift = dotd(xi, to_double(mid));

  if (m.standard()) {
    const double t1 = dotd(xi, to_double(f.tau1));
    const double t2 = dotd(xi, to_double(f.tau2));
    const std::complex<double> two_i(0.0, 2.0);
    std::complex<double> alpha = two_i * std::polar(1.0, -kPi * (t1 - 2.0 * std::round(t1 / 2.0))) * sin_pi(t1);
    std::complex<double> beta = two_i * std::polar(1.0, -kPi * (t2 - 2.0 * std::round(t2 / 2.0))) * sin_pi(t2);
    return phase(shift) * nu * alpha * beta;
  }
  std::complex<double> acc = 0;
  const std::array<Vec3, 4> offsets{Vec3::zero(), f.tau1, f.tau2, f.tau1 + f.tau2};
  for (std::size_t k = 0; k < 4; ++k) acc += static_cast<double>(m.weights[k]) * phase(shift + dotd(xi, to_double(offsets[k])));
  return acc * nu;
}

bool zero_set_member(const Frame& f, const Vec3& xi) {
  return PlaneFamily(f.e, true).contains(xi) || PlaneFamily(f.tau1, false).contains(xi) ||
         PlaneFamily(f.tau2, false).contains(xi);
}

// Roots of unity ---------------------------------------------------------------

namespace {

using Poly = std::vector<Rational>;  // coefficient of x^k at index k

void trim(Poly& p) {
  while (!p.empty() && sign(p.back()) == 0) p.pop_back();
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Remainder and quotient of a / b (b monic or not).
std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  return {q, a};
}

Poly cyclotomic(long n) {
  static thread_local std::map<long, Poly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Poly num(static_cast<std::size_t>(n) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  Poly den{Rational(1)};
  for (long d = 1; d < n; ++d)
    if (n % d == 0) den = multiply(den, cyclotomic(d));
  Poly phi = divide(num, den).first;
  cache[n] = phi;
  return phi;
}

}  // namespace

bool root_of_unity_sum_is_zero(const std::vector<std::pair<Rational, Rational>>& terms) {
  Integer q = 1;
  for (const auto& [c, r] : terms) q = lcm(q, r.get_den());
  if (!q.fits_slong_p() || q > 100000) throw Error("root-of-unity order too large");
  const long order = q.get_si();
  Poly p(static_cast<std::size_t>(order), Rational(0));
  for (const auto& [c, r] : terms) {
    Rational scaled = r * q;
    Integer k = scaled.get_num();
    Integer m;
    mpz_fdiv_r_ui(m.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(order));
    p[m.get_ui()] += c;
  }
  return divide(p, cyclotomic(order)).second.empty();
}

// Support bound ----------------------------------------------------------------

SupportReport support_bound_check(const Zonotope& z, const TranslateSet& lam, const Rational& radius) {
  const auto* lu = std::get_if<LatticeUnion>(&lam);
  if (!lu) throw InputError("periodic description required");
  if (lu->components.empty()) throw InputError("empty lattice union");

  SupportReport report;
  report.radius = radius;
  FrameSet fs = frames(z);
  report.frames_checked = fs.frames.size();

  std::vector<Lattice> duals;
  std::vector<Rational> covols;
  for (const LatticeComponent& c : lu->components) {
    duals.push_back(dual_lattice(c.lattice));
    covols.push_back(c.lattice.covolume());
  }

  const Rational r2 = radius * radius;
  const Box ball{Vec3(-radius, -radius, -radius), Vec3(radius, radius, radius)};
  std::set<Vec3> candidates;
  for (const Lattice& d : duals)
    d.for_each_point_in_box(ball, Vec3::zero(), [&](const Vec3& xi) {
      if (norm2(xi) <= r2) candidates.insert(xi);
    });
  report.candidates = candidates.size();

  for (const Vec3& xi : candidates) {
    // Poisson: the transform of delta_{L + a} is exp(-2 pi i <a, xi>) delta_{L*} / covol(L).
    std::vector<std::pair<Rational, Rational>> terms;
    for (std::size_t i = 0; i < duals.size(); ++i)
      if (duals[i].contains(xi))
        terms.emplace_back(Rational(lu->components[i].weight) / covols[i], -dot(lu->components[i].offset, xi));
    if (root_of_unity_sum_is_zero(terms)) {
      report.exempt.push_back(xi);
      continue;
    }
    if (xi.is_zero()) continue;
    bool inside = std::all_of(fs.frames.begin(), fs.frames.end(), [&](const Frame& f) { return zero_set_member(f, xi); });
    if (!inside) report.violations.push_back(xi);
  }
  return report;
}

// Level zero -----------------------------------------------------------------------

LevelZeroReport leg_level_zero_check(const LegMeasure& m, const TranslateSet& lam, std::size_t trials, double tol, std::uint64_t seed) {
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  const Frame& f = m.frame;
  const std::array<Vec3, 4> starts = f.leg_starts();

  // Bounding box of the legs.
  Box legs{starts[0], starts[0]};
  for (const Vec3& s : starts)
    for (const Vec3& p : {s, s + f.e})
      for (int i = 0; i < 3; ++i) {
        if (p[i] < legs.lo[i]) legs.lo[i] = p[i];
        if (p[i] > legs.hi[i]) legs.hi[i] = p[i];
      }

  // Unit-width Gaussian truncated at 8 sigma, wider if the tolerance demands it.
  const double cutoff = std::max(8.0, std::sqrt(2.0 * std::log(1000.0 / tol)));
  const auto e = to_double(f.e);
  const double len = std::sqrt(dotd(e, e));
  std::array<std::array<double, 3>, 4> start_d;
  for (std::size_t k = 0; k < 4; ++k) start_d[k] = to_double(starts[k]);

  LevelZeroReport report;
  report.tol = tol;
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Box around{legs.lo - Vec3(1, 1, 1), legs.hi + Vec3(1, 1, 1)};
    Vec3 center = sample_point(around, rng, 1000);
    const auto c = to_double(center);

    Rational reach = Rational(static_cast<long>(std::ceil(cutoff)));
    Box window{center - legs.hi - Vec3(reach, reach, reach), center - legs.lo + Vec3(reach, reach, reach)};
    std::vector<std::pair<std::array<double, 3>, int>> lambdas;
    for_each_translate(lam, window, [&](const Vec3& p, int mult) { lambdas.emplace_back(to_double(p), mult); });

    auto pairing = [&](int panels) {
      double total = 0;
      for (const auto& [lambda, mult] : lambdas)
        for (std::size_t k = 0; k < 4; ++k) {
          std::array<double, 3> p0{start_d[k][0] + lambda[0] - c[0], start_d[k][1] + lambda[1] - c[1], start_d[k][2] + lambda[2] - c[2]};
          auto phi = [&](double t) {
            double dx = p0[0] + t * e[0], dy = p0[1] + t * e[1], dz = p0[2] + t * e[2];
            return std::exp(-0.5 * (dx * dx + dy * dy + dz * dz));
          };
          double integral = 0;
          for (int panel = 0; panel < panels; ++panel)
            integral += boost::math::quadrature::gauss<double, 32>::integrate(phi, double(panel) / panels, double(panel + 1) / panels);
          total += mult * m.weights[k] * len * integral;
        }
      return total;
    };

    int panels = 1;
    double value = pairing(panels);
    for (; panels < 64; panels *= 2) {
      double refined = pairing(panels * 2);
      bool settled = std::abs(refined - value) < tol / 100;
      value = refined;
      if (settled) break;
    }
    report.pairings.push_back(value);
    report.max_abs = std::max(report.max_abs, std::abs(value));
  }
  report.passed = report.max_abs <= tol;
  return report;
}

}  // namespace zonotile
