#include "zonotile/lattice.hpp"

#include <algorithm>
#include <utility>

namespace zonotile {

bool Box::contains(const Vec3& p) const {
  for (int i = 0; i < 3; ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

namespace {

// Inverse of a small (1x1, 2x2, 3x3) rational matrix given row-major.
std::vector<Rational> small_inverse(const std::vector<Rational>& a, int n) {
  if (n == 1) return {1 / a[0]};
  if (n == 2) {
    Rational d = a[0] * a[3] - a[1] * a[2];
    return {a[3] / d, -a[1] / d, -a[2] / d, a[0] / d};
  }
  Mat3 m = Mat3::from_columns({a[0], a[3], a[6]}, {a[1], a[4], a[7]}, {a[2], a[5], a[8]});
  Mat3 inv = m.inverse();
  std::vector<Rational> r(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i * 3 + j] = inv.col[j][i];
  return r;
}

Rational small_det(const std::vector<Rational>& a, int n) {
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  return det({a[0], a[3], a[6]}, {a[1], a[4], a[7]}, {a[2], a[5], a[8]});
}

}  // namespace

Lattice::Lattice(std::vector<Vec3> basis) : basis_(std::move(basis)) {
  const int r = static_cast<int>(basis_.size());
  if (r < 1 || r > 3) throw InputError("lattice basis must have 1 to 3 vectors");
  if (rank_of(basis_) != r) throw InputError("lattice basis vectors are linearly dependent");

  // First row subset (in lexicographic order) with an invertible minor.
  std::vector<std::vector<int>> subsets;
  if (r == 1) subsets = {{0}, {1}, {2}};
  if (r == 2) subsets = {{0, 1}, {0, 2}, {1, 2}};
  if (r == 3) subsets = {{0, 1, 2}};
  for (const auto& rows : subsets) {
    std::vector<Rational> minor(static_cast<std::size_t>(r * r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) minor[static_cast<std::size_t>(i * r + j)] = basis_[static_cast<std::size_t>(j)][rows[static_cast<std::size_t>(i)]];
    if (sgn(small_det(minor, r)) != 0) {
      pivot_rows_ = rows;
      minor_inverse_ = small_inverse(minor, r);
      return;
    }
  }
  throw Error("lattice basis has no invertible minor");
}

Lattice Lattice::generated_by(const std::vector<Vec3>& generators) {
  if (generators.empty()) throw InputError("lattice needs at least one generator");
  Integer den = 1;
  for (const Vec3& v : generators)
    for (int i = 0; i < 3; ++i) den = lcm(den, v[i].get_den());
  IntMatrix a(3, generators.size());
  for (std::size_t c = 0; c < generators.size(); ++c)
    for (int i = 0; i < 3; ++i) {
      Rational s = generators[c][i] * den;
      a(static_cast<std::size_t>(i), c) = s.get_num();
    }
  SmithForm f = smith_normal_form(a);
  IntMatrix u_inv = unimodular_inverse(f.u);
  std::vector<Vec3> basis;
  for (std::size_t k = 0; k < std::min<std::size_t>(3, generators.size()); ++k) {
    const Integer& d = f.s(k, k);
    if (d == 0) continue;
    Vec3 b{Rational(u_inv(0, k) * d), Rational(u_inv(1, k) * d), Rational(u_inv(2, k) * d)};
    basis.push_back(b / Rational(den));
  }
  if (basis.empty()) throw InputError("lattice generators are all zero");
  return Lattice(std::move(basis));
}

Rational Lattice::covolume() const {
  if (rank() != 3) throw InputError("full-rank lattice required");
  return abs(det(basis_[0], basis_[1], basis_[2]));
}

Rational Lattice::gram_determinant() const {
  const int r = rank();
  std::vector<Rational> gram(static_cast<std::size_t>(r * r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram[static_cast<std::size_t>(i * r + j)] = dot(basis_[static_cast<std::size_t>(i)], basis_[static_cast<std::size_t>(j)]);
  return small_det(gram, r);
}

std::optional<std::vector<Rational>> Lattice::coordinates(const Vec3& v) const {
  const int r = rank();
  std::vector<Rational> c(static_cast<std::size_t>(r), Rational(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c[static_cast<std::size_t>(i)] += minor_inverse_[static_cast<std::size_t>(i * r + j)] * v[pivot_rows_[static_cast<std::size_t>(j)]];
  Vec3 back = Vec3::zero();
  for (int i = 0; i < r; ++i) back += c[static_cast<std::size_t>(i)] * basis_[static_cast<std::size_t>(i)];
  if (back != v) return std::nullopt;
  return c;
}

std::optional<std::vector<Integer>> Lattice::integer_coordinates(const Vec3& v) const {
  auto c = coordinates(v);
  if (!c) return std::nullopt;
  std::vector<Integer> n;
  n.reserve(c->size());
  for (const Rational& q : *c) {
    if (!is_integer(q)) return std::nullopt;
    n.push_back(q.get_num());
  }
  return n;
}

Vec3 Lattice::point(const std::vector<Integer>& coords) const {
  Vec3 p = Vec3::zero();
  for (std::size_t i = 0; i < basis_.size(); ++i) p += Rational(coords.at(i)) * basis_[i];
  return p;
}

bool Lattice::is_sublattice_of(const Lattice& other) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vec3& b) { return other.contains(b); });
}

bool Lattice::same_lattice(const Lattice& other) const {
  return rank() == other.rank() && is_sublattice_of(other) && other.is_sublattice_of(*this);
}

void Lattice::for_each_point_in_box(const Box& box, const Vec3& offset, const std::function<void(const Vec3&)>& visit) const {
  const int r = rank();
  // Range of each coordinate over the corners of the box projected on the pivot rows.
  std::vector<Integer> lo(static_cast<std::size_t>(r)), hi(static_cast<std::size_t>(r));
  bool first = true;
  for (int corner = 0; corner < (1 << r); ++corner) {
    std::vector<Rational> p(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
      int row = pivot_rows_[static_cast<std::size_t>(j)];
      p[static_cast<std::size_t>(j)] = ((corner >> j) & 1 ? box.hi[row] : box.lo[row]) - offset[row];
    }
    for (int i = 0; i < r; ++i) {
      Rational c = 0;
      for (int j = 0; j < r; ++j) c += minor_inverse_[static_cast<std::size_t>(i * r + j)] * p[static_cast<std::size_t>(j)];
      Integer cl = ceil(c), f = floor(c);
      if (first || cl < lo[static_cast<std::size_t>(i)]) lo[static_cast<std::size_t>(i)] = cl;
      if (first || f > hi[static_cast<std::size_t>(i)]) hi[static_cast<std::size_t>(i)] = f;
    }
    first = false;
  }

  // Integer coordinates of a point in the box lie in [ceil(min), floor(max)].
  for (int i = 0; i < r; ++i)
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return;

  // Walk the coordinate box, stepping by basis vectors instead of recomputing points.
  std::vector<Integer> n = lo;
  std::vector<Vec3> row(static_cast<std::size_t>(r), offset + point(lo));
  Vec3 pt = row[0];
  for (;;) {
    if (box.contains(pt)) visit(pt);
    int k = 0;
    while (k < r) {
      auto kk = static_cast<std::size_t>(k);
      if (n[kk] < hi[kk]) {
        ++n[kk];
        row[kk] += basis_[kk];
        break;
      }
      n[kk] = lo[kk];
      ++k;
    }
    if (k == r) return;
    // Levels below k restart from the advanced level-k position.
    for (int i = k - 1; i >= 0; --i) row[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(k)];
    pt = row[0];
  }
}

Lattice dual_lattice(const Lattice& l) {
  if (l.rank() != 3) throw InputError("full-rank lattice required");
  const auto& b = l.basis();
  Mat3 dual = Mat3::from_columns(b[0], b[1], b[2]).inverse().transpose();
  return Lattice({dual.col[0], dual.col[1], dual.col[2]});
}

Lattice subspace_dual(const Lattice& g) {
  if (g.rank() != 2) throw InputError("rank-2 lattice required");
  const Vec3& a = g.basis()[0];
  const Vec3& b = g.basis()[1];
  Rational aa = dot(a, a), ab = dot(a, b), bb = dot(b, b);
  Rational d = aa * bb - ab * ab;
  // B (B^T B)^{-1}
  Vec3 a_star = (bb * a - ab * b) / d;
  Vec3 b_star = (aa * b - ab * a) / d;
  return Lattice({a_star, b_star});
}

// CosetEnumeration -----------------------------------------------------------

CosetEnumeration::CosetEnumeration(Lattice gamma, Lattice g) : gamma_(std::move(gamma)), g_(std::move(g)) {
  if (gamma_.rank() != 3) throw InputError("coset enumeration needs a full-rank ambient lattice");
  if (g_.rank() != 2) throw InputError("coset enumeration needs a rank-2 sublattice (rank mismatch)");
  IntMatrix inclusion(3, 2);
  for (std::size_t c = 0; c < 2; ++c) {
    auto coords = gamma_.integer_coordinates(g_.basis()[c]);
    if (!coords) throw InputError("not a sublattice");
    for (std::size_t r = 0; r < 3; ++r) inclusion(r, c) = (*coords)[r];
  }
  SmithForm f = smith_normal_form(inclusion);
  u_ = f.u;
  u_inv_ = unimodular_inverse(f.u);
  factors_ = {f.s(0, 0), f.s(1, 1)};
  Integer t = factors_[0] * factors_[1];
  if (!t.fits_slong_p()) throw Error("torsion order too large");
  torsion_order_ = t.get_si();
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Vec3 CosetEnumeration::rep(std::int64_t j) const {
  std::int64_t free = floor_div(j, torsion_order_);
  std::int64_t rest = j - free * torsion_order_;
  const std::int64_t d1 = factors_[0].get_si();
  std::vector<Integer> a = {Integer(static_cast<long>(rest % d1)), Integer(static_cast<long>(rest / d1)), Integer(static_cast<long>(free))};
  std::vector<Integer> n(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) n[i] += u_inv_(i, k) * a[k];
  return gamma_.point(n);
}

std::int64_t CosetEnumeration::index_of_coords(const std::vector<Integer>& coords) const {
  std::array<Integer, 3> a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) a[i] += u_(i, k) * coords.at(k);
  Integer t1 = mod_nonneg(a[0], factors_[0]);
  Integer t2 = mod_nonneg(a[1], factors_[1]);
  Integer j = a[2] * torsion_order_ + t1 + factors_[0] * t2;
  if (!j.fits_slong_p()) throw Error("coset index out of range");
  return j.get_si();
}

std::int64_t CosetEnumeration::index_of(const Vec3& p) const {
  auto coords = gamma_.integer_coordinates(p);
  if (!coords) throw InputError("point is not in the ambient lattice");
  return index_of_coords(*coords);
}

CosetEnumeration coset_reps(const Lattice& gamma, const Lattice& g) { return CosetEnumeration(gamma, g); }

}  // namespace zonotile
