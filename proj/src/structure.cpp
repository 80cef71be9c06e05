#include "zonotile/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zonotile {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotTwoFlat: return "NotTwoFlat";
    case Verdict::TwoFlatRationalDiscrete: return "TwoFlatRationalDiscrete";
    case Verdict::TwoFlatOther: return "TwoFlatOther";
  }
  return "unknown";
}

namespace {

std::array<Vec3, 3> members(const Frame& f) { return {f.e, f.tau1, f.tau2}; }

Rational l1(const Vec3& u) { return abs(u.x) + abs(u.y) + abs(u.z); }

// Canonical order on witnesses: smaller L1 norm first, then lexicographically larger.
bool preferred(const Vec3& a, const Vec3& b) {
  Rational la = l1(a), lb = l1(b);
  if (la != lb) return la < lb;
  return b < a;
}

}  // namespace

bool witness_valid(const std::vector<Frame>& frames, const Vec3& u) {
  if (u.is_zero()) return false;
  return std::all_of(frames.begin(), frames.end(), [&](const Frame& f) {
    auto m = members(f);
    return std::any_of(m.begin(), m.end(), [&](const Vec3& a) { return sign(dot(a, u)) == 0; });
  });
}

IntersectionVerdict intersection_property(const std::vector<Frame>& frames) {
  if (frames.empty()) throw InputError("intersection property needs at least one frame");

  std::vector<std::array<Vec3, 3>> keys;
  std::set<Vec3> all;
  for (const Frame& f : frames) {
    std::array<Vec3, 3> k;
    auto m = members(f);
    for (int i = 0; i < 3; ++i) {
      k[static_cast<std::size_t>(i)] = direction_key(m[static_cast<std::size_t>(i)]);
      all.insert(k[static_cast<std::size_t>(i)]);
    }
    keys.push_back(k);
  }
  const std::vector<Vec3> dirs(all.begin(), all.end());

  std::optional<Vec3> best;
  auto offer = [&](const Vec3& u) {
    Vec3 w = direction_key(u);
    if (!best || preferred(w, *best)) best = w;
  };

  // (i) A direction shared by every frame: anything orthogonal to it is a witness.
  for (const Vec3& d : dirs) {
    bool everywhere = std::all_of(keys.begin(), keys.end(), [&](const auto& k) { return std::find(k.begin(), k.end(), d) != k.end(); });
    if (!everywhere) continue;
    for (int axis = 0; axis < 3; ++axis) {
      Vec3 a = Vec3::axis(axis);
      if (sign(dot(a, d)) == 0) offer(a);
      Vec3 c = cross(d, a);
      if (!c.is_zero()) offer(c);
    }
  }

  // (ii) Normals of planes spanned by two frame directions.
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      Vec3 u = cross(dirs[i], dirs[j]);
      if (u.is_zero()) continue;
      if (witness_valid(frames, u)) offer(u);
    }

  IntersectionVerdict v;
  if (!best) return v;
  v.holds = false;
  v.witness = best;
  for (const Frame& f : frames) {
    auto m = members(f);
    int idx = 0;
    while (idx < 3 && sign(dot(m[static_cast<std::size_t>(idx)], *best)) != 0) ++idx;
    v.satisfied_by.push_back(idx);
  }
  return v;
}

// Two-flatness ---------------------------------------------------------------

namespace {

std::vector<Vec3> keys_of(const Zonotope& z, const std::vector<std::size_t>& cls) {
  std::vector<Vec3> out;
  for (std::size_t c : cls) out.push_back(z.classes()[c].key);
  return out;
}

// Normal of the plane spanned by `group`, completed with `other` when the
// group is a single direction.
Vec3 flat_normal(const std::vector<Vec3>& group, const std::vector<Vec3>& other) {
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = i + 1; j < group.size(); ++j)
      if (!parallel(group[i], group[j])) return direction_key(cross(group[i], group[j]));
  for (const Vec3& o : other)
    if (!parallel(group.front(), o)) return direction_key(cross(group.front(), o));
  return Vec3::zero();
}

TwoFlatVerdict make_verdict(const Zonotope& z, const std::vector<std::size_t>& h1, const std::vector<std::size_t>& h2) {
  TwoFlatVerdict v;
  v.is_two_flat = true;
  std::vector<Vec3> k1 = keys_of(z, h1), k2 = keys_of(z, h2);
  for (std::size_t i = 0; i < z.generators().size(); ++i) {
    std::size_t c = z.class_of(i);
    (std::find(h1.begin(), h1.end(), c) != h1.end() ? v.h1_indices : v.h2_indices).push_back(i);
  }
  v.h1_normal = flat_normal(k1, k2);
  v.h2_normal = flat_normal(k2, k1);
  return v;
}

}  // namespace

TwoFlatVerdict two_flat(const Zonotope& z) {
  const std::size_t n = z.classes().size();
  // Candidate planes spanned by pairs of classes; the plane takes every class it contains.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec3 normal = cross(z.classes()[a].key, z.classes()[b].key);
      std::vector<std::size_t> h1, rest;
      for (std::size_t c = 0; c < n; ++c) (sign(dot(z.classes()[c].key, normal)) == 0 ? h1 : rest).push_back(c);
      if (rest.empty()) continue;
      if (rank_of(keys_of(z, rest)) <= 2) return make_verdict(z, h1, rest);
    }
  // Single-direction first flat; reported with the planar group as h1.
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < n; ++c)
      if (c != a) rest.push_back(c);
    if (rank_of(keys_of(z, rest)) <= 2) return make_verdict(z, rest, {a});
  }
  return {};
}

Classification classify(const Zonotope& z) {
  Classification c;
  FrameSet fs = frames(z);
  c.frame_count = fs.frames.size();
  c.degenerate_frames = fs.degenerate.size();
  c.intersection = intersection_property(fs.frames);
  c.flats = two_flat(z);
  if (!c.intersection.holds && !c.flats.is_two_flat) throw ConsistencyError();

  if (!c.flats.is_two_flat) {
    c.kind = Verdict::NotTwoFlat;
    c.quasi_periodic_guarantee = true;
    c.weird_tiling_available = false;
    return c;
  }
  // Rational generators always generate a discrete group.
  c.kind = Verdict::TwoFlatRationalDiscrete;
  c.quasi_periodic_guarantee = false;
  c.weird_tiling_available = true;
  return c;
}

}  // namespace zonotile
