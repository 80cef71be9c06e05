#include "zonotile/zonotope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace zonotile {

const char* to_string(Location loc) {
  switch (loc) {
    case Location::Interior: return "interior";
    case Location::Boundary: return "boundary";
    case Location::Outside: return "outside";
  }
  return "unknown";
}

Zonotope Zonotope::build(std::vector<Vec3> generators, Vec3 translate) {
  if (generators.empty()) throw InputError("degenerate zonotope");
  for (const Vec3& g : generators)
    if (g.is_zero()) throw InputError("zero segment");
  if (rank_of(generators) != 3) throw InputError("degenerate zonotope");

  Zonotope z;
  z.generators_ = std::move(generators);
  z.translate_ = std::move(translate);
  Vec3 half_sum = Vec3::zero();
  for (const Vec3& g : z.generators_) half_sum += g;
  z.center_ = z.translate_ + half_sum / Rational(2);

  // Direction classes, in order of first appearance.
  std::map<Vec3, std::size_t> class_index;
  for (std::size_t i = 0; i < z.generators_.size(); ++i) {
    const Vec3& g = z.generators_[i];
    Vec3 key = direction_key(g);
    auto [it, inserted] = class_index.emplace(key, z.classes_.size());
    if (inserted) z.classes_.push_back({key, {}, Vec3::zero()});
    DirectionClass& c = z.classes_[it->second];
    int o = sign(dot(g, key)) > 0 ? 1 : -1;
    c.members.push_back(i);
    c.merged += o > 0 ? g : -g;
    z.class_of_.push_back(it->second);
    z.orientation_.push_back(o);
  }

  // Facet planes: one per pair of non-parallel classes, deduplicated.
  std::set<Vec3> normals;
  for (std::size_t a = 0; a < z.classes_.size(); ++a)
    for (std::size_t b = a + 1; b < z.classes_.size(); ++b)
      normals.insert(direction_key(cross(z.classes_[a].key, z.classes_[b].key)));

  for (const Vec3& n : normals) {
    Rational base = dot(n, z.translate_);
    Rational up = base, down = base;
    for (const Vec3& g : z.generators_) {
      Rational s = dot(n, g);
      if (sign(s) > 0) up += s;
      if (sign(s) < 0) down += s;
    }
    z.plane_normals_.push_back(n);
    z.upper_.push_back(up);
    z.lower_.push_back(down);

    for (int side = 0; side < 2; ++side) {
      Facet f;
      f.normal = side == 0 ? n : -n;
      f.offset = z.translate_;
      for (std::size_t i = 0; i < z.generators_.size(); ++i) {
        int s = sign(dot(z.generators_[i], f.normal));
        if (s > 0) f.offset += z.generators_[i];
        if (s == 0) f.plane_generators.push_back(i);
      }
      for (std::size_t c = 0; c < z.classes_.size(); ++c)
        if (sign(dot(z.classes_[c].key, f.normal)) == 0) f.plane_classes.push_back(c);

      // Polygon: rewrite every class segment to point into the half-plane
      // counter-clockwise of the first class, then walk the sorted edges.
      Vec3 start = f.offset;
      for (std::size_t i : f.plane_generators)
        if (z.orientation_[i] < 0) start += z.generators_[i];
      const Vec3& ref = z.classes_[f.plane_classes.front()].merged;
      std::vector<Vec3> edges;
      for (std::size_t c : f.plane_classes) {
        const Vec3& m = z.classes_[c].merged;
        if (c == f.plane_classes.front() || sign(dot(cross(ref, m), f.normal)) > 0) {
          edges.push_back(m);
        } else {
          edges.push_back(-m);
          start += m;
        }
      }
      std::sort(edges.begin() + 1, edges.end(),
                [&](const Vec3& a, const Vec3& b) { return sign(dot(cross(a, b), f.normal)) > 0; });
      Vec3 p = start;
      for (const Vec3& e : edges) {
        f.polygon.push_back(p);
        p += e;
      }
      for (const Vec3& e : edges) {
        f.polygon.push_back(p);
        p -= e;
      }
      f.opposite = z.facets_.size() + (side == 0 ? 1 : 0) - (side == 1 ? 1 : 0);
      z.facets_.push_back(std::move(f));
    }
  }
  return z;
}

Box Zonotope::bounding_box() const {
  Box b{translate_, translate_};
  for (const Vec3& g : generators_)
    for (int i = 0; i < 3; ++i) {
      if (sign(g[i]) < 0) b.lo[i] += g[i];
      if (sign(g[i]) > 0) b.hi[i] += g[i];
    }
  return b;
}

std::vector<Vec3> Zonotope::vertices() const {
  std::set<Vec3> vs;
  for (const Facet& f : facets_) vs.insert(f.polygon.begin(), f.polygon.end());
  return {vs.begin(), vs.end()};
}

Mesh Zonotope::mesh() const {
  Mesh m;
  m.vertices = vertices();
  for (const Facet& f : facets_) {
    std::vector<std::size_t> face;
    for (const Vec3& v : f.polygon)
      face.push_back(static_cast<std::size_t>(std::lower_bound(m.vertices.begin(), m.vertices.end(), v) - m.vertices.begin()));
    m.faces.push_back(std::move(face));
  }
  return m;
}

Location Zonotope::locate(const Vec3& x) const {
  bool boundary = false;
  for (std::size_t k = 0; k < plane_normals_.size(); ++k) {
    Rational v = dot(plane_normals_[k], x);
    if (v > upper_[k] || v < lower_[k]) return Location::Outside;
    if (v == upper_[k] || v == lower_[k]) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Interior;
}

Location contains(const Zonotope& z, const Vec3& x) { return z.locate(x); }

// Frames ---------------------------------------------------------------------

FrameSet frames(const Zonotope& z) {
  FrameSet out;
  const auto& gens = z.generators();
  for (std::size_t fi = 0; fi < z.facets().size(); fi += 2) {
    const Facet& f = z.facets()[fi];
    for (std::size_t d : f.plane_classes) {
      const Vec3& e = z.classes()[d].merged;
      Vec3 across = cross(f.normal, e);
      // Edges of the facet parallel to e sit at the extremes of <., across>.
      Vec3 low = f.offset, high = f.offset;
      for (std::size_t i : f.plane_generators) {
        if (z.class_of(i) == d) {
          if (z.orientation(i) < 0) {
            low += gens[i];
            high += gens[i];
          }
          continue;
        }
        int s = sign(dot(gens[i], across));
        if (s < 0) low += gens[i];
        if (s > 0) high += gens[i];
      }
      Frame fr;
      fr.e = e;
      fr.base = low;
      fr.tau1 = high - low;
      // The edge opposite to `high` through the center lies on the opposite facet.
      fr.tau2 = Rational(2) * z.center() - e - high - low;
      fr.facet = fi;
      fr.opposite_facet = f.opposite;
      fr.direction_class = d;

      // Re-anchor at the lexicographically smallest leg start.
      auto starts = fr.leg_starts();
      std::size_t best = static_cast<std::size_t>(std::min_element(starts.begin(), starts.end()) - starts.begin());
      if (best & 1U) {
        fr.base += fr.tau1;
        fr.tau1 = -fr.tau1;
      }
      if (best & 2U) {
        fr.base += fr.tau2;
        fr.tau2 = -fr.tau2;
        std::swap(fr.facet, fr.opposite_facet);
      }
      (fr.degenerate() ? out.degenerate : out.frames).push_back(std::move(fr));
    }
  }
  return out;
}

// Paving ---------------------------------------------------------------------

bool PavingCell::contains(const Vec3& x) const {
  Vec3 t = inverse * (x - anchor);
  for (int i = 0; i < 3; ++i)
    if (sign(t[i]) < 0 || t[i] >= 1) return false;
  return true;
}

bool PavingCell::on_boundary(const Vec3& x) const {
  Vec3 t = inverse * (x - anchor);
  bool touches = false;
  for (int i = 0; i < 3; ++i) {
    if (sign(t[i]) < 0 || t[i] > 1) return false;
    if (sign(t[i]) == 0 || t[i] == 1) touches = true;
  }
  return touches;
}

Rational Paving::volume() const {
  Rational v = 0;
  for (const PavingCell& c : cells) v += c.volume();
  return v;
}

int Paving::multiplicity(const Vec3& x) const {
  int n = 0;
  for (const PavingCell& c : cells)
    if (c.contains(x)) ++n;
  return n;
}

bool Paving::on_any_boundary(const Vec3& x) const {
  return std::any_of(cells.begin(), cells.end(), [&](const PavingCell& c) { return c.on_boundary(x); });
}

Paving pave(const Zonotope& z) {
  Paving p;
  const auto& g = z.generators();
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Mat3 m = Mat3::from_columns(g[i], g[j], g[k]);
        if (sign(m.det()) == 0) continue;
        PavingCell cell;
        cell.generators = {i, j, k};
        cell.edges = {g[i], g[j], g[k]};
        cell.inverse = m.inverse();
        cell.anchor = z.translate();
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i || l == j || l == k) continue;
          // Height of the lifted generator l relative to the cell's lower face,
          // eps^l - sum alpha_b eps^b; its leading term decides the side.
          Vec3 alpha = cell.inverse * g[l];
          const std::array<std::size_t, 3> idx{i, j, k};
          bool below = false;
          for (int b = 0; b < 3; ++b) {
            if (idx[static_cast<std::size_t>(b)] > l) break;
            if (sign(alpha[b]) != 0) {
              below = sign(alpha[b]) > 0;
              break;
            }
          }
          if (below) cell.anchor += g[l];
        }
        p.cells.push_back(std::move(cell));
      }
  return p;
}

Rational volume(const Zonotope& z) {
  const auto& g = z.generators();
  Rational v = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      for (std::size_t k = j + 1; k < g.size(); ++k) v += abs(det(g[i], g[j], g[k]));
  return v;
}

}  // namespace zonotile
