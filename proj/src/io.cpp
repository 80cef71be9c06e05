#include "zonotile/io.hpp"

#include <sstream>

namespace zonotile::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw InputError("schema violation: " + what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) schema("expected an object");
  auto it = j.find(name);
  if (it == j.end()) schema(std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<Vec3> vec_list(const Json& j) {
  if (!j.is_array()) schema("expected an array of vectors");
  std::vector<Vec3> out;
  for (const Json& v : j) out.push_back(vec_from_json(v));
  return out;
}

Json vec_list_json(const std::vector<Vec3>& vs) {
  Json a = Json::array();
  for (const Vec3& v : vs) a.push_back(to_json(v));
  return a;
}

template <class T>
Json index_list(const std::vector<T>& v) {
  Json a = Json::array();
  for (const T& x : v) a.push_back(x);
  return a;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  if (j.is_number_float()) return parse_rational(j.dump());
  schema("expected a rational string or number");
}

Vec3 vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) schema("expected a 3-vector");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Vec3& v) { return Json::array({to_string(v.x), to_string(v.y), to_string(v.z)}); }
Json to_json(const Box& b) { return Json{{"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}}; }
Json to_json(const Lattice& l) { return vec_list_json(l.basis()); }

Zonotope zonotope_from_json(const Json& j) {
  std::vector<Vec3> gens = vec_list(field(j, "generators"));
  Vec3 t = j.contains("translate") ? vec_from_json(j["translate"]) : Vec3::zero();
  return Zonotope::build(std::move(gens), std::move(t));
}

Json zonotope_to_json(const Zonotope& z) {
  Json j;
  j["generators"] = vec_list_json(z.generators());
  j["translate"] = to_json(z.translate());
  return j;
}

TranslateSet translate_set_from_json(const Json& j) {
  const std::string type = field(j, "type").is_string() ? field(j, "type").get<std::string>() : "";
  if (type == "lattice_union") {
    LatticeUnion u;
    const Json& comps = field(j, "components");
    if (!comps.is_array() || comps.empty()) schema("components must be a nonempty array");
    for (const Json& c : comps) {
      Lattice l(vec_list(field(c, "basis")));
      if (l.rank() != 3) schema("lattice components must be full rank");
      Vec3 offset = c.contains("offset") ? vec_from_json(c["offset"]) : Vec3::zero();
      int weight = 1;
      if (c.contains("weight")) {
        if (!c["weight"].is_number_integer() || c["weight"].get<long>() < 1) schema("weight must be a positive integer");
        weight = c["weight"].get<int>();
      }
      u.components.push_back({std::move(l), std::move(offset), weight});
    }
    return u;
  }
  if (type == "slab_choice") {
    Lattice gamma(vec_list(field(j, "gamma")));
    Lattice g(vec_list(field(j, "g")));
    SlabChoice s{coset_reps(gamma, g), vec_list(field(j, "s_offsets")), vec_list(field(j, "t_offsets")), {}, std::nullopt};
    if (s.s_offsets.size() != s.t_offsets.size() || s.s_offsets.empty()) schema("s_offsets and t_offsets must be nonempty and of equal size");
    if (j.contains("choice")) {
      for (const Json& entry : j["choice"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_string()) schema("choice entries are [index, \"S\"|\"T\"]");
        std::string tag = entry[1].get<std::string>();
        if (tag != "S" && tag != "T") schema("choice tag must be \"S\" or \"T\"");
        s.choice[entry[0].get<std::int64_t>()] = tag == "S" ? Slab::S : Slab::T;
      }
    }
    if (j.contains("expected_level") && !j["expected_level"].is_null()) s.expected_level = j["expected_level"].get<std::int64_t>();
    return s;
  }
  schema("type must be \"lattice_union\" or \"slab_choice\"");
}

Json translate_set_to_json(const TranslateSet& lam) {
  if (const auto* u = std::get_if<LatticeUnion>(&lam)) {
    Json comps = Json::array();
    for (const LatticeComponent& c : u->components)
      comps.push_back(Json{{"basis", to_json(c.lattice)}, {"offset", to_json(c.offset)}, {"weight", c.weight}});
    return Json{{"type", "lattice_union"}, {"components", comps}};
  }
  const auto& s = std::get<SlabChoice>(lam);
  Json choice = Json::array();
  for (const auto& [idx, tag] : s.choice) choice.push_back(Json::array({idx, to_string(tag)}));
  Json j{{"type", "slab_choice"},
         {"gamma", to_json(s.gamma())},
         {"g", to_json(s.g())},
         {"s_offsets", vec_list_json(s.s_offsets)},
         {"t_offsets", vec_list_json(s.t_offsets)},
         {"choice", choice}};
  j["expected_level"] = s.expected_level ? Json(*s.expected_level) : Json(nullptr);
  return j;
}

Json to_json(const Frame& f) {
  return Json{{"e", to_json(f.e)},
              {"base", to_json(f.base)},
              {"tau1", to_json(f.tau1)},
              {"tau2", to_json(f.tau2)},
              {"facet", f.facet},
              {"opposite_facet", f.opposite_facet}};
}

Json to_json(const FrameSet& fs) {
  Json frames = Json::array(), degenerate = Json::array();
  for (const Frame& f : fs.frames) frames.push_back(to_json(f));
  for (const Frame& f : fs.degenerate) degenerate.push_back(to_json(f));
  return Json{{"frames", frames}, {"degenerate", degenerate}};
}

Json to_json(const Paving& p) {
  Json cells = Json::array();
  for (const PavingCell& c : p.cells)
    cells.push_back(Json{{"anchor", to_json(c.anchor)},
                         {"generators", Json::array({c.generators[0], c.generators[1], c.generators[2]})},
                         {"edges", vec_list_json({c.edges[0], c.edges[1], c.edges[2]})},
                         {"volume", to_json(c.volume())}});
  return Json{{"cells", cells}, {"volume", to_json(p.volume())}};
}

Json to_json(const IntersectionVerdict& v) {
  Json j{{"holds", v.holds}};
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  j["satisfied_by"] = index_list(v.satisfied_by);
  return j;
}

Json to_json(const TwoFlatVerdict& v) {
  Json j{{"is_two_flat", v.is_two_flat}};
  if (v.is_two_flat) {
    j["h1_indices"] = index_list(v.h1_indices);
    j["h2_indices"] = index_list(v.h2_indices);
    j["h1_normal"] = to_json(v.h1_normal);
    j["h2_normal"] = to_json(v.h2_normal);
  }
  return j;
}

Json to_json(const Classification& c) {
  Json j{{"verdict", to_string(c.kind)}, {"quasi_periodic_guarantee", c.quasi_periodic_guarantee}};
  j["weird_tiling_available"] = c.weird_tiling_available ? Json(*c.weird_tiling_available) : Json("unknown");
  j["frames"] = c.frame_count;
  j["degenerate_frames"] = c.degenerate_frames;
  j["intersection_property"] = to_json(c.intersection);
  j["two_flat"] = to_json(c.flats);
  return j;
}

Json to_json(const CoverageReport& r) {
  Json j;
  j["level"] = r.level ? Json(*r.level) : Json(nullptr);
  Json violations = Json::array();
  for (const auto& [p, m] : r.violations) violations.push_back(Json{{"point", to_json(p)}, {"multiplicity", m}});
  j["violations"] = violations;
  Json hist = Json::object();
  for (const auto& [value, count] : r.histogram) hist[std::to_string(value)] = count;
  j["histogram"] = hist;
  j["samples"] = r.samples;
  j["resamples"] = r.resamples;
  j["window"] = to_json(r.window);
  j["density"] = to_json(r.density);
  j["seed"] = r.seed;
  j["density_consistent"] = r.density_consistent;
  return j;
}

Json to_json(const SupportReport& r) {
  return Json{{"radius", to_json(r.radius)},
              {"candidates", r.candidates},
              {"frames_checked", r.frames_checked},
              {"exempt", vec_list_json(r.exempt)},
              {"violations", vec_list_json(r.violations)},
              {"passed", r.passed()}};
}

Json to_json(const WeirdConstruction& c) {
  Json coeffs = Json::array();
  for (const Rational& q : c.coefficients) coeffs.push_back(to_json(q));
  return Json{{"zonotope", zonotope_to_json(c.p)},
              {"v_indices", index_list(c.v_indices)},
              {"w_indices", index_list(c.w_indices)},
              {"g", to_json(c.g)},
              {"gamma", to_json(c.gamma)},
              {"torsion_order", c.cosets.torsion_order()},
              {"coefficients", coeffs},
              {"u_plus", vec_list_json(c.s_offsets)},
              {"u_minus", vec_list_json(c.t_offsets)},
              {"N", c.n_value},
              {"k", c.base_level},
              {"level", c.n_value * c.base_level}};
}

Json to_json(const SlabIdentityReport& r) {
  Json j{{"holds", r.holds}, {"samples", r.samples}, {"resamples", r.resamples}};
  j["mismatch"] = r.mismatch ? to_json(*r.mismatch) : Json(nullptr);
  return j;
}

Json to_json(const IrregularityReport& r) {
  Json mult = Json::array();
  for (const auto& [l, m] : r.multiplicities) mult.push_back(Json::array({l, m}));
  return Json{{"window", Json::array({r.lo, r.hi})},
              {"line_generator", to_json(r.line_generator)},
              {"multiplicities", mult},
              {"matches_coloring", r.matches_coloring},
              {"both_values_occur", r.both_values_occur},
              {"passed", r.passed()}};
}

Box parse_window(const std::string& text) {
  std::istringstream in(text);
  std::vector<Rational> v;
  std::string tok;
  while (in >> tok) v.push_back(parse_rational(tok));
  if (v.size() != 6) throw InputError("window needs six numbers \"x0 x1 y0 y1 z0 z1\"");
  Box b{{v[0], v[2], v[4]}, {v[1], v[3], v[5]}};
  for (int i = 0; i < 3; ++i)
    if (!(b.lo[i] < b.hi[i])) throw InputError("window must be nonempty");
  return b;
}

std::string export_off(const Zonotope& z, int precision) {
  Mesh m = z.mesh();
  std::ostringstream out;
  out << "OFF\n" << m.vertices.size() << " " << m.faces.size() << " 0\n";
  for (const Vec3& v : m.vertices)
    out << to_decimal(v.x, precision) << " " << to_decimal(v.y, precision) << " " << to_decimal(v.z, precision) << "\n";
  for (const auto& f : m.faces) {
    out << f.size();
    for (std::size_t i : f) out << " " << i;
    out << "\n";
  }
  return out.str();
}

}  // namespace zonotile::io
