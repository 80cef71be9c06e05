#pragma once

// JSON schemas (rationals as "p/q" strings) and OFF export.

#include "zonotile/spectral.hpp"
#include "zonotile/structure.hpp"
#include "zonotile/tiling.hpp"
#include "zonotile/weird.hpp"
#include "zonotile/zonotope.hpp"

#include <json.hpp>

#include <string>

namespace zonotile::io {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j);
Vec3 vec_from_json(const Json& j);
Json to_json(const Rational& q);
Json to_json(const Vec3& v);
Json to_json(const Box& b);
Json to_json(const Lattice& l);

/// { "generators": [[x, y, z], ...], "translate": [x, y, z] }; translate defaults to 0.
Zonotope zonotope_from_json(const Json& j);
Json zonotope_to_json(const Zonotope& z);

/// { "type": "lattice_union", "components": [{ "basis": [...], "offset": [...], "weight": 1 }] }
/// { "type": "slab_choice", "gamma": [...], "g": [...], "s_offsets": [...],
///   "t_offsets": [...], "choice": [[j, "S"|"T"], ...], "expected_level": k }
TranslateSet translate_set_from_json(const Json& j);
Json translate_set_to_json(const TranslateSet& lam);

Json to_json(const Frame& f);
Json to_json(const FrameSet& fs);
Json to_json(const Paving& p);
Json to_json(const IntersectionVerdict& v);
Json to_json(const TwoFlatVerdict& v);
Json to_json(const Classification& c);
Json to_json(const CoverageReport& r);
Json to_json(const SupportReport& r);
Json to_json(const WeirdConstruction& c);
Json to_json(const SlabIdentityReport& r);
Json to_json(const IrregularityReport& r);

/// "x0 x1 y0 y1 z0 z1"
Box parse_window(const std::string& text);

/// OFF text: vertices in decimal with `precision` fractional digits, faces
/// counter-clockwise seen from outside.
std::string export_off(const Zonotope& z, int precision);

}  // namespace zonotile::io
