#include "zonotile/cli.hpp"

#include "zonotile/io.hpp"

#include <fstream>
#include <sstream>

namespace zonotile::cli {

using io::Json;

std::optional<Command> parse_command(const std::string& name) {
  if (name == "classify") return Command::Classify;
  if (name == "frames") return Command::Frames;
  if (name == "check-intersection") return Command::CheckIntersection;
  if (name == "pave") return Command::Pave;
  if (name == "verify-tiling") return Command::VerifyTiling;
  if (name == "weird-gen") return Command::WeirdGen;
  if (name == "fourier-eval") return Command::FourierEval;
  if (name == "export-mesh") return Command::ExportMesh;
  return std::nullopt;
}

Box default_window() { return {Vec3(-4, -4, -4), Vec3(4, 4, 4)}; }

namespace {

Json load_json(const std::string& path, const char* what) {
  if (path.empty()) throw InputError(std::string("missing ") + what + " path");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

std::map<std::int64_t, Slab> parse_choice(const std::string& text) {
  std::map<std::int64_t, Slab> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("choice entries look like \"j:T\"");
    std::string tag = item.substr(colon + 1);
    if (tag != "S" && tag != "T") throw InputError("choice tag must be S or T");
    try {
      out[std::stoll(item.substr(0, colon))] = tag == "S" ? Slab::S : Slab::T;
    } catch (const std::logic_error&) {
      throw InputError("choice index must be an integer");
    }
  }
  return out;
}

std::vector<Vec3> parse_points(const Json& j) {
  const Json& list = j.is_object() && j.contains("points") ? j["points"] : j;
  if (!list.is_array()) throw InputError("schema violation: points must be an array of 3-vectors");
  std::vector<Vec3> pts;
  for (const Json& p : list) pts.push_back(io::vec_from_json(p));
  return pts;
}

RunResult json_result(const Json& j, int code = kOk) { return {code, j.dump(2) + "\n", {}}; }

RunResult dispatch(const RunConfig& cfg) {
  if (cfg.samples < 1) throw InputError("samples must be at least 1");
  if (!(cfg.tolerance > 0)) throw InputError("tolerance must be positive");
  const Zonotope z = io::zonotope_from_json(load_json(cfg.zonotope_path, "zonotope"));
  const Box window = cfg.window.value_or(default_window());

  switch (cfg.command) {
    case Command::Classify: {
      Json j;
      j["zonotope"] = io::zonotope_to_json(z);
      j["volume"] = io::to_json(volume(z));
      j["classification"] = io::to_json(classify(z));
      return json_result(j);
    }
    case Command::Frames: return json_result(io::to_json(frames(z)));
    case Command::CheckIntersection: {
      FrameSet fs = frames(z);
      IntersectionVerdict v = intersection_property(fs.frames);
      Json j = io::to_json(v);
      j["witness_verified"] = v.witness ? Json(witness_valid(fs.frames, *v.witness)) : Json(nullptr);
      j["frames"] = fs.frames.size();
      return json_result(j);
    }
    case Command::Pave: return json_result(io::to_json(pave(z)));
    case Command::VerifyTiling: {
      TranslateSet lam = io::translate_set_from_json(load_json(cfg.translates_path, "translate-set"));
      CoverageReport r = verify_level(z, lam, window, cfg.samples, cfg.seed);
      Json j = io::to_json(r);
      j["volume"] = io::to_json(volume(z));
      bool ok = r.level.has_value() && r.density_consistent;
      if (const auto* s = std::get_if<SlabChoice>(&lam); s && s->expected_level && r.level)
        ok = ok && *r.level == *s->expected_level;
      return json_result(j, ok ? kOk : kVerificationFailed);
    }
    case Command::WeirdGen: {
      WeirdConstruction c = build_construction(z, two_flat(z));
      SlabChoice lam = build_weird(c, parse_choice(cfg.choice));
      Json j;
      j["construction"] = io::to_json(c);
      j["translate_set"] = io::translate_set_to_json(lam);
      int code = kOk;
      if (cfg.verify) {
        SlabIdentityReport slab = slab_identity_check(c, window, cfg.samples, cfg.seed);
        CoverageReport level = verify_level(z, lam, window, cfg.samples, cfg.seed);
        j["slab_identity"] = io::to_json(slab);
        j["coverage"] = io::to_json(level);
        if (!slab.holds || !level.level || *level.level != *lam.expected_level) code = kVerificationFailed;
      }
      if (cfg.materialize) {
        Json pts = Json::array();
        for (const auto& [p, m] : materialize(lam, window)) pts.push_back(Json::array({io::to_json(p), m}));
        j["points"] = pts;
      }
      return json_result(j, code);
    }
    case Command::FourierEval: {
      std::vector<Vec3> pts = parse_points(load_json(cfg.points_path, "points"));
      FrameSet fs = frames(z);
      Json out;
      out["frames"] = io::to_json(fs)["frames"];
      Json results = Json::array();
      for (const Vec3& xi : pts) {
        Json values = Json::array(), zeros = Json::array();
        for (const Frame& f : fs.frames) {
          auto v = leg_ft(LegMeasure::of(f), to_double(xi));
          values.push_back(Json::array({v.real(), v.imag()}));
          zeros.push_back(zero_set_member(f, xi));
        }
        results.push_back(Json{{"xi", io::to_json(xi)}, {"values", values}, {"zero_set", zeros}});
      }
      out["points"] = results;
      return json_result(out);
    }
    case Command::ExportMesh: return {kOk, io::export_off(z, cfg.precision), {}};
  }
  return {kInternalError, {}, "unknown command"};
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    return dispatch(config);
  } catch (const InputError& e) {
    return {kInputError, {}, e.what()};
  } catch (const nlohmann::json::exception& e) {
    return {kInputError, {}, std::string("schema violation: ") + e.what()};
  } catch (const ConsistencyError& e) {
    return {kInternalError, {}, e.what()};
  } catch (const Error& e) {
    return {kInputError, {}, e.what()};
  }
}

}  // namespace zonotile::cli
