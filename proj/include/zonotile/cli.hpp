#pragma once

// Command dispatch behind the `zonotile` executable.

#include "zonotile/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace zonotile::cli {

enum class Command { Classify, Frames, CheckIntersection, Pave, VerifyTiling, WeirdGen, FourierEval, ExportMesh };

std::optional<Command> parse_command(const std::string& name);

struct RunConfig {
  Command command = Command::Classify;
  std::string zonotope_path;
  std::string translates_path;  ///< verify-tiling
  std::string points_path;      ///< fourier-eval
  std::optional<Box> window;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  int precision = 6;
  std::string choice;         ///< weird-gen: "j:T,j:S,..."
  bool materialize = false;   ///< weird-gen: emit the points inside the window
  bool verify = false;        ///< weird-gen: run the slab identity and level checks
};

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kInternalError = 3 };

struct RunResult {
  int exit_code = kOk;
  std::string output;  ///< JSON (or OFF text for export-mesh)
  std::string error;
};

/// Default window [-4, 4]^3.
Box default_window();

RunResult run(const RunConfig& config);

}  // namespace zonotile::cli
