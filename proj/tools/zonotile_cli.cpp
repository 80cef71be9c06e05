// zonotile: command-line front end.
//
//   zonotile classify cube.json
//   zonotile verify-tiling cube.json --translates z3.json --window "-4 4 -4 4 -4 4" --samples 10000 --seed 7
//   zonotile weird-gen cube.json --choice "0:T" --verify --out weird.json
//   zonotile export-mesh cube.json --precision 4 --out cube.off

#include "zonotile/cli.hpp"
#include "zonotile/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace zonotile;
  CLI::App app{"Exact multiple-tiling toolkit for 3D zonotopes"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  std::string window_text, out_path;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"classify", "Two-flat / intersection-property classification"},
      {"frames", "List the 4-legged frames"},
      {"check-intersection", "Decide the frame intersection property"},
      {"pave", "Half-open parallelepiped paving"},
      {"verify-tiling", "Windowed k-tiling verification"},
      {"weird-gen", "Slab construction of a non-lattice multiple tiling"},
      {"fourier-eval", "Leg-measure Fourier transforms at given points"},
      {"export-mesh", "OFF export of the boundary"},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("zonotope", cfg.zonotope_path, "Zonotope JSON")->required();
    sub->add_option("--out", out_path, "Output path (default stdout)");
    std::string name = s.name;
    if (name == "verify-tiling") sub->add_option("--translates", cfg.translates_path, "Translate-set JSON")->required();
    if (name == "fourier-eval") sub->add_option("--points", cfg.points_path, "JSON array of xi points")->required();
    if (name == "verify-tiling" || name == "weird-gen") {
      sub->add_option("--window", window_text, "\"x0 x1 y0 y1 z0 z1\"");
      sub->add_option("--samples", cfg.samples, "Sample count")->check(CLI::PositiveNumber);
      sub->add_option("--seed", cfg.seed, "PRNG seed");
    }
    if (name == "fourier-eval") sub->add_option("--tol", cfg.tolerance, "Float tolerance")->check(CLI::PositiveNumber);
    if (name == "weird-gen") {
      sub->add_option("--choice", cfg.choice, "Finite choice map, e.g. \"0:T,5:T\"");
      sub->add_flag("--verify", cfg.verify, "Run slab-identity and level checks over the window");
      sub->add_flag("--materialize", cfg.materialize, "Emit the translates inside the window");
    }
    if (name == "export-mesh") sub->add_option("--precision", cfg.precision, "Fractional digits")->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  cfg.command = *cli::parse_command(app.get_subcommands().front()->get_name());
  if (!window_text.empty()) {
    try {
      cfg.window = io::parse_window(window_text);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return cli::kInputError;
    }
  }

  cli::RunResult result = cli::run(cfg);
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  if (!result.output.empty()) {
    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return cli::kInputError;
      }
      out << result.output;
    }
  }
  return result.exit_code;
}
