#include "arbocoh/cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "arbocoh/cli/commands.hpp"
#include "arbocoh/cli/output.hpp"
#include "arbocoh/cli/verify.hpp"
#include "arbocoh/error.hpp"

namespace arbocoh::cli {

namespace {

nlohmann::json parse_json_arg(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    return text;  // builder strings such as "star:2"
  }
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, path + ": " + e.what());
  }
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidDescriptor:
      return 2;
    case ErrorKind::UnknownSuite:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded cohomology of Aut(T_q): classification and verification tools", "arbocoh"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> depth;
  std::optional<std::string> format;
  app.add_option("--config", config_path, "JSON config file (ARBOCOH_CONFIG overrides)");
  app.add_option("--seed", seed, "Random seed for sampled suites");
  app.add_option("--depth", depth, "Ray prefix depth")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string descriptor_text, descriptor_file;
  int degree = 0;
  auto* classify = app.add_subcommand("classify", "Dimension of H^n_cb for a representation descriptor");
  auto* desc_opt = classify->add_option("--descriptor", descriptor_text, "Descriptor JSON");
  classify->add_option("--descriptor-file", descriptor_file, "Descriptor JSON file")->excludes(desc_opt);
  classify->add_option("-n,--degree", degree, "Cohomological degree")->required();

  std::string shape_text;
  auto* spectrum = app.add_subcommand("spectrum", "Non-degenerate irreducibles of Aut(S) with their H^2 dimensions");
  spectrum->add_option("--shape", shape_text, "Shape JSON or builder (star:q, centipede:q:k, y:q)")->required();

  int q = 2, max_diameter = 4, distance = 8;
  auto* shapes = app.add_subcommand("shapes-enumerate", "All complete shapes up to a diameter bound");
  shapes->add_option("--q", q, "Branching parameter")->check(CLI::Range(2, 16));
  shapes->add_option("--max-diameter", max_diameter, "Largest diameter")->check(CLI::Range(0, 8));

  auto* chartab = app.add_subcommand("chartab", "Character table of Aut(S)");
  chartab->add_option("--shape", shape_text, "Shape JSON or builder")->required();

  auto* flip = app.add_subcommand("flip-demo", "Random flip instance and its witness");

  std::string z_text = "0.5";
  auto* spherical = app.add_subcommand("spherical-check", "Radial table and checks for phi_z");
  spherical->add_option("--q", q, "Branching parameter")->check(CLI::Range(2, 16));
  spherical->add_option("--z", z_text, "Spectral parameter, e.g. 0.5+2i");
  spherical->add_option("--distance", distance, "Largest distance")->check(CLI::Range(2, 64));

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite, "geometry | flip | groups | reps | spherical | all")->required();

  for (auto* sub : {classify, spectrum, shapes, chartab, flip, spherical, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e_out;
    const int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code;
  }

  try {
    if (const char* env = std::getenv("ARBOCOH_CONFIG"); env && *env) config_path = env;
    Config cfg = config_path.empty() ? Config{} : load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (depth) cfg.default_depth = *depth;
    if (format) cfg.output_format = *format;
    validate(cfg);

    nlohmann::ordered_json report;
    int code = 0;
    if (*classify) {
      if (descriptor_text.empty() && descriptor_file.empty()) {
        throw Error(ErrorKind::InvalidDescriptor, "--descriptor or --descriptor-file is required");
      }
      nlohmann::json d;
      if (!descriptor_file.empty()) {
        d = read_json_file(descriptor_file);
      } else {
        try {
          d = nlohmann::json::parse(descriptor_text);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorKind::InvalidDescriptor, e.what());
        }
      }
      report = cmd_classify(d, degree, cfg);
    } else if (*spectrum) {
      report = cmd_spectrum(parse_json_arg(shape_text), cfg);
    } else if (*shapes) {
      report = cmd_shapes_enumerate(q, max_diameter, cfg);
    } else if (*chartab) {
      report = cmd_chartab(parse_json_arg(shape_text), cfg);
    } else if (*flip) {
      report = cmd_flip_demo(cfg);
      code = report["valid"].get<bool>() ? 0 : 1;
    } else if (*spherical) {
      report = cmd_spherical_check(q, z_text, distance, cfg);
    } else if (*verify) {
      report = run_suite(suite, cfg);
      code = report["passed"].get<bool>() ? 0 : 1;
    }
    out << render(report, cfg.output_format);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace arbocoh::cli
