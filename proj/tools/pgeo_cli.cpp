// Command-line front end: surface distances on the unit tetrahedron and cube.
//
//   pgeo dist   [--input FILE | RECORD] [--tolerance T] [--diagnostics] [--out FILE]
//   pgeo path   ...                      (adds reconstructed geodesics)
//   pgeo oracle ... [--max-faces K] [--mesh-n N]
//   pgeo svg    ... --out FILE           (FILE is a directory for several records)
//   pgeo bench  [--polyhedron cube] [--count N] [--seed S]
//
// Records are one JSON object per line. Exit status: 0 ok, 2 bad input,
// 3 internal invariant failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgeo/distance.hpp"
#include "pgeo/io.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct Settings {
  std::string input;
  std::string record;
  std::string out;
  double tolerance = pgeo::kTieTolerance;
  int max_faces = 6;
  int mesh_n = 64;
  bool diagnostics = false;
};

std::vector<std::string> read_records(const Settings& s) {
  std::vector<std::string> lines;
  if (!s.record.empty()) {
    lines.push_back(s.record);
    return lines;
  }
  std::ifstream file;
  if (!s.input.empty()) {
    file.open(s.input);
    if (!file) throw pgeo::QueryError("--input", "cannot open " + s.input);
  }
  std::istream& in = s.input.empty() ? std::cin : file;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  return lines;
}

int run_records(pgeo::Mode mode, const Settings& s, const CLI::App& sub) {
  std::vector<std::string> records;
  try {
    records = read_records(s);
  } catch (const pgeo::QueryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (mode == pgeo::Mode::Svg && s.out.empty() && records.size() != 1) {
    std::cerr << "error: svg with several records needs --out DIR\n";
    return kExitInput;
  }

  std::ofstream file;
  if (!s.out.empty() && mode != pgeo::Mode::Svg) {
    file.open(s.out);
    if (!file) {
      std::cerr << "error: cannot write " << s.out << "\n";
      return kExitInput;
    }
  }
  std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;

  int status = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      pgeo::Query q = pgeo::parse_query(records[i]);
      q.mode = mode;
      if (sub.count("--tolerance")) q.options.tolerance = s.tolerance;
      if (sub.count("--max-faces")) q.options.max_faces = s.max_faces;
      if (sub.count("--mesh-n")) q.options.mesh_n = s.mesh_n;
      if (s.diagnostics) q.options.diagnostics = true;
      const pgeo::QueryResult r = pgeo::run_query(q);

      if (mode != pgeo::Mode::Svg) {
        out << pgeo::format_result(r) << "\n";
        continue;
      }
      const std::string doc = pgeo::render_svg(q, r);
      if (s.out.empty()) {
        std::cout << doc;
      } else if (records.size() == 1 && !std::filesystem::is_directory(s.out)) {
        std::ofstream(s.out) << doc;
      } else {
        std::filesystem::create_directories(s.out);
        std::ofstream(std::filesystem::path(s.out) / ("query-" + std::to_string(i + 1) + ".svg")) << doc;
      }
    } catch (const pgeo::QueryError& e) {
      std::cerr << "record " << i + 1 << ": " << e.what() << "\n";
      if (mode != pgeo::Mode::Svg) out << pgeo::format_error(e.what()) << "\n";
      status = std::max(status, kExitInput);
    } catch (const std::domain_error& e) {
      std::cerr << "record " << i + 1 << ": " << e.what() << "\n";
      if (mode != pgeo::Mode::Svg) out << pgeo::format_error(e.what()) << "\n";
      status = std::max(status, kExitInput);
    } catch (const std::exception& e) {
      std::cerr << "record " << i + 1 << ": internal error: " << e.what() << "\n";
      if (mode != pgeo::Mode::Svg) out << pgeo::format_error(e.what()) << "\n";
      status = kExitInvariant;
    }
  }
  return status;
}

int run_bench(const std::string& solid, int count, unsigned seed) {
  const pgeo::PolyhedronModel& model = pgeo::model_for(pgeo::solid_kind_from_string(solid));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto sample = [&] {
    const pgeo::FaceId home{1 + static_cast<int>(rng() % model.face_count())};
    const pgeo::FaceId shared = model.neighbor_cycle(home)[rng() % model.sides()];
    double x, y;
    do {
      x = unit(rng);
      y = unit(rng);
    } while (model.kind() == pgeo::SolidKind::Tetrahedron &&
             (y > pgeo::kSqrt3 * x || y > pgeo::kSqrt3 * (1.0 - x)));
    return pgeo::SurfaceRep{home, shared, x, y};
  };
  std::vector<std::pair<pgeo::SurfaceRep, pgeo::SurfaceRep>> pairs;
  for (int i = 0; i < count; ++i) pairs.emplace_back(sample(), sample());

  const auto start = std::chrono::steady_clock::now();
  double total = 0.0;
  for (const auto& [a, b] : pairs) total += pgeo::surface_distance(model, a, b).distance;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s: %d queries in %.3f s (%.2f us/query), mean distance %.6f\n", solid.c_str(), count,
              secs, 1e6 * secs / count, total / count);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest surface paths on the unit tetrahedron and cube"};
  app.require_subcommand(1);

  Settings settings;
  struct Sub {
    const char* name;
    pgeo::Mode mode;
    const char* help;
  };
  const Sub subs[] = {{"dist", pgeo::Mode::Dist, "Surface distance and minimizing landscapes"},
                      {"path", pgeo::Mode::Path, "Distance plus per-face geodesic segments"},
                      {"oracle", pgeo::Mode::Oracle, "Distance checked against both oracles"},
                      {"svg", pgeo::Mode::Svg, "Render minimizing orientations as SVG"}};
  std::vector<std::pair<CLI::App*, pgeo::Mode>> apps;
  for (const Sub& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    cmd->add_option("record", settings.record, "One query record (otherwise --input or stdin)");
    cmd->add_option("--input", settings.input, "File with one query record per line");
    cmd->add_option("--out", settings.out, "Output file (svg: file or directory)");
    cmd->add_option("--tolerance", settings.tolerance, "Validation and tie tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-faces", settings.max_faces, "Landscape size bound for the unfold oracle")
        ->check(CLI::Range(2, 64));
    cmd->add_option("--mesh-n", settings.mesh_n, "Edge subdivisions for the mesh oracle")
        ->check(CLI::Range(1, 4096));
    cmd->add_flag("--diagnostics", settings.diagnostics, "Report every landscape's formula value");
    apps.emplace_back(cmd, sub.mode);
  }

  std::string solid = "cube";
  int count = 100000;
  unsigned seed = 1;
  CLI::App* bench = app.add_subcommand("bench", "Time the closed-form dispatcher");
  bench->add_option("--polyhedron", solid, "tetrahedron or cube")
      ->check(CLI::IsMember({"tetrahedron", "cube"}));
  bench->add_option("--count", count, "Number of random pairs")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (bench->parsed()) return run_bench(solid, count, seed);
  for (const auto& [cmd, mode] : apps)
    if (cmd->parsed()) return run_records(mode, settings, *cmd);
  return kExitInput;
}
