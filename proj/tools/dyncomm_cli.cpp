// dyncomm: run streaming community detection over an edge-event file,
// generate synthetic benchmark streams, and inspect run results.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dyncomm/errors.hpp"
#include "dyncomm/gen.hpp"
#include "dyncomm/runner.hpp"
#include "dyncomm/stream_io.hpp"

namespace {

using namespace dyncomm;

struct RunOptions {
  std::string algorithm = "dynlouvain";
  std::string window = "landmark";
  std::uint64_t window_size = 0;
  std::string window_mode = "count";
  std::uint64_t stride = 1;
  bool densopt = false;
  bool lenient = false;
  std::size_t emit_every = 1;
  std::string input;
  std::string out;
};

RunConfig to_config(const RunOptions& o) {
  RunConfig cfg;
  cfg.algorithm = parse_algorithm(o.algorithm);
  if (o.window == "sliding") {
    if (o.window_size == 0)
      throw ConfigError("--window sliding needs --window-size");
    cfg.window = WindowPolicy::sliding(
        o.window_size, o.window_mode == "time" ? WindowMode::kTime : WindowMode::kCount,
        o.stride);
  }
  cfg.input = o.input;
  cfg.output_dir = o.out;
  cfg.densopt = o.densopt;
  cfg.lenient_removes = o.lenient;
  cfg.emit_every = o.emit_every;
  return cfg;
}

void write_file(const std::filesystem::path& path, auto&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  writer(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming community detection on evolving networks"};
  app.require_subcommand(1);

  RunOptions ro;
  auto* run_cmd = app.add_subcommand("run", "Process an edge-event stream");
  run_cmd->add_option("input", ro.input, "Event stream (op,src,dst[,weight[,timestamp]])")
      ->required()
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--algorithm", ro.algorithm, "dynlouvain | static-rerun | densopt-post")
      ->check(CLI::IsMember({"dynlouvain", "static-rerun", "densopt-post"}));
  run_cmd->add_option("--window", ro.window, "landmark | sliding")
      ->check(CLI::IsMember({"landmark", "sliding"}));
  run_cmd->add_option("--window-size", ro.window_size, "Sliding window length");
  run_cmd->add_option("--window-mode", ro.window_mode, "count | time")
      ->check(CLI::IsMember({"count", "time"}));
  run_cmd->add_option("--stride", ro.stride, "Window stride (1 = overlapping)");
  run_cmd->add_flag("--densopt", ro.densopt, "Density post-processing of each result");
  run_cmd->add_flag("--lenient-removes", ro.lenient, "Skip removals of absent edges");
  run_cmd->add_option("--emit-every", ro.emit_every, "Steps between result rows")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", ro.out, "Output directory")->required();

  GenConfig gc;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic dynamic benchmark");
  gen_cmd->add_option("--vertices", gc.n_vertices, "Number of vertices")->capture_default_str();
  gen_cmd->add_option("--degree-exponent", gc.degree_exponent)->capture_default_str();
  gen_cmd->add_option("--size-exponent", gc.size_exponent)->capture_default_str();
  gen_cmd->add_option("--p-in", gc.p_in, "Intra-community interaction weight")->capture_default_str();
  gen_cmd->add_option("--p-out", gc.p_out, "Inter-community interaction weight")->capture_default_str();
  gen_cmd->add_option("--ttl", gc.decay_ttl, "Iterations an interaction survives")->capture_default_str();
  gen_cmd->add_option("--event-probability", gc.event_probability)->capture_default_str();
  gen_cmd->add_option("--iterations", gc.iterations)->capture_default_str();
  gen_cmd->add_option("--seed", gc.seed)->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output directory")->required();

  std::string result_dir;
  auto* communities_cmd = app.add_subcommand("communities", "List community ids of a run");
  communities_cmd->add_option("--out", result_dir, "Run output directory")->required();

  CommunityId community = 0;
  auto* vertices_cmd = app.add_subcommand("vertices", "List the members of one community");
  vertices_cmd->add_option("community", community)->required();
  vertices_cmd->add_option("--out", result_dir, "Run output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      const RunSummary s = run(to_config(ro), &std::cerr);
      std::cerr << "processed " << s.steps << " events";
      if (s.skipped_removes > 0) std::cerr << ", skipped " << s.skipped_removes << " removes";
      std::cerr << '\n';
    } else if (*gen_cmd) {
      const GroundTruthTimeline tl = generate(gc);
      const std::filesystem::path dir = gen_out;
      std::filesystem::create_directories(dir);
      write_file(dir / "events.csv", [&](std::ostream& o) { write_stream(o, tl.events); });
      write_file(dir / "ground_truth.csv",
                 [&](std::ostream& o) { write_ground_truth(o, tl.stable_points); });
      for (const auto& notice : tl.notices) std::cerr << notice << '\n';
      std::cerr << tl.events.size() << " events, " << tl.stable_points.size()
                << " stable points\n";
    } else if (*communities_cmd) {
      for (CommunityId c : list_communities(result_dir)) std::cout << c << '\n';
    } else if (*vertices_cmd) {
      for (VertexId v : list_vertices(result_dir, community)) std::cout << v << '\n';
    }
  } catch (const NotFoundError& e) {
    std::cerr << "not found: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
