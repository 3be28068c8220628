#include "dyncomm/runner.hpp"

#include <fstream>
#include <ostream>
#include <set>

#include "dyncomm/densopt.hpp"
#include "dyncomm/errors.hpp"
#include "dyncomm/louvain.hpp"
#include "dyncomm/stream_io.hpp"

namespace dyncomm {

void StaticRerunAlgorithm::apply(const EdgeEvent& e) {
  if (e.action == EdgeAction::kAdd) {
    if (graph_.weight(e.u, e.v) == e.w) return;
    graph_.add_edge(e.u, e.v, e.w);
  } else {
    graph_.remove_edge(e.u, e.v);
  }
  recompute();
}

void StaticRerunAlgorithm::recompute() {
  if (graph_.total_weight_2m() > 0) {
    mapping_ = louvain_full(graph_).partition.mapping();
  } else {
    mapping_.clear();
    for (VertexId v : graph_.vertices()) mapping_[v] = v;
  }
}

std::unique_ptr<CommunityAlgorithm> make_algorithm(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kStaticRerun:
      return std::make_unique<StaticRerunAlgorithm>();
    case AlgorithmKind::kDynLouvain:
    case AlgorithmKind::kDensoptPost:
      break;
  }
  return std::make_unique<DynLouvainAlgorithm>();
}

AlgorithmKind parse_algorithm(std::string_view name) {
  if (name == "dynlouvain") return AlgorithmKind::kDynLouvain;
  if (name == "static-rerun") return AlgorithmKind::kStaticRerun;
  if (name == "densopt-post") return AlgorithmKind::kDensoptPost;
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  if (emit_every < 1) throw ConfigError("emit_every must be at least 1");
  if (output_dir.empty()) throw ConfigError("an output directory is required");
  Window probe(window);  // validates the policy
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

}  // namespace

RunSummary run_events(const RunConfig& cfg, const std::vector<EdgeEvent>& events,
                      std::ostream* log) {
  cfg.validate();
  std::filesystem::create_directories(cfg.output_dir);
  const bool densopt = cfg.densopt || cfg.algorithm == AlgorithmKind::kDensoptPost;

  auto quality_csv = open_output(cfg.output_dir / "quality.csv");
  auto stability_csv = open_output(cfg.output_dir / "stability.csv");
  quality_csv << (densopt ? "step,modularity,adc\n" : "step,modularity\n");
  stability_csv << "step,fraction_changed\n";

  Window window(cfg.window);
  auto algorithm = make_algorithm(cfg.algorithm);
  Stopwatch watch;
  RunSummary summary;
  Mapping previous;

  for (std::size_t i = 0; i < events.size(); ++i) {
    watch.start();
    const WindowDelta delta = window.advance({events[i]});
    for (const EdgeEvent& e : delta.removes) {
      try {
        algorithm->apply(e);
      } catch (const MissingEdgeError& err) {
        if (!cfg.lenient_removes) throw;
        ++summary.skipped_removes;
        if (log) *log << "step " << i + 1 << ": skipped remove: " << err.what() << '\n';
      }
    }
    for (const EdgeEvent& e : delta.adds) algorithm->apply(e);

    const DynGraph& g = algorithm->graph();
    Mapping mapping = algorithm->mapping();
    double adc_value = 0;
    if (densopt && g.vertex_count() > 0) {
      DensityResult dr = optimize_density(g, Partition::from_mapping(g, mapping));
      mapping = dr.partition.mapping();
      adc_value = dr.report.adc_after;
    }
    const double q = g.total_weight_2m() > 0 ? modularity(g, mapping) : 0.0;
    watch.stop();

    const std::size_t step = i + 1;
    if (step % cfg.emit_every == 0 || step == events.size()) {
      quality_csv << step << ',' << format_real(q);
      if (densopt) quality_csv << ',' << format_real(adc_value);
      quality_csv << '\n';
      stability_csv << step << ',' << format_real(stability(previous, mapping)) << '\n';
      previous = mapping;
    }
    summary.final_mapping = std::move(mapping);
    summary.steps = step;
  }
  summary.processing_seconds = watch.seconds();

  auto mapping_csv = open_output(cfg.output_dir / "mapping.csv");
  write_mapping(mapping_csv, summary.final_mapping);
  auto timing = open_output(cfg.output_dir / "timing.txt");
  timing << "processing_seconds," << format_real(summary.processing_seconds) << '\n'
         << "steps," << summary.steps << '\n';
  return summary;
}

RunSummary run(const RunConfig& cfg, std::ostream* log) {
  return run_events(cfg, parse_stream(cfg.input), log);
}

std::vector<CommunityId> list_communities(const std::filesystem::path& dir) {
  const Mapping m = read_mapping(dir / "mapping.csv");
  std::set<CommunityId> ids;
  for (const auto& [v, c] : m) ids.insert(c);
  return {ids.begin(), ids.end()};
}

std::vector<VertexId> list_vertices(const std::filesystem::path& dir,
                                    CommunityId community) {
  const Mapping m = read_mapping(dir / "mapping.csv");
  std::vector<VertexId> out;
  for (const auto& [v, c] : m)
    if (c == community) out.push_back(v);
  if (out.empty())
    throw NotFoundError("no community " + std::to_string(community));
  return out;
}

}  // namespace dyncomm
