#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dyncomm/dynlouvain.hpp"
#include "dyncomm/metrics.hpp"
#include "dyncomm/temporal.hpp"

namespace dyncomm {

/// Contract every community-detection algorithm offers to the stream runner:
/// consume edge events one at a time and expose the current graph and
/// vertex → community mapping (canonical ids) between events.
class CommunityAlgorithm {
 public:
  virtual ~CommunityAlgorithm() = default;

  virtual std::string_view name() const = 0;

  /// Applies an ADD (set weight) or REMOVE. A REMOVE of an absent edge throws
  /// MissingEdgeError and must leave the algorithm state unchanged.
  virtual void apply(const EdgeEvent& e) = 0;

  virtual const DynGraph& graph() const = 0;
  virtual Mapping mapping() const = 0;
};

/// Incremental Louvain behind the plugin contract.
class DynLouvainAlgorithm final : public CommunityAlgorithm {
 public:
  std::string_view name() const override { return "dynlouvain"; }
  void apply(const EdgeEvent& e) override { last_ = state_.step(e); }
  const DynGraph& graph() const override { return state_.ll_graph(); }
  Mapping mapping() const override { return state_.community_mapping(); }

  const DynamicLouvain& state() const { return state_; }
  const StepReport& last_report() const { return last_; }

 private:
  DynamicLouvain state_;
  StepReport last_;
};

/// Comparison baseline: full static Louvain from scratch after every change.
class StaticRerunAlgorithm final : public CommunityAlgorithm {
 public:
  std::string_view name() const override { return "static-rerun"; }
  void apply(const EdgeEvent& e) override;
  const DynGraph& graph() const override { return graph_; }
  Mapping mapping() const override { return mapping_; }

 private:
  void recompute();

  DynGraph graph_;
  Mapping mapping_;
};

enum class AlgorithmKind { kDynLouvain, kStaticRerun, kDensoptPost };

std::unique_ptr<CommunityAlgorithm> make_algorithm(AlgorithmKind kind);

/// Parses "dynlouvain", "static-rerun" or "densopt-post".
AlgorithmKind parse_algorithm(std::string_view name);

struct RunConfig {
  AlgorithmKind algorithm = AlgorithmKind::kDynLouvain;
  WindowPolicy window = WindowPolicy::landmark();
  std::filesystem::path input;
  std::filesystem::path output_dir;
  /// Density post-processing of every emitted mapping (always on for
  /// densopt-post); adds the adc column to quality.csv.
  bool densopt = false;
  /// Log and skip REMOVE events of absent edges instead of failing.
  bool lenient_removes = false;
  std::size_t emit_every = 1;

  /// Throws ConfigError.
  void validate() const;
};

struct RunSummary {
  std::size_t steps = 0;
  std::size_t skipped_removes = 0;
  Mapping final_mapping;
  double processing_seconds = 0;
};

/// Streams `events` through window → algorithm and writes mapping.csv,
/// quality.csv, stability.csv and timing.txt into cfg.output_dir. Notices
/// about skipped removes go to `log` when given.
RunSummary run_events(const RunConfig& cfg, const std::vector<EdgeEvent>& events,
                      std::ostream* log = nullptr);

/// run_events on parse_stream(cfg.input).
RunSummary run(const RunConfig& cfg, std::ostream* log = nullptr);

/// Distinct community ids in <dir>/mapping.csv, ascending.
std::vector<CommunityId> list_communities(const std::filesystem::path& dir);

/// Members of `community` in <dir>/mapping.csv; NotFoundError if unknown.
std::vector<VertexId> list_vertices(const std::filesystem::path& dir,
                                    CommunityId community);

}  // namespace dyncomm
