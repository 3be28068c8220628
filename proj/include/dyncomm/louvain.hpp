#pragma once

#include <map>
#include <vector>

#include "dyncomm/graph.hpp"
#include "dyncomm/partition.hpp"

namespace dyncomm {

/// Minimum modularity gain for a vertex move to count as an improvement.
inline constexpr double kGainEpsilon = 1e-9;

/// Q = Σ_c [ in_c/2m − (tot_c/2m)² ], evaluated from the graph (the
/// partition's cached sums are not trusted). Throws UndefinedModularityError
/// when 2m = 0 and InvalidArgumentError if p does not cover g.
double modularity(const DynGraph& g, const Partition& p);
double modularity(const DynGraph& g,
                  const std::map<VertexId, CommunityId>& mapping);

/// Exact ΔQ of moving v from its community into `target`.
double move_gain(const DynGraph& g, const Partition& p, VertexId v,
                 CommunityId target);

struct OneLevelResult {
  Partition partition;
  bool improved = false;
  std::size_t moves = 0;
};

/// Local moving phase: sweeps vertices in descending id order, moving each to
/// the neighboring community with the largest gain (ties go to the larger
/// community id), until a sweep makes no move with gain > kGainEpsilon.
OneLevelResult one_level(const DynGraph& g, Partition p);

struct Aggregation {
  DynGraph supergraph;
  /// Community id → supervertex id. Supervertices reuse the community id.
  std::map<CommunityId, VertexId> supervertex_of;
};

/// One supervertex per community. The supervertex self-loop carries the
/// community's internal weight (so its degree contribution is in_weight),
/// inter-community weights are summed, and 2m is preserved.
Aggregation aggregate(const DynGraph& g, const Partition& p);

struct LouvainLevel {
  DynGraph graph;
  Partition partition;
};

struct LouvainResult {
  /// Canonical partition of the input vertices.
  Partition partition;
  /// levels[i] is the graph optimized at pass i and the partition found on it.
  std::vector<LouvainLevel> levels;
};

/// Full multi-level Louvain. Throws EmptyInputError on an empty graph.
LouvainResult louvain_full(const DynGraph& g);

}  // namespace dyncomm
