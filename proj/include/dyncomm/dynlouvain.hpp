#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <set>

#include "dyncomm/graph.hpp"
#include "dyncomm/louvain.hpp"
#include "dyncomm/partition.hpp"
#include "dyncomm/temporal.hpp"

namespace dyncomm {

/// Vertices whose communities an edge event invalidates, plus those
/// communities (ids as held by the lower-level partition before the event).
struct AffectedSet {
  std::set<VertexId> vertices;
  std::set<CommunityId> communities;

  bool empty() const { return vertices.empty(); }
};

struct StepReport {
  /// Modularity of the lower-level partition after the step; 0 while the
  /// graph has no edge weight.
  double modularity = 0;
  std::size_t changed_vertices = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Incremental Louvain over an edge stream.
///
/// The state pairs the original network and its partition (lower level) with
/// the supergraph obtained by collapsing each community into one supervertex
/// (upper level). An event only disbands the communities it touches; the
/// local moving phase then runs on the upper level, where every untouched
/// community is a single supervertex, and moves are projected back down.
///
/// Community ids inside the state are opaque and never reused; use
/// community_mapping() for canonical ids (smallest member).
class DynamicLouvain {
 public:
  DynamicLouvain() = default;

  /// Singleton communities over g; no optimization is run.
  static DynamicLouvain init(const DynGraph& g);

  /// State over g with an explicit starting partition (e.g. a previous
  /// result). Every vertex of g must be mapped.
  static DynamicLouvain from_partition(
      const DynGraph& g, const std::map<VertexId, CommunityId>& mapping);

  /// Whole communities of u and v when the edge would cross a
  /// community boundary; new endpoints are included. Empty for intra-community
  /// edges and for re-asserting an existing edge with its current weight.
  AffectedSet affected_by_addition(VertexId u, VertexId v, Weight w = 1) const;

  /// The shared community's members when (u,v) is internal, empty for
  /// inter-community edges. Throws MissingEdgeError if (u,v) is absent.
  AffectedSet affected_by_removal(VertexId u, VertexId v) const;

  /// Every affected vertex becomes a fresh singleton community.
  void disband(const AffectedSet& a);

  /// Brings the upper level back in line with the lower level. Only the
  /// supervertices named in `a`, those of its vertices and those of `extra`
  /// are rebuilt.
  void sync_communities(const AffectedSet& a,
                        const std::set<VertexId>& extra = {});

  /// Local moving on the upper level, projection to the lower
  /// level, re-aggregation, until modularity stops improving. Returns the
  /// number of lower-level vertices whose community changed.
  std::size_t optimize();

  /// Applies one event. REMOVE of a missing edge throws
  /// MissingEdgeError and leaves the state untouched.
  StepReport step(const EdgeEvent& e);

  /// Canonical vertex → community mapping of the lower level.
  std::map<VertexId, CommunityId> community_mapping() const;

  /// Modularity of the lower-level partition. Throws
  /// UndefinedModularityError while 2m = 0.
  double quality() const;

  const DynGraph& ll_graph() const { return ll_graph_; }
  const Partition& ll_partition() const { return ll_partition_; }
  const DynGraph& ul_graph() const { return ul_graph_; }
  double last_modularity() const { return mod_; }
  double previous_modularity() const { return old_mod_; }
  std::size_t additions_applied() const { return additions_; }
  std::size_t removals_applied() const { return removals_; }

 private:
  void refresh_modularity();

  DynGraph ll_graph_;
  Partition ll_partition_;
  DynGraph ul_graph_;
  double mod_ = 0;
  double old_mod_ = 0;
  std::size_t additions_ = 0;
  std::size_t removals_ = 0;
};

}  // namespace dyncomm
