#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "dyncomm/graph.hpp"

namespace dyncomm {

using CommunityId = std::uint64_t;

/// Vertex to community assignment of a DynGraph with per-community weight
/// sums.
///
/// in_weight(c) is Σ_{i,j ∈ c} A_ij, i.e. twice the internal edge weight with
/// self-loops also counted twice; tot_weight(c) is the sum of member weighted
/// degrees. Both are tied to the graph the partition was built against: any
/// later edit to that graph must be reported through edge_changed() or the
/// sums go stale.
class Partition {
 public:
  struct Stats {
    double in = 0;
    double tot = 0;
    std::set<VertexId> members;
  };

  Partition() = default;

  /// Every vertex of g in its own community, id = vertex id.
  static Partition singletons(const DynGraph& g);

  /// Builds from an explicit mapping. Every vertex of g must be mapped and
  /// every mapped vertex must exist in g.
  static Partition from_mapping(const DynGraph& g,
                                const std::map<VertexId, CommunityId>& mapping);

  bool contains(VertexId v) const { return community_of_.contains(v); }
  CommunityId community_of(VertexId v) const;
  bool has_community(CommunityId c) const { return stats_.contains(c); }
  const Stats& stats(CommunityId c) const;
  double in_weight(CommunityId c) const { return stats(c).in; }
  double tot_weight(CommunityId c) const { return stats(c).tot; }
  const std::set<VertexId>& members(CommunityId c) const {
    return stats(c).members;
  }

  std::size_t vertex_count() const { return community_of_.size(); }
  std::size_t community_count() const { return stats_.size(); }

  /// Community ids, ascending.
  std::vector<CommunityId> communities() const;
  const std::map<VertexId, CommunityId>& mapping() const {
    return community_of_;
  }

  /// Moves v into community `target`, creating it if needed.
  void move(const DynGraph& g, VertexId v, CommunityId target);

  /// Moves v into a brand-new community and returns its id.
  CommunityId isolate(const DynGraph& g, VertexId v);

  /// Registers a vertex that was just added to g, as a fresh singleton.
  CommunityId add_vertex(const DynGraph& g, VertexId v);

  /// Bookkeeping for an edge weight change already applied to g:
  /// w(u,v) went from old_w to new_w.
  void edge_changed(VertexId u, VertexId v, Weight old_w, Weight new_w);

  /// Fresh id never handed out by this partition before.
  CommunityId fresh_id() { return next_id_++; }

  /// Mapping relabelled so every community id is its smallest member.
  std::map<VertexId, CommunityId> canonical_mapping() const;

  /// Same grouping, canonical ids.
  Partition canonical(const DynGraph& g) const;

 private:
  void insert(const DynGraph& g, VertexId v, CommunityId c);
  void erase(const DynGraph& g, VertexId v);

  std::map<VertexId, CommunityId> community_of_;
  std::map<CommunityId, Stats> stats_;
  CommunityId next_id_ = 0;
};

/// Canonical relabelling of a raw mapping (id = smallest member).
std::map<VertexId, CommunityId> canonicalize(
    const std::map<VertexId, CommunityId>& mapping);

}  // namespace dyncomm
