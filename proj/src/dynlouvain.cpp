#include "dyncomm/dynlouvain.hpp"

#include <vector>

#include "dyncomm/errors.hpp"

namespace dyncomm {

namespace {

std::size_t count_changed(const std::map<VertexId, CommunityId>& before,
                          const std::map<VertexId, CommunityId>& after) {
  std::size_t changed = 0;
  for (const auto& [v, c] : after) {
    auto it = before.find(v);
    if (it == before.end() || it->second != c) ++changed;
  }
  for (const auto& [v, c] : before)
    if (!after.contains(v)) ++changed;
  return changed;
}

}  // namespace

DynamicLouvain DynamicLouvain::init(const DynGraph& g) {
  DynamicLouvain s;
  s.ll_graph_ = g;
  s.ll_partition_ = Partition::singletons(g);
  s.ul_graph_ = aggregate(g, s.ll_partition_).supergraph;
  s.refresh_modularity();
  s.old_mod_ = 0;
  return s;
}

DynamicLouvain DynamicLouvain::from_partition(
    const DynGraph& g, const std::map<VertexId, CommunityId>& mapping) {
  DynamicLouvain s;
  s.ll_graph_ = g;
  s.ll_partition_ = Partition::from_mapping(g, mapping);
  s.ul_graph_ = aggregate(g, s.ll_partition_).supergraph;
  s.refresh_modularity();
  s.old_mod_ = 0;
  return s;
}

void DynamicLouvain::refresh_modularity() {
  old_mod_ = mod_;
  mod_ = ll_graph_.total_weight_2m() > 0 ? modularity(ll_graph_, ll_partition_)
                                         : 0.0;
}

AffectedSet DynamicLouvain::affected_by_addition(VertexId u, VertexId v,
                                                 Weight w) const {
  AffectedSet a;
  const bool has_u = ll_graph_.has_vertex(u);
  const bool has_v = ll_graph_.has_vertex(v);
  if (has_u && has_v) {
    if (ll_graph_.weight(u, v) == w) return a;  // nothing changes
    if (ll_partition_.community_of(u) == ll_partition_.community_of(v))
      return a;
  }
  for (auto [x, present] : {std::pair{u, has_u}, std::pair{v, has_v}}) {
    if (!present) {
      a.vertices.insert(x);
      continue;
    }
    const CommunityId c = ll_partition_.community_of(x);
    if (a.communities.insert(c).second) {
      const auto& members = ll_partition_.members(c);
      a.vertices.insert(members.begin(), members.end());
    }
  }
  return a;
}

AffectedSet DynamicLouvain::affected_by_removal(VertexId u, VertexId v) const {
  if (!ll_graph_.has_edge(u, v))
    throw MissingEdgeError("no edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
  AffectedSet a;
  const CommunityId cu = ll_partition_.community_of(u);
  if (cu != ll_partition_.community_of(v)) return a;
  a.communities.insert(cu);
  const auto& members = ll_partition_.members(cu);
  a.vertices.insert(members.begin(), members.end());
  return a;
}

void DynamicLouvain::disband(const AffectedSet& a) {
  for (VertexId v : a.vertices) ll_partition_.isolate(ll_graph_, v);
}

void DynamicLouvain::sync_communities(const AffectedSet& a,
                                      const std::set<VertexId>& extra) {
  std::set<CommunityId> dirty = a.communities;
  for (VertexId v : a.vertices)
    if (ll_partition_.contains(v)) dirty.insert(ll_partition_.community_of(v));
  for (VertexId v : extra)
    if (ll_partition_.contains(v)) dirty.insert(ll_partition_.community_of(v));

  for (CommunityId c : dirty)
    if (ul_graph_.has_vertex(c)) ul_graph_.remove_vertex(c);

  for (CommunityId c : dirty) {
    if (!ll_partition_.has_community(c)) continue;
    ul_graph_.add_vertex(c);
    // Internal edges are seen from both endpoints, hence the halving.
    double loop = 0;
    double internal_twice = 0;
    std::map<CommunityId, double> row;
    for (VertexId x : ll_partition_.members(c)) {
      loop += ll_graph_.self_loop(x);
      for (const auto& [y, w] : ll_graph_.neighbors(x)) {
        const CommunityId cy = ll_partition_.community_of(y);
        if (cy == c)
          internal_twice += w;
        else
          row[cy] += w;
      }
    }
    const double self = loop + internal_twice / 2;
    if (self > 0) ul_graph_.add_edge(c, c, self);
    for (const auto& [other, w] : row) {
      if (dirty.contains(other) && other < c) continue;
      ul_graph_.add_edge(c, other, w);
    }
  }
}

std::size_t DynamicLouvain::optimize() {
  std::set<VertexId> moved_vertices;
  while (ul_graph_.total_weight_2m() > 0) {
    OneLevelResult aux = one_level(ul_graph_, Partition::singletons(ul_graph_));
    if (!aux.improved) break;

    // CommunityChangedVertices: collect every relabel before applying any,
    // since one supervertex may move into a community whose namesake moved.
    std::vector<std::pair<std::vector<VertexId>, CommunityId>> relabel;
    for (VertexId s : ul_graph_.vertices()) {
      const CommunityId target = aux.partition.community_of(s);
      if (target == s) continue;
      const auto& members = ll_partition_.members(s);
      relabel.emplace_back(std::vector<VertexId>(members.begin(), members.end()),
                           target);
    }
    // UpdateCommunities
    for (const auto& [members, target] : relabel) {
      for (VertexId x : members) {
        ll_partition_.move(ll_graph_, x, target);
        moved_vertices.insert(x);
      }
    }
    refresh_modularity();
    // PartitionToGraph: supervertex ids coincide with lower-level ids.
    ul_graph_ = aggregate(ul_graph_, aux.partition).supergraph;
    if (!(mod_ - old_mod_ > kGainEpsilon)) break;
  }
  return moved_vertices.size();
}

StepReport DynamicLouvain::step(const EdgeEvent& e) {
  const auto start = std::chrono::steady_clock::now();
  const auto before = community_mapping();

  AffectedSet a;
  if (e.action == EdgeAction::kAdd) {
    if (!(e.w > 0))
      throw WeightDomainError("edge weight must be positive, got " +
                              std::to_string(e.w));
    a = affected_by_addition(e.u, e.v, e.w);
    for (VertexId x : {e.u, e.v}) {
      if (ll_graph_.has_vertex(x)) continue;
      ll_graph_.add_vertex(x);
      ll_partition_.add_vertex(ll_graph_, x);
    }
    const Weight old_w = ll_graph_.weight(e.u, e.v);
    ll_graph_.add_edge(e.u, e.v, e.w);
    ll_partition_.edge_changed(e.u, e.v, old_w, e.w);
    ++additions_;
  } else {
    a = affected_by_removal(e.u, e.v);
    const Weight old_w = ll_graph_.weight(e.u, e.v);
    ll_graph_.remove_edge(e.u, e.v);
    ll_partition_.edge_changed(e.u, e.v, old_w, 0);
    ++removals_;
  }
  disband(a);
  sync_communities(a, {e.u, e.v});
  refresh_modularity();
  optimize();

  StepReport report;
  report.modularity = mod_;
  report.changed_vertices = count_changed(before, community_mapping());
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::map<VertexId, CommunityId> DynamicLouvain::community_mapping() const {
  return ll_partition_.canonical_mapping();
}

double DynamicLouvain::quality() const {
  return modularity(ll_graph_, ll_partition_);
}

}  // namespace dyncomm
