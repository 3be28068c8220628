#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace dyncomm {

using VertexId = std::uint64_t;
using Weight = double;

/// Mutable undirected weighted graph with self-loops.
///
/// Adjacency rows are ordered maps, so every neighbor iteration runs in
/// ascending VertexId order. A self-loop of weight w contributes 2w to the
/// weighted degree of its vertex, and total_weight_2m() is always the sum of
/// weighted degrees. Vertices are never removed implicitly: removing the last
/// incident edge leaves an isolated vertex behind.
///
/// Not thread-safe for writers; concurrent const access is fine.
class DynGraph {
 public:
  using Row = std::map<VertexId, Weight>;

  DynGraph() = default;

  /// Inserts an isolated vertex; no-op if it already exists.
  void add_vertex(VertexId u);

  /// Sets w(u,v) = w, creating missing endpoints. Replaces any existing
  /// weight. Throws WeightDomainError unless w > 0.
  void add_edge(VertexId u, VertexId v, Weight w);

  /// Deletes the (u,v) entry. Throws MissingEdgeError if absent.
  void remove_edge(VertexId u, VertexId v);

  /// Removes u together with all incident edges. Throws UnknownVertexError.
  void remove_vertex(VertexId u);

  bool has_vertex(VertexId u) const { return rows_.contains(u); }
  bool has_edge(VertexId u, VertexId v) const;

  /// w(u,v), or 0 when the pair is not connected. For u == v this is the
  /// stored self-loop weight (counted once).
  Weight weight(VertexId u, VertexId v) const;
  Weight self_loop(VertexId u) const;

  /// Σ_v w(u,v) + 2·self_loop(u).
  Weight weighted_degree(VertexId u) const;

  /// Neighbors of u excluding u itself, ascending.
  const Row& neighbors(VertexId u) const;

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  double total_weight_2m() const { return total_weight_2m_; }

  /// All vertices, ascending.
  std::vector<VertexId> vertices() const;

  /// Calls f(u, v, w) once per edge with u <= v, in lexicographic order.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (const auto& [u, node] : rows_) {
      if (node.loop > 0) f(u, u, node.loop);
      for (auto it = node.adj.upper_bound(u); it != node.adj.end(); ++it)
        f(u, it->first, it->second);
    }
  }

  /// Graph on `vertices` holding exactly the edges internal to that set.
  DynGraph induced_subgraph(std::span<const VertexId> vertices) const;

  /// Connected components of the subgraph induced by `vertices`, each sorted
  /// ascending, ordered by their minimum member.
  std::vector<std::vector<VertexId>> connected_components(
      std::span<const VertexId> vertices) const;

  /// Recomputes 2m from the adjacency rows, ignoring the cache.
  double recompute_total_weight_2m() const;

  friend bool operator==(const DynGraph& a, const DynGraph& b);

 private:
  struct Node {
    Row adj;
    Weight loop = 0;
    Weight degree = 0;
  };

  Node& node_or_insert(VertexId u) { return rows_[u]; }
  const Node& node_at(VertexId u) const;

  std::map<VertexId, Node> rows_;
  std::size_t edge_count_ = 0;
  double total_weight_2m_ = 0;
};

}  // namespace dyncomm
