#include "dyncomm/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dyncomm/errors.hpp"

namespace dyncomm {

namespace {

std::string pair_name(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

const DynGraph::Node& DynGraph::node_at(VertexId u) const {
  auto it = rows_.find(u);
  if (it == rows_.end())
    throw UnknownVertexError("unknown vertex " + std::to_string(u));
  return it->second;
}

void DynGraph::add_vertex(VertexId u) { rows_.try_emplace(u); }

void DynGraph::add_edge(VertexId u, VertexId v, Weight w) {
  if (!(w > 0))
    throw WeightDomainError("edge weight must be positive, got " +
                            std::to_string(w) + " for " + pair_name(u, v));
  if (u == v) {
    Node& n = node_or_insert(u);
    if (n.loop == 0) ++edge_count_;
    const double delta = 2 * (w - n.loop);
    n.loop = w;
    n.degree += delta;
    total_weight_2m_ += delta;
    return;
  }
  Node& nu = node_or_insert(u);
  Node& nv = node_or_insert(v);
  auto [it, inserted] = nu.adj.try_emplace(v, 0.0);
  if (inserted) ++edge_count_;
  const double delta = w - it->second;
  it->second = w;
  nv.adj[u] = w;
  nu.degree += delta;
  nv.degree += delta;
  total_weight_2m_ += 2 * delta;
}

void DynGraph::remove_edge(VertexId u, VertexId v) {
  auto iu = rows_.find(u);
  if (u == v) {
    if (iu == rows_.end() || iu->second.loop == 0)
      throw MissingEdgeError("no edge " + pair_name(u, v));
    Node& n = iu->second;
    n.degree -= 2 * n.loop;
    total_weight_2m_ -= 2 * n.loop;
    n.loop = 0;
    --edge_count_;
    return;
  }
  if (iu == rows_.end() || !iu->second.adj.contains(v))
    throw MissingEdgeError("no edge " + pair_name(u, v));
  Node& nu = iu->second;
  Node& nv = rows_.at(v);
  const Weight w = nu.adj.at(v);
  nu.adj.erase(v);
  nv.adj.erase(u);
  nu.degree -= w;
  nv.degree -= w;
  total_weight_2m_ -= 2 * w;
  --edge_count_;
}

void DynGraph::remove_vertex(VertexId u) {
  const Node& n = node_at(u);
  std::vector<VertexId> nbrs;
  nbrs.reserve(n.adj.size());
  for (const auto& [v, w] : n.adj) nbrs.push_back(v);
  for (VertexId v : nbrs) remove_edge(u, v);
  if (n.loop > 0) remove_edge(u, u);
  rows_.erase(u);
}

bool DynGraph::has_edge(VertexId u, VertexId v) const {
  return weight(u, v) > 0;
}

Weight DynGraph::weight(VertexId u, VertexId v) const {
  auto it = rows_.find(u);
  if (it == rows_.end()) return 0;
  if (u == v) return it->second.loop;
  auto jt = it->second.adj.find(v);
  return jt == it->second.adj.end() ? 0 : jt->second;
}

Weight DynGraph::self_loop(VertexId u) const { return node_at(u).loop; }

Weight DynGraph::weighted_degree(VertexId u) const { return node_at(u).degree; }

const DynGraph::Row& DynGraph::neighbors(VertexId u) const {
  return node_at(u).adj;
}

std::vector<VertexId> DynGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(rows_.size());
  for (const auto& [u, n] : rows_) out.push_back(u);
  return out;
}

DynGraph DynGraph::induced_subgraph(std::span<const VertexId> vertices) const {
  std::set<VertexId> keep(vertices.begin(), vertices.end());
  DynGraph sub;
  for (VertexId u : keep) {
    const Node& n = node_at(u);
    sub.add_vertex(u);
    if (n.loop > 0) sub.add_edge(u, u, n.loop);
    for (auto it = n.adj.upper_bound(u); it != n.adj.end(); ++it)
      if (keep.contains(it->first)) sub.add_edge(u, it->first, it->second);
  }
  return sub;
}

std::vector<std::vector<VertexId>> DynGraph::connected_components(
    std::span<const VertexId> vertices) const {
  std::set<VertexId> pending(vertices.begin(), vertices.end());
  for (VertexId u : pending) node_at(u);
  const std::set<VertexId> allowed = pending;

  std::vector<std::vector<VertexId>> components;
  while (!pending.empty()) {
    // Smallest unvisited vertex seeds the next component, which keeps the
    // output ordered by minimum member.
    std::vector<VertexId> component;
    std::vector<VertexId> stack{*pending.begin()};
    pending.erase(pending.begin());
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (const auto& [v, w] : rows_.at(u).adj) {
        if (!allowed.contains(v)) continue;
        if (pending.erase(v) > 0) stack.push_back(v);
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

double DynGraph::recompute_total_weight_2m() const {
  double total = 0;
  for (const auto& [u, n] : rows_) {
    total += 2 * n.loop;
    for (const auto& [v, w] : n.adj) total += w;
  }
  return total;
}

bool operator==(const DynGraph& a, const DynGraph& b) {
  if (a.rows_.size() != b.rows_.size() || a.edge_count_ != b.edge_count_)
    return false;
  auto ia = a.rows_.begin();
  auto ib = b.rows_.begin();
  for (; ia != a.rows_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second.loop != ib->second.loop) return false;
    if (ia->second.adj != ib->second.adj) return false;
  }
  return true;
}

}  // namespace dyncomm
