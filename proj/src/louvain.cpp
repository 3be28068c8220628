#include "dyncomm/louvain.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "dyncomm/errors.hpp"

namespace dyncomm {

namespace {

double modularity_impl(const DynGraph& g,
                       const std::map<VertexId, CommunityId>& mapping) {
  const double two_m = g.total_weight_2m();
  if (g.vertex_count() == 0 || !(two_m > 0))
    throw UndefinedModularityError("modularity undefined on a graph with 2m = 0");
  std::map<CommunityId, std::pair<double, double>> sums;  // in, tot
  for (VertexId u : g.vertices()) {
    auto it = mapping.find(u);
    if (it == mapping.end())
      throw InvalidArgumentError("partition does not cover vertex " +
                                 std::to_string(u));
    auto& [in, tot] = sums[it->second];
    tot += g.weighted_degree(u);
    in += 2 * g.self_loop(u);
    for (const auto& [v, w] : g.neighbors(u)) {
      auto jt = mapping.find(v);
      if (jt != mapping.end() && jt->second == it->second) in += w;
    }
  }
  // Summed in value order so the result does not depend on community labels.
  std::vector<double> terms;
  terms.reserve(sums.size());
  for (const auto& [c, s] : sums) {
    const double frac = s.second / two_m;
    terms.push_back(s.first / two_m - frac * frac);
  }
  std::sort(terms.begin(), terms.end());
  double q = 0;
  for (double t : terms) q += t;
  return q;
}

}  // namespace

double modularity(const DynGraph& g, const Partition& p) {
  return modularity_impl(g, p.mapping());
}

double modularity(const DynGraph& g,
                  const std::map<VertexId, CommunityId>& mapping) {
  return modularity_impl(g, mapping);
}

double move_gain(const DynGraph& g, const Partition& p, VertexId v,
                 CommunityId target) {
  const CommunityId src = p.community_of(v);
  if (!p.has_community(target))
    throw UnknownCommunityError("unknown community " + std::to_string(target));
  if (src == target) return 0.0;
  const double two_m = g.total_weight_2m();
  if (!(two_m > 0))
    throw UndefinedModularityError("modularity undefined on a graph with 2m = 0");

  double k_src = 0;
  double k_tgt = 0;
  for (const auto& [u, w] : g.neighbors(v)) {
    const CommunityId cu = p.community_of(u);
    if (cu == src) k_src += w;
    if (cu == target) k_tgt += w;
  }
  const double k = g.weighted_degree(v);
  const double tot_src = p.tot_weight(src) - k;
  const double tot_tgt = p.tot_weight(target);
  return 2 * (k_tgt - k_src) / two_m -
         2 * k * (tot_tgt - tot_src) / (two_m * two_m);
}

OneLevelResult one_level(const DynGraph& g, Partition p) {
  OneLevelResult result;
  const double two_m = g.total_weight_2m();
  if (!(two_m > 0)) {
    result.partition = std::move(p);
    return result;
  }
  const std::vector<VertexId> order = g.vertices();

  bool moved = true;
  while (moved) {
    moved = false;
    for (auto vit = order.rbegin(); vit != order.rend(); ++vit) {
      const VertexId v = *vit;
      const CommunityId src = p.community_of(v);
      const double k = g.weighted_degree(v);

      std::map<CommunityId, double> links;
      for (const auto& [u, w] : g.neighbors(v)) links[p.community_of(u)] += w;

      // Score of joining c with v already taken out of its own community;
      // ΔQ(src → c) = 2·(score(c) − score(src)) / 2m.
      auto score = [&](CommunityId c, double k_c) {
        double tot = p.tot_weight(c);
        if (c == src) tot -= k;
        return k_c - tot * k / two_m;
      };
      auto src_link = links.find(src);
      const double stay = score(src, src_link == links.end() ? 0.0 : src_link->second);

      CommunityId best = src;
      double best_score = 0;
      bool have_best = false;
      for (auto it = links.rbegin(); it != links.rend(); ++it) {
        if (it->first == src) continue;
        const double s = score(it->first, it->second);
        if (!have_best || s > best_score) {
          best = it->first;
          best_score = s;
          have_best = true;
        }
      }
      if (!have_best) continue;
      const double gain = 2 * (best_score - stay) / two_m;
      if (gain > kGainEpsilon) {
        p.move(g, v, best);
        moved = true;
        result.improved = true;
        ++result.moves;
      }
    }
  }
  result.partition = std::move(p);
  return result;
}

Aggregation aggregate(const DynGraph& g, const Partition& p) {
  Aggregation out;
  std::map<std::pair<CommunityId, CommunityId>, double> weights;
  for (VertexId u : g.vertices()) {
    const CommunityId cu = p.community_of(u);
    out.supervertex_of.emplace(cu, cu);
    out.supergraph.add_vertex(cu);
  }
  g.for_each_edge([&](VertexId u, VertexId v, Weight w) {
    CommunityId a = p.community_of(u);
    CommunityId b = p.community_of(v);
    if (a > b) std::swap(a, b);
    weights[{a, b}] += w;
  });
  for (const auto& [key, w] : weights)
    if (w > 0) out.supergraph.add_edge(key.first, key.second, w);
  return out;
}

LouvainResult louvain_full(const DynGraph& g) {
  if (g.vertex_count() == 0) throw EmptyInputError("louvain on an empty graph");
  LouvainResult result;

  // flat maps every original vertex to a vertex of the current level graph.
  std::map<VertexId, VertexId> flat;
  for (VertexId v : g.vertices()) flat.emplace(v, v);

  DynGraph current = g;
  while (true) {
    OneLevelResult level = one_level(current, Partition::singletons(current));
    if (!level.improved) break;
    Partition canon = level.partition.canonical(current);
    result.levels.push_back({current, canon});
    for (auto& [v, super] : flat) super = canon.community_of(super);
    current = aggregate(current, canon).supergraph;
  }
  result.partition = Partition::from_mapping(g, canonicalize(flat));
  return result;
}

}  // namespace dyncomm
