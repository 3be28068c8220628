#include "dyncomm/partition.hpp"

#include <algorithm>
#include <string>

#include "dyncomm/errors.hpp"

namespace dyncomm {

Partition Partition::singletons(const DynGraph& g) {
  Partition p;
  for (VertexId v : g.vertices()) p.insert(g, v, v);
  return p;
}

Partition Partition::from_mapping(
    const DynGraph& g, const std::map<VertexId, CommunityId>& mapping) {
  Partition p;
  for (const auto& [v, c] : mapping) {
    if (!g.has_vertex(v))
      throw UnknownVertexError("mapping names unknown vertex " +
                               std::to_string(v));
  }
  for (VertexId v : g.vertices()) {
    auto it = mapping.find(v);
    if (it == mapping.end())
      throw InvalidArgumentError("mapping does not cover vertex " +
                                 std::to_string(v));
    p.insert(g, v, it->second);
  }
  return p;
}

CommunityId Partition::community_of(VertexId v) const {
  auto it = community_of_.find(v);
  if (it == community_of_.end())
    throw UnknownVertexError("vertex " + std::to_string(v) +
                             " is not in the partition");
  return it->second;
}

const Partition::Stats& Partition::stats(CommunityId c) const {
  auto it = stats_.find(c);
  if (it == stats_.end())
    throw UnknownCommunityError("unknown community " + std::to_string(c));
  return it->second;
}

std::vector<CommunityId> Partition::communities() const {
  std::vector<CommunityId> out;
  out.reserve(stats_.size());
  for (const auto& [c, s] : stats_) out.push_back(c);
  return out;
}

void Partition::insert(const DynGraph& g, VertexId v, CommunityId c) {
  Stats& s = stats_[c];
  double to_c = 0;
  for (const auto& [u, w] : g.neighbors(v))
    if (s.members.contains(u)) to_c += w;
  s.in += 2 * to_c + 2 * g.self_loop(v);
  s.tot += g.weighted_degree(v);
  s.members.insert(v);
  community_of_[v] = c;
  next_id_ = std::max(next_id_, c + 1);
}

void Partition::erase(const DynGraph& g, VertexId v) {
  const CommunityId c = community_of_.at(v);
  Stats& s = stats_.at(c);
  s.members.erase(v);
  if (s.members.empty()) {
    stats_.erase(c);
  } else {
    double to_c = 0;
    for (const auto& [u, w] : g.neighbors(v))
      if (s.members.contains(u)) to_c += w;
    s.in -= 2 * to_c + 2 * g.self_loop(v);
    s.tot -= g.weighted_degree(v);
  }
  community_of_.erase(v);
}

void Partition::move(const DynGraph& g, VertexId v, CommunityId target) {
  if (community_of(v) == target) return;
  erase(g, v);
  insert(g, v, target);
}

CommunityId Partition::isolate(const DynGraph& g, VertexId v) {
  const CommunityId c = fresh_id();
  erase(g, v);
  insert(g, v, c);
  return c;
}

CommunityId Partition::add_vertex(const DynGraph& g, VertexId v) {
  if (contains(v))
    throw InvalidArgumentError("vertex " + std::to_string(v) +
                               " already in the partition");
  const CommunityId c = fresh_id();
  insert(g, v, c);
  return c;
}

void Partition::edge_changed(VertexId u, VertexId v, Weight old_w,
                             Weight new_w) {
  const double delta = new_w - old_w;
  const CommunityId cu = community_of(u);
  const CommunityId cv = community_of(v);
  Stats& su = stats_.at(cu);
  if (u == v) {
    su.tot += 2 * delta;
    su.in += 2 * delta;
    return;
  }
  Stats& sv = stats_.at(cv);
  su.tot += delta;
  sv.tot += delta;
  if (cu == cv) su.in += 2 * delta;
}

std::map<VertexId, CommunityId> Partition::canonical_mapping() const {
  return canonicalize(community_of_);
}

Partition Partition::canonical(const DynGraph& g) const {
  return from_mapping(g, canonical_mapping());
}

std::map<VertexId, CommunityId> canonicalize(
    const std::map<VertexId, CommunityId>& mapping) {
  // Vertices are visited ascending, so the first member seen is the minimum.
  std::map<CommunityId, CommunityId> rename;
  std::map<VertexId, CommunityId> out;
  for (const auto& [v, c] : mapping) {
    auto [it, inserted] = rename.try_emplace(c, v);
    out.emplace_hint(out.end(), v, it->second);
  }
  return out;
}

}  // namespace dyncomm
