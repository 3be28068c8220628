#include "dyncomm/temporal.hpp"

#include <algorithm>
#include <string>

#include "dyncomm/errors.hpp"

namespace dyncomm {

// --- time-ordered graph ----------------------------------------------------

TimeOrderedGraph::TimeOrderedGraph(
    std::set<VertexId> vertices, Timestamp t_start, Timestamp t_end,
    std::map<Timestamp, std::vector<EdgeKey>> transit)
    : vertices_(std::move(vertices)), t_start_(t_start), t_end_(t_end) {
  for (const auto& [t, edges] : transit) {
    auto& layer = transit_[t];
    for (const auto& [a, b] : edges) {
      if (layer[a].insert(b).second) ++transit_count_;
      if (a != b && layer[b].insert(a).second) ++transit_count_;
    }
  }
}

std::size_t TimeOrderedGraph::replica_count() const {
  return vertices_.size() * static_cast<std::size_t>(t_end_ - t_start_ + 1);
}

std::size_t TimeOrderedGraph::wait_edge_count() const {
  return vertices_.size() * static_cast<std::size_t>(t_end_ - t_start_);
}

std::size_t TimeOrderedGraph::transit_edge_count() const {
  return transit_count_;
}

bool TimeOrderedGraph::has_edge(TemporalVertex from, TemporalVertex to) const {
  if (to.t != from.t + 1 || from.t < t_start_ || to.t > t_end_) return false;
  if (!vertices_.contains(from.vertex) || !vertices_.contains(to.vertex))
    return false;
  if (from.vertex == to.vertex) return true;
  auto layer = transit_.find(from.t);
  if (layer == transit_.end()) return false;
  auto row = layer->second.find(from.vertex);
  return row != layer->second.end() && row->second.contains(to.vertex);
}

std::vector<TemporalVertex> TimeOrderedGraph::successors(
    TemporalVertex from) const {
  std::vector<TemporalVertex> out;
  if (from.t < t_start_ || from.t >= t_end_ || !vertices_.contains(from.vertex))
    return out;
  const Timestamp next = from.t + 1;
  out.push_back({from.vertex, next});
  auto layer = transit_.find(from.t);
  if (layer == transit_.end()) return out;
  auto row = layer->second.find(from.vertex);
  if (row == layer->second.end()) return out;
  for (VertexId v : row->second)
    if (v != from.vertex) out.push_back({v, next});
  return out;
}

TimeOrderedGraph expand_time_ordered(const SnapshotSequence& s,
                                     Timestamp t_start, Timestamp t_end) {
  if (s.snapshots.empty()) throw EmptyInputError("empty snapshot sequence");
  if (!(t_start < t_end))
    throw InvalidArgumentError("time-ordered expansion needs t_start < t_end");

  std::set<VertexId> vertices = s.vertices;
  std::map<Timestamp, std::vector<EdgeKey>> transit;
  std::optional<Timestamp> previous;
  for (const Snapshot& snap : s.snapshots) {
    if (previous && snap.t <= *previous)
      throw InvalidArgumentError("snapshot times must be strictly increasing");
    previous = snap.t;
    for (const auto& [a, b] : snap.edges) {
      vertices.insert(a);
      vertices.insert(b);
    }
    // Edges of G_t carry messages from layer t-1 to layer t.
    if (snap.t > t_start && snap.t <= t_end)
      transit[snap.t - 1] = snap.edges;
  }
  return TimeOrderedGraph(std::move(vertices), t_start, t_end,
                          std::move(transit));
}

std::optional<TemporalPath> temporal_shortest_path(const TimeOrderedGraph& tog,
                                                   VertexId src, VertexId dst,
                                                   Timestamp t_start,
                                                   Timestamp t_end) {
  for (VertexId v : {src, dst})
    if (!tog.base_vertices().contains(v))
      throw UnknownVertexError("unknown vertex " + std::to_string(v));
  if (t_start > t_end || t_start < tog.t_start() || t_end > tog.t_end())
    throw InvalidArgumentError("query interval outside the expanded graph");

  if (src == dst) return TemporalPath{{src, t_start}};

  // parents[t][v] = predecessor vertex at layer t-1.
  std::map<Timestamp, std::map<VertexId, VertexId>> parents;
  std::set<VertexId> frontier{src};
  for (Timestamp t = t_start; t < t_end; ++t) {
    auto& next_parents = parents[t + 1];
    // Waiting wins over transit when both reach a replica.
    for (VertexId v : frontier) next_parents.emplace(v, v);
    for (VertexId v : frontier)
      for (const TemporalVertex& succ : tog.successors({v, t}))
        next_parents.emplace(succ.vertex, v);

    if (next_parents.contains(dst)) {
      TemporalPath path;
      VertexId cur = dst;
      for (Timestamp back = t + 1; back > t_start; --back) {
        path.push_back({cur, back});
        cur = parents.at(back).at(cur);
      }
      path.push_back({src, t_start});
      std::reverse(path.begin(), path.end());
      return path;
    }
    frontier.clear();
    for (const auto& [v, parent] : next_parents) frontier.insert(v);
  }
  return std::nullopt;
}

// --- windows ---------------------------------------------------------------

Window::Window(WindowPolicy policy) : policy_(policy) {
  if (policy_.kind == WindowKind::kSliding) {
    if (policy_.length == 0) throw ConfigError("window length must be positive");
    if (policy_.stride == 0) throw ConfigError("window stride must be positive");
    if (policy_.stride > policy_.length)
      throw ConfigError("window stride must not exceed its length");
  }
}

std::uint64_t Window::boundary() const {
  const std::uint64_t len = policy_.length;
  const std::uint64_t s = policy_.stride;
  if (policy_.mode == WindowMode::kCount) {
    if (add_count_ <= len) return 0;
    return (add_count_ - len + s - 1) / s * s;
  }
  if (now_ < len) return 0;
  return ((now_ - len) / s + 1) * s;
}

void Window::evict_before(std::uint64_t boundary, Timestamp now,
                          std::vector<EdgeEvent>& evicted) {
  while (!by_position_.empty() && by_position_.begin()->first < boundary) {
    const EdgeKey key = by_position_.begin()->second;
    by_position_.erase(by_position_.begin());
    const Live& live = live_.at(key);
    evicted.push_back(EdgeEvent::remove(live.u, live.v, now));
    live_.erase(key);
    evicted_.insert(key);
  }
}

WindowDelta Window::advance(const std::vector<EdgeEvent>& incoming) {
  {
    bool seen = seen_any_;
    Timestamp last = now_;
    for (const EdgeEvent& e : incoming) {
      if (seen && e.t < last)
        throw OutOfOrderError("timestamp " + std::to_string(e.t) +
                              " precedes " + std::to_string(last));
      last = e.t;
      seen = true;
    }
  }

  struct Touch {
    bool was_live;
    std::uint64_t seq = 0;        // order of the deciding event
    std::optional<EdgeEvent> add;     // newest ADD in this batch
    std::optional<EdgeEvent> remove;  // newest REMOVE/eviction in this batch
  };
  std::map<EdgeKey, Touch> touched;
  std::vector<std::pair<std::uint64_t, EdgeEvent>> passthrough;
  std::uint64_t seq = 0;

  auto touch = [&](const EdgeKey& key) -> Touch& {
    auto [it, inserted] = touched.try_emplace(key, Touch{live_.contains(key), 0, std::nullopt, std::nullopt});
    return it->second;
  };

  const bool sliding = policy_.kind == WindowKind::kSliding;
  for (const EdgeEvent& e : incoming) {
    now_ = e.t;
    seen_any_ = true;
    const EdgeKey key = edge_key(e.u, e.v);
    if (e.action == EdgeAction::kAdd) {
      Touch& tc = touch(key);
      const std::uint64_t pos =
          policy_.mode == WindowMode::kCount ? add_count_ : e.t;
      ++add_count_;
      if (auto it = live_.find(key); it != live_.end())
        by_position_.erase({it->second.position, key});
      evicted_.erase(key);
      live_[key] = Live{e.w, pos, e.u, e.v};
      by_position_.insert({pos, key});
      tc.add = e;
      tc.seq = seq++;
    } else {
      if (auto it = live_.find(key); it != live_.end()) {
        Touch& tc = touch(key);
        by_position_.erase({it->second.position, key});
        live_.erase(it);
        tc.remove = e;
        tc.seq = seq++;
      } else if (evicted_.erase(key) > 0) {
        // The window already dropped it.
      } else if (!touched.contains(key)) {
        // Unknown to the window: hand it on and let the consumer decide.
        passthrough.emplace_back(seq++, e);
      }
    }
    if (sliding) {
      std::vector<EdgeEvent> evicted;
      evict_before(boundary(), now_, evicted);
      for (const EdgeEvent& ev : evicted) {
        // Already erased from live_, so it was live before unless this batch
        // added it.
        Touch& tc = touched
                        .try_emplace(edge_key(ev.u, ev.v),
                                     Touch{true, 0, std::nullopt, std::nullopt})
                        .first->second;
        tc.remove = ev;
        tc.seq = seq++;
      }
    }
  }

  std::vector<std::pair<std::uint64_t, EdgeEvent>> adds;
  std::vector<std::pair<std::uint64_t, EdgeEvent>> removes = std::move(passthrough);
  for (const auto& [key, tc] : touched) {
    const bool is_live = live_.contains(key);
    if (is_live) {
      EdgeEvent add = *tc.add;
      add.w = live_.at(key).w;
      adds.emplace_back(tc.seq, add);
    } else if (tc.was_live) {
      removes.emplace_back(tc.seq, *tc.remove);
    }
  }
  auto by_seq = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(adds.begin(), adds.end(), by_seq);
  std::sort(removes.begin(), removes.end(), by_seq);

  WindowDelta delta;
  for (auto& [s, e] : adds) delta.adds.push_back(e);
  for (auto& [s, e] : removes) delta.removes.push_back(e);
  return delta;
}

DynGraph Window::contents_graph() const {
  DynGraph g;
  for (const auto& [key, live] : live_) g.add_edge(live.u, live.v, live.w);
  return g;
}

WindowDelta window_advance(Window& state,
                           const std::vector<EdgeEvent>& incoming) {
  return state.advance(incoming);
}

}  // namespace dyncomm
