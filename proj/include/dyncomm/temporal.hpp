#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dyncomm/graph.hpp"

namespace dyncomm {

using Timestamp = std::uint64_t;

enum class EdgeAction { kAdd, kRemove };

/// One stream unit: assert or retract an undirected weighted edge at time t.
struct EdgeEvent {
  EdgeAction action = EdgeAction::kAdd;
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 1;  // ignored for kRemove
  Timestamp t = 0;

  static EdgeEvent add(VertexId u, VertexId v, Weight w = 1, Timestamp t = 0) {
    return {EdgeAction::kAdd, u, v, w, t};
  }
  static EdgeEvent remove(VertexId u, VertexId v, Timestamp t = 0) {
    return {EdgeAction::kRemove, u, v, 0, t};
  }

  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

using EdgeKey = std::pair<VertexId, VertexId>;

inline EdgeKey edge_key(VertexId u, VertexId v) {
  return u <= v ? EdgeKey{u, v} : EdgeKey{v, u};
}

// --- evolving network representations -------------------------------------

struct Snapshot {
  Timestamp t = 0;
  std::vector<EdgeKey> edges;
};

/// G_1, G_2, ... with strictly increasing times. `vertices` lists vertices
/// that must exist even without incident edges; endpoints are added
/// implicitly.
struct SnapshotSequence {
  std::vector<Snapshot> snapshots;
  std::set<VertexId> vertices;
};

/// A (vertex, time) replica in a time-ordered graph.
struct TemporalVertex {
  VertexId vertex = 0;
  Timestamp t = 0;
  friend auto operator<=>(const TemporalVertex&, const TemporalVertex&) = default;
};

/// Layered expansion of a snapshot sequence over [t_start, t_end]: each vertex
/// is replicated per time step, wait edges (v,t)→(v,t+1) connect consecutive
/// replicas and transit edges (u,t)→(v,t+1) exist for every edge {u,v} of the
/// snapshot at time t+1. Immutable once built.
class TimeOrderedGraph {
 public:
  TimeOrderedGraph(std::set<VertexId> vertices, Timestamp t_start,
                   Timestamp t_end,
                   std::map<Timestamp, std::vector<EdgeKey>> transit);

  const std::set<VertexId>& base_vertices() const { return vertices_; }
  Timestamp t_start() const { return t_start_; }
  Timestamp t_end() const { return t_end_; }

  std::size_t replica_count() const;
  std::size_t wait_edge_count() const;
  std::size_t transit_edge_count() const;

  bool has_edge(TemporalVertex from, TemporalVertex to) const;

  /// Successors of (v,t), wait edge first, then transit targets ascending.
  std::vector<TemporalVertex> successors(TemporalVertex from) const;

 private:
  std::set<VertexId> vertices_;
  Timestamp t_start_;
  Timestamp t_end_;
  // time t → adjacency used by edges leaving layer t (snapshot t+1 edges)
  std::map<Timestamp, std::map<VertexId, std::set<VertexId>>> transit_;
  std::size_t transit_count_ = 0;
};

/// Throws EmptyInputError for an empty sequence, InvalidArgumentError unless
/// t_start < t_end or when snapshot times are not strictly increasing.
TimeOrderedGraph expand_time_ordered(const SnapshotSequence& s,
                                     Timestamp t_start, Timestamp t_end);

using TemporalPath = std::vector<TemporalVertex>;

/// Earliest-arrival path from (src, t_start) to dst no later than t_end.
/// Returns nullopt when dst is unreachable. Throws UnknownVertexError.
std::optional<TemporalPath> temporal_shortest_path(const TimeOrderedGraph& tog,
                                                   VertexId src, VertexId dst,
                                                   Timestamp t_start,
                                                   Timestamp t_end);

// --- window policies -------------------------------------------------------

enum class WindowKind { kLandmark, kSliding };
enum class WindowMode { kCount, kTime };

struct WindowPolicy {
  WindowKind kind = WindowKind::kLandmark;
  std::uint64_t length = 1;
  WindowMode mode = WindowMode::kCount;
  /// 1 slides one unit at a time; stride == length gives tumbling windows.
  std::uint64_t stride = 1;

  static WindowPolicy landmark() { return {}; }
  static WindowPolicy sliding(std::uint64_t length, WindowMode mode,
                              std::uint64_t stride = 1) {
    return {WindowKind::kSliding, length, mode, stride};
  }
};

/// Net change produced by one window_advance call. No edge appears in both
/// lists; applying `removes` and `adds` (add = set weight) to the previous
/// window graph yields the current one.
struct WindowDelta {
  std::vector<EdgeEvent> adds;
  std::vector<EdgeEvent> removes;
};

/// Stream window. Remembers the newest ADD per edge; a repeated ADD of a live
/// edge refreshes its position. Explicit REMOVE events drop the edge; a
/// REMOVE of an edge the window never held passes through unchanged, and one
/// for an edge it already evicted is absorbed.
///
/// Sliding windows retain positions at or after a start boundary that moves
/// in multiples of `stride`: in COUNT mode positions are ADD sequence numbers
/// and the window holds at most `length` of them; in TIME mode positions are
/// timestamps and anything with t ≤ now − length (stride 1) is evicted.
class Window {
 public:
  explicit Window(WindowPolicy policy);

  const WindowPolicy& policy() const { return policy_; }

  /// Throws OutOfOrderError if an incoming timestamp precedes one already
  /// seen; the window is left unchanged in that case.
  WindowDelta advance(const std::vector<EdgeEvent>& incoming);

  /// Current window contents as a graph (edges with their latest weights).
  DynGraph contents_graph() const;
  std::size_t live_edge_count() const { return live_.size(); }

 private:
  struct Live {
    Weight w;
    std::uint64_t position;
    VertexId u;
    VertexId v;
  };

  void evict_before(std::uint64_t boundary, Timestamp now,
                    std::vector<EdgeEvent>& evicted);
  std::uint64_t boundary() const;

  WindowPolicy policy_;
  std::map<EdgeKey, Live> live_;
  std::set<std::pair<std::uint64_t, EdgeKey>> by_position_;
  std::set<EdgeKey> evicted_;
  std::uint64_t add_count_ = 0;
  Timestamp now_ = 0;
  bool seen_any_ = false;
};

/// Free-function form of Window::advance.
WindowDelta window_advance(Window& state, const std::vector<EdgeEvent>& incoming);

}  // namespace dyncomm
