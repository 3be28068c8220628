#pragma once

#include <chrono>
#include <map>

#include "dyncomm/graph.hpp"
#include "dyncomm/partition.hpp"

namespace dyncomm {

using Mapping = std::map<VertexId, CommunityId>;

/// Fraction of vertices whose canonical community differs between two
/// mappings. Vertices present in only one mapping count as changed; the
/// denominator is the union of both vertex sets. Two empty mappings give 0.
double stability(const Mapping& prev, const Mapping& next);

/// Normalized mutual information with arithmetic-mean normalization,
/// 2·I(X;Y) / (H(X) + H(Y)). Two single-community partitions score 1.
/// Throws InvalidArgumentError unless both cover the same vertices.
double partition_similarity(const Mapping& a, const Mapping& b);

/// Accumulates processing time across separately timed sections.
class Stopwatch {
 public:
  using clock = std::chrono::steady_clock;

  void start() { started_ = clock::now(); running_ = true; }
  void stop() {
    if (!running_) return;
    total_ += clock::now() - started_;
    running_ = false;
  }
  void add(clock::duration d) { total_ += d; }

  clock::duration elapsed() const { return total_; }
  double seconds() const {
    return std::chrono::duration<double>(total_).count();
  }

 private:
  clock::time_point started_{};
  clock::duration total_{0};
  bool running_ = false;
};

}  // namespace dyncomm
