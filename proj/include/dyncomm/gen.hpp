#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dyncomm/metrics.hpp"
#include "dyncomm/temporal.hpp"

namespace dyncomm {

/// Parameters of the synthetic dynamic benchmark.
///
/// Each iteration every vertex v makes target_degree(v) interaction attempts.
/// An attempt stays inside v's planted community with probability
/// p_in / (p_in + p_out), otherwise it picks an outside partner with
/// probability proportional to target degree. Interactions live for
/// `decay_ttl` iterations unless re-issued.
struct GenConfig {
  std::size_t n_vertices = 200;
  double degree_exponent = 2.5;
  double size_exponent = 2.0;
  double p_in = 0.8;
  double p_out = 0.05;
  std::uint32_t decay_ttl = 3;
  double event_probability = 0.2;
  std::uint32_t iterations = 12;
  std::uint64_t seed = 0;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

/// Portable deterministic random source (the std distributions are not
/// specified bit-for-bit across standard libraries).
class GenRng {
 public:
  explicit GenRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double p) { return uniform() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Discrete power law P(k) ∝ k^-exponent on [lo, hi], sampled by inverse CDF.
class PowerLawSampler {
 public:
  PowerLawSampler(double exponent, std::uint64_t lo, std::uint64_t hi);
  std::uint64_t operator()(GenRng& rng) const;

 private:
  std::uint64_t lo_;
  std::vector<double> cdf_;
};

/// Ground-truth groups, each kept sorted.
class PlantedCommunities {
 public:
  PlantedCommunities() = default;
  explicit PlantedCommunities(std::vector<std::vector<VertexId>> groups);

  const std::vector<std::vector<VertexId>>& groups() const { return groups_; }
  /// Canonical mapping (id = smallest member).
  Mapping mapping() const;

  std::vector<std::vector<VertexId>>& mutable_groups() { return groups_; }

 private:
  std::vector<std::vector<VertexId>> groups_;
};

enum class PlantKind { kMerge, kSplit };

/// MERGE unions two uniformly chosen groups; SPLIT cuts a uniformly chosen
/// group of size ≥ 4 into two random halves. Returns false and leaves the
/// state untouched when the precondition fails, describing why in `notice`.
bool plant_event(PlantedCommunities& state, PlantKind kind, GenRng& rng,
                 std::string* notice = nullptr);

struct StablePoint {
  Timestamp iteration = 0;
  Mapping partition;
};

struct GroundTruthTimeline {
  std::vector<EdgeEvent> events;
  std::vector<StablePoint> stable_points;
  std::vector<std::uint64_t> target_degrees;
  /// Skipped merge/split attempts.
  std::vector<std::string> notices;
};

/// Runs the generator. Deterministic for a fixed config. An iteration is
/// stable when every planted group of size ≥ 2 has live internal density of
/// at least p_in / 2; the planted partition is recorded there and a merge or
/// split is planted with probability event_probability.
GroundTruthTimeline generate(const GenConfig& cfg);

}  // namespace dyncomm
