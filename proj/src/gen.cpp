#include "dyncomm/gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "dyncomm/errors.hpp"

namespace dyncomm {

void GenConfig::validate() const {
  if (n_vertices < 4) throw ConfigError("n_vertices must be at least 4");
  if (!(degree_exponent > 1)) throw ConfigError("degree exponent must exceed 1");
  if (!(size_exponent > 1)) throw ConfigError("size exponent must exceed 1");
  if (!(p_in > 0 && p_in <= 1)) throw ConfigError("p_in must lie in (0, 1]");
  if (!(p_out >= 0 && p_out < 1)) throw ConfigError("p_out must lie in [0, 1)");
  if (!(p_out < p_in)) throw ConfigError("p_out must be smaller than p_in");
  if (decay_ttl == 0) throw ConfigError("decay ttl must be positive");
  if (!(event_probability >= 0 && event_probability <= 1))
    throw ConfigError("event probability must lie in [0, 1]");
  if (iterations == 0) throw ConfigError("iterations must be positive");
}

std::uint64_t GenRng::below(std::uint64_t n) {
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

PowerLawSampler::PowerLawSampler(double exponent, std::uint64_t lo,
                                 std::uint64_t hi)
    : lo_(lo) {
  double acc = 0;
  for (std::uint64_t k = lo; k <= hi; ++k) {
    acc += std::pow(static_cast<double>(k), -exponent);
    cdf_.push_back(acc);
  }
}

std::uint64_t PowerLawSampler::operator()(GenRng& rng) const {
  const double target = rng.uniform() * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
  if (it == cdf_.end()) --it;
  return lo_ + static_cast<std::uint64_t>(it - cdf_.begin());
}

PlantedCommunities::PlantedCommunities(std::vector<std::vector<VertexId>> groups)
    : groups_(std::move(groups)) {
  for (auto& g : groups_) std::sort(g.begin(), g.end());
}

Mapping PlantedCommunities::mapping() const {
  Mapping m;
  for (const auto& g : groups_)
    for (VertexId v : g) m[v] = g.front();
  return m;
}

bool plant_event(PlantedCommunities& state, PlantKind kind, GenRng& rng,
                 std::string* notice) {
  auto& groups = state.mutable_groups();
  if (kind == PlantKind::kMerge) {
    if (groups.size() < 2) {
      if (notice) *notice = "merge skipped: fewer than two communities";
      return false;
    }
    const std::size_t a = rng.below(groups.size());
    std::size_t b = rng.below(groups.size() - 1);
    if (b >= a) ++b;
    auto& keep = groups[std::min(a, b)];
    auto& gone = groups[std::max(a, b)];
    keep.insert(keep.end(), gone.begin(), gone.end());
    std::sort(keep.begin(), keep.end());
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(std::max(a, b)));
    return true;
  }

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < groups.size(); ++i)
    if (groups[i].size() >= 4) candidates.push_back(i);
  if (candidates.empty()) {
    if (notice) *notice = "split skipped: no community with at least 4 members";
    return false;
  }
  const std::size_t pick = candidates[rng.below(candidates.size())];
  std::vector<VertexId> members = groups[pick];
  rng.shuffle(members);
  const std::size_t half = members.size() / 2;
  std::vector<VertexId> first(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<VertexId> second(members.begin() + static_cast<std::ptrdiff_t>(half), members.end());
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  groups[pick] = std::move(first);
  groups.push_back(std::move(second));
  return true;
}

namespace {

std::vector<std::vector<VertexId>> plant_initial_groups(const GenConfig& cfg,
                                                        GenRng& rng) {
  const std::size_t n = cfg.n_vertices;
  const auto k_max = std::max<std::uint64_t>(
      2, static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))));
  const PowerLawSampler size_of(cfg.size_exponent, 2, k_max);

  std::vector<std::size_t> sizes;
  std::size_t used = 0;
  while (true) {
    const std::size_t s = size_of(rng);
    if (used + s > n) break;
    sizes.push_back(s);
    used += s;
  }
  // Leftover vertices join the largest community.
  *std::max_element(sizes.begin(), sizes.end()) += n - used;

  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);

  std::vector<std::vector<VertexId>> groups;
  std::size_t next = 0;
  for (std::size_t s : sizes) {
    groups.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(next),
                        order.begin() + static_cast<std::ptrdiff_t>(next + s));
    next += s;
  }
  return groups;
}

class DegreeWeightedPicker {
 public:
  explicit DegreeWeightedPicker(const std::vector<std::uint64_t>& degrees) {
    double acc = 0;
    for (auto d : degrees) {
      acc += static_cast<double>(d);
      cdf_.push_back(acc);
    }
  }
  VertexId operator()(GenRng& rng) const {
    const double target = rng.uniform() * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
    if (it == cdf_.end()) --it;
    return static_cast<VertexId>(it - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
};

}  // namespace

GroundTruthTimeline generate(const GenConfig& cfg) {
  cfg.validate();
  GenRng rng(cfg.seed);
  GroundTruthTimeline out;

  const std::size_t n = cfg.n_vertices;
  const auto k_max = std::max<std::uint64_t>(
      2, static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))));
  const PowerLawSampler degree_of(cfg.degree_exponent, 2, k_max);
  out.target_degrees.resize(n);
  for (auto& k : out.target_degrees) k = degree_of(rng);

  PlantedCommunities planted(plant_initial_groups(cfg, rng));
  const DegreeWeightedPicker outside_partner(out.target_degrees);
  const double intra_share = cfg.p_in / (cfg.p_in + cfg.p_out);
  constexpr int kMaxOutsideTries = 64;

  std::map<EdgeKey, Timestamp> live;  // edge → iteration of last interaction
  for (Timestamp t = 0; t < cfg.iterations; ++t) {
    // Decay first: anything not re-issued within the ttl disappears.
    if (t >= cfg.decay_ttl) {
      for (auto it = live.begin(); it != live.end();) {
        if (it->second <= t - cfg.decay_ttl) {
          out.events.push_back(EdgeEvent::remove(it->first.first, it->first.second, t));
          it = live.erase(it);
        } else {
          ++it;
        }
      }
    }

    const auto& groups = planted.groups();
    std::vector<std::size_t> group_of(n);
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (VertexId v : groups[g]) group_of[v] = g;

    std::set<EdgeKey> issued;
    for (VertexId v = 0; v < n; ++v) {
      const auto& own = groups[group_of[v]];
      for (std::uint64_t attempt = 0; attempt < out.target_degrees[v]; ++attempt) {
        VertexId partner = v;
        if (rng.bernoulli(intra_share)) {
          if (own.size() < 2) continue;
          // Uniform over the other members: skip v's own slot.
          const auto self = static_cast<std::size_t>(
              std::lower_bound(own.begin(), own.end(), v) - own.begin());
          std::size_t idx = rng.below(own.size() - 1);
          if (idx >= self) ++idx;
          partner = own[idx];
        } else {
          for (int tries = 0; tries < kMaxOutsideTries; ++tries) {
            const VertexId cand = outside_partner(rng);
            if (group_of[cand] != group_of[v]) {
              partner = cand;
              break;
            }
          }
          if (partner == v) continue;
        }
        const EdgeKey key = edge_key(v, partner);
        live[key] = t;
        if (issued.insert(key).second)
          out.events.push_back(EdgeEvent::add(key.first, key.second, 1.0, t));
      }
    }

    bool stable = true;
    for (const auto& g : groups) {
      if (g.size() < 2) continue;
      std::size_t internal = 0;
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
          if (live.contains(edge_key(g[i], g[j]))) ++internal;
      const double pairs = static_cast<double>(g.size() * (g.size() - 1)) / 2;
      if (static_cast<double>(internal) / pairs < cfg.p_in / 2) {
        stable = false;
        break;
      }
    }
    if (!stable) continue;

    out.stable_points.push_back({t, planted.mapping()});
    if (rng.bernoulli(cfg.event_probability)) {
      const PlantKind kind = rng.bernoulli(0.5) ? PlantKind::kMerge : PlantKind::kSplit;
      std::string notice;
      if (!plant_event(planted, kind, rng, &notice))
        out.notices.push_back("iteration " + std::to_string(t) + ": " + notice);
    }
  }
  return out;
}

}  // namespace dyncomm
