// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Criteria are checked at their stated tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "dyncomm/densopt.hpp"
#include "dyncomm/dynlouvain.hpp"
#include "dyncomm/gen.hpp"
#include "dyncomm/louvain.hpp"
#include "dyncomm/metrics.hpp"
#include "dyncomm/runner.hpp"
#include "dyncomm/stream_io.hpp"
#include "dyncomm/temporal.hpp"
#include "test_support.hpp"

using namespace dyncomm;
using namespace dyncomm::testing;

namespace {

using Groups = std::set<std::set<VertexId>>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first broken expectation; later checks keep running so the
// detail line describes the earliest failure.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.detail = what;
    }
  }
  void note(const std::string& detail) {
    if (out_.pass) out_.detail = detail;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Outcome toy_louvain_golden() {
  Checker c;
  const auto started = Clock::now();
  const DynGraph g = toy_graph();
  const OneLevelResult first = one_level(g, Partition::singletons(g));
  c.expect(groups_of(first.partition.mapping()) == Groups{{1, 2, 3}, {4, 5}, {6, 7}},
           "first local-moving pass");
  const Aggregation lvl1 = aggregate(g, first.partition.canonical(g));
  const DynGraph& s1 = lvl1.supergraph;
  c.expect(s1.vertex_count() == 3 && 2 * s1.self_loop(1) == 6 && 2 * s1.self_loop(4) == 2 &&
               2 * s1.self_loop(6) == 2,
           "first aggregation loops");
  c.expect(s1.weight(1, 4) == 1 && s1.weight(4, 6) == 2 && !s1.has_edge(1, 6),
           "first aggregation edges");
  const OneLevelResult second = one_level(s1, Partition::singletons(s1));
  const Aggregation lvl2 = aggregate(s1, second.partition.canonical(s1));
  const DynGraph& s2 = lvl2.supergraph;
  c.expect(s2.vertex_count() == 2 && 2 * s2.self_loop(1) == 6 && 2 * s2.self_loop(4) == 8 &&
               s2.weight(1, 4) == 1,
           "second aggregation");
  const LouvainResult full = louvain_full(g);
  c.expect(groups_of(full.partition.mapping()) == Groups{{1, 2, 3}, {4, 5, 6, 7}},
           "final partition");
  const double secs = std::chrono::duration<double>(Clock::now() - started).count();
  c.expect(secs < 1.0, fmt("runtime %.3fs", secs));
  c.note(fmt("exact match, %.2f ms", secs * 1e3));
  return c.result();
}

Outcome toy_dynamic_golden() {
  Checker c;
  const std::map<VertexId, CommunityId> two{{1, 1}, {2, 1}, {3, 1}, {4, 4},
                                            {5, 4}, {6, 4}, {7, 4}};
  DynamicLouvain s = DynamicLouvain::from_partition(toy_graph(), two);
  // The affected set must be exactly the union of the endpoint communities.
  const AffectedSet a = s.affected_by_addition(1, 4);
  c.expect(a.vertices == std::set<VertexId>{1, 2, 3, 4, 5, 6, 7}, "affected vertices");
  DynamicLouvain probe = s;
  probe.disband(a);
  c.expect(probe.ll_partition().community_count() == 7, "disband leaves singletons");

  s.step(EdgeEvent::add(1, 4));
  c.expect(s.community_mapping() == two, "converged partition");
  const DynGraph& ul = s.ul_graph();
  const CommunityId x = s.ll_partition().community_of(1);
  const CommunityId y = s.ll_partition().community_of(4);
  c.expect(ul.vertex_count() == 2 && 2 * ul.self_loop(x) == 6 && 2 * ul.self_loop(y) == 8,
           "upper-level loops");
  c.expect(ul.weight(x, y) == 2, "upper-level inter-edge weight");
  c.note("exact match");
  return c.result();
}

Outcome modularity_oracle() {
  Checker c;
  std::mt19937_64 rng(31);
  double worst_q = 0, worst_gain = 0;
  for (int i = 0; i < 100; ++i) {
    const DynGraph g = random_graph(rng, 2 + rng() % 29, 0.05 + (rng() % 40) / 100.0, 3, i % 2);
    if (g.total_weight_2m() == 0) {
      --i;
      continue;
    }
    const auto m = random_mapping(rng, g, 1 + rng() % 6);
    Partition p = Partition::from_mapping(g, m);
    worst_q = std::max(worst_q, std::abs(modularity(g, p) - oracle_modularity(g, m)));
    const auto vs = g.vertices();
    for (int k = 0; k < 10; ++k) {
      const VertexId v = vs[rng() % vs.size()];
      const auto cs = p.communities();
      const CommunityId target = cs[rng() % cs.size()];
      const double gain = move_gain(g, p, v, target);
      const double before = modularity(g, p);
      p.move(g, v, target);
      worst_gain = std::max(worst_gain, std::abs(modularity(g, p) - before - gain));
    }
  }
  c.expect(worst_q <= 1e-10, fmt("modularity error %.3g", worst_q));
  c.expect(worst_gain <= 1e-10, fmt("move_gain error %.3g", worst_gain));
  c.note(fmt("100 graphs, max |dQ| %.2g, max |dgain| %.2g", worst_q, worst_gain));
  return c.result();
}

Outcome two_level_coherence() {
  Checker c;
  std::size_t steps = 0;
  for (int seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng(seed);
    DynamicLouvain s;
    for (const EdgeEvent& e : random_stream(rng, 30, 500)) {
      s.step(e);
      ++steps;
      c.expect(s.ul_graph() == aggregate(s.ll_graph(), s.ll_partition()).supergraph,
               "seed " + std::to_string(seed) + " step " + std::to_string(steps));
    }
  }
  c.note(std::to_string(steps) + " steps over 10 streams of 500 events");
  return c.result();
}

Outcome dynamic_vs_static() {
  Checker c;
  std::size_t violations = 0, bad_streams = 0, steps = 0;
  double worst = 1;
  for (int seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed + 5000);
    DynamicLouvain s;
    bool stream_ok = true;
    for (const EdgeEvent& e : random_stream(rng, 30, 60, 0.0)) {
      s.step(e);
      ++steps;
      const double fresh = modularity(s.ll_graph(), louvain_full(s.ll_graph()).partition);
      if (fresh <= 0) continue;
      const double ratio = s.quality() / fresh;
      worst = std::min(worst, ratio);
      if (s.quality() < 0.95 * fresh) {
        ++violations;
        stream_ok = false;
      }
    }
    bad_streams += !stream_ok;
  }
  c.expect(violations == 0, fmt("%.0f/%.0f steps below 0.95 x static in %.0f/50 streams",
                                violations, steps, bad_streams) +
                                fmt(", worst ratio %.3f", worst));
  c.note(fmt("%.0f steps, worst ratio %.3f", steps, worst));
  return c.result();
}

double mean_stability(AlgorithmKind kind, const std::vector<EdgeEvent>& events) {
  auto algo = make_algorithm(kind);
  Mapping prev;
  double sum = 0;
  for (const EdgeEvent& e : events) {
    algo->apply(e);
    Mapping next = algo->mapping();
    sum += stability(prev, next);
    prev = std::move(next);
  }
  return events.empty() ? 0 : sum / static_cast<double>(events.size());
}

Outcome stability_dominance() {
  Checker c;
  double dyn_total = 0, static_total = 0;
  int worse = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.n_vertices = 200;
    const auto events = generate(cfg).events;
    const double dyn = mean_stability(AlgorithmKind::kDynLouvain, events);
    const double stat = mean_stability(AlgorithmKind::kStaticRerun, events);
    dyn_total += dyn;
    static_total += stat;
    worse += dyn > stat;
  }
  const std::string summary = fmt("mean changed fraction dynamic %.4f vs static %.4f",
                                  dyn_total / 10, static_total / 10);
  c.expect(worse == 0, summary + ", dynamic higher on " + std::to_string(worse) + "/10 streams");
  c.note(summary);
  return c.result();
}

Outcome window_equivalence() {
  Checker c;
  const std::vector<std::pair<std::string, WindowPolicy>> policies{
      {"landmark", WindowPolicy::landmark()},
      {"sliding-count", WindowPolicy::sliding(20, WindowMode::kCount)},
      {"sliding-time", WindowPolicy::sliding(6, WindowMode::kTime)},
      {"overlapping-count", WindowPolicy::sliding(20, WindowMode::kCount, 5)},
      {"overlapping-time", WindowPolicy::sliding(6, WindowMode::kTime, 3)},
  };
  std::size_t checks = 0;
  for (const auto& [name, policy] : policies) {
    for (int seed = 0; seed < 3; ++seed) {
      std::mt19937_64 rng(seed + 77);
      const auto events = random_stream(rng, 25, 1000, 0.25);
      Window w(policy);
      DynGraph incremental;
      std::vector<EdgeEvent> history;
      for (const EdgeEvent& e : events) {
        history.push_back(e);
        const WindowDelta d = w.advance({e});
        for (const EdgeEvent& r : d.removes) incremental.remove_edge(r.u, r.v);
        for (const EdgeEvent& a : d.adds) incremental.add_edge(a.u, a.v, a.w);
        const auto got = edge_set(incremental);
        c.expect(got == edge_set(w.contents_graph()) && got == window_oracle(policy, history),
                 name + " seed " + std::to_string(seed) + " step " +
                     std::to_string(history.size()));
        ++checks;
      }
    }
  }
  c.note(std::to_string(checks) + " steps over landmark, sliding and overlapping windows");
  return c.result();
}

Outcome density_optimization() {
  Checker c;
  std::mt19937_64 rng(404);
  std::size_t splits = 0;
  for (int i = 0; i < 200; ++i) {
    const DynGraph g = random_graph(rng, 5 + rng() % 25, 0.05 + (rng() % 30) / 100.0);
    const auto m = random_mapping(rng, g, 1 + rng() % 5);
    const DensityResult once = optimize_density(g, Partition::from_mapping(g, m));
    splits += once.report.splits.size();
    c.expect(once.report.adc_after >= once.report.adc_before,
             "pair " + std::to_string(i) +
                 fmt(": adc %.4f -> %.4f", once.report.adc_before, once.report.adc_after));
    const DensityResult twice = optimize_density(g, once.partition);
    c.expect(twice.partition.mapping() == once.partition.mapping(),
             "pair " + std::to_string(i) + " not idempotent");
  }
  const DynGraph tri = two_triangles(false);
  std::map<VertexId, CommunityId> merged;
  for (VertexId v : tri.vertices()) merged[v] = 1;
  const DensityResult r = optimize_density(tri, Partition::from_mapping(tri, merged));
  c.expect(r.partition.community_count() == 2 && r.report.adc_after == 1.0,
           "disjoint triangles not split to ADC 1");
  c.note("200 pairs, " + std::to_string(splits) + " splits; triangles reach ADC 1");
  return c.result();
}

bool path_matches_enumeration(const std::vector<std::set<EdgeKey>>& layers, std::size_t n) {
  SnapshotSequence s;
  for (VertexId v = 0; v < n; ++v) s.vertices.insert(v);
  for (std::size_t i = 0; i < layers.size(); ++i)
    s.snapshots.push_back({i + 1, {layers[i].begin(), layers[i].end()}});
  const Timestamp end = layers.size();
  const TimeOrderedGraph tog = expand_time_ordered(s, 0, end);
  for (VertexId src = 0; src < n; ++src) {
    for (VertexId dst = 0; dst < n; ++dst) {
      const auto expect = enumerate_arrival(layers, src, dst, n);
      const auto path = temporal_shortest_path(tog, src, dst, 0, end);
      if (path.has_value() != expect.has_value()) return false;
      if (!path) continue;
      if (path->front() != TemporalVertex{src, 0} || path->back().vertex != dst ||
          path->back().t != *expect)
        return false;
      for (std::size_t i = 1; i < path->size(); ++i)
        if (!tog.has_edge((*path)[i - 1], (*path)[i])) return false;
    }
  }
  return true;
}

Outcome temporal_path() {
  Checker c;
  constexpr VertexId A = 0, B = 1, C = 2, D = 3;
  SnapshotSequence s;
  s.snapshots = {{1, {edge_key(A, C)}}, {2, {edge_key(A, D)}}, {3, {edge_key(D, B)}}};
  s.vertices = {A, B, C, D};
  const auto path = temporal_shortest_path(expand_time_ordered(s, 0, 3), A, B, 0, 3);
  c.expect(path == TemporalPath{{A, 0}, {A, 1}, {D, 2}, {B, 3}}, "example path");

  // Every instance where the snapshot space is small enough to enumerate,
  // then random instances over the whole 5-vertex, 5-step range.
  std::size_t instances = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto pairs = all_pairs(n);
    for (std::size_t steps = 1; steps <= 5; ++steps) {
      const std::size_t bits = pairs.size() * steps;
      if (bits > 12) continue;
      for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        std::vector<std::set<EdgeKey>> layers(steps);
        for (std::size_t b = 0; b < bits; ++b)
          if (mask >> b & 1) layers[b / pairs.size()].insert(pairs[b % pairs.size()]);
        c.expect(path_matches_enumeration(layers, n),
                 fmt("mismatch at n=%.0f steps=%.0f", n, steps));
        ++instances;
      }
    }
  }
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t steps = 1 + rng() % 5;
    const double density = (rng() % 100) / 100.0;
    std::vector<std::set<EdgeKey>> layers(steps);
    for (auto& layer : layers)
      for (const EdgeKey& p : all_pairs(n))
        if ((rng() % 1000) / 1000.0 < density) layer.insert(p);
    c.expect(path_matches_enumeration(layers, n),
             fmt("random mismatch at n=%.0f steps=%.0f", n, steps));
    ++instances;
  }
  c.note("example path exact; " + std::to_string(instances) + " instances agree");
  return c.result();
}

std::string serialized(const GroundTruthTimeline& tl) {
  std::ostringstream out;
  write_stream(out, tl.events);
  write_ground_truth(out, tl.stable_points);
  return out.str();
}

Outcome generator() {
  Checker c;
  GenConfig base;
  base.n_vertices = 200;
  base.p_in = 0.8;
  base.p_out = 0.05;
  c.expect(serialized(generate(base)) == serialized(generate(base)), "same seed differs");

  double min_q = 1, min_nmi = 1;
  std::size_t points = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GenConfig cfg = base;
    cfg.seed = seed;
    const GroundTruthTimeline tl = generate(cfg);
    std::map<Timestamp, const StablePoint*> stable;
    for (const StablePoint& sp : tl.stable_points) stable[sp.iteration] = &sp;
    c.expect(!stable.empty(), "seed " + std::to_string(seed) + " has no stable point");
    DynamicLouvain s;
    for (std::size_t i = 0; i < tl.events.size(); ++i) {
      const EdgeEvent& e = tl.events[i];
      s.step(e);
      const bool iteration_done = i + 1 == tl.events.size() || tl.events[i + 1].t != e.t;
      const auto it = stable.find(e.t);
      if (!iteration_done || it == stable.end()) continue;
      const Mapping& truth = it->second->partition;
      const double q = modularity(s.ll_graph(), Partition::from_mapping(s.ll_graph(), [&] {
                                    // Vertices the planted partition does not cover stay alone.
                                    Mapping full = truth;
                                    for (VertexId v : s.ll_graph().vertices()) full.try_emplace(v, v);
                                    return full;
                                  }()));
      const Mapping found = s.community_mapping();
      Mapping found_on_truth, truth_on_found;
      for (const auto& [v, cid] : truth) {
        const auto f = found.find(v);
        if (f == found.end()) continue;
        found_on_truth[v] = f->second;
        truth_on_found[v] = cid;
      }
      const double nmi = partition_similarity(truth_on_found, found_on_truth);
      min_q = std::min(min_q, q);
      min_nmi = std::min(min_nmi, nmi);
      ++points;
      c.expect(q > 0.3, "seed " + std::to_string(seed) + fmt(" planted Q %.3f", q));
      c.expect(nmi > 0.5, "seed " + std::to_string(seed) + fmt(" similarity %.3f", nmi));
    }
  }
  c.note("byte-identical rerun; " + std::to_string(points) + " stable points" +
         fmt(", min planted Q %.3f, min similarity %.3f", min_q, min_nmi));
  return c.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"static Louvain on the toy network", toy_louvain_golden},
      {"incremental step on the toy network", toy_dynamic_golden},
      {"modularity and move gain vs direct formula", modularity_oracle},
      {"two-level coherence", two_level_coherence},
      {"dynamic vs static quality", dynamic_vs_static},
      {"stability dominance", stability_dominance},
      {"window equivalence", window_equivalence},
      {"density optimization", density_optimization},
      {"temporal shortest path", temporal_path},
      {"generator", generator},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto started = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - started).count();
    failures += !o.pass;
    std::printf("%s  %2zu  %-44s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
