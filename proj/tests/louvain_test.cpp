#include <gtest/gtest.h>

#include <random>

#include "dyncomm/errors.hpp"
#include "dyncomm/louvain.hpp"
#include "test_support.hpp"

using namespace dyncomm;
using namespace dyncomm::testing;

namespace {

std::map<VertexId, CommunityId> toy_final() {
  return {{1, 1}, {2, 1}, {3, 1}, {4, 4}, {5, 4}, {6, 4}, {7, 4}};
}

}  // namespace

TEST(Modularity, ToyNetworkValues) {
  const DynGraph g = toy_graph();
  std::map<VertexId, CommunityId> one;
  for (VertexId v : g.vertices()) one[v] = 0;
  EXPECT_NEAR(modularity(g, one), 0.0, 1e-12);
  EXPECT_NEAR(modularity(g, Partition::singletons(g)), -38.0 / 256.0, 1e-12);
  EXPECT_NEAR(modularity(g, Partition::singletons(g)), -0.1484375, 1e-12);
  EXPECT_NEAR(modularity(g, toy_final()), 0.3671875, 1e-12);
  EXPECT_NEAR(modularity(g, toy_final()), oracle_modularity(g, toy_final()), 1e-12);
}

TEST(Modularity, Errors) {
  DynGraph empty;
  EXPECT_THROW(modularity(empty, Partition::singletons(empty)), UndefinedModularityError);
  DynGraph isolated;
  isolated.add_vertex(1);
  EXPECT_THROW(modularity(isolated, Partition::singletons(isolated)),
               UndefinedModularityError);
  const DynGraph g = toy_graph();
  std::map<VertexId, CommunityId> partial{{1, 1}, {2, 1}};
  EXPECT_THROW(modularity(g, partial), Error);
}

TEST(Modularity, SelfLoops) {
  DynGraph g;
  g.add_edge(1, 1, 2);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 3, 1);
  std::map<VertexId, CommunityId> m{{1, 0}, {2, 0}, {3, 1}};
  EXPECT_NEAR(modularity(g, m), oracle_modularity(g, m), 1e-12);
}

TEST(MoveGain, NoOpAndUnknownCommunity) {
  const DynGraph g = toy_graph();
  const Partition p = Partition::from_mapping(g, toy_final());
  EXPECT_DOUBLE_EQ(move_gain(g, p, 5, p.community_of(5)), 0.0);
  EXPECT_THROW(move_gain(g, p, 5, 12345), UnknownCommunityError);
}

TEST(MoveGain, Reversibility) {
  const DynGraph g = toy_graph();
  Partition p = Partition::from_mapping(g, toy_final());
  const CommunityId a = p.community_of(3);
  const CommunityId b = p.community_of(5);
  const double forward = move_gain(g, p, 3, b);
  p.move(g, 3, b);
  const double back = move_gain(g, p, 3, a);
  EXPECT_NEAR(forward, -back, 1e-12);
}

TEST(OneLevel, ToyNetworkFirstPass) {
  const DynGraph g = toy_graph();
  const OneLevelResult r = one_level(g, Partition::singletons(g));
  EXPECT_TRUE(r.improved);
  EXPECT_EQ(groups_of(r.partition.mapping()),
            (std::set<std::set<VertexId>>{{1, 2, 3}, {4, 5}, {6, 7}}));
}

TEST(OneLevel, FixpointIsUnchanged) {
  const DynGraph g = toy_graph();
  const Partition p = Partition::from_mapping(g, toy_final());
  const OneLevelResult r = one_level(g, p);
  EXPECT_FALSE(r.improved);
  EXPECT_EQ(r.moves, 0u);
  EXPECT_EQ(r.partition.mapping(), p.mapping());
}

TEST(Aggregate, ToyNetworkLevels) {
  const DynGraph g = toy_graph();
  const Partition first = one_level(g, Partition::singletons(g)).partition.canonical(g);
  const Aggregation agg = aggregate(g, first);
  const DynGraph& s = agg.supergraph;
  ASSERT_EQ(s.vertex_count(), 3u);
  // Supervertex ids are canonical community ids: 1 = {1,2,3}, 4 = {4,5}, 6 = {6,7}.
  EXPECT_DOUBLE_EQ(2 * s.self_loop(1), 6.0);
  EXPECT_DOUBLE_EQ(2 * s.self_loop(4), 2.0);
  EXPECT_DOUBLE_EQ(2 * s.self_loop(6), 2.0);
  EXPECT_DOUBLE_EQ(s.weight(1, 4), 1.0);
  EXPECT_DOUBLE_EQ(s.weight(4, 6), 2.0);
  EXPECT_FALSE(s.has_edge(1, 6));
  EXPECT_DOUBLE_EQ(s.total_weight_2m(), g.total_weight_2m());

  const OneLevelResult second = one_level(s, Partition::singletons(s));
  EXPECT_EQ(groups_of(second.partition.mapping()),
            (std::set<std::set<VertexId>>{{1}, {4, 6}}));
  const Aggregation top = aggregate(s, second.partition.canonical(s));
  ASSERT_EQ(top.supergraph.vertex_count(), 2u);
  EXPECT_DOUBLE_EQ(2 * top.supergraph.self_loop(1), 6.0);
  EXPECT_DOUBLE_EQ(2 * top.supergraph.self_loop(4), 8.0);
  EXPECT_DOUBLE_EQ(top.supergraph.weight(1, 4), 1.0);
}

TEST(Aggregate, SingletonsIsIdentity) {
  const DynGraph g = toy_graph();
  EXPECT_EQ(aggregate(g, Partition::singletons(g)).supergraph, g);
}

TEST(LouvainFull, ToyNetwork) {
  const LouvainResult r = louvain_full(toy_graph());
  EXPECT_EQ(r.partition.mapping(), toy_final());
  EXPECT_GE(r.levels.size(), 2u);
}

TEST(LouvainFull, TriangleIsOneCommunity) {
  const DynGraph g = graph_of({{1, 2, 1}, {2, 3, 1}, {1, 3, 1}});
  EXPECT_EQ(louvain_full(g).partition.community_count(), 1u);
}

TEST(LouvainFull, BridgedTrianglesMatchExhaustiveSearch) {
  const DynGraph g = two_triangles(true);
  const auto [best_q, best_map] = oracle_best_partition(g);
  const LouvainResult r = louvain_full(g);
  EXPECT_EQ(groups_of(r.partition.mapping()), groups_of(best_map));
  EXPECT_EQ(groups_of(r.partition.mapping()),
            (std::set<std::set<VertexId>>{{1, 2, 3}, {4, 5, 6}}));
  EXPECT_NEAR(modularity(g, r.partition), best_q, 1e-12);
}

TEST(LouvainFull, EmptyGraphRejected) {
  EXPECT_THROW(louvain_full(DynGraph{}), EmptyInputError);
}

TEST(LouvainFull, EdgelessGraphStaysSingletons) {
  DynGraph g;
  g.add_vertex(3);
  g.add_vertex(9);
  const LouvainResult r = louvain_full(g);
  EXPECT_EQ(r.partition.community_count(), 2u);
}

class LouvainProperty : public ::testing::TestWithParam<int> {};

TEST_P(LouvainProperty, ModularityMatchesMatrixFormula) {
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 10; ++i) {
    const DynGraph g = random_graph(rng, 2 + rng() % 29, 0.2, 3, true);
    if (g.total_weight_2m() == 0) continue;
    const auto m = random_mapping(rng, g, 1 + rng() % 6);
    ASSERT_NEAR(modularity(g, m), oracle_modularity(g, m), 1e-10);
  }
}

TEST_P(LouvainProperty, LabelInvariance) {
  std::mt19937_64 rng(GetParam() + 50);
  const DynGraph g = random_graph(rng, 20, 0.2);
  if (g.total_weight_2m() == 0) GTEST_SKIP();
  const auto m = random_mapping(rng, g, 4);
  std::map<VertexId, CommunityId> relabeled;
  for (const auto& [v, c] : m) relabeled[v] = 1000 - 7 * c;
  EXPECT_EQ(modularity(g, m), modularity(g, relabeled));
}

TEST_P(LouvainProperty, GainMatchesExecutedMove) {
  std::mt19937_64 rng(GetParam() + 100);
  const DynGraph g = random_graph(rng, 25, 0.2, 3, true);
  if (g.total_weight_2m() == 0) GTEST_SKIP();
  Partition p = Partition::from_mapping(g, random_mapping(rng, g, 5));
  const auto vs = g.vertices();
  for (int i = 0; i < 40; ++i) {
    const VertexId v = vs[rng() % vs.size()];
    const auto cs = p.communities();
    const CommunityId target = cs[rng() % cs.size()];
    const double gain = move_gain(g, p, v, target);
    const double before = modularity(g, p);
    p.move(g, v, target);
    ASSERT_NEAR(modularity(g, p) - before, gain, 1e-10);
  }
}

TEST_P(LouvainProperty, AggregationConservesWeightAndModularity) {
  std::mt19937_64 rng(GetParam() + 150);
  const DynGraph g = random_graph(rng, 25, 0.2, 3, true);
  if (g.total_weight_2m() == 0) GTEST_SKIP();
  const Partition p = Partition::from_mapping(g, random_mapping(rng, g, 5));
  const Aggregation agg = aggregate(g, p);
  EXPECT_DOUBLE_EQ(agg.supergraph.total_weight_2m(), g.total_weight_2m());
  EXPECT_NEAR(modularity(agg.supergraph, Partition::singletons(agg.supergraph)),
              modularity(g, p), 1e-12);
}

TEST_P(LouvainProperty, OptimizationIsMonotone) {
  std::mt19937_64 rng(GetParam() + 200);
  const DynGraph g = random_graph(rng, 30, 0.15);
  if (g.total_weight_2m() == 0) GTEST_SKIP();
  const LouvainResult r = louvain_full(g);
  double previous = modularity(g, Partition::singletons(g));
  for (const LouvainLevel& level : r.levels) {
    const double q = modularity(level.graph, level.partition);
    EXPECT_GE(q, previous - 1e-12);
    previous = q;
  }
  EXPECT_NEAR(modularity(g, r.partition), previous, 1e-10);
  // The final partition admits no improving single-vertex move at the top.
  const OneLevelResult again = one_level(g, r.partition);
  EXPECT_GE(modularity(g, again.partition), modularity(g, r.partition) - 1e-12);
}

TEST_P(LouvainProperty, SmallGraphsNearExhaustiveOptimum) {
  std::mt19937_64 rng(GetParam() + 250);
  const DynGraph g = random_graph(rng, 7, 0.4);
  if (g.total_weight_2m() == 0) GTEST_SKIP();
  const double best = oracle_best_partition(g).first;
  const double got = modularity(g, louvain_full(g).partition);
  EXPECT_LE(got, best + 1e-12);
  EXPECT_GE(got, 0.8 * best - 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, LouvainProperty, ::testing::Range(0, 10));
