#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "selflink/random.hpp"
#include "selflink/spanning_trees.hpp"

using namespace selflink;

namespace {

std::vector<Edge> edges_of(const SpanningTree& t) { return {t.edges().begin(), t.edges().end()}; }

SpanningTree tree(unsigned n, std::vector<Edge> edges) { return SpanningTree::from_edges(CompleteGraph(n), std::move(edges)); }

}  // namespace

TEST(EnumerateTrees, SmallCases) {
  ASSERT_EQ(enumerate_trees(1).size(), 1u);
  EXPECT_TRUE(enumerate_trees(1)[0].edges().empty());
  ASSERT_EQ(enumerate_trees(2).size(), 1u);
  EXPECT_EQ(edges_of(enumerate_trees(2)[0]), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(enumerate_trees(4).size(), 16u);
}

TEST(EnumerateTrees, K3InPrueferOrder) {
  auto trees = enumerate_trees(3);
  ASSERT_EQ(trees.size(), 3u);
  EXPECT_EQ(edges_of(trees[0]), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(edges_of(trees[1]), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(edges_of(trees[2]), (std::vector<Edge>{{0, 2}, {1, 2}}));
}

TEST(EnumerateTrees, Bounds) {
  EXPECT_THROW(enumerate_trees(0), PreconditionError);
  EXPECT_THROW(enumerate_trees(10), PreconditionError);
}

// Same set as brute force over all (n-1)-edge subsets, each exactly once.
TEST(EnumerateTrees, MatchesSubsetOracle) {
  for (unsigned n = 1; n <= 6; ++n) {
    std::set<std::vector<Edge>> from_pruefer;
    for (const auto& t : enumerate_trees(n)) {
      EXPECT_TRUE(oracle::spans_as_tree(n, edges_of(t)));
      EXPECT_TRUE(from_pruefer.insert(edges_of(t)).second) << "duplicate " << t.to_string();
    }
    auto brute = oracle::trees_by_subsets(n);
    EXPECT_EQ(from_pruefer, std::set<std::vector<Edge>>(brute.begin(), brute.end()));
    EXPECT_EQ(from_pruefer.size(), cayley_count(n));
  }
}

TEST(EnumerateTrees, PermutationMapsTheSetToItself) {
  Rng rng(8);
  for (unsigned n = 2; n <= 7; ++n) {
    auto trees = enumerate_trees(n);
    std::set<SpanningTree> all(trees.begin(), trees.end());
    auto sigma = random_permutation(rng, n);
    std::set<SpanningTree> image;
    for (const auto& t : trees) image.insert(permute(t, sigma));
    EXPECT_EQ(image, all);
  }
}

TEST(TreesThroughEdge, Counts) {
  EXPECT_EQ(trees_through_edge(2, Edge{0, 1}).size(), 1u);
  for (const Edge& e : CompleteGraph(3).edges()) EXPECT_EQ(trees_through_edge(3, e).size(), 2u);
  for (const Edge& e : CompleteGraph(4).edges()) EXPECT_EQ(trees_through_edge(4, e).size(), 8u);
  for (unsigned n = 3; n <= 7; ++n) {
    EXPECT_EQ(trees_through_edge(n, Edge{0, n - 1}).size(), 2 * cayley_count(n) / n);
  }
  EXPECT_THROW(trees_through_edge(3, Edge{0, 3}), PreconditionError);
}

TEST(TreesThroughEdge, PreservesEnumerationOrder) {
  auto all = enumerate_trees(5);
  auto through = trees_through_edge(5, Edge{1, 3});
  std::vector<SpanningTree> filtered;
  for (const auto& t : all)
    if (t.contains(Edge{1, 3})) filtered.push_back(t);
  EXPECT_EQ(through, filtered);
}

TEST(Valence, Examples) {
  SpanningTree star = tree(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(valence(star, 0), 3u);
  EXPECT_EQ(valence(star, 2), 1u);
  SpanningTree path = tree(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(valence(path, 1), 2u);
  EXPECT_EQ(valence(path, 0), 1u);
  EXPECT_THROW(valence(path, 3), PreconditionError);
  for (unsigned n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      unsigned sum = 0;
      for (Vertex v = 0; v < n; ++v) sum += valence(t, v);
      EXPECT_EQ(sum, 2 * (n - 1));
    }
  }
}

TEST(SpanningTree, ValidationRejectsNonTrees) {
  EXPECT_THROW(tree(4, {{0, 1}, {1, 2}, {0, 2}}), PreconditionError);
  EXPECT_THROW(tree(4, {{0, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(tree(3, {{0, 1}, {1, 3}}), PreconditionError);
}

TEST(ContractTree, Examples) {
  ContractionMap c2(2, Edge{0, 1});
  EXPECT_TRUE(contract_tree(c2, tree(2, {{0, 1}})).edges().empty());

  ContractionMap c3(3, Edge{0, 1});
  EXPECT_EQ(edges_of(contract_tree(c3, tree(3, {{0, 1}, {1, 2}}))), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(edges_of(contract_tree(c3, tree(3, {{0, 1}, {0, 2}}))), (std::vector<Edge>{{0, 1}}));
  EXPECT_THROW(contract_tree(c3, tree(3, {{0, 2}, {1, 2}})), PreconditionError);
}

TEST(TreeFiber, Examples) {
  ContractionMap c3(3, Edge{0, 1});
  auto fiber = tree_fiber(c3, tree(2, {{0, 1}}));
  ASSERT_EQ(fiber.size(), 2u);
  std::set<std::vector<Edge>> got{edges_of(fiber[0]), edges_of(fiber[1])};
  EXPECT_EQ(got, (std::set<std::vector<Edge>>{{{0, 1}, {0, 2}}, {{0, 1}, {1, 2}}}));

  // K_5 -> K_4 contracting {1,4}: special vertex 1.
  ContractionMap c5(5, Edge{1, 4});
  EXPECT_EQ(tree_fiber(c5, tree(4, {{0, 1}, {1, 2}, {1, 3}})).size(), 8u);  // star at s_e
  EXPECT_EQ(tree_fiber(c5, tree(4, {{0, 1}, {0, 2}, {0, 3}})).size(), 2u);  // s_e is a leaf
  EXPECT_THROW(tree_fiber(c5, tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})), PreconditionError);
}

// Fibers over T_n partition T_{n+1}^{e0}; sizes are 2^valence; round trip.
TEST(TreeFiber, PartitionExhaustive) {
  for (unsigned n1 = 2; n1 <= 6; ++n1) {
    for (const Edge& e0 : CompleteGraph(n1).edges()) {
      ContractionMap c(n1, e0);
      std::set<SpanningTree> covered;
      std::uint64_t total = 0;
      for (const auto& t : enumerate_trees(n1 - 1)) {
        auto fiber = tree_fiber(c, t);
        EXPECT_EQ(fiber.size(), std::uint64_t{1} << valence(t, c.special_vertex()));
        total += fiber.size();
        for (const auto& up : fiber) {
          EXPECT_TRUE(up.contains(e0));
          EXPECT_EQ(contract_tree(c, up), t);
          EXPECT_TRUE(covered.insert(up).second) << "fibers overlap";
        }
      }
      auto through = trees_through_edge(n1, e0);
      EXPECT_EQ(covered, std::set<SpanningTree>(through.begin(), through.end()));
      EXPECT_EQ(total, n1 == 2 ? 1u : 2 * cayley_count(n1) / n1);
    }
  }
}
