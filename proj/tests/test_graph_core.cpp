#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "zagreb/extremal.hpp"
#include "zagreb/tree.hpp"

using namespace zagreb;

TEST_CASE("tree construction enforces tree invariants", "[graph_core]") {
  const std::vector<Edge> loop{{0, 0}, {0, 1}};
  CHECK_THROWS_AS(Tree::from_edges(3, loop), NotATreeError);

  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  try {
    Tree::from_edges(2, dup);
    FAIL("duplicate accepted");
  } catch (const NotATreeError& e) {
    CHECK(e.defect() == TreeDefect::duplicate_edge);
  }

  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 0}};
  try {
    Tree::from_edges(3, cycle);
    FAIL("cycle accepted");
  } catch (const NotATreeError& e) {
    CHECK(e.defect() == TreeDefect::wrong_edge_count);
  }

  const std::vector<Edge> split{{0, 1}, {2, 3}};
  try {
    Tree::from_edges(4, split);
    FAIL("forest accepted");
  } catch (const NotATreeError& e) {
    CHECK(e.defect() == TreeDefect::disconnected);
  }

  CHECK_THROWS_AS(Tree::from_edges(0, {}), DomainError);
  CHECK(Tree::from_edges(1, {}).order() == 1);
}

TEST_CASE("degree_sequence_of", "[graph_core]") {
  CHECK(degree_sequence_of(Tree::path(4)) == DegreeSequence({2, 2, 1, 1}));
  CHECK(degree_sequence_of(Tree::star(5)) == DegreeSequence({4, 1, 1, 1, 1}));

  const auto seq = degree_sequence_of(testing::reattach_example());
  CHECK(std::count(seq.degrees().begin(), seq.degrees().end(), 4) == 1);
  CHECK(seq.max_degree() == 4);
  CHECK(seq == DegreeSequence({4, 2, 2, 2, 1, 1, 1, 1}));
}

TEST_CASE("is_tree_sequence", "[graph_core]") {
  CHECK(is_tree_sequence(std::vector<int>{2, 2, 1, 1}));
  CHECK_FALSE(is_tree_sequence(std::vector<int>{3, 3, 1, 1}));

  const std::vector<int> double_star{5, 5, 1, 1, 1, 1, 1, 1, 1, 1};
  CHECK(is_tree_sequence(double_star));
  // Realized independently: two adjacent centers with four leaves each.
  std::vector<Edge> edges{{0, 1}};
  for (int v = 2; v < 6; ++v) edges.push_back({0, v});
  for (int v = 6; v < 10; ++v) edges.push_back({1, v});
  CHECK(degree_sequence_of(Tree::from_edges(10, edges)) == DegreeSequence(double_star));

  CHECK_THROWS_AS(is_tree_sequence(std::vector<int>{2, 0, 1}), DomainError);
  CHECK_THROWS_AS(is_tree_sequence(std::vector<int>{}), DomainError);
}

TEST_CASE("max_degree_count", "[graph_core]") {
  CHECK(max_degree_count(Tree::path(6)) == MaxDegree{2, 4});
  CHECK(max_degree_count(Tree::star(6)) == MaxDegree{5, 1});
  const std::vector<Edge> double_star{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
  CHECK(max_degree_count(Tree::from_edges(6, double_star)) == MaxDegree{3, 2});
}

TEST_CASE("degree sequence view is consistent", "[graph_core][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const Tree t = random_tree(n, rng);
    const DegreeSequence seq = degree_sequence_of(t);
    REQUIRE(seq.order() == static_cast<std::size_t>(n));
    CHECK(seq.sum() == 2LL * (n - 1));
    CHECK(std::is_sorted(seq.degrees().begin(), seq.degrees().end(), std::greater<>()));

    const auto counts = seq.multiplicities();
    std::size_t total = 0;
    long long weighted = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      total += counts[i];
      weighted += static_cast<long long>(i * counts[i]);
    }
    CHECK(total == seq.order());
    CHECK(weighted == seq.sum());

    // Relabeling leaves the sequence unchanged.
    CHECK(degree_sequence_of(testing::relabel(t, rng)) == seq);
  }
}
