#include <map>

#include "doctest.h"
#include "graphhyp/errors.hpp"
#include "graphhyp/graph.hpp"
#include "support.hpp"

using namespace graphhyp;

TEST_SUITE("graph") {
  TEST_CASE("complete graph sizes and loop numbers") {
    const Graph k3 = complete_graph(3);
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.edge(0) == Edge{0, 0, 1});
    CHECK(k3.edge(1) == Edge{1, 0, 2});
    CHECK(k3.edge(2) == Edge{2, 1, 2});
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(loop_number(k3) == 1);
    CHECK(loop_number(complete_graph(5)) == 6);
    CHECK_THROWS_AS(complete_graph(2), std::invalid_argument);
  }

  TEST_CASE("deletion keeps vertices and labels") {
    const Graph k3 = complete_graph(3);
    const Graph path = delete_edges(k3, EdgeSubset::of({0}));
    CHECK(path.vertex_count() == 3);
    CHECK(path.edge_count() == 2);
    CHECK(path.label_set() == EdgeSubset::of({1, 2}));
    CHECK(loop_number(path) == 0);

    const Graph k4 = complete_graph(4);
    CHECK(delete_edges(k4, EdgeSubset()) == k4);
    // {01, 23} is a perfect matching; what remains is the 4-cycle 0-2-1-3-0.
    const Graph square = delete_edges(k4, EdgeSubset::of({0, 5}));
    CHECK(square.edge_count() == 4);
    CHECK(is_connected(square));
    CHECK(loop_number(square) == 1);
    CHECK(automorphism_order(square) == 8);
  }

  TEST_CASE("contraction") {
    const Graph k3 = complete_graph(3);
    CHECK(contract_edges(k3, EdgeSubset()) == k3);
    const Graph two = contract_edges(k3, EdgeSubset::of({2}));
    CHECK(two.vertex_count() == 2);
    CHECK(two.edge_count() == 2);
    CHECK(two.has_parallel_edges());
    CHECK_FALSE(two.has_loops());

    const Graph one = contract_edges(k3, EdgeSubset::of({0, 1}));
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge(2).is_loop());
    CHECK_THROWS_AS(contract_edges(one, EdgeSubset::of({2})), LoopContractionError);
    CHECK_THROWS_AS(contract_edges(k3, k3.label_set()), LoopContractionError);

    const Graph k4 = complete_graph(4);
    const Graph c = contract_edges(k4, EdgeSubset::of({0}));
    CHECK(c.vertex_count() == 3);
    CHECK(c.edge_count() == 5);
    for (std::uint32_t a = 0; a < 3; ++a) {
      for (std::uint32_t b = a + 1; b < 3; ++b) {
        bool joined = false;
        for (const Edge& e : c.edges()) joined = joined || (std::min(e.u, e.v) == a && std::max(e.u, e.v) == b);
        CHECK(joined);
      }
    }
  }

  TEST_CASE("contracting a forest keeps the loop number") {
    const Graph k5 = complete_graph(5);
    for (std::uint64_t m = 0; m < 1024; ++m) {
      const EdgeSubset s(m);
      if (!is_forest(k5, s)) continue;
      CHECK(loop_number(contract_edges(k5, s)) == loop_number(k5));
    }
  }

  TEST_CASE("connectivity") {
    const Graph k3 = complete_graph(3);
    CHECK(is_connected(k3));
    CHECK_FALSE(is_connected(delete_edges(k3, EdgeSubset::of({0, 1}))));
    CHECK(component_count(delete_edges(k3, k3.label_set())) == 3);
  }

  TEST_CASE("spanning trees") {
    const Graph k3 = complete_graph(3);
    const auto trees = spanning_trees(k3);
    CHECK(trees == std::vector<EdgeSubset>{EdgeSubset::of({0, 1}), EdgeSubset::of({0, 2}), EdgeSubset::of({1, 2})});

    const Graph parallel(2, {Edge{0, 0, 1}, Edge{1, 0, 1}});
    CHECK(spanning_trees(parallel) == std::vector<EdgeSubset>{EdgeSubset::of({0}), EdgeSubset::of({1})});

    for (std::uint32_t n = 3; n <= 6; ++n) {
      const Graph kn = complete_graph(n);
      std::uint64_t cayley = 1;
      for (std::uint32_t i = 0; i + 2 < n; ++i) cayley *= n;
      const std::vector<std::int64_t> ones(kn.edge_count(), 1);
      CHECK(spanning_trees(kn).size() == cayley);
      CHECK(static_cast<std::uint64_t>(oracle::weighted_tree_sum(kn, ones)) == cayley);
    }
    CHECK(spanning_trees(delete_edges(k3, EdgeSubset::of({0, 1}))).empty());
  }

  TEST_CASE("nondegenerate cut subsets agree with exhaustive enumeration") {
    CHECK(nondegenerate_cut_subsets(3) ==
          std::vector<EdgeSubset>{EdgeSubset(), EdgeSubset::of({0}), EdgeSubset::of({1}), EdgeSubset::of({2})});
    for (int n = 3; n <= 5; ++n) {
      CHECK(nondegenerate_cut_subsets(static_cast<std::uint32_t>(n)).size() == oracle::connected_cut_count(n));
    }
    CHECK(nondegenerate_cut_subsets(4).size() == 38);
    CHECK(nondegenerate_cut_subsets(5).size() == 728);
  }

  TEST_CASE("a cut is nondegenerate exactly when its complement contains a spanning tree") {
    const Graph k4 = complete_graph(4);
    const auto trees = spanning_trees(k4);
    const auto nondegenerate = nondegenerate_cut_subsets(4);
    for (std::uint64_t m = 0; m < 64; ++m) {
      const EdgeSubset s(m);
      bool has_tree = false;
      for (EdgeSubset t : trees) has_tree = has_tree || (t & s).empty();
      const bool listed = std::find(nondegenerate.begin(), nondegenerate.end(), s) != nondegenerate.end();
      CHECK(listed == has_tree);
    }
  }

  TEST_CASE("nondegenerate pairs") {
    CHECK(is_nondegenerate_pair(3, EdgeSubset(), EdgeSubset()));
    CHECK_FALSE(is_nondegenerate_pair(3, EdgeSubset(), EdgeSubset::of({0, 1, 2})));
    CHECK_FALSE(is_nondegenerate_pair(4, EdgeSubset::of({0}), EdgeSubset::of({0})));
    CHECK(is_nondegenerate_pair(4, EdgeSubset::of({0}), EdgeSubset::of({1, 2})));
  }

  TEST_CASE("automorphism orders") {
    for (std::uint32_t n = 3; n <= 6; ++n) {
      std::uint64_t fact = 1;
      for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
      CHECK(automorphism_order(complete_graph(n)) == fact);
    }
    CHECK(automorphism_order(delete_edges(complete_graph(3), EdgeSubset::of({0}))) == 2);
  }

  TEST_CASE("canonical keys") {
    const Graph k3 = complete_graph(3);
    const Graph path_a = delete_edges(k3, EdgeSubset::of({0}));
    const Graph path_b = delete_edges(k3, EdgeSubset::of({2}));
    CHECK(canonical_key(path_a) == canonical_key(path_b));
    CHECK(canonical_key(path_a) != canonical_key(k3));

    std::map<CanonicalKey, int> classes;
    for (EdgeSubset s : nondegenerate_cut_subsets(4)) ++classes[canonical_key(delete_edges(complete_graph(4), s))];
    CHECK(classes.size() == 6);
  }

  TEST_CASE("graph text round trip") {
    const Graph g(3, {Edge{4, 0, 1}, Edge{7, 1, 2}, Edge{9, 2, 2}});
    CHECK(parse_graph(format_graph(g)) == g);
    CHECK_THROWS(parse_graph("n 2\n0 0 5\n"));
    CHECK_THROWS(parse_graph("n 2\n0 0 1\n0 1 0\n"));
  }
}
