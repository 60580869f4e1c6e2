#include <random>

#include "doctest.h"
#include "graphhyp/edge_poly.hpp"
#include "graphhyp/pencil.hpp"
#include "graphhyp/verify.hpp"
#include "support.hpp"

using namespace graphhyp;

namespace {

EdgePoly poly(EdgeSubset ambient, std::initializer_list<std::initializer_list<EdgeLabel>> monomials) {
  EdgePoly p(ambient);
  for (auto m : monomials) p.add_term(EdgeSubset::of(m), 1);
  return p;
}

IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(rows.size());
  std::size_t i = 0;
  for (auto row : rows) {
    std::size_t j = 0;
    for (std::int64_t v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_SUITE("symanzik") {
  TEST_CASE("triangle polynomials") {
    const Graph k3 = complete_graph(3);
    CHECK(psi(k3) == poly(k3.label_set(), {{0}, {1}, {2}}));
    CHECK(psi(k3).to_string() == "A0+A1+A2");
    CHECK(psi_dual(k3) == poly(k3.label_set(), {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(psi_dual(k3).to_string() == "A0A1+A0A2+A1A2");

    const Graph path = delete_edges(k3, EdgeSubset::of({0}));
    CHECK(psi(path).to_string() == "1");
    CHECK(psi_dual(path) == poly(path.label_set(), {{1, 2}}));

    const Graph lonely = delete_edges(k3, EdgeSubset::of({0, 1}));
    CHECK(psi(lonely).is_zero());
    CHECK(psi(lonely).to_string() == "0");

    const Graph edge(2, {Edge{5, 0, 1}});
    CHECK(psi_dual(edge).to_string() == "A5");
  }

  TEST_CASE("restriction and derivative") {
    const Graph k3 = complete_graph(3);
    CHECK(restrict_zero(psi_dual(k3), 0) == poly(EdgeSubset::of({1, 2}), {{1, 2}}));
    CHECK(partial_derivative(psi(k3), 0).to_string() == "1");
    const EdgePoly d = psi_dual(complete_graph(4));
    for (EdgeLabel a = 0; a < 6; ++a) {
      for (EdgeLabel b = 0; b < 6; ++b) {
        if (a == b) continue;
        CHECK(partial_derivative(restrict_zero(d, a), b) == restrict_zero(partial_derivative(d, b), a));
      }
    }
  }

  TEST_CASE("vertex pencil of the triangle") {
    const Pencil p = vertex_pencil(complete_graph(3), 2);
    REQUIRE(p.dim == 2);
    CHECK(p.matrix(0) == mat({{1, -1}, {-1, 1}}));
    CHECK(p.matrix(1) == mat({{1, 0}, {0, 0}}));
    CHECK(p.matrix(2) == mat({{0, 0}, {0, 1}}));
    CHECK(pencil_det(p) == psi_dual(complete_graph(3)));
  }

  TEST_CASE("cycle pencil of the triangle and of a tree") {
    const Pencil p = cycle_pencil(complete_graph(3));
    REQUIRE(p.dim == 1);
    for (EdgeLabel e = 0; e < 3; ++e) CHECK(p.matrix(e) == mat({{1}}));
    CHECK(pencil_det(p) == psi(complete_graph(3)));

    const Graph path = delete_edges(complete_graph(3), EdgeSubset::of({0}));
    const Pencil tree = cycle_pencil(path);
    CHECK(tree.dim == 0);
    CHECK(pencil_det(tree).to_string() == "1");
  }

  TEST_CASE("tadpoles have a zero vertex matrix") {
    const Graph g = with_extra_edge(complete_graph(3), 1, 1);
    const Pencil p = vertex_pencil(g, 2);
    CHECK(p.matrix(3) == mat({{0, 0}, {0, 0}}));
  }

  TEST_CASE("pencil determinants equal tree sums") {
    for (const Graph& g : oracle::connected_multigraphs(5, 10)) {
      if (g.edge_count() == 0) continue;
      CHECK(pencil_det(cycle_pencil(g)) == psi(g));
      for (std::uint32_t v = 0; v < g.vertex_count(); ++v) CHECK(pencil_det(vertex_pencil(g, v)) == psi_dual(g));
    }
  }

  TEST_CASE("dual polynomial matches the weighted Laplacian determinant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> weight(-9, 9);
    for (const Graph& g : oracle::connected_multigraphs(5, 8)) {
      std::vector<std::int64_t> w(64, 0);
      for (int trial = 0; trial < 3; ++trial) {
        for (auto& x : w) x = weight(rng);
        CHECK(oracle::evaluate(psi_dual(g), w) == oracle::weighted_tree_sum(g, w));
      }
    }
  }

  TEST_CASE("monomial complement") {
    CHECK(cremona_check(complete_graph(3)));
    CHECK(cremona_check(delete_edges(complete_graph(3), EdgeSubset::of({0}))));
    for (const Graph& g : oracle::connected_multigraphs(6, 9)) CHECK(cremona_check(g));
  }

  TEST_CASE("deletion and contraction, including degenerate edges") {
    for (const Graph& g : oracle::connected_multigraphs(5, 8)) {
      const EdgePoly p = psi(g);
      const EdgePoly d = psi_dual(g);
      for (EdgeLabel e : g.label_set().labels()) {
        const EdgeSubset one = EdgeSubset::of({e});
        const Graph deleted = delete_edges(g, one);
        CHECK(psi(deleted) == partial_derivative(p, e));
        CHECK(psi_dual(deleted) == restrict_zero(d, e));
        if (g.edge(e).is_loop()) {
          CHECK(partial_derivative(d, e).is_zero());
          continue;
        }
        const Graph contracted = contract_edges(g, one);
        CHECK(psi(contracted) == restrict_zero(p, e));
        CHECK(psi_dual(contracted) == partial_derivative(d, e));
      }
    }
  }

  TEST_CASE("iterated restriction") {
    for (std::uint32_t n = 3; n <= 5; ++n) {
      const Graph kn = complete_graph(n);
      const EdgePoly d = psi_dual(kn);
      for (std::uint64_t m = 0; m <= kn.label_set().mask(); ++m) {
        const EdgeSubset s(m);
        const Graph cut = delete_edges(kn, s);
        if (is_connected(cut)) {
          CHECK(psi_dual(cut) == restrict_zero(d, s));
        } else {
          CHECK(restrict_zero(d, s).is_zero());
        }
      }
    }
  }

  TEST_CASE("duplicate edges act by substitution on the dual polynomial") {
    for (std::uint32_t n = 3; n <= 5; ++n) {
      const Graph kn = complete_graph(n);
      for (const Edge& e0 : kn.edges()) {
        const Graph g = with_extra_edge(kn, e0.u, e0.v);
        const EdgeLabel eps = static_cast<EdgeLabel>(kn.edge_count());
        CHECK(psi_dual(g) == substitute_sum(psi_dual(kn), e0.label, eps));
      }
    }
  }

  TEST_CASE("vertex matrices of K_n span all symmetric matrices") {
    for (std::uint32_t n = 3; n <= 6; ++n) {
      const Pencil p = vertex_pencil(complete_graph(n), n - 1);
      CHECK(pencil_span_rank(p) == n * (n - 1) / 2);
    }
  }

  TEST_CASE("substitution and complement edge cases") {
    const EdgePoly c = EdgePoly::constant(EdgeSubset::of({0, 1}), 3);
    CHECK(c.to_string() == "3");
    CHECK(complement_monomials(EdgePoly::monomial(EdgeSubset::of({0, 1}), EdgeSubset::of({0}))).to_string() == "A1");
    EdgePoly two(EdgeSubset::of({0, 1}));
    two.add_term(EdgeSubset::of({0}), 2);
    CHECK(two.to_string() == "2*A0");
    CHECK_THROWS(two.add_term(EdgeSubset::of({4}), 1));
  }
}
