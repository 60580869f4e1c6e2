#pragma once

// Independent oracles for the test suites. Nothing here calls the library's
// counting, polynomial or isomorphism code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "graphhyp/edge_poly.hpp"
#include "graphhyp/graph.hpp"

namespace oracle {

using graphhyp::Edge;
using graphhyp::EdgePoly;
using graphhyp::EdgeSubset;
using graphhyp::Graph;

inline bool connected_after_removal(std::uint32_t n, const std::vector<std::pair<int, int>>& edges,
                                    std::uint64_t removed) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = static_cast<int>(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((removed >> i) & 1U) continue;
    const int a = find(edges[i].first);
    const int b = find(edges[i].second);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

/// Edges of K_n in lexicographic order, independent of complete_graph.
inline std::vector<std::pair<int, int>> complete_edges(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

/// Number of edge subsets of K_n whose removal leaves a connected graph.
inline std::size_t connected_cut_count(int n) {
  const auto edges = complete_edges(n);
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << edges.size()); ++m) {
    if (connected_after_removal(static_cast<std::uint32_t>(n), edges, m)) ++count;
  }
  return count;
}

/// Exact integer determinant by fraction-free (Bareiss) elimination.
inline __int128 bareiss_det(std::vector<std::vector<__int128>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  __int128 sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Weighted reduced Laplacian determinant (ground = last vertex); loops are
/// ignored. By the matrix-tree theorem this is the weighted tree sum.
inline __int128 weighted_tree_sum(const Graph& g, const std::vector<std::int64_t>& weight_by_label) {
  const std::uint32_t n = g.vertex_count();
  std::vector<std::vector<__int128>> lap(n, std::vector<__int128>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    const __int128 w = weight_by_label[e.label];
    lap[e.u][e.u] += w;
    lap[e.v][e.v] += w;
    lap[e.u][e.v] -= w;
    lap[e.v][e.u] -= w;
  }
  std::vector<std::vector<__int128>> reduced(n - 1, std::vector<__int128>(n - 1));
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    for (std::uint32_t j = 0; j + 1 < n; ++j) reduced[i][j] = lap[i][j];
  }
  return bareiss_det(reduced);
}

/// Integer evaluation of an EdgePoly.
inline __int128 evaluate(const EdgePoly& p, const std::vector<std::int64_t>& weight_by_label) {
  __int128 total = 0;
  for (const auto& [mask, c] : p.terms()) {
    __int128 term = c;
    for (std::uint32_t e = 0; e < 64; ++e) {
      if ((mask >> e) & 1U) term *= weight_by_label[e];
    }
    total += term;
  }
  return total;
}

/// Evaluation mod a prime.
inline std::uint64_t evaluate_mod(const EdgePoly& p, const std::vector<std::uint64_t>& x_by_label, std::uint64_t prime) {
  std::uint64_t total = 0;
  for (const auto& [mask, c] : p.terms()) {
    std::uint64_t term = static_cast<std::uint64_t>(((c % static_cast<std::int64_t>(prime)) + prime) % prime);
    for (std::uint32_t e = 0; e < 64; ++e) {
      if ((mask >> e) & 1U) term = term * x_by_label[e] % prime;
    }
    total = (total + term) % prime;
  }
  return total;
}

/// Projective points of p = 0 over a prime field, by normalising the first
/// nonzero coordinate to 1.
inline std::uint64_t projective_count_mod(const EdgePoly& p, std::uint64_t prime) {
  const auto labels = p.ambient().labels();
  const std::size_t n = labels.size();
  std::vector<std::uint64_t> x(64, 0);
  std::uint64_t hits = 0;
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<std::uint64_t> rest(n - lead - 1, 0);
    while (true) {
      std::fill(x.begin(), x.end(), 0);
      x[labels[lead]] = 1;
      for (std::size_t i = 0; i < rest.size(); ++i) x[labels[lead + 1 + i]] = rest[i];
      if (evaluate_mod(p, x, prime) == 0) ++hits;
      std::size_t k = 0;
      while (k < rest.size() && ++rest[k] == prime) rest[k++] = 0;
      if (k == rest.size()) break;
    }
  }
  return hits;
}

/// Projective points of p = 0 with every coordinate nonzero, over a prime field.
inline std::uint64_t torus_count_mod(const EdgePoly& p, std::uint64_t prime) {
  const auto labels = p.ambient().labels();
  if (labels.empty()) return 0;
  std::vector<std::uint64_t> x(64, 0);
  std::vector<std::uint64_t> rest(labels.size() - 1, 1);
  std::uint64_t hits = 0;
  while (true) {
    x[labels[0]] = 1;
    for (std::size_t i = 0; i < rest.size(); ++i) x[labels[i + 1]] = rest[i];
    if (evaluate_mod(p, x, prime) == 0) ++hits;
    std::size_t k = 0;
    while (k < rest.size() && ++rest[k] == prime) rest[k++] = 1;
    if (k == rest.size()) break;
  }
  return hits;
}

/// Rank of a matrix over F_p.
inline int rank_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t prime) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  auto inv = [&](std::uint64_t v) {
    std::uint64_t r = 1;
    std::uint64_t e = prime - 2;
    while (e) {
      if (e & 1U) r = r * v % prime;
      v = v * v % prime;
      e >>= 1U;
    }
    return r;
  };
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
    const std::uint64_t iv = inv(a[static_cast<std::size_t>(rank)][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c] * iv % prime;
      for (std::size_t k = 0; k < cols; ++k) {
        a[r][k] = (a[r][k] + prime * prime - f * a[static_cast<std::size_t>(rank)][k]) % prime;
      }
    }
    ++rank;
  }
  return rank;
}

/// Projectivised symmetric n x n matrices of rank exactly r over F_p.
inline std::uint64_t symmetric_rank_count(int n, int r, std::uint64_t prime) {
  const int slots = n * (n + 1) / 2;
  std::vector<std::uint64_t> v(static_cast<std::size_t>(slots), 0);
  std::uint64_t hits = 0;
  while (true) {
    std::vector<std::vector<std::uint64_t>> m(static_cast<std::size_t>(n), std::vector<std::uint64_t>(n));
    int k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        m[i][j] = m[j][i] = v[static_cast<std::size_t>(k++)];
      }
    }
    if (rank_mod(m, prime) == r) ++hits;
    std::size_t idx = 0;
    while (idx < v.size() && ++v[idx] == prime) v[idx++] = 0;
    if (idx == v.size()) break;
  }
  return hits / (prime - 1);
}

/// Number of a-dimensional subspaces of F_p^b, counted as a x b matrices in
/// reduced row echelon form of rank a.
inline std::uint64_t subspace_count(int a, int b, std::uint64_t prime) {
  if (a == 0) return 1;
  const std::size_t cells = static_cast<std::size_t>(a * b);
  std::vector<std::uint64_t> v(cells, 0);
  std::uint64_t hits = 0;
  while (true) {
    bool rref = true;
    int last_pivot = -1;
    for (int r = 0; r < a && rref; ++r) {
      int pivot = -1;
      for (int c = 0; c < b; ++c) {
        if (v[static_cast<std::size_t>(r * b + c)] != 0) {
          pivot = c;
          break;
        }
      }
      if (pivot < 0 || pivot <= last_pivot || v[static_cast<std::size_t>(r * b + pivot)] != 1) {
        rref = false;
        break;
      }
      for (int other = 0; other < a; ++other) {
        if (other != r && v[static_cast<std::size_t>(other * b + pivot)] != 0) rref = false;
      }
      last_pivot = pivot;
    }
    if (rref) ++hits;
    std::size_t idx = 0;
    while (idx < cells && ++v[idx] == prime) v[idx++] = 0;
    if (idx == cells) break;
  }
  return hits;
}

/// Smallest adjacency matrix over relabellings that list vertices by
/// decreasing degree.
inline std::vector<std::uint8_t> min_adjacency(int n, const std::set<std::pair<int, int>>& edges) {
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  do {
    // perm[old] = new; require degree non-increasing in the new order.
    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inverse[perm[v]] = v;
    bool sorted = true;
    for (int i = 1; i < n && sorted; ++i) sorted = degree[inverse[i - 1]] >= degree[inverse[i]];
    if (!sorted) continue;
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n * n), 0);
    for (auto [a, b] : edges) {
      adj[static_cast<std::size_t>(perm[a] * n + perm[b])] = adj[static_cast<std::size_t>(perm[b] * n + perm[a])] = 1;
    }
    if (best.empty() || adj < best) best = adj;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Connected simple graphs with at most max_vertices vertices and between
/// min_edges and max_edges edges, one labelled representative per
/// isomorphism class. Grown edge by edge from a single vertex: every
/// connected graph with an edge has a leaf or an edge on a cycle, so it
/// arises from a smaller connected graph.
inline std::vector<Graph> connected_simple_graphs(int max_vertices, int min_edges, int max_edges) {
  using Shape = std::pair<int, std::set<std::pair<int, int>>>;
  std::vector<Shape> level = {{1, {}}};
  std::vector<Graph> out;
  for (int k = 0; k <= max_edges; ++k) {
    for (const auto& [n, edges] : level) {
      if (k < min_edges) continue;
      std::vector<Edge> es;
      std::uint32_t label = 0;
      for (auto [a, b] : edges) es.push_back(Edge{label++, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
      out.emplace_back(static_cast<std::uint32_t>(n), std::move(es));
    }
    if (k == max_edges) break;
    std::set<std::pair<int, std::vector<std::uint8_t>>> seen;
    std::vector<Shape> next;
    auto offer = [&](int n, std::set<std::pair<int, int>> edges) {
      if (seen.insert({n, min_adjacency(n, edges)}).second) next.emplace_back(n, std::move(edges));
    };
    for (const auto& [n, edges] : level) {
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (edges.contains({a, b})) continue;
          auto grown = edges;
          grown.insert({a, b});
          offer(n, std::move(grown));
        }
        if (n < max_vertices) {
          auto grown = edges;
          grown.insert({a, n});
          offer(n + 1, std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

/// The simple graphs above plus, for each with fewer than max_edges edges,
/// one copy with a duplicated first edge and one with a tadpole at vertex 0.
inline std::vector<Graph> connected_multigraphs(int max_vertices, int max_edges) {
  std::vector<Graph> out = connected_simple_graphs(max_vertices, 1, max_edges);
  const std::size_t simple = out.size();
  for (std::size_t i = 0; i < simple; ++i) {
    const Graph g = out[i];
    if (static_cast<int>(g.edge_count()) >= max_edges) continue;
    const auto label = static_cast<std::uint32_t>(g.edge_count());
    std::vector<Edge> dup = g.edges();
    dup.push_back(Edge{label, g.edges()[0].u, g.edges()[0].v});
    out.emplace_back(g.vertex_count(), std::move(dup));
    std::vector<Edge> tad = g.edges();
    tad.push_back(Edge{label, 0, 0});
    out.emplace_back(g.vertex_count(), std::move(tad));
  }
  return out;
}

}  // namespace oracle
