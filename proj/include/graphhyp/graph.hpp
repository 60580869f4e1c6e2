#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace graphhyp {

/// Edge labels double as polynomial variable indices, so they are bounded by
/// the width of an EdgeSubset mask.
using EdgeLabel = std::uint32_t;
inline constexpr EdgeLabel kMaxEdgeLabels = 64;

/// A set of edge labels. Labels are stable under deletion and contraction,
/// so one subset can be interpreted in a graph and in every graph derived
/// from it.
class EdgeSubset {
 public:
  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t mask) : mask_(mask) {}

  static EdgeSubset of(std::initializer_list<EdgeLabel> labels);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const;
  constexpr bool contains(EdgeLabel e) const { return (mask_ >> e) & 1U; }
  constexpr bool is_subset_of(EdgeSubset other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  std::vector<EdgeLabel> labels() const;

  constexpr EdgeSubset operator|(EdgeSubset o) const { return EdgeSubset(mask_ | o.mask_); }
  constexpr EdgeSubset operator&(EdgeSubset o) const { return EdgeSubset(mask_ & o.mask_); }
  constexpr EdgeSubset minus(EdgeSubset o) const { return EdgeSubset(mask_ & ~o.mask_); }

  friend constexpr bool operator==(EdgeSubset, EdgeSubset) = default;
  friend constexpr auto operator<=>(EdgeSubset a, EdgeSubset b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint64_t mask_ = 0;
};

struct Edge {
  EdgeLabel label = 0;
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled multigraph. Loops (tadpoles) and parallel edges are allowed.
/// Edge order is the construction order and is preserved by deletion and
/// contraction.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on duplicate labels, labels >= 64 or
  /// endpoints out of range.
  Graph(std::uint32_t vertex_count, std::vector<Edge> edges);

  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  EdgeSubset label_set() const { return labels_; }
  bool has_label(EdgeLabel e) const { return labels_.contains(e); }
  const Edge& edge(EdgeLabel e) const;

  bool has_loops() const;
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  EdgeSubset labels_;
};

/// K_n with edges e_ij (i < j) labelled 0,1,... in lexicographic order of
/// (i, j), oriented i -> j.
Graph complete_graph(std::uint32_t n);

/// Removes the edges in s; every vertex is kept.
Graph delete_edges(const Graph& g, EdgeSubset s);

/// Collapses the edges in s. Throws LoopContractionError if s contains a
/// cycle of g. Each merged vertex class takes the position of its smallest
/// original vertex, so the result does not depend on the processing order.
Graph contract_edges(const Graph& g, EdgeSubset s);

std::uint32_t component_count(const Graph& g);
bool is_connected(const Graph& g);
/// First Betti number |E| - |V| + #components.
std::uint32_t loop_number(const Graph& g);

/// True iff the edges of s (all present in g) contain no cycle. A loop is a
/// cycle.
bool is_forest(const Graph& g, EdgeSubset s);

std::vector<EdgeSubset> spanning_trees(const Graph& g);

/// Edge subsets S of K_n (including the empty set) with K_n - S connected on
/// all n vertices.
std::vector<EdgeSubset> nondegenerate_cut_subsets(std::uint32_t n);

/// e nondegenerate in K_n, e and f disjoint, f a forest.
bool is_nondegenerate_pair(std::uint32_t n, EdgeSubset e, EdgeSubset f);

inline constexpr std::uint32_t kMaxBruteForceVertices = 8;

/// Number of vertex permutations mapping the edge set onto itself. Simple
/// graphs with at most 8 vertices only.
std::uint64_t automorphism_order(const Graph& g);

/// Isomorphism invariant for simple graphs: the minimum upper-triangle
/// adjacency word over all vertex relabelings.
struct CanonicalKey {
  std::uint32_t vertex_count = 0;
  std::uint64_t adjacency = 0;

  std::string to_string() const;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const Graph& g);

/// Text format: first line `n <vertex_count>`, then one `<label> <u> <v>`
/// line per edge with 0-based vertices.
std::string format_graph(const Graph& g);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

}  // namespace graphhyp

template <>
struct std::hash<graphhyp::CanonicalKey> {
  std::size_t operator()(const graphhyp::CanonicalKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.adjacency * 31 + k.vertex_count);
  }
};
