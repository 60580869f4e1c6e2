#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphhyp/edge_poly.hpp"
#include "graphhyp/graph.hpp"

namespace graphhyp {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0) {}

  std::size_t dim() const { return dim_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  bool is_symmetric() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> data_;
};

enum class PencilSide {
  kCycle,   // quadratic forms (e^v)^2 restricted to H_1
  kVertex,  // (e^v)^2 on the dual of the image of the boundary map
};

/// Per-edge symmetric matrices; det(sum A_e M_e) is the polynomial of the
/// pencil.
struct Pencil {
  PencilSide side = PencilSide::kCycle;
  std::size_t dim = 0;
  EdgeSubset ambient;
  std::vector<EdgeLabel> labels;     // parallel to matrices
  std::vector<IntMatrix> matrices;
  /// Cycle side: the spanning tree whose fundamental cycles form the basis.
  EdgeSubset basis_tree;
  /// Vertex side: the vertex left out of the basis.
  std::optional<std::uint32_t> ground;

  const IntMatrix& matrix(EdgeLabel e) const;
};

/// Lowest-label greedy spanning tree (Kruskal in label order).
EdgeSubset greedy_spanning_tree(const Graph& g);

/// Quadratic forms of the edges on H_1(g) in the basis of fundamental cycles
/// of greedy_spanning_tree(g). Throws std::invalid_argument if g is
/// disconnected.
Pencil cycle_pencil(const Graph& g);

/// Reduced weighted-Laplacian decomposition: basis vertices are all vertices
/// other than `ground`, in increasing order. Edge (i, j) contributes
/// +1 at (i,i), (j,j) and -1 at (i,j), (j,i); an edge to the ground vertex a
/// single +1; a tadpole the zero matrix.
Pencil vertex_pencil(const Graph& g, std::uint32_t ground);

/// Exact determinant of sum_e A_e M_e, expanded. Throws std::logic_error if
/// the expansion is not multilinear.
EdgePoly pencil_det(const Pencil& p);

/// Rank over Q of the span of the pencil's matrices.
std::size_t pencil_span_rank(const Pencil& p);

}  // namespace graphhyp
