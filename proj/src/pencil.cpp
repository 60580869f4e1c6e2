#include "graphhyp/pencil.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphhyp {

namespace {

// Polynomial with arbitrary exponents: a monomial is the sorted multiset of
// its variable labels. Only used inside the symbolic determinant, whose
// minors need not be multilinear.
using Monomial = std::vector<std::uint8_t>;
using GeneralPoly = std::map<Monomial, std::int64_t>;

void accumulate(GeneralPoly& acc, const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

GeneralPoly multiply(const GeneralPoly& a, const GeneralPoly& b) {
  GeneralPoly out;
  Monomial merged;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      merged.resize(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), merged.begin());
      accumulate(out, merged, ca * cb);
    }
  }
  return out;
}

}  // namespace

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

const IntMatrix& Pencil::matrix(EdgeLabel e) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == e) return matrices[i];
  }
  throw std::invalid_argument("pencil has no edge " + std::to_string(e));
}

EdgeSubset greedy_spanning_tree(const Graph& g) {
  std::vector<Edge> order = g.edges();
  std::sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) { return a.label < b.label; });
  std::vector<std::uint32_t> comp(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) comp[v] = v;
  std::uint64_t tree = 0;
  for (const Edge& e : order) {
    const std::uint32_t cu = comp[e.u];
    const std::uint32_t cv = comp[e.v];
    if (cu == cv) continue;
    for (auto& c : comp) {
      if (c == cv) c = cu;
    }
    tree |= std::uint64_t{1} << e.label;
  }
  return EdgeSubset(tree);
}

Pencil cycle_pencil(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("cycle_pencil: graph is disconnected");
  const EdgeSubset tree = greedy_spanning_tree(g);

  // Tree adjacency: (neighbour, edge index, +1 when traversed u->v).
  struct Step {
    std::uint32_t to;
    std::size_t edge;
    int sign;
  };
  std::vector<std::vector<Step>> adj(g.vertex_count());
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!tree.contains(edges[i].label)) continue;
    adj[edges[i].u].push_back({edges[i].v, i, +1});
    adj[edges[i].v].push_back({edges[i].u, i, -1});
  }

  // Signed tree path from `from` to `to`, as coefficients per edge index.
  auto tree_path = [&](std::uint32_t from, std::uint32_t to) {
    std::vector<int> coeff(edges.size(), 0);
    std::vector<int> via(g.vertex_count(), -1);
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::uint32_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < adj[x].size(); ++k) {
        const Step& s = adj[x][k];
        if (seen[s.to]) continue;
        seen[s.to] = true;
        via[s.to] = static_cast<int>(x);
        stack.push_back(s.to);
      }
    }
    for (std::uint32_t y = to; y != from;) {
      const std::uint32_t x = static_cast<std::uint32_t>(via[y]);
      for (const Step& s : adj[x]) {
        if (s.to == y) {
          coeff[s.edge] += s.sign;
          break;
        }
      }
      y = x;
    }
    return coeff;
  };

  // One fundamental cycle per non-tree edge, in label order.
  std::vector<Edge> chords;
  for (const Edge& e : edges) {
    if (!tree.contains(e.label)) chords.push_back(e);
  }
  std::sort(chords.begin(), chords.end(), [](const Edge& a, const Edge& b) { return a.label < b.label; });
  std::vector<std::vector<int>> cycles;
  for (const Edge& c : chords) {
    // c runs u -> v; close the cycle along the tree from v back to u.
    std::vector<int> z = tree_path(c.v, c.u);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].label == c.label) z[i] += 1;
    }
    cycles.push_back(std::move(z));
  }

  Pencil p;
  p.side = PencilSide::kCycle;
  p.dim = cycles.size();
  p.ambient = g.label_set();
  p.basis_tree = tree;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    IntMatrix m(p.dim);
    for (std::size_t a = 0; a < p.dim; ++a) {
      for (std::size_t b = 0; b < p.dim; ++b) m(a, b) = cycles[a][i] * cycles[b][i];
    }
    p.labels.push_back(edges[i].label);
    p.matrices.push_back(std::move(m));
  }
  return p;
}

Pencil vertex_pencil(const Graph& g, std::uint32_t ground) {
  if (ground >= g.vertex_count()) throw std::invalid_argument("vertex_pencil: ground vertex out of range");
  if (!is_connected(g)) throw std::invalid_argument("vertex_pencil: graph is disconnected");
  std::vector<int> index(g.vertex_count(), -1);
  int next = 0;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (v != ground) index[v] = next++;
  }
  Pencil p;
  p.side = PencilSide::kVertex;
  p.dim = static_cast<std::size_t>(next);
  p.ambient = g.label_set();
  p.ground = ground;
  for (const Edge& e : g.edges()) {
    // Boundary v - u restricted to the basis vertices.
    std::vector<int> w(p.dim, 0);
    if (index[e.v] >= 0) w[index[e.v]] += 1;
    if (index[e.u] >= 0) w[index[e.u]] -= 1;
    IntMatrix m(p.dim);
    for (std::size_t a = 0; a < p.dim; ++a) {
      for (std::size_t b = 0; b < p.dim; ++b) m(a, b) = w[a] * w[b];
    }
    p.labels.push_back(e.label);
    p.matrices.push_back(std::move(m));
  }
  return p;
}

EdgePoly pencil_det(const Pencil& p) {
  const std::size_t m = p.dim;
  if (m > 20) throw std::invalid_argument("pencil_det: dimension too large");
  // Entry (i, j) as a linear form.
  std::vector<GeneralPoly> entry(m * m);
  for (std::size_t k = 0; k < p.labels.size(); ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        accumulate(entry[i * m + j], Monomial{static_cast<std::uint8_t>(p.labels[k])}, p.matrices[k](i, j));
      }
    }
  }

  // minor[S] = det of rows 0..|S|-1 against the columns in S, expanded along
  // its last row. Filled in order of increasing |S|.
  std::vector<GeneralPoly> minor(std::size_t{1} << m);
  minor[0][Monomial{}] = 1;
  for (std::uint32_t s = 1; s < (1U << m); ++s) {
    const int rows = std::popcount(s);
    const std::size_t row = static_cast<std::size_t>(rows - 1);
    GeneralPoly acc;
    int position = 0;
    for (std::uint32_t c = 0; c < m; ++c) {
      if (!((s >> c) & 1U)) continue;
      const std::uint32_t rest = s & ~(1U << c);
      if (!minor[rest].empty() && !entry[row * m + c].empty()) {
        const int sign = ((position + rows - 1) % 2 == 0) ? 1 : -1;
        for (const auto& [mono, coef] : multiply(entry[row * m + c], minor[rest])) {
          accumulate(acc, mono, sign * coef);
        }
      }
      ++position;
    }
    minor[s] = std::move(acc);
  }

  EdgePoly out(p.ambient);
  for (const auto& [mono, coef] : minor[(std::size_t{1} << m) - 1]) {
    std::uint64_t mask = 0;
    for (std::uint8_t e : mono) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if (mask & bit) throw std::logic_error("pencil_det: determinant is not multilinear");
      mask |= bit;
    }
    out.add_term(EdgeSubset(mask), coef);
  }
  return out;
}

std::size_t pencil_span_rank(const Pencil& p) {
  using boost::multiprecision::cpp_rational;
  const std::size_t m = p.dim;
  const std::size_t cols = m * (m + 1) / 2;
  std::vector<std::vector<cpp_rational>> rows;
  for (const IntMatrix& mat : p.matrices) {
    std::vector<cpp_rational> r;
    r.reserve(cols);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) r.emplace_back(mat(i, j));
    }
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const cpp_rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace graphhyp
