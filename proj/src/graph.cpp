#include "graphhyp/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "graphhyp/errors.hpp"

namespace graphhyp {

namespace {

// Union-find over a handful of vertices.
class DisjointSets {
 public:
  explicit DisjointSets(std::uint32_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0U);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if a and b were already joined.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // the smaller vertex stays the root
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void require_subset(const Graph& g, EdgeSubset s, const char* what) {
  if (!s.is_subset_of(g.label_set())) {
    throw std::invalid_argument(std::string(what) + ": edge subset contains labels not in the graph");
  }
}

void require_small_simple(const Graph& g, const char* what) {
  if (g.vertex_count() > kMaxBruteForceVertices) {
    throw SizeGuardError(std::string(what) + ": more than 8 vertices");
  }
  if (!g.is_simple()) {
    throw std::invalid_argument(std::string(what) + ": graph must be simple");
  }
}

std::vector<std::uint32_t> adjacency_rows(const Graph& g) {
  std::vector<std::uint32_t> rows(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= 1U << e.v;
    rows[e.v] |= 1U << e.u;
  }
  return rows;
}

}  // namespace

EdgeSubset EdgeSubset::of(std::initializer_list<EdgeLabel> labels) {
  std::uint64_t m = 0;
  for (EdgeLabel e : labels) {
    if (e >= kMaxEdgeLabels) throw std::invalid_argument("edge label out of range");
    m |= std::uint64_t{1} << e;
  }
  return EdgeSubset(m);
}

int EdgeSubset::size() const { return std::popcount(mask_); }

std::vector<EdgeLabel> EdgeSubset::labels() const {
  std::vector<EdgeLabel> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<EdgeLabel>(std::countr_zero(m)));
  }
  return out;
}

Graph::Graph(std::uint32_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::uint64_t seen = 0;
  for (const Edge& e : edges_) {
    if (e.label >= kMaxEdgeLabels) {
      throw std::invalid_argument("edge label " + std::to_string(e.label) + " exceeds 63");
    }
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw std::invalid_argument("edge " + std::to_string(e.label) + " has an endpoint out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << e.label;
    if (seen & bit) {
      throw std::invalid_argument("duplicate edge label " + std::to_string(e.label));
    }
    seen |= bit;
  }
  labels_ = EdgeSubset(seen);
}

const Edge& Graph::edge(EdgeLabel e) const {
  for (const Edge& x : edges_) {
    if (x.label == e) return x;
  }
  throw std::invalid_argument("no edge with label " + std::to_string(e));
}

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Graph::has_parallel_edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ends;
  for (const Edge& e : edges_) ends.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) != ends.end();
}

Graph complete_graph(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("complete_graph: n must be at least 3");
  if (n * (n - 1) / 2 > kMaxEdgeLabels) throw SizeGuardError("complete_graph: too many edges");
  std::vector<Edge> edges;
  EdgeLabel label = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) edges.push_back({label++, i, j});
  }
  return Graph(n, std::move(edges));
}

Graph delete_edges(const Graph& g, EdgeSubset s) {
  require_subset(g, s, "delete_edges");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!s.contains(e.label)) kept.push_back(e);
  }
  return Graph(g.vertex_count(), std::move(kept));
}

Graph contract_edges(const Graph& g, EdgeSubset s) {
  require_subset(g, s, "contract_edges");
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (s.contains(e.label) && !sets.unite(e.u, e.v)) {
      throw LoopContractionError("contract_edges: edge " + std::to_string(e.label) +
                                 " is a loop at the time it is contracted");
    }
  }
  // Roots are class minima; renumber them in increasing order.
  std::vector<std::uint32_t> new_index(g.vertex_count(), 0);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (sets.find(v) == v) new_index[v] = next++;
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.label)) continue;
    kept.push_back({e.label, new_index[sets.find(e.u)], new_index[sets.find(e.v)]});
  }
  return Graph(next, std::move(kept));
}

std::uint32_t component_count(const Graph& g) {
  DisjointSets sets(g.vertex_count());
  std::uint32_t components = g.vertex_count();
  for (const Edge& e : g.edges()) {
    if (sets.unite(e.u, e.v)) --components;
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

std::uint32_t loop_number(const Graph& g) {
  return static_cast<std::uint32_t>(g.edge_count()) + component_count(g) - g.vertex_count();
}

bool is_forest(const Graph& g, EdgeSubset s) {
  require_subset(g, s, "is_forest");
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (s.contains(e.label) && !sets.unite(e.u, e.v)) return false;
  }
  return true;
}

std::vector<EdgeSubset> spanning_trees(const Graph& g) {
  std::vector<EdgeSubset> trees;
  if (g.vertex_count() == 0 || !is_connected(g)) return trees;
  std::vector<Edge> usable;
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) usable.push_back(e);
  }
  const std::uint32_t need = g.vertex_count() - 1;

  // Depth-first over usable edges, keeping a partial forest.
  std::vector<std::uint32_t> comp(g.vertex_count());
  std::iota(comp.begin(), comp.end(), 0U);
  std::uint64_t chosen = 0;
  auto recurse = [&](auto&& self, std::size_t idx, std::uint32_t taken) -> void {
    if (taken == need) {
      trees.emplace_back(chosen);
      return;
    }
    if (usable.size() - idx < need - taken) return;
    const Edge& e = usable[idx];
    const std::uint32_t cu = comp[e.u];
    const std::uint32_t cv = comp[e.v];
    if (cu != cv) {
      std::vector<std::uint32_t> saved = comp;
      for (auto& c : comp) {
        if (c == cv) c = cu;
      }
      chosen |= std::uint64_t{1} << e.label;
      self(self, idx + 1, taken + 1);
      chosen &= ~(std::uint64_t{1} << e.label);
      comp = std::move(saved);
    }
    self(self, idx + 1, taken);
  };
  recurse(recurse, 0, 0);
  std::sort(trees.begin(), trees.end());
  return trees;
}

std::vector<EdgeSubset> nondegenerate_cut_subsets(std::uint32_t n) {
  const Graph kn = complete_graph(n);
  const std::size_t m = kn.edge_count();
  if (m > 21) throw SizeGuardError("nondegenerate_cut_subsets: n > 7");
  std::vector<EdgeSubset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    DisjointSets sets(n);
    std::uint32_t components = n;
    for (const Edge& e : kn.edges()) {
      if (!((mask >> e.label) & 1U) && sets.unite(e.u, e.v)) --components;
    }
    if (components == 1) out.emplace_back(mask);
  }
  return out;
}

bool is_nondegenerate_pair(std::uint32_t n, EdgeSubset e, EdgeSubset f) {
  const Graph kn = complete_graph(n);
  require_subset(kn, e, "is_nondegenerate_pair");
  require_subset(kn, f, "is_nondegenerate_pair");
  if (!(e & f).empty()) return false;
  if (!is_connected(delete_edges(kn, e))) return false;
  return is_forest(kn, f);
}

std::uint64_t automorphism_order(const Graph& g) {
  require_small_simple(g, "automorphism_order");
  const std::uint32_t n = g.vertex_count();
  const auto rows = adjacency_rows(g);
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!((rows[perm[e.u]] >> perm[e.v]) & 1U)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::string CanonicalKey::to_string() const {
  std::ostringstream os;
  os << vertex_count << ':' << std::hex << adjacency;
  return os.str();
}

CanonicalKey canonical_key(const Graph& g) {
  require_small_simple(g, "canonical_key");
  const std::uint32_t n = g.vertex_count();
  const auto rows = adjacency_rows(g);
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    // Word bit k corresponds to pair (i, j), i < j, in lexicographic order,
    // most significant first. perm[i] is the original vertex placed at i.
    std::uint64_t word = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        word = (word << 1) | ((rows[perm[i]] >> perm[j]) & 1U);
      }
    }
    best = std::min(best, word);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CanonicalKey{n, n < 2 ? 0 : best};
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << e.label << ' ' << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> Graph {
    throw std::invalid_argument("graph text line " + std::to_string(line_no) + ": " + why);
  };
  std::uint32_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      long long count = -1;
      if (!(ls >> tag >> count) || tag != "n" || count < 0) return fail("expected `n <vertex_count>`");
      n = static_cast<std::uint32_t>(count);
      have_header = true;
    } else {
      long long label = -1, u = -1, v = -1;
      if (!(ls >> label >> u >> v) || label < 0 || u < 0 || v < 0) {
        return fail("expected `<label> <u> <v>`");
      }
      edges.push_back({static_cast<EdgeLabel>(label), static_cast<std::uint32_t>(u),
                       static_cast<std::uint32_t>(v)});
    }
    std::string extra;
    if (ls >> extra) return fail("trailing tokens");
  }
  if (!have_header) throw std::invalid_argument("graph text: missing header line");
  return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace graphhyp
