#include "graphhyp/census.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphhyp {

namespace {

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::vector<CensusTerm> census_terms(std::uint32_t n) {
  if (n < 3 || n > 6) throw std::invalid_argument("census_terms: need 3 <= n <= 6");
  const Graph kn = complete_graph(n);
  std::vector<CensusTerm> terms;
  for (EdgeSubset cut : nondegenerate_cut_subsets(n)) {
    CensusTerm t;
    t.cut = cut;
    t.graph = delete_edges(kn, cut);
    t.key = canonical_key(t.graph);
    t.aut_order = automorphism_order(t.graph);
    terms.push_back(std::move(t));
  }
  return terms;
}

bool MultiplicityReport::ok() const {
  std::uint64_t total = 0;
  for (const IsoClassRow& row : classes) {
    if (row.observed != row.expected) return false;
    total += row.observed;
  }
  return total == term_count;
}

MultiplicityReport multiplicity_check(std::uint32_t n) { return multiplicity_check(n, census_terms(n)); }

MultiplicityReport multiplicity_check(std::uint32_t n, const std::vector<CensusTerm>& terms) {
  MultiplicityReport report;
  report.n = n;
  report.term_count = terms.size();
  std::map<CanonicalKey, std::size_t> index;
  for (const CensusTerm& t : terms) {
    auto [it, inserted] = index.emplace(t.key, report.classes.size());
    if (inserted) {
      IsoClassRow row;
      row.key = t.key;
      row.representative_cut = t.cut;
      row.representative = t.graph;
      row.aut_order = t.aut_order;
      row.expected = factorial(n) / t.aut_order;
      report.classes.push_back(std::move(row));
    }
    IsoClassRow& row = report.classes[it->second];
    ++row.observed;
    if (t.cut < row.representative_cut) {
      row.representative_cut = t.cut;
      row.representative = t.graph;
    }
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const IsoClassRow& a, const IsoClassRow& b) { return a.representative_cut < b.representative_cut; });
  return report;
}

std::uint64_t s_n_count(std::uint32_t n, const FiniteField& f, Engine engine) {
  std::uint64_t total = 0;
  for (const CensusTerm& t : census_terms(n)) total += count_projective(psi(t.graph), f, engine).projective_count;
  return total;
}

std::vector<std::uint64_t> default_fit_qs(std::uint32_t n) {
  switch (n) {
    case 3:
      return {2, 3};
    case 4:
      return {2, 3, 4, 5, 7};
    case 5:
      return {2, 3, 4, 5, 7, 8, 9, 11, 13};
    default:
      return {};
  }
}

std::vector<std::uint64_t> default_holdout_qs(std::uint32_t n) {
  switch (n) {
    case 3:
      return {5, 7, 8, 9};
    case 4:
      return {8, 9, 11, 13};
    case 5:
      return {16, 17};
    default:
      return {};
  }
}

int census_degree_bound(std::uint32_t n) { return static_cast<int>(n * (n - 1) / 2) - 2; }

bool ReductionCheck::holds() const {
  return per_cut_sums_match && restrictions_match && regrouping_holds && s_n == torus_sum + correction &&
         empty_forest_sum == dual_cut_nondegenerate;
}

ReductionCheck reduction_identity_check(std::uint32_t n, const FiniteField& f, Engine engine) {
  if (n < 3 || n > 4) throw std::invalid_argument("reduction_identity_check: need n in {3, 4}");
  ReductionCheck out;
  out.n = n;
  out.q = f.order();
  const Graph kn = complete_graph(n);
  const std::uint64_t all = kn.label_set().mask();
  const int edge_count = static_cast<int>(kn.edge_count());

  std::vector<EdgeSubset> forests;
  for (std::uint64_t m = 0; m <= all; ++m) {
    if (is_forest(kn, EdgeSubset(m))) forests.emplace_back(m);
  }

  // Regrouping: for disjoint e and cycle-free f, cutting e disconnects K_n
  // exactly when it disconnects K_n / f, and the two orders of cutting and
  // contracting give the same graph.
  for (EdgeSubset forest : forests) {
    const Graph contracted = contract_edges(kn, forest);
    for (std::uint64_t m = 0; m <= all; ++m) {
      const EdgeSubset cut(m);
      if (!(cut & forest).empty()) continue;
      const Graph cut_then_contract = contract_edges(delete_edges(kn, cut), forest);
      const Graph contract_then_cut = delete_edges(contracted, cut);
      if (cut_then_contract != contract_then_cut) out.regrouping_holds = false;
      if (is_connected(delete_edges(kn, cut)) != is_connected(contract_then_cut)) out.regrouping_holds = false;
    }
  }

  for (EdgeSubset cut : nondegenerate_cut_subsets(n)) {
    const Graph g = delete_edges(kn, cut);
    const EdgePoly p = psi(g);
    const int remaining = edge_count - cut.size();
    out.s_n += count_projective(p, f, engine).projective_count;

    std::uint64_t cut_total = 0;
    for (std::uint64_t m = 0; m <= all; ++m) {
      const EdgeSubset zeros(m);
      if (!(zeros & cut).empty() || zeros.size() > remaining - 1) continue;
      const EdgePoly restricted = restrict_zero(p, zeros);
      if (is_forest(g, zeros)) {
        const Graph quotient = contract_edges(g, zeros);
        if (!is_nondegenerate_pair(n, cut, zeros)) out.regrouping_holds = false;
        const EdgePoly contracted = psi(quotient);
        if (contracted != restricted) out.restrictions_match = false;
        const std::uint64_t torus = count_torus_open(contracted, f, engine);
        ++out.pairs;
        out.torus_sum += torus;
        cut_total += torus;
        if (zeros.empty()) out.empty_forest_sum += torus;
      } else {
        if (!restricted.is_zero()) out.restrictions_match = false;
        const std::uint64_t linear = ipow(f.order() - 1, remaining - zeros.size() - 1);
        out.correction += linear;
        cut_total += linear;
      }
    }
    if (cut_total != count_projective(p, f, engine).projective_count) out.per_cut_sums_match = false;
  }

  out.dual_cut_nondegenerate = dual_cut_identity_check(kn, f, engine).nondegenerate_sum;
  return out;
}

}  // namespace graphhyp
