#include "graphhyp/verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "graphhyp/census.hpp"
#include "graphhyp/class_poly.hpp"
#include "graphhyp/count.hpp"
#include "graphhyp/edge_poly.hpp"

namespace graphhyp {

namespace {

std::vector<std::uint64_t> small_fields(std::uint32_t n) {
  if (n <= 4) return {2, 3, 5, 7};
  return {2, 3};
}

void add(SuiteResult& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

void cremona_suite(SuiteResult& r, std::uint32_t n) {
  std::size_t symbolic_failures = 0;
  std::size_t torus_failures = 0;
  const auto terms = census_terms(n);
  for (std::uint64_t q : {2, 3}) {
    const FiniteField f = FiniteField::of_order(q);
    for (const CensusTerm& t : terms) {
      if (q == 2 && !cremona_check(t.graph)) ++symbolic_failures;
      if (!cremona_bijection_check(t.graph, f)) ++torus_failures;
    }
  }
  add(r, "monomial complement, " + std::to_string(terms.size()) + " graphs", symbolic_failures == 0,
      std::to_string(symbolic_failures) + " failures");
  add(r, "torus inversion at q=2,3", torus_failures == 0, std::to_string(torus_failures) + " failures");
}

void delcontract_suite(SuiteResult& r, std::uint32_t n) {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (const CensusTerm& t : census_terms(n)) {
    const EdgePoly p = psi(t.graph);
    const EdgePoly d = psi_dual(t.graph);
    for (EdgeLabel e : t.graph.label_set().labels()) {
      const Graph contracted = contract_edges(t.graph, EdgeSubset::of({e}));
      const Graph deleted = delete_edges(t.graph, EdgeSubset::of({e}));
      checked += 4;
      if (psi(contracted) != restrict_zero(p, e)) ++failures;
      if (psi(deleted) != partial_derivative(p, e)) ++failures;
      if (psi_dual(contracted) != partial_derivative(d, e)) ++failures;
      if (psi_dual(deleted) != restrict_zero(d, e)) ++failures;
    }
  }
  add(r, "four deletion/contraction identities (" + std::to_string(checked) + " cases)", failures == 0,
      std::to_string(failures) + " failures");

  // Iterated restriction on K_n itself.
  const Graph kn = complete_graph(n);
  const EdgePoly p = psi(kn);
  const EdgePoly d = psi_dual(kn);
  const std::uint64_t all = kn.label_set().mask();
  std::size_t iterated = 0;
  std::size_t iterated_failures = 0;
  for (std::uint64_t m = 1; m <= all; ++m) {
    const EdgeSubset s(m);
    const Graph cut = delete_edges(kn, s);
    if (is_connected(cut)) {
      ++iterated;
      if (psi_dual(cut) != restrict_zero(d, s)) ++iterated_failures;
    } else if (!restrict_zero(d, s).is_zero()) {
      ++iterated_failures;
    }
    if (is_forest(kn, s)) {
      ++iterated;
      if (psi(contract_edges(kn, s)) != restrict_zero(p, s)) ++iterated_failures;
    } else if (!restrict_zero(p, s).is_zero()) {
      ++iterated_failures;
    }
  }
  add(r, "iterated restriction (" + std::to_string(iterated) + " nondegenerate subsets)", iterated_failures == 0,
      std::to_string(iterated_failures) + " failures");
}

void stratify_suite(SuiteResult& r, std::uint32_t n) {
  const auto terms = census_terms(n);
  const std::vector<std::uint64_t> qs = n <= 4 ? std::vector<std::uint64_t>{2, 3, 5} : std::vector<std::uint64_t>{2};
  for (std::uint64_t q : qs) {
    const FiniteField f = FiniteField::of_order(q);
    std::size_t failures = 0;
    for (const CensusTerm& t : terms) {
      for (const EdgePoly& p : {psi(t.graph), psi_dual(t.graph)}) {
        std::uint64_t sum = 0;
        for (const Stratum& s : stratum_decomposition(p, f)) sum += s.count;
        if (sum != count_projective(p, f).projective_count) ++failures;
      }
    }
    add(r, "torus strata sum to the hypersurface count, q=" + std::to_string(q), failures == 0,
        std::to_string(failures) + " failures");
    const DualCutCheck dc = dual_cut_identity_check(complete_graph(n), f);
    add(r, "dual-cut identity on K_" + std::to_string(n) + ", q=" + std::to_string(q), dc.holds(),
        std::to_string(dc.dual_count) + " = " + std::to_string(dc.nondegenerate_sum) + " + " +
            std::to_string(dc.degenerate_sum));
  }
}

void dual_complete_suite(SuiteResult& r, std::uint32_t n) {
  const ClassPoly predicted = dual_complete_class(n);
  const EdgePoly d = psi_dual(complete_graph(n));
  for (std::uint64_t q : small_fields(n)) {
    const std::uint64_t measured = count_projective(d, FiniteField::of_order(q)).projective_count;
    const BigInt expected = predicted.evaluate(static_cast<std::int64_t>(q));
    add(r, "dual hypersurface of K_" + std::to_string(n) + " at q=" + std::to_string(q), expected == measured,
        "measured " + std::to_string(measured) + ", class " + predicted.to_string() + " gives " + expected.str());
  }
}

void cone_suite(SuiteResult& r, std::uint32_t n) {
  const Graph base = complete_graph(n);
  const Edge e0 = base.edges().front();
  struct Extension {
    std::string name;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  };
  const std::vector<Extension> extensions = {
      {"duplicate", {{e0.u, e0.v}}},
      {"tadpole", {{0, 0}}},
      {"two duplicates", {{e0.u, e0.v}, {e0.u, e0.v}}},
      {"duplicate and tadpole", {{e0.u, e0.v}, {1, 1}}},
  };
  for (const Extension& ext : extensions) {
    // Symbolic: each added edge is a substitution (duplicate) or a dummy
    // variable (tadpole) in the dual polynomial.
    Graph g = base;
    EdgePoly expected = psi_dual(base);
    bool symbolic = true;
    for (const auto& [u, v] : ext.edges) {
      const Graph next = with_extra_edge(g, u, v);
      const EdgeLabel added = static_cast<EdgeLabel>(std::bit_width(g.label_set().mask()));
      if (u == v) {
        EdgePoly widened(expected.ambient() | EdgeSubset::of({added}));
        for (const auto& [mask, c] : expected.terms()) widened.add_term(EdgeSubset(mask), c);
        expected = widened;
      } else {
        expected = substitute_sum(expected, e0.label, added);
      }
      g = next;
      if (psi_dual(g) != expected) symbolic = false;
    }
    add(r, ext.name + ": dual polynomial by substitution", symbolic);

    for (std::uint64_t q : small_fields(n)) {
      const FiniteField f = FiniteField::of_order(q);
      const std::uint64_t base_count = count_projective(psi_dual(base), f).projective_count;
      const std::uint64_t measured = count_projective(psi_dual(g), f).projective_count;
      ClassPoly cone = ClassPoly::constant(static_cast<std::int64_t>(base_count));
      for (std::size_t i = 0; i < ext.edges.size(); ++i) cone = cone_class(cone);
      const BigInt predicted = cone.evaluate(static_cast<std::int64_t>(q));
      add(r, ext.name + " cone count at q=" + std::to_string(q), predicted == measured,
          "measured " + std::to_string(measured) + ", predicted " + predicted.str());
    }
  }
}

void reduction_suite(SuiteResult& r, std::uint32_t n) {
  for (std::uint64_t q : {2, 3}) {
    const ReductionCheck c = reduction_identity_check(n, FiniteField::of_order(q));
    add(r, "reduction identity, q=" + std::to_string(q), c.holds(),
        "S=" + std::to_string(c.s_n) + " torus=" + std::to_string(c.torus_sum) + " t=" +
            std::to_string(c.correction) + " pairs=" + std::to_string(c.pairs));
  }
}

}  // namespace

bool SuiteResult::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"cremona", "delcontract", "stratify", "dual-complete", "cone",
                                                 "reduction"};
  return names;
}

Graph with_extra_edge(const Graph& g, std::uint32_t u, std::uint32_t v) {
  std::vector<Edge> edges = g.edges();
  const EdgeLabel label = static_cast<EdgeLabel>(std::bit_width(g.label_set().mask()));
  edges.push_back(Edge{label, u, v});
  return Graph(g.vertex_count(), std::move(edges));
}

SuiteResult run_verify_suite(std::string_view suite, std::uint32_t n) {
  SuiteResult r;
  r.suite = std::string(suite);
  r.n = n;
  if (suite == "cremona") {
    cremona_suite(r, n);
  } else if (suite == "delcontract") {
    delcontract_suite(r, n);
  } else if (suite == "stratify") {
    stratify_suite(r, n);
  } else if (suite == "dual-complete") {
    dual_complete_suite(r, n);
  } else if (suite == "cone") {
    cone_suite(r, n);
  } else if (suite == "reduction") {
    reduction_suite(r, n);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  return r;
}

}  // namespace graphhyp
