#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphhyp/graph.hpp"

namespace graphhyp {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::uint32_t n = 0;
  std::vector<CheckLine> checks;
  bool passed() const;
};

/// Suite names accepted by run_verify_suite.
const std::vector<std::string>& verify_suite_names();

/// Runs one identity suite on K_n and the graphs derived from it:
///   cremona       monomial complement and torus inversion on every census term
///   delcontract   deletion/contraction and iterated restriction
///   stratify      torus stratification and the dual-cut identity
///   dual-complete dual hypersurface count of K_n against its predicted class
///   cone          duplicate-edge and tadpole extensions of K_n
///   reduction     the S_n reassembly from contracted torus strata (n = 3, 4)
/// Throws std::invalid_argument for an unknown suite or unsupported n.
SuiteResult run_verify_suite(std::string_view suite, std::uint32_t n);

/// g plus one edge u -> v labelled one above the largest label in use.
Graph with_extra_edge(const Graph& g, std::uint32_t u, std::uint32_t v);

}  // namespace graphhyp
