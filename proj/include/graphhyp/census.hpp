#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphhyp/class_poly.hpp"
#include "graphhyp/count.hpp"
#include "graphhyp/graph.hpp"

namespace graphhyp {

/// One summand of S_n: K_n with the edges of `cut` removed.
struct CensusTerm {
  EdgeSubset cut;
  Graph graph;
  CanonicalKey key;
  std::uint64_t aut_order = 0;
};

/// One term per nondegenerate cut subset of K_n, ordered by mask.
/// Throws std::invalid_argument unless 3 <= n <= 6.
std::vector<CensusTerm> census_terms(std::uint32_t n);

struct IsoClassRow {
  CanonicalKey key;
  EdgeSubset representative_cut;  // smallest cut mask in the class
  Graph representative;
  std::uint64_t aut_order = 0;
  std::uint64_t observed = 0;  // terms in this class
  std::uint64_t expected = 0;  // n! / |Aut|
};

struct MultiplicityReport {
  std::uint32_t n = 0;
  std::vector<IsoClassRow> classes;  // ordered by representative_cut
  std::uint64_t term_count = 0;
  bool ok() const;
};

MultiplicityReport multiplicity_check(std::uint32_t n);
MultiplicityReport multiplicity_check(std::uint32_t n, const std::vector<CensusTerm>& terms);

/// Sum over census terms of the projective count of psi(K_n - S).
std::uint64_t s_n_count(std::uint32_t n, const FiniteField& f, Engine engine = Engine::kAuto);

/// Default fitting and holdout fields for n = 3, 4, 5; empty lists otherwise.
std::vector<std::uint64_t> default_fit_qs(std::uint32_t n);
std::vector<std::uint64_t> default_holdout_qs(std::uint32_t n);
/// C(n, 2) - 2.
int census_degree_bound(std::uint32_t n);

struct FaultInjection {
  EdgeSubset cut;
  std::uint64_t q = 0;
  std::int64_t delta = 0;
};

struct CensusOptions {
  std::uint32_t n = 3;
  std::vector<std::uint64_t> fit_qs;
  std::vector<std::uint64_t> holdout_qs;
  Engine engine = Engine::kAuto;
  unsigned threads = 1;
  /// Count one representative per isomorphism class and copy its counts to
  /// the other terms of the class. The result is checked against the direct
  /// sum at the smallest q.
  bool use_multiplicity_shortcut = false;
  /// Record wall-clock milliseconds per cell; otherwise millis is 0 so that
  /// exports are byte-stable.
  bool record_timing = false;
  /// When set, records.jsonl, census.csv and report.json are written here
  /// and finished cells in an existing records.jsonl are reused.
  std::optional<std::filesystem::path> out_dir;
  std::optional<FaultInjection> fault;
};

struct CensusCell {
  std::uint64_t q = 0;
  std::optional<std::uint64_t> projective_count;  // empty on failure
  std::string engine;                             // "brute", "recursive" or "shortcut"
  std::uint64_t millis = 0;
  std::string error;
};

struct CensusRecord {
  std::uint32_t n = 0;
  CensusTerm term;
  std::vector<CensusCell> cells;  // ascending q
};

enum class CensusStatus { kPolynomial, kInconsistent, kIncomplete };
std::string_view census_status_name(CensusStatus s);

struct ShortcutCheck {
  std::uint64_t q = 0;
  std::uint64_t shortcut_total = 0;
  std::uint64_t direct_total = 0;
  bool holds() const { return shortcut_total == direct_total; }
};

struct CensusReport {
  std::uint32_t n = 0;
  std::vector<std::uint64_t> fit_qs;
  std::vector<std::uint64_t> holdout_qs;
  std::map<std::uint64_t, std::uint64_t> totals;  // only for fully counted q
  std::optional<InterpolationVerdict> verdict;    // only on complete data
  MultiplicityReport multiplicities;
  std::vector<CensusRecord> records;
  std::optional<ShortcutCheck> shortcut;
  std::optional<FaultInjection> fault;
  std::uint64_t failed_cells = 0;
  std::uint64_t resumed_cells = 0;
  CensusStatus status = CensusStatus::kIncomplete;
};

/// Counts every (term, q) cell, sums per q, verifies multiplicities and
/// interpolates with degree bound C(n,2) - 2. Throws std::invalid_argument
/// when fewer than C(n,2) - 1 fitting fields are given.
CensusReport main_theorem_check(const CensusOptions& options);

/// Census rows as CSV: n,subset_mask,canon_key,aut_order,q,projective_count,engine,millis.
std::string census_csv(const CensusReport& report);
/// Deterministic JSON rendering of the report.
std::string census_json(const CensusReport& report);

struct ReductionCheck {
  std::uint32_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t s_n = 0;                // direct sum of projective counts
  std::uint64_t torus_sum = 0;          // nondegenerate pairs (e, f)
  std::uint64_t correction = 0;         // t(q): strata where f supports a cycle
  std::uint64_t empty_forest_sum = 0;   // the f = {} slice of torus_sum
  std::uint64_t dual_cut_nondegenerate = 0;
  std::uint64_t pairs = 0;
  bool per_cut_sums_match = true;       // each [X_{K_n - e}] reassembles
  bool restrictions_match = true;       // psi(G)|_{f=0} = psi(G/f), or 0 on cycles
  bool regrouping_holds = true;         // e nondegenerate in K_n iff in K_n/f
  bool holds() const;
};

/// Reassembles S_n(q) from torus strata of the contracted graphs
/// (K_n - e)/f plus the linear strata where f contains a cycle.
ReductionCheck reduction_identity_check(std::uint32_t n, const FiniteField& f, Engine engine = Engine::kAuto);

}  // namespace graphhyp
