#pragma once

// Recursive zero counter for systems of polynomials over F_q.

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fq_poly.hpp"
#include "graphhyp/count.hpp"

namespace graphhyp::detail {

using System = std::vector<FqPoly>;

struct SystemKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept;
};

/// Counts common zeros in F_q^n, eliminating one variable at a time:
///   - a variable with a constant coefficient in some equation is solved for
///     and substituted;
///   - a variable that is linear in exactly one equation a*x + b splits the
///     count into the a != 0 and a = b = 0 cases;
///   - a variable linear in several equations is eliminated through the
///     2x2 minors a_1 b_j - a_j b_1 (replaced by a square root when one
///     exists);
///   - homogeneous systems are dehomogenised (x = 1 chart plus x = 0);
///   - otherwise the variable is specialised to every field element.
/// Results are memoised on the normalised system.
class Solver {
 public:
  Solver(const FiniteField& field, const RecursiveOptions& options, RecursiveStats* stats);

  /// Number of points of F_q^{vars} (vars is a bitmask of variable slots)
  /// where every polynomial vanishes.
  std::uint64_t count(System system, std::uint32_t vars);

  /// Plain enumeration; SizeGuardError beyond the brute-force budget.
  std::uint64_t brute(const System& system, std::uint32_t vars) const;

 private:
  std::uint64_t solve(const System& system, std::uint32_t vars);
  std::uint64_t power(int exponent) const;

  const FiniteField& field_;
  RecursiveOptions options_;
  RecursiveStats* stats_;
  std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, SystemKeyHash> memo_;
};

}  // namespace graphhyp::detail
