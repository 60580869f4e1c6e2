#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphhyp/edge_poly.hpp"
#include "graphhyp/field.hpp"
#include "graphhyp/graph.hpp"

namespace graphhyp {

enum class Engine { kBrute, kRecursive, kAuto };

std::string_view engine_name(Engine e);
/// Accepts "brute", "recursive" and "auto".
Engine parse_engine(std::string_view name);

/// Budget for plain enumeration: q^E points.
inline constexpr double kBruteForceLimit = 1e10;
/// kAuto enumerates when q^E is at most this.
inline constexpr double kAutoBruteLimit = 2e5;

struct CountResult {
  std::uint64_t affine_zero_count = 0;
  std::uint64_t projective_count = 0;
  std::uint64_t q = 0;
  Engine engine = Engine::kBrute;  // engine actually used, never kAuto
};

struct RecursiveOptions {
  /// Memo entries kept; later subsystems are solved without caching.
  std::size_t memo_cap = 1'000'000;
  /// Subsystems with at most this many points are enumerated directly.
  std::uint64_t leaf_points = 64;
};

struct RecursiveStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t uncached = 0;
  std::uint64_t branchings = 0;
};

/// Common zeros of `polys` in F_q^ambient. Every polynomial must live inside
/// `ambient`. The zero polynomial is rejected unless it is the only entry.
/// Throws SizeGuardError when q^|ambient| exceeds kBruteForceLimit.
std::uint64_t count_affine_brute(std::span<const EdgePoly> polys, const FiniteField& f, EdgeSubset ambient);
/// Ambient set = union of the polynomials' ambient sets.
std::uint64_t count_affine_brute(std::span<const EdgePoly> polys, const FiniteField& f);

/// Same count by variable elimination. Throws ZeroPolynomialError for the
/// zero polynomial and SizeGuardError for more than 16 variables.
std::uint64_t count_affine_recursive(const EdgePoly& p, const FiniteField& f, const RecursiveOptions& options = {},
                                     RecursiveStats* stats = nullptr);
std::uint64_t count_affine_recursive(std::span<const EdgePoly> polys, const FiniteField& f, EdgeSubset ambient,
                                     const RecursiveOptions& options = {}, RecursiveStats* stats = nullptr);

/// Points of the projective hypersurface p = 0 in P^{E-1}. p must be nonzero
/// and homogeneous; a nonzero constant has no zeros.
CountResult count_projective(const EdgePoly& p, const FiniteField& f, Engine engine = Engine::kAuto);

/// Points of p = 0 in P^{E-1} with every coordinate nonzero.
std::uint64_t count_torus_open(const EdgePoly& p, const FiniteField& f, Engine engine = Engine::kAuto);

struct Stratum {
  EdgeSubset zero_coordinates;  // exactly these coordinates vanish
  std::uint64_t count = 0;
  bool degenerate = false;      // the coordinate subspace lies inside p = 0
};

/// One stratum per S with |S| <= E - 1, ordered by mask. Degenerate strata
/// hold the whole open torus orbit, (q-1)^{E-|S|-1} points.
std::vector<Stratum> stratum_decomposition(const EdgePoly& p, const FiniteField& f, Engine engine = Engine::kAuto);

/// Coordinatewise inversion maps {psi = 0} to {psi_dual = 0} on the torus,
/// pointwise, and the two torus counts agree. Enumerates the torus.
bool cremona_bijection_check(const Graph& g, const FiniteField& f);

struct DualCutCheck {
  std::uint64_t dual_count = 0;          // #X^v(F_q)
  std::uint64_t nondegenerate_sum = 0;   // sum of #X^0 of cut graphs
  std::uint64_t degenerate_sum = 0;      // linear strata
  bool restrictions_match = true;        // psi_dual(g - S) == psi_dual(g)|_{A_S = 0}
  bool holds() const { return restrictions_match && dual_count == nondegenerate_sum + degenerate_sum; }
};

/// Torus stratification of the dual hypersurface, with each nondegenerate
/// stratum replaced by the torus part of the cut graph's hypersurface.
DualCutCheck dual_cut_identity_check(const Graph& g, const FiniteField& f, Engine engine = Engine::kAuto);

}  // namespace graphhyp
