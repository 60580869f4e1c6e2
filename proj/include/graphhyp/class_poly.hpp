#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphhyp {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in the Lefschetz class L.
class ClassPoly {
 public:
  ClassPoly() = default;
  /// Coefficients low to high; trailing zeros are dropped.
  explicit ClassPoly(std::vector<std::int64_t> coefficients);

  static ClassPoly constant(std::int64_t c);
  /// L^k.
  static ClassPoly lefschetz_power(int k);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(int k) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt evaluate(std::int64_t q) const;

  ClassPoly& operator+=(const ClassPoly& o);
  ClassPoly& operator-=(const ClassPoly& o);
  friend ClassPoly operator+(ClassPoly a, const ClassPoly& b) { return a += b; }
  friend ClassPoly operator-(ClassPoly a, const ClassPoly& b) { return a -= b; }
  friend ClassPoly operator*(const ClassPoly& a, const ClassPoly& b);
  friend bool operator==(const ClassPoly&, const ClassPoly&) = default;

  /// "1 + 3*L - 2*L^2"; "0" for the zero class.
  std::string to_string() const;
  /// "[1,3,-2]".
  std::string to_json() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// [P^N] = 1 + L + ... + L^N.
ClassPoly proj_space(int n);

/// [Gr(a, b)], a-dimensional subspaces of k^b. Zero when a > b.
ClassPoly grassmann(int a, int b);

/// c(n, p): projectivised symmetric n x n matrices of rank exactly p.
/// Throws std::invalid_argument unless 1 <= p <= n.
ClassPoly sym_rank_stratum(int n, int p);

/// Predicted class of the dual hypersurface of the complete graph K_n:
/// sum of c(n-1, p) for p = 1 .. n-2. Requires n >= 3.
ClassPoly dual_complete_class(int n);

/// L * base + 1.
ClassPoly cone_class(const ClassPoly& base);

struct CountNode {
  std::uint64_t q = 0;
  std::uint64_t count = 0;
  friend bool operator==(const CountNode&, const CountNode&) = default;
};

enum class VerdictStatus { kPolynomial, kInconsistent };

struct InterpolationVerdict {
  VerdictStatus status = VerdictStatus::kInconsistent;
  std::optional<ClassPoly> fitted;  // set when status is kPolynomial
  std::vector<CountNode> fit_nodes;
  std::vector<CountNode> holdout_nodes;
  int degree_bound = 0;
  /// Empty for a polynomial verdict; otherwise the first failure found.
  std::string reason;
};

/// Exact interpolation through every fitting node. The verdict is polynomial
/// when the interpolant has integer coefficients, degree <= degree_bound,
/// and reproduces every holdout count. Throws std::invalid_argument for
/// fewer than degree_bound + 1 fitting nodes or a repeated q.
InterpolationVerdict interpolate_counts(const std::vector<CountNode>& nodes, int degree_bound,
                                        const std::vector<CountNode>& holdout);

}  // namespace graphhyp
