#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "graphhyp/graph.hpp"

namespace graphhyp {

/// Multilinear polynomial with integer coefficients in variables A_e, one per
/// edge label. A monomial is the set of labels it contains. The ambient set
/// records which variables the polynomial lives over, which matters for
/// counting (a variable absent from every monomial is still a coordinate).
class EdgePoly {
 public:
  using Terms = std::map<std::uint64_t, std::int64_t>;

  EdgePoly() = default;
  explicit EdgePoly(EdgeSubset ambient) : ambient_(ambient) {}

  static EdgePoly constant(EdgeSubset ambient, std::int64_t c);
  static EdgePoly monomial(EdgeSubset ambient, EdgeSubset vars, std::int64_t c = 1);

  EdgeSubset ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::int64_t coefficient(EdgeSubset m) const;
  /// Union of the variables that occur in some monomial.
  EdgeSubset support() const;

  /// Adds c to the coefficient of monomial m (m must lie in the ambient set).
  void add_term(EdgeSubset m, std::int64_t c);

  bool is_homogeneous() const;
  /// Degree of a homogeneous polynomial; -1 for the zero polynomial.
  int degree() const;

  EdgePoly& operator+=(const EdgePoly& o);
  EdgePoly& operator-=(const EdgePoly& o);
  friend EdgePoly operator+(EdgePoly a, const EdgePoly& b) { return a += b; }
  friend EdgePoly operator-(EdgePoly a, const EdgePoly& b) { return a -= b; }

  /// Equality compares ambient set and terms.
  friend bool operator==(const EdgePoly&, const EdgePoly&) = default;

  /// `A<label>` variables juxtaposed per monomial, monomials in ascending
  /// mask order joined by `+`; a coefficient other than 1 is written as
  /// `<c>*` in front. Zero prints as `0`, the empty monomial as `1`.
  std::string to_string() const;

 private:
  EdgeSubset ambient_;
  Terms terms_;
};

/// p with A_e = 0 for every e in s; the variables in s leave the ambient set.
EdgePoly restrict_zero(const EdgePoly& p, EdgeSubset s);
EdgePoly restrict_zero(const EdgePoly& p, EdgeLabel e);

/// d/dA_e of p; e leaves the ambient set.
EdgePoly partial_derivative(const EdgePoly& p, EdgeLabel e);

/// Substitutes A_from -> A_from + A_to, where A_to is a fresh variable that is
/// added to the ambient set.
EdgePoly substitute_sum(const EdgePoly& p, EdgeLabel from, EdgeLabel to);

/// Replaces every monomial m by its complement in the ambient set. For a
/// homogeneous polynomial this is (prod A_e) * p(1/A).
EdgePoly complement_monomials(const EdgePoly& p);

/// Kirchhoff polynomial: sum over spanning trees of the product of the edge
/// variables not in the tree. Zero for a disconnected graph.
EdgePoly psi(const Graph& g);

/// Dual Kirchhoff polynomial: sum over spanning trees of the product of the
/// tree's edge variables.
EdgePoly psi_dual(const Graph& g);

/// psi(g) equals the monomial complement of psi_dual(g) with all
/// coefficients 1.
bool cremona_check(const Graph& g);

}  // namespace graphhyp
