#pragma once

// Private to the counting engine: sparse polynomials over F_q in at most 16
// variables with small exponents.

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <vector>

#include "graphhyp/edge_poly.hpp"
#include "graphhyp/field.hpp"

namespace graphhyp::detail {

inline constexpr int kMaxVars = 16;

/// Exponent vector; byte i is the exponent of variable i. Ordered
/// lexicographically with variable 0 most significant, which is a monomial
/// order.
struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};

  std::uint32_t vars() const {
    std::uint32_t m = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i]) m |= 1U << i;
    }
    return m;
  }
  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  friend bool operator==(const Mono&, const Mono&) = default;
  friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
    const int c = std::memcmp(a.e.data(), b.e.data(), kMaxVars);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

struct Term {
  Mono m;
  Fq c = 0;
};

/// Terms sorted by monomial, descending; no zero coefficients.
class FqPoly {
 public:
  FqPoly() = default;

  static FqPoly constant(Fq c);
  static FqPoly variable(int v);
  /// Reduces integer coefficients into F_q; `index` maps edge labels to
  /// variable slots.
  static FqPoly from_edge_poly(const EdgePoly& p, const FiniteField& f,
                               const std::array<int, kMaxEdgeLabels>& index);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.size() == 1 && terms_[0].m == Mono{} ; }
  Fq leading_coefficient() const { return terms_.front().c; }
  std::uint32_t vars() const;
  int degree_in(int v) const;
  bool is_homogeneous() const;

  /// Coefficients c_k with p = sum_k c_k * x_v^k.
  std::vector<FqPoly> coefficients_in(int v) const;

  FqPoly add(const FqPoly& o, const FiniteField& f) const;
  FqPoly sub(const FqPoly& o, const FiniteField& f) const;
  FqPoly scale(Fq s, const FiniteField& f) const;
  FqPoly mul(const FqPoly& o, const FiniteField& f) const;
  FqPoly shifted(int v, int k) const;  // multiply by x_v^k
  FqPoly substitute(int v, Fq value, const FiniteField& f) const;
  FqPoly substitute(int v, const FqPoly& replacement, const FiniteField& f) const;
  /// Replaces x^e (e >= q) by x^(e - (q-1)); same function on F_q^n.
  FqPoly reduce_exponents(const FiniteField& f) const;
  /// Rescales so the leading coefficient is 1.
  FqPoly monic(const FiniteField& f) const;
  /// Renames variable i to map[i]; map must be order preserving.
  FqPoly rename(const std::array<int, kMaxVars>& map) const;
  /// Some r with r*r == *this as polynomials, if one is found.
  bool try_sqrt(const FiniteField& f, FqPoly& out) const;

  Fq eval(const std::array<Fq, kMaxVars>& x, const FiniteField& f) const;

  friend bool operator==(const FqPoly& a, const FqPoly& b);
  friend std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b);

 private:
  void normalize(const FiniteField& f);
  std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }

}  // namespace graphhyp::detail
