#include "graphhyp/class_poly.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace graphhyp {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ClassPoly: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ClassPoly: coefficient overflow");
  return r;
}

}  // namespace

ClassPoly::ClassPoly(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

ClassPoly ClassPoly::constant(std::int64_t c) { return ClassPoly({c}); }

ClassPoly ClassPoly::lefschetz_power(int k) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = 1;
  return ClassPoly(std::move(c));
}

void ClassPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t ClassPoly::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : 0;
}

BigInt ClassPoly::evaluate(std::int64_t q) const {
  BigInt r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
  return r;
}

ClassPoly& ClassPoly::operator+=(const ClassPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], -o.coeffs_[i]);
  trim();
  return *this;
}

ClassPoly operator*(const ClassPoly& a, const ClassPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return ClassPoly(std::move(c));
}

std::string ClassPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    out << mag;
    if (k == 1) out << "*L";
    if (k > 1) out << "*L^" << k;
  }
  return out.str();
}

std::string ClassPoly::to_json() const { return nlohmann::json(coeffs_).dump(); }

ClassPoly proj_space(int n) {
  if (n < 0) return {};
  return ClassPoly(std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 1));
}

ClassPoly grassmann(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("grassmann: negative dimension");
  if (a > b) return {};
  if (a == 0 || a == b) return ClassPoly::constant(1);
  // Fix H of dimension b - a and stratify by p = dim of the image of V in
  // k^b / H. Then V ∩ H has dimension a - p and V is the graph of a map from
  // the image to H / (V ∩ H), an affine fibre of dimension p * (b - 2a + p).
  ClassPoly total;
  for (int p = std::max(0, 2 * a - b); p <= a; ++p) {
    total += grassmann(a - p, b - a) * grassmann(p, a) * ClassPoly::lefschetz_power(p * (b - 2 * a + p));
  }
  return total;
}

ClassPoly sym_rank_stratum(int n, int p) {
  if (n < 1 || p < 1 || p > n) throw std::invalid_argument("sym_rank_stratum: need 1 <= p <= n");
  if (p == 1) return proj_space(n - 1);
  if (p < n) return grassmann(n - p, n) * sym_rank_stratum(p, p);
  ClassPoly top = proj_space(n * (n + 1) / 2 - 1);
  for (int r = 1; r < n; ++r) top -= sym_rank_stratum(n, r);
  return top;
}

ClassPoly dual_complete_class(int n) {
  if (n < 3) throw std::invalid_argument("dual_complete_class: need n >= 3");
  ClassPoly total;
  for (int p = 1; p <= n - 2; ++p) total += sym_rank_stratum(n - 1, p);
  return total;
}

ClassPoly cone_class(const ClassPoly& base) { return ClassPoly::lefschetz_power(1) * base + ClassPoly::constant(1); }

InterpolationVerdict interpolate_counts(const std::vector<CountNode>& nodes, int degree_bound,
                                        const std::vector<CountNode>& holdout) {
  if (degree_bound < 0) throw std::invalid_argument("interpolate_counts: negative degree bound");
  if (nodes.size() < static_cast<std::size_t>(degree_bound) + 1) {
    throw std::invalid_argument("interpolate_counts: need at least degree_bound + 1 fitting nodes");
  }
  std::set<std::uint64_t> seen;
  for (const CountNode& n : nodes) {
    if (!seen.insert(n.q).second) throw std::invalid_argument("interpolate_counts: repeated q among fitting nodes");
  }

  InterpolationVerdict verdict;
  verdict.fit_nodes = nodes;
  verdict.holdout_nodes = holdout;
  verdict.degree_bound = degree_bound;

  // Newton divided differences, then expansion into the monomial basis.
  const std::size_t m = nodes.size();
  std::vector<Rational> x(m);
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = Rational(nodes[i].q);
    dd[i] = Rational(nodes[i].count);
  }
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);
  }
  std::vector<Rational> poly{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    // poly = poly * (L - x_i) + dd_i
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * x[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();

  if (static_cast<int>(poly.size()) - 1 > degree_bound) {
    verdict.reason = "interpolant degree " + std::to_string(poly.size() - 1) + " exceeds bound " +
                     std::to_string(degree_bound);
    return verdict;
  }
  std::vector<std::int64_t> coeffs;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Rational& c = poly[k];
    if (boost::multiprecision::denominator(c) != 1) {
      verdict.reason = "coefficient of L^" + std::to_string(k) + " is not an integer";
      return verdict;
    }
    const BigInt num = boost::multiprecision::numerator(c);
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("interpolate_counts: coefficient exceeds 64 bits");
    }
    coeffs.push_back(static_cast<std::int64_t>(num));
  }
  ClassPoly fitted(std::move(coeffs));
  for (const CountNode& h : holdout) {
    if (fitted.evaluate(static_cast<std::int64_t>(h.q)) != h.count) {
      verdict.reason = "holdout q=" + std::to_string(h.q) + " gives " +
                       fitted.evaluate(static_cast<std::int64_t>(h.q)).str() + ", measured " +
                       std::to_string(h.count);
      return verdict;
    }
  }
  verdict.status = VerdictStatus::kPolynomial;
  verdict.fitted = std::move(fitted);
  return verdict;
}

}  // namespace graphhyp
