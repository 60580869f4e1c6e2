#include "graphhyp/edge_poly.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace graphhyp {

EdgePoly EdgePoly::constant(EdgeSubset ambient, std::int64_t c) {
  EdgePoly p(ambient);
  p.add_term(EdgeSubset{}, c);
  return p;
}

EdgePoly EdgePoly::monomial(EdgeSubset ambient, EdgeSubset vars, std::int64_t c) {
  EdgePoly p(ambient);
  p.add_term(vars, c);
  return p;
}

std::int64_t EdgePoly::coefficient(EdgeSubset m) const {
  auto it = terms_.find(m.mask());
  return it == terms_.end() ? 0 : it->second;
}

EdgeSubset EdgePoly::support() const {
  std::uint64_t s = 0;
  for (const auto& [m, c] : terms_) s |= m;
  return EdgeSubset(s);
}

void EdgePoly::add_term(EdgeSubset m, std::int64_t c) {
  if (!m.is_subset_of(ambient_)) {
    throw std::invalid_argument("EdgePoly: monomial uses a variable outside the ambient set");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m.mask(), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool EdgePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = std::popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (std::popcount(m) != d) return false;
  }
  return true;
}

int EdgePoly::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::popcount(m));
  return d;
}

EdgePoly& EdgePoly::operator+=(const EdgePoly& o) {
  ambient_ = ambient_ | o.ambient_;
  for (const auto& [m, c] : o.terms_) add_term(EdgeSubset(m), c);
  return *this;
}

EdgePoly& EdgePoly::operator-=(const EdgePoly& o) {
  ambient_ = ambient_ | o.ambient_;
  for (const auto& [m, c] : o.terms_) add_term(EdgeSubset(m), -c);
  return *this;
}

std::string EdgePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << '+';
    first = false;
    if (m == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    for (EdgeLabel e : EdgeSubset(m).labels()) os << 'A' << e;
  }
  return os.str();
}

EdgePoly restrict_zero(const EdgePoly& p, EdgeSubset s) {
  EdgePoly out(p.ambient().minus(s));
  for (const auto& [m, c] : p.terms()) {
    if ((m & s.mask()) == 0) out.add_term(EdgeSubset(m), c);
  }
  return out;
}

EdgePoly restrict_zero(const EdgePoly& p, EdgeLabel e) {
  return restrict_zero(p, EdgeSubset(std::uint64_t{1} << e));
}

EdgePoly partial_derivative(const EdgePoly& p, EdgeLabel e) {
  const std::uint64_t bit = std::uint64_t{1} << e;
  EdgePoly out(p.ambient().minus(EdgeSubset(bit)));
  for (const auto& [m, c] : p.terms()) {
    if (m & bit) out.add_term(EdgeSubset(m & ~bit), c);
  }
  return out;
}

EdgePoly substitute_sum(const EdgePoly& p, EdgeLabel from, EdgeLabel to) {
  const std::uint64_t fb = std::uint64_t{1} << from;
  const std::uint64_t tb = std::uint64_t{1} << to;
  if (p.ambient().contains(to)) {
    throw std::invalid_argument("substitute_sum: target variable already present");
  }
  EdgePoly out(p.ambient() | EdgeSubset(tb));
  for (const auto& [m, c] : p.terms()) {
    out.add_term(EdgeSubset(m), c);
    if (m & fb) out.add_term(EdgeSubset((m & ~fb) | tb), c);
  }
  return out;
}

EdgePoly complement_monomials(const EdgePoly& p) {
  EdgePoly out(p.ambient());
  for (const auto& [m, c] : p.terms()) out.add_term(p.ambient().minus(EdgeSubset(m)), c);
  return out;
}

EdgePoly psi(const Graph& g) {
  EdgePoly p(g.label_set());
  for (EdgeSubset t : spanning_trees(g)) p.add_term(g.label_set().minus(t), 1);
  return p;
}

EdgePoly psi_dual(const Graph& g) {
  EdgePoly p(g.label_set());
  for (EdgeSubset t : spanning_trees(g)) p.add_term(t, 1);
  return p;
}

bool cremona_check(const Graph& g) {
  const EdgePoly direct = psi(g);
  const EdgePoly dual = psi_dual(g);
  if (direct.is_zero() || dual.is_zero()) return false;
  for (const auto& [m, c] : dual.terms()) {
    if (c != 1) return false;
  }
  return complement_monomials(dual) == direct;
}

}  // namespace graphhyp
