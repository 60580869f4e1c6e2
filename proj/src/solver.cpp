#include "solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "graphhyp/errors.hpp"

namespace graphhyp::detail {

namespace {

std::vector<std::uint64_t> serialize(const System& system) {
  std::vector<std::uint64_t> key;
  for (const FqPoly& p : system) {
    key.push_back(p.terms().size());
    for (const Term& t : p.terms()) {
      std::uint64_t lo = 0;
      std::uint64_t hi = 0;
      std::memcpy(&lo, t.m.e.data(), 8);
      std::memcpy(&hi, t.m.e.data() + 8, 8);
      key.push_back(lo);
      key.push_back(hi);
      key.push_back(t.c);
    }
  }
  return key;
}

System without(const System& system, std::size_t skip) {
  System out;
  out.reserve(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (i != skip) out.push_back(system[i]);
  }
  return out;
}

System with(System base, std::initializer_list<const FqPoly*> extra) {
  for (const FqPoly* p : extra) base.push_back(*p);
  return base;
}

}  // namespace

std::size_t SystemKeyHash::operator()(const std::vector<std::uint64_t>& key) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t x : key) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Solver::Solver(const FiniteField& field, const RecursiveOptions& options, RecursiveStats* stats)
    : field_(field), options_(options), stats_(stats) {}

std::uint64_t Solver::power(int exponent) const {
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= field_.order();
  return r;
}

std::uint64_t Solver::brute(const System& system, std::uint32_t vars) const {
  const int n = std::popcount(vars);
  if (std::pow(static_cast<double>(field_.order()), n) > kBruteForceLimit) {
    throw SizeGuardError("brute-force enumeration exceeds q^E <= 1e10");
  }
  std::vector<int> slots;
  for (int i = 0; i < kMaxVars; ++i) {
    if ((vars >> i) & 1U) slots.push_back(i);
  }
  std::array<Fq, kMaxVars> x{};
  const Fq q = static_cast<Fq>(field_.order());
  std::uint64_t hits = 0;
  while (true) {
    bool all_zero = true;
    for (const FqPoly& p : system) {
      if (p.eval(x, field_) != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) ++hits;
    std::size_t k = 0;
    while (k < slots.size()) {
      if (++x[slots[k]] < q) break;
      x[slots[k]] = 0;
      ++k;
    }
    if (k == slots.size()) break;
  }
  return hits;
}

std::uint64_t Solver::count(System system, std::uint32_t vars) {
  if (stats_) ++stats_->nodes;

  System norm;
  norm.reserve(system.size());
  for (FqPoly& p : system) {
    FqPoly r = p.reduce_exponents(field_);
    if (r.is_zero()) continue;
    if (r.is_constant()) return 0;
    norm.push_back(r.monic(field_));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  std::uint32_t used = 0;
  for (const FqPoly& p : norm) used |= p.vars();
  const std::uint64_t free_factor = power(std::popcount(vars & ~used));
  if (norm.empty()) return free_factor;

  // Split into variable-disjoint blocks.
  std::vector<std::uint32_t> block_vars;
  std::vector<System> blocks;
  for (const FqPoly& p : norm) {
    std::uint32_t pv = p.vars();
    System merged{p};
    for (std::size_t i = 0; i < block_vars.size();) {
      if (block_vars[i] & pv) {
        pv |= block_vars[i];
        merged.insert(merged.end(), blocks[i].begin(), blocks[i].end());
        block_vars.erase(block_vars.begin() + static_cast<std::ptrdiff_t>(i));
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    block_vars.push_back(pv);
    blocks.push_back(std::move(merged));
  }
  if (blocks.size() > 1) {
    std::uint64_t product = free_factor;
    for (std::size_t i = 0; i < blocks.size() && product != 0; ++i) {
      product *= count(std::move(blocks[i]), block_vars[i]);
    }
    return product;
  }

  // Compact, order-preserving renaming so equivalent subsystems share memo
  // entries.
  std::array<int, kMaxVars> rename{};
  int k = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if ((used >> i) & 1U) rename[i] = k++;
  }
  if (used != (1U << k) - 1) {
    for (FqPoly& p : norm) p = p.rename(rename);
    std::sort(norm.begin(), norm.end());
  }
  const std::uint32_t compact = (1U << k) - 1;

  if (std::pow(static_cast<double>(field_.order()), k) <= static_cast<double>(options_.leaf_points)) {
    return free_factor * brute(norm, compact);
  }

  auto key = serialize(norm);
  if (auto it = memo_.find(key); it != memo_.end()) {
    if (stats_) ++stats_->memo_hits;
    return free_factor * it->second;
  }
  const std::uint64_t result = solve(norm, compact);
  if (memo_.size() < options_.memo_cap) {
    memo_.emplace(std::move(key), result);
  } else if (stats_) {
    ++stats_->uncached;
  }
  return free_factor * result;
}

std::uint64_t Solver::solve(const System& system, std::uint32_t vars) {
  const std::uint64_t q = field_.order();
  struct VarInfo {
    int v = 0;
    std::vector<std::size_t> polys;
    int max_degree = 0;
  };
  std::vector<VarInfo> info;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!((vars >> v) & 1U)) continue;
    VarInfo vi;
    vi.v = v;
    for (std::size_t i = 0; i < system.size(); ++i) {
      const int d = system[i].degree_in(v);
      if (d > 0) {
        vi.polys.push_back(i);
        vi.max_degree = std::max(vi.max_degree, d);
      }
    }
    info.push_back(std::move(vi));
  }
  auto rest_vars = [&](int v) { return vars & ~(1U << v); };

  // 1. Solve for a variable that has a constant coefficient.
  {
    const VarInfo* best = nullptr;
    std::size_t best_poly = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (const VarInfo& vi : info) {
      if (vi.max_degree != 1) continue;
      for (std::size_t pi : vi.polys) {
        const auto coeffs = system[pi].coefficients_in(vi.v);
        if (!coeffs[1].is_constant()) continue;
        // Prefer variables that occur in few other equations.
        const std::size_t cost = (vi.polys.size() - 1) * 1000 + coeffs[0].terms().size();
        if (cost < best_cost) {
          best_cost = cost;
          best = &vi;
          best_poly = pi;
        }
      }
    }
    if (best != nullptr) {
      const int v = best->v;
      const auto coeffs = system[best_poly].coefficients_in(v);
      const Fq c = coeffs[1].terms().front().c;
      const FqPoly replacement = coeffs[0].scale(field_.neg(field_.inv(c)), field_);
      System next;
      for (std::size_t i = 0; i < system.size(); ++i) {
        if (i == best_poly) continue;
        next.push_back(system[i].degree_in(v) > 0 ? system[i].substitute(v, replacement, field_) : system[i]);
      }
      return count(std::move(next), rest_vars(v));
    }
  }

  // 2. A variable that is linear and occurs in a single equation a*x + b:
  //    one root where a != 0, q roots where a = b = 0.
  {
    const VarInfo* best = nullptr;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (const VarInfo& vi : info) {
      if (vi.polys.size() != 1 || vi.max_degree != 1) continue;
      const auto coeffs = system[vi.polys[0]].coefficients_in(vi.v);
      const std::size_t cost = coeffs[1].terms().size();
      if (cost < best_cost) {
        best_cost = cost;
        best = &vi;
      }
    }
    if (best != nullptr) {
      const int v = best->v;
      const std::size_t pi = best->polys[0];
      const auto coeffs = system[pi].coefficients_in(v);
      const System rest = without(system, pi);
      const std::uint64_t none = count(rest, rest_vars(v));
      const std::uint64_t lead_zero = count(with(rest, {&coeffs[1]}), rest_vars(v));
      const std::uint64_t both_zero = count(with(rest, {&coeffs[1], &coeffs[0]}), rest_vars(v));
      return none - lead_zero + q * both_zero;
    }
  }

  // 3. A variable linear in exactly two equations whose 2x2 minor is a
  //    square (up to a unit).
  for (const VarInfo& vi : info) {
    if (vi.polys.size() != 2 || vi.max_degree != 1) continue;
    const int v = vi.v;
    const auto c1 = system[vi.polys[0]].coefficients_in(v);
    const auto c2 = system[vi.polys[1]].coefficients_in(v);
    const FqPoly minor = c1[1].mul(c2[0], field_).sub(c1[0].mul(c2[1], field_), field_).monic(field_);
    FqPoly root;
    if (!minor.try_sqrt(field_, root)) continue;
    System rest;
    for (std::size_t i = 0; i < system.size(); ++i) {
      if (i != vi.polys[0] && i != vi.polys[1]) rest.push_back(system[i]);
    }
    const std::uint64_t minor_zero = count(with(rest, {&root}), rest_vars(v));
    const std::uint64_t leads_zero = count(with(rest, {&c1[1], &c2[1]}), rest_vars(v));
    const std::uint64_t all_zero = count(with(rest, {&c1[1], &c2[1], &c1[0], &c2[0]}), rest_vars(v));
    return minor_zero - leads_zero + q * all_zero;
  }

  // Branch on the most frequent variable.
  const VarInfo* pick = &info.front();
  for (const VarInfo& vi : info) {
    if (vi.polys.size() > pick->polys.size()) pick = &vi;
  }
  const int v = pick->v;
  if (stats_) ++stats_->branchings;

  // 4. Homogeneous systems: the x != 0 part is (q - 1) copies of x = 1.
  const bool homogeneous =
      std::all_of(system.begin(), system.end(), [](const FqPoly& p) { return p.is_homogeneous(); });
  auto specialise = [&](Fq value) {
    System next;
    next.reserve(system.size());
    for (const FqPoly& p : system) next.push_back(p.substitute(v, value, field_));
    return count(std::move(next), rest_vars(v));
  };
  if (homogeneous) {
    return (q - 1) * specialise(1) + specialise(0);
  }

  // 5. Specialise to every field element.
  std::uint64_t total = 0;
  for (Fq value = 0; value < q; ++value) total += specialise(value);
  return total;
}

}  // namespace graphhyp::detail
