#include "graphhyp/count.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "graphhyp/errors.hpp"
#include "solver.hpp"

namespace graphhyp {

namespace {

using detail::FqPoly;
using detail::kMaxVars;
using detail::System;

double points(const FiniteField& f, int vars) { return std::pow(static_cast<double>(f.order()), vars); }

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Label -> variable slot for the labels in `ambient`, in increasing order.
std::array<int, kMaxEdgeLabels> slot_index(EdgeSubset ambient) {
  std::array<int, kMaxEdgeLabels> index;
  index.fill(-1);
  int next = 0;
  for (EdgeLabel e : ambient.labels()) index[e] = next++;
  return index;
}

void check_inside(std::span<const EdgePoly> polys, EdgeSubset ambient) {
  for (const EdgePoly& p : polys) {
    if (!p.ambient().is_subset_of(ambient)) {
      throw std::invalid_argument("polynomial uses variables outside the ambient set");
    }
  }
}

void check_recursive_size(const FiniteField& f, int vars) {
  if (vars > kMaxVars) throw SizeGuardError("recursive counter supports at most 16 variables");
  if (points(f, vars) >= 9.2e18) throw SizeGuardError("point count would overflow 64 bits");
}

Engine resolve(Engine engine, const FiniteField& f, int vars) {
  if (engine != Engine::kAuto) return engine;
  return points(f, vars) <= kAutoBruteLimit ? Engine::kBrute : Engine::kRecursive;
}

void require_homogeneous_nonzero(const EdgePoly& p, const char* what) {
  if (p.is_zero()) throw ZeroPolynomialError(std::string(what) + ": zero polynomial");
  if (!p.is_homogeneous()) throw std::invalid_argument(std::string(what) + ": polynomial is not homogeneous");
}

// Affine zeros of one polynomial, allowing the zero polynomial (q^E) for
// internal use by the stratification routines.
std::uint64_t affine_zeros(const EdgePoly& p, const FiniteField& f, Engine engine, detail::Solver* solver) {
  const int n = p.ambient().size();
  if (p.is_zero()) return ipow(f.order(), n);
  if (engine == Engine::kBrute) return count_affine_brute(std::span(&p, 1), f, p.ambient());
  check_recursive_size(f, n);
  const auto index = slot_index(p.ambient());
  return solver->count({FqPoly::from_edge_poly(p, f, index)}, n == 32 ? ~0U : ((1U << n) - 1));
}

}  // namespace

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::kBrute:
      return "brute";
    case Engine::kRecursive:
      return "recursive";
    case Engine::kAuto:
      return "auto";
  }
  return "auto";
}

Engine parse_engine(std::string_view name) {
  if (name == "brute") return Engine::kBrute;
  if (name == "recursive") return Engine::kRecursive;
  if (name == "auto") return Engine::kAuto;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

std::uint64_t count_affine_brute(std::span<const EdgePoly> polys, const FiniteField& f, EdgeSubset ambient) {
  check_inside(polys, ambient);
  if (polys.size() > 1) {
    for (const EdgePoly& p : polys) {
      if (p.is_zero()) throw ZeroPolynomialError("count_affine_brute: zero polynomial in a system");
    }
  } else if (polys.size() == 1 && polys[0].is_zero()) {
    throw ZeroPolynomialError("count_affine_brute: zero polynomial");
  }
  const int n = ambient.size();
  if (points(f, n) > kBruteForceLimit) throw SizeGuardError("count_affine_brute: q^E exceeds 1e10");

  // Each polynomial as (variable-slot mask, coefficient) pairs.
  const auto index = slot_index(ambient);
  struct Term {
    std::uint64_t slots;
    Fq c;
  };
  std::vector<std::vector<Term>> system;
  for (const EdgePoly& p : polys) {
    std::vector<Term> terms;
    for (const auto& [mask, coef] : p.terms()) {
      std::uint64_t slots = 0;
      for (EdgeLabel e : EdgeSubset(mask).labels()) slots |= std::uint64_t{1} << index[e];
      const Fq c = f.from_int(coef);
      if (c != 0) terms.push_back({slots, c});
    }
    system.push_back(std::move(terms));
  }

  std::vector<Fq> x(static_cast<std::size_t>(n), 0);
  const Fq q = static_cast<Fq>(f.order());
  std::uint64_t hits = 0;
  while (true) {
    bool all_zero = true;
    for (const auto& terms : system) {
      Fq value = 0;
      for (const Term& t : terms) {
        Fq prod = t.c;
        for (std::uint64_t s = t.slots; s != 0 && prod != 0; s &= s - 1) {
          prod = f.mul(prod, x[static_cast<std::size_t>(std::countr_zero(s))]);
        }
        value = f.add(value, prod);
      }
      if (value != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) ++hits;
    int k = 0;
    while (k < n) {
      if (++x[static_cast<std::size_t>(k)] < q) break;
      x[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return hits;
}

std::uint64_t count_affine_brute(std::span<const EdgePoly> polys, const FiniteField& f) {
  EdgeSubset ambient;
  for (const EdgePoly& p : polys) ambient = ambient | p.ambient();
  return count_affine_brute(polys, f, ambient);
}

std::uint64_t count_affine_recursive(const EdgePoly& p, const FiniteField& f, const RecursiveOptions& options,
                                     RecursiveStats* stats) {
  return count_affine_recursive(std::span(&p, 1), f, p.ambient(), options, stats);
}

std::uint64_t count_affine_recursive(std::span<const EdgePoly> polys, const FiniteField& f, EdgeSubset ambient,
                                     const RecursiveOptions& options, RecursiveStats* stats) {
  check_inside(polys, ambient);
  for (const EdgePoly& p : polys) {
    if (p.is_zero()) throw ZeroPolynomialError("count_affine_recursive: zero polynomial");
  }
  const int n = ambient.size();
  check_recursive_size(f, n);
  const auto index = slot_index(ambient);
  System system;
  for (const EdgePoly& p : polys) system.push_back(FqPoly::from_edge_poly(p, f, index));
  detail::Solver solver(f, options, stats);
  return solver.count(std::move(system), (1U << n) - 1);
}

CountResult count_projective(const EdgePoly& p, const FiniteField& f, Engine engine) {
  require_homogeneous_nonzero(p, "count_projective");
  CountResult r;
  r.q = f.order();
  r.engine = resolve(engine, f, p.ambient().size());
  if (r.engine == Engine::kBrute) {
    r.affine_zero_count = count_affine_brute(std::span(&p, 1), f, p.ambient());
  } else {
    r.affine_zero_count = count_affine_recursive(p, f);
  }
  if (p.degree() == 0) {
    // Nonzero constant: empty hypersurface, origin included.
    r.projective_count = 0;
    return r;
  }
  if ((r.affine_zero_count - 1) % (f.order() - 1) != 0) {
    throw std::logic_error("count_projective: affine count of a cone is not 1 mod (q-1)");
  }
  r.projective_count = (r.affine_zero_count - 1) / (f.order() - 1);
  return r;
}

std::uint64_t count_torus_open(const EdgePoly& p, const FiniteField& f, Engine engine) {
  require_homogeneous_nonzero(p, "count_torus_open");
  const std::vector<EdgeLabel> labels = p.ambient().labels();
  const int n = static_cast<int>(labels.size());
  if (n == 0 || p.degree() == 0) return 0;
  engine = resolve(engine, f, n);

  if (engine == Engine::kBrute) {
    if (points(f, n - 1) > kBruteForceLimit) throw SizeGuardError("count_torus_open: torus too large");
    const auto index = slot_index(p.ambient());
    std::vector<std::pair<std::uint64_t, Fq>> terms;
    for (const auto& [mask, coef] : p.terms()) {
      std::uint64_t slots = 0;
      for (EdgeLabel e : EdgeSubset(mask).labels()) slots |= std::uint64_t{1} << index[e];
      terms.emplace_back(slots, f.from_int(coef));
    }
    // Points with first coordinate 1 and all others in F_q^*.
    std::vector<Fq> x(static_cast<std::size_t>(n), 1);
    const Fq q = static_cast<Fq>(f.order());
    std::uint64_t hits = 0;
    while (true) {
      Fq value = 0;
      for (const auto& [slots, c] : terms) {
        Fq prod = c;
        for (std::uint64_t s = slots; s != 0; s &= s - 1) {
          prod = f.mul(prod, x[static_cast<std::size_t>(std::countr_zero(s))]);
        }
        value = f.add(value, prod);
      }
      if (value == 0) ++hits;
      int k = 1;
      while (k < n) {
        if (++x[static_cast<std::size_t>(k)] < q) break;
        x[static_cast<std::size_t>(k)] = 1;
        ++k;
      }
      if (k == n) break;
    }
    return hits;
  }

  // Inclusion-exclusion over the coordinates forced to zero.
  if (n > 20) throw SizeGuardError("count_torus_open: too many coordinates");
  detail::Solver solver(f, RecursiveOptions{}, nullptr);
  std::uint64_t torus_affine = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1U) mask |= std::uint64_t{1} << labels[static_cast<std::size_t>(i)];
    }
    const std::uint64_t zeros = affine_zeros(restrict_zero(p, EdgeSubset(mask)), f, Engine::kRecursive, &solver);
    if (std::popcount(s) % 2 == 0) {
      torus_affine += zeros;
    } else {
      torus_affine -= zeros;
    }
  }
  if (torus_affine % (f.order() - 1) != 0) throw std::logic_error("count_torus_open: torus count not divisible");
  return torus_affine / (f.order() - 1);
}

std::vector<Stratum> stratum_decomposition(const EdgePoly& p, const FiniteField& f, Engine engine) {
  require_homogeneous_nonzero(p, "stratum_decomposition");
  const std::vector<EdgeLabel> labels = p.ambient().labels();
  const int n = static_cast<int>(labels.size());
  if (n > 20) throw SizeGuardError("stratum_decomposition: too many coordinates");
  std::vector<Stratum> out;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (std::popcount(s) > n - 1) continue;
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1U) mask |= std::uint64_t{1} << labels[static_cast<std::size_t>(i)];
    }
    Stratum st;
    st.zero_coordinates = EdgeSubset(mask);
    const EdgePoly restricted = restrict_zero(p, st.zero_coordinates);
    if (restricted.is_zero()) {
      st.degenerate = true;
      st.count = ipow(f.order() - 1, n - std::popcount(s) - 1);
    } else {
      st.count = count_torus_open(restricted, f, engine);
    }
    out.push_back(st);
  }
  std::sort(out.begin(), out.end(),
            [](const Stratum& a, const Stratum& b) { return a.zero_coordinates < b.zero_coordinates; });
  return out;
}

bool cremona_bijection_check(const Graph& g, const FiniteField& f) {
  if (!is_connected(g)) throw std::invalid_argument("cremona_bijection_check: graph is disconnected");
  const EdgePoly direct = psi(g);
  const EdgePoly dual = psi_dual(g);
  const auto index = slot_index(g.label_set());
  const int n = static_cast<int>(g.edge_count());
  if (n == 0) return true;
  if (points(f, n - 1) > kBruteForceLimit) throw SizeGuardError("cremona_bijection_check: torus too large");

  auto compile = [&](const EdgePoly& p) {
    std::vector<std::pair<std::uint64_t, Fq>> terms;
    for (const auto& [mask, coef] : p.terms()) {
      std::uint64_t slots = 0;
      for (EdgeLabel e : EdgeSubset(mask).labels()) slots |= std::uint64_t{1} << index[e];
      terms.emplace_back(slots, f.from_int(coef));
    }
    return terms;
  };
  auto eval = [&](const std::vector<std::pair<std::uint64_t, Fq>>& terms, const std::vector<Fq>& x) {
    Fq value = 0;
    for (const auto& [slots, c] : terms) {
      Fq prod = c;
      for (std::uint64_t s = slots; s != 0; s &= s - 1) prod = f.mul(prod, x[static_cast<std::size_t>(std::countr_zero(s))]);
      value = f.add(value, prod);
    }
    return value;
  };
  const auto direct_terms = compile(direct);
  const auto dual_terms = compile(dual);

  std::vector<Fq> x(static_cast<std::size_t>(n), 1);
  std::vector<Fq> inverse(static_cast<std::size_t>(n), 1);
  const Fq q = static_cast<Fq>(f.order());
  std::uint64_t direct_hits = 0;
  std::uint64_t dual_hits = 0;
  while (true) {
    for (std::size_t i = 0; i < x.size(); ++i) inverse[i] = f.inv(x[i]);
    const bool on_direct = eval(direct_terms, x) == 0;
    const bool image_on_dual = eval(dual_terms, inverse) == 0;
    if (on_direct != image_on_dual) return false;
    if (on_direct) ++direct_hits;
    if (eval(dual_terms, x) == 0) ++dual_hits;
    int k = 1;
    while (k < n) {
      if (++x[static_cast<std::size_t>(k)] < q) break;
      x[static_cast<std::size_t>(k)] = 1;
      ++k;
    }
    if (k == n) break;
  }
  return direct_hits == dual_hits;
}

DualCutCheck dual_cut_identity_check(const Graph& g, const FiniteField& f, Engine engine) {
  if (!is_connected(g)) throw std::invalid_argument("dual_cut_identity_check: graph is disconnected");
  const EdgePoly dual = psi_dual(g);
  DualCutCheck out;
  out.dual_count = count_projective(dual, f, engine).projective_count;
  const std::vector<EdgeLabel> labels = g.label_set().labels();
  const int n = static_cast<int>(labels.size());
  if (n > 20) throw SizeGuardError("dual_cut_identity_check: too many edges");
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (std::popcount(s) > n - 1) continue;
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1U) mask |= std::uint64_t{1} << labels[static_cast<std::size_t>(i)];
    }
    const EdgeSubset cut(mask);
    const Graph rest = delete_edges(g, cut);
    const EdgePoly restricted = restrict_zero(dual, cut);
    if (is_connected(rest)) {
      if (psi_dual(rest) != restricted) out.restrictions_match = false;
      out.nondegenerate_sum += count_torus_open(psi(rest), f, engine);
    } else {
      if (!restricted.is_zero()) out.restrictions_match = false;
      out.degenerate_sum += ipow(f.order() - 1, n - std::popcount(s) - 1);
    }
  }
  return out;
}

}  // namespace graphhyp
