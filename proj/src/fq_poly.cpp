#include "fq_poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace graphhyp::detail {

namespace {

constexpr int kMaxExponent = 200;

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out;
  for (int i = 0; i < kMaxVars; ++i) {
    const int e = a.e[i] + b.e[i];
    if (e > kMaxExponent) throw std::overflow_error("FqPoly: exponent overflow");
    out.e[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

}  // namespace

FqPoly FqPoly::constant(Fq c) {
  FqPoly p;
  if (c != 0) p.terms_.push_back({Mono{}, c});
  return p;
}

FqPoly FqPoly::variable(int v) {
  FqPoly p;
  Term t;
  t.m.e[v] = 1;
  t.c = 1;
  p.terms_.push_back(t);
  return p;
}

FqPoly FqPoly::from_edge_poly(const EdgePoly& p, const FiniteField& f,
                              const std::array<int, kMaxEdgeLabels>& index) {
  FqPoly out;
  for (const auto& [mask, coef] : p.terms()) {
    Term t;
    for (EdgeLabel e : EdgeSubset(mask).labels()) {
      if (index[e] < 0) throw std::logic_error("FqPoly: label without a variable slot");
      t.m.e[index[e]] = 1;
    }
    t.c = f.from_int(coef);
    out.terms_.push_back(t);
  }
  out.normalize(f);
  return out;
}

void FqPoly::normalize(const FiniteField& f) {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!merged.empty() && merged.back().m == t.m) {
      merged.back().c = f.add(merged.back().c, t.c);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.c == 0; });
  terms_ = std::move(merged);
}

std::uint32_t FqPoly::vars() const {
  std::uint32_t m = 0;
  for (const Term& t : terms_) m |= t.m.vars();
  return m;
}

int FqPoly::degree_in(int v) const {
  int d = 0;
  for (const Term& t : terms_) d = std::max<int>(d, t.m.e[v]);
  return d;
}

bool FqPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().m.total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.m.total_degree() == d; });
}

std::vector<FqPoly> FqPoly::coefficients_in(int v) const {
  std::vector<FqPoly> out(static_cast<std::size_t>(degree_in(v)) + 1);
  for (const Term& t : terms_) {
    Term s = t;
    s.m.e[v] = 0;
    out[t.m.e[v]].terms_.push_back(s);
  }
  // Removing x_v keeps the relative order within each power.
  return out;
}

FqPoly FqPoly::add(const FqPoly& o, const FiniteField& f) const {
  FqPoly out = *this;
  out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
  out.normalize(f);
  return out;
}

FqPoly FqPoly::sub(const FqPoly& o, const FiniteField& f) const {
  FqPoly out = *this;
  for (const Term& t : o.terms_) out.terms_.push_back({t.m, f.neg(t.c)});
  out.normalize(f);
  return out;
}

FqPoly FqPoly::scale(Fq s, const FiniteField& f) const {
  if (s == 0) return {};
  FqPoly out = *this;
  for (Term& t : out.terms_) t.c = f.mul(t.c, s);
  return out;
}

FqPoly FqPoly::mul(const FqPoly& o, const FiniteField& f) const {
  FqPoly out;
  out.terms_.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) out.terms_.push_back({mono_mul(a.m, b.m), f.mul(a.c, b.c)});
  }
  out.normalize(f);
  return out;
}

FqPoly FqPoly::shifted(int v, int k) const {
  FqPoly out = *this;
  for (Term& t : out.terms_) {
    const int e = t.m.e[v] + k;
    if (e > kMaxExponent) throw std::overflow_error("FqPoly: exponent overflow");
    t.m.e[v] = static_cast<std::uint8_t>(e);
  }
  return out;
}

FqPoly FqPoly::substitute(int v, Fq value, const FiniteField& f) const {
  FqPoly out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Term s = t;
    if (s.m.e[v]) {
      s.c = f.mul(s.c, f.pow(value, s.m.e[v]));
      s.m.e[v] = 0;
    }
    out.terms_.push_back(s);
  }
  out.normalize(f);
  return out;
}

FqPoly FqPoly::substitute(int v, const FqPoly& replacement, const FiniteField& f) const {
  const auto coeffs = coefficients_in(v);
  FqPoly out;
  FqPoly power = constant(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) power = power.mul(replacement, f);
    if (!coeffs[k].is_zero()) out = out.add(coeffs[k].mul(power, f), f);
  }
  return out;
}

FqPoly FqPoly::reduce_exponents(const FiniteField& f) const {
  const std::uint64_t q = f.order();
  if (q > kMaxExponent) return *this;
  bool changed = false;
  FqPoly out = *this;
  for (Term& t : out.terms_) {
    for (auto& e : t.m.e) {
      if (e >= q) {
        e = static_cast<std::uint8_t>((e - 1) % (q - 1) + 1);
        changed = true;
      }
    }
  }
  if (changed) out.normalize(f);
  return out;
}

FqPoly FqPoly::monic(const FiniteField& f) const {
  if (terms_.empty() || terms_.front().c == 1) return *this;
  return scale(f.inv(terms_.front().c), f);
}

FqPoly FqPoly::rename(const std::array<int, kMaxVars>& map) const {
  FqPoly out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Term s;
    s.c = t.c;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.m.e[i]) s.m.e[map[i]] = t.m.e[i];
    }
    out.terms_.push_back(s);
  }
  // Order-preserving renaming keeps the lexicographic order.
  return out;
}

bool FqPoly::try_sqrt(const FiniteField& f, FqPoly& out) const {
  if (terms_.empty()) {
    out = {};
    return true;
  }
  if (f.characteristic() == 2) {
    // Frobenius: a square has only even exponents.
    FqPoly r;
    for (const Term& t : terms_) {
      Term s;
      for (int i = 0; i < kMaxVars; ++i) {
        if (t.m.e[i] % 2) return false;
        s.m.e[i] = t.m.e[i] / 2;
      }
      s.c = static_cast<Fq>(f.sqrt(t.c));
      r.terms_.push_back(s);
    }
    r.normalize(f);
    out = std::move(r);
    return true;
  }

  const Term& lead = terms_.front();
  Term root;
  for (int i = 0; i < kMaxVars; ++i) {
    if (lead.m.e[i] % 2) return false;
    root.m.e[i] = lead.m.e[i] / 2;
  }
  const std::int64_t s = f.sqrt(lead.c);
  if (s < 0) return false;
  root.c = static_cast<Fq>(s);
  const Fq inv_two_lead = f.inv(f.add(root.c, root.c));

  FqPoly r;
  r.terms_.push_back(root);
  const std::size_t limit = 4 * terms_.size() + 8;
  for (std::size_t iter = 0; iter < limit; ++iter) {
    const FqPoly rest = sub(r.mul(r, f), f);
    if (rest.is_zero()) {
      out = std::move(r);
      return true;
    }
    // The next root term t satisfies lt(rest) = 2 * lt(r) * t.
    const Term& lr = rest.terms_.front();
    Term t;
    for (int i = 0; i < kMaxVars; ++i) {
      if (lr.m.e[i] < root.m.e[i]) return false;
      t.m.e[i] = static_cast<std::uint8_t>(lr.m.e[i] - root.m.e[i]);
    }
    if (!(t.m < r.terms_.back().m)) return false;
    t.c = f.mul(lr.c, inv_two_lead);
    r.terms_.push_back(t);
  }
  return false;
}

Fq FqPoly::eval(const std::array<Fq, kMaxVars>& x, const FiniteField& f) const {
  Fq sum = 0;
  for (const Term& t : terms_) {
    Fq prod = t.c;
    for (int i = 0; i < kMaxVars && prod != 0; ++i) {
      for (int k = 0; k < t.m.e[i]; ++k) prod = f.mul(prod, x[i]);
    }
    sum = f.add(sum, prod);
  }
  return sum;
}

bool operator==(const FqPoly& a, const FqPoly& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const FqPoly& a, const FqPoly& b) {
  return std::lexicographical_compare_three_way(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const Term& x, const Term& y) {
        if (auto c = x.m <=> y.m; c != 0) return c;
        return x.c <=> y.c;
      });
}

}  // namespace graphhyp::detail
