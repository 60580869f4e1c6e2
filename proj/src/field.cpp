#include "graphhyp/field.hpp"

#include <stdexcept>
#include <string>

namespace graphhyp {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(Fq a, std::uint32_t p, std::uint32_t d) {
  Digits out(d, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    out[i] = a % p;
    a /= p;
  }
  return out;
}

Fq from_digits(const Digits& digits, std::uint32_t p) {
  Fq a = 0;
  for (std::size_t i = digits.size(); i-- > 0;) a = a * p + digits[i];
  return a;
}

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m over F_p.
Digits poly_mod(Digits a, const Digits& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Digits poly_mul(const Digits& a, const Digits& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return out;
}

bool monic_irreducible(const Digits& m, std::uint32_t p) {
  const std::uint32_t d = static_cast<std::uint32_t>(m.size() - 1);
  if (m.back() != 1) return false;
  if (d <= 1) return d == 1;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (std::uint32_t k = 1; 2 * k <= d; ++k) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      Digits f = to_digits(static_cast<Fq>(code), p, k);
      f.push_back(1);
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> irreducible_polynomials(std::uint32_t p, std::uint32_t d,
                                                                std::size_t limit) {
  if (!is_prime(p) || d == 0) throw std::invalid_argument("irreducible_polynomials: need prime p and d >= 1");
  std::vector<std::vector<std::uint32_t>> out;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) total *= p;
  for (std::uint64_t code = 0; code < total && out.size() < limit; ++code) {
    Digits m = to_digits(static_cast<Fq>(code), p, d);
    m.push_back(1);
    if (monic_irreducible(m, p)) out.push_back(std::move(m));
  }
  return out;
}

FiniteField FiniteField::of_order(std::uint64_t q) {
  if (q < 2 || q > kMaxOrder) throw std::invalid_argument("field order out of range: " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t d = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++d;
  }
  if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  const auto polys = irreducible_polynomials(static_cast<std::uint32_t>(p), d, 1);
  return FiniteField(static_cast<std::uint32_t>(p), polys.front());
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (modulus_.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  for (auto c : modulus_) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (!monic_irreducible(modulus_, p)) throw std::invalid_argument("modulus is not monic irreducible");
  d_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  q_ = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    q_ *= p;
    if (q_ > kMaxOrder) throw std::invalid_argument("field order exceeds 2^20");
  }
  if (d_ > 1) build_tables();
}

void FiniteField::build_tables() {
  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(n);
  auto slow_pow = [&](Fq a, std::uint64_t e) {
    Digits result{1};
    Digits base = to_digits(a, p_, d_);
    trim(base);
    while (e > 0) {
      if (e & 1U) result = poly_mod(poly_mul(result, base, p_), modulus_, p_);
      base = poly_mod(poly_mul(base, base, p_), modulus_, p_);
      e >>= 1U;
    }
    result.resize(d_, 0);
    return from_digits(result, p_);
  };
  Fq generator = 0;
  for (Fq g = 2; g < q_; ++g) {
    bool primitive = true;
    for (std::uint64_t f : factors) {
      if (slow_pow(g, n / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }
  if (generator == 0) throw std::logic_error("no primitive element found");

  auto exp = std::make_shared<std::vector<Fq>>(2 * n);
  auto log = std::make_shared<std::vector<std::uint32_t>>(q_, 0);
  const Digits g = [&] {
    Digits x = to_digits(generator, p_, d_);
    trim(x);
    return x;
  }();
  Digits cur{1};
  for (std::uint64_t i = 0; i < n; ++i) {
    Digits padded = cur;
    padded.resize(d_, 0);
    const Fq value = from_digits(padded, p_);
    (*exp)[i] = value;
    (*exp)[i + n] = value;
    (*log)[value] = static_cast<std::uint32_t>(i);
    cur = poly_mod(poly_mul(cur, g, p_), modulus_, p_);
  }
  exp_ = std::move(exp);
  log_ = std::move(log);
}

Fq FiniteField::digit_add(Fq a, Fq b, bool subtract) const {
  if (p_ == 2) return a ^ b;
  Fq out = 0;
  Fq place = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    const Fq da = a % p_;
    const Fq db = b % p_;
    a /= p_;
    b /= p_;
    const Fq digit = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += digit * place;
    place *= p_;
  }
  return out;
}

Fq FiniteField::add(Fq a, Fq b) const {
  if (d_ == 1) {
    const Fq s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  return digit_add(a, b, false);
}

Fq FiniteField::sub(Fq a, Fq b) const {
  if (d_ == 1) return a >= b ? a - b : a + p_ - b;
  return digit_add(a, b, true);
}

Fq FiniteField::neg(Fq a) const { return sub(0, a); }

Fq FiniteField::mul(Fq a, Fq b) const {
  if (d_ == 1) return static_cast<Fq>(static_cast<std::uint64_t>(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  return (*exp_)[(*log_)[a] + (*log_)[b]];
}

Fq FiniteField::inv(Fq a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (d_ == 1) return pow(a, p_ - 2);
  const std::uint32_t n = static_cast<std::uint32_t>(q_ - 1);
  return (*exp_)[(n - (*log_)[a]) % n];
}

Fq FiniteField::pow(Fq a, std::uint64_t e) const {
  Fq result = 1;
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

Fq FiniteField::from_int(std::int64_t c) const {
  const std::int64_t r = c % static_cast<std::int64_t>(p_);
  return static_cast<Fq>(r < 0 ? r + p_ : r);
}

std::int64_t FiniteField::sqrt(Fq a) const {
  if (a == 0) return 0;
  if (p_ == 2) return pow(a, q_ / 2);
  if (d_ > 1) {
    const std::uint32_t l = (*log_)[a];
    if (l % 2 != 0) return -1;
    return (*exp_)[l / 2];
  }
  // Tonelli-Shanks.
  if (pow(a, (p_ - 1) / 2) != 1) return -1;
  std::uint64_t odd = p_ - 1;
  std::uint32_t twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  Fq z = 2;
  while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
  std::uint32_t m = twos;
  Fq c = pow(z, odd);
  Fq t = pow(a, odd);
  Fq r = pow(a, (odd + 1) / 2);
  while (t != 1) {
    std::uint32_t i = 0;
    for (Fq tt = t; tt != 1; tt = mul(tt, tt)) ++i;
    Fq b = c;
    for (std::uint32_t k = 0; k + i + 1 < m; ++k) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

}  // namespace graphhyp
