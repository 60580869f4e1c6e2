#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace graphhyp {

/// Element of a FiniteField: the integer whose base-p digits are the
/// coefficients of the residue polynomial (lowest degree first). The prime
/// subfield is {0, ..., p-1}.
using Fq = std::uint32_t;

/// F_q for q = p^d <= 2^20. Prime fields use modular arithmetic; extension
/// fields use log/antilog tables built from a monic irreducible polynomial of
/// degree d.
class FiniteField {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// The field of order q with the default modulus (lexicographically
  /// smallest monic irreducible). Throws std::invalid_argument unless q is a
  /// prime power <= 2^20.
  static FiniteField of_order(std::uint64_t q);

  /// F_{p^d} reduced by `modulus` (d + 1 coefficients, lowest first, leading
  /// coefficient 1). Throws std::invalid_argument if it is not irreducible.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint64_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return d_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  /// Throws std::domain_error for zero.
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Fq from_int(std::int64_t c) const;
  /// Some s with s*s == a, or -1 if a is not a square.
  std::int64_t sqrt(Fq a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  FiniteField() = default;
  Fq digit_add(Fq a, Fq b, bool subtract) const;
  void build_tables();

  std::uint32_t p_ = 2;
  std::uint32_t d_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  // Extension fields only: exp_[i] = g^i for i in [0, 2(q-1)), log_[a] for a != 0.
  std::shared_ptr<const std::vector<Fq>> exp_;
  std::shared_ptr<const std::vector<std::uint32_t>> log_;
};

bool is_prime(std::uint64_t n);

/// All monic irreducible polynomials of degree d over F_p (coefficients
/// lowest first), in lexicographic order of their coefficient vectors read
/// from the constant term. Stops after `limit` results.
std::vector<std::vector<std::uint32_t>> irreducible_polynomials(std::uint32_t p, std::uint32_t d,
                                                                std::size_t limit = SIZE_MAX);

}  // namespace graphhyp
