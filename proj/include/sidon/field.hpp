#pragma once

// Finite fields GF(p^d) in polynomial representation.
//
// An element is stored as the integer code sum_i c_i p^i of its coefficient
// vector (c_0, ..., c_{d-1}) with respect to the basis 1, t, ..., t^{d-1},
// where t is a root of the modulus. Codes 0 and 1 are the field's zero and one.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sidon/errors.hpp"

namespace sidon {

struct Fq {
  std::uint32_t code = 0;
  friend bool operator==(Fq, Fq) = default;
  friend auto operator<=>(Fq, Fq) = default;
};

struct FieldLimits {
  std::uint64_t max_order = 1u << 20;
};

class FiniteField {
 public:
  /// Builds GF(p^d). Without an explicit modulus the lexicographically
  /// smallest monic irreducible of degree d is used, where polynomials are
  /// ordered by their coefficient vectors read from degree d-1 down to 0.
  /// The modulus is given low-degree first and must be monic of degree d.
  static FiniteField create(std::uint64_t p, unsigned d,
                            std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                            FieldLimits limits = {});

  std::uint32_t characteristic() const { return impl_->p; }
  unsigned degree() const { return impl_->d; }
  std::uint32_t order() const { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
  Fq generator() const { return impl_->generator; }

  Fq zero() const { return {0}; }
  Fq one() const { return {1}; }
  /// The root t of the modulus (equals the prime-field element 0 when d = 1).
  Fq theta() const { return impl_->d == 1 ? Fq{0} : Fq{impl_->p}; }
  /// Image of an integer in the prime subfield.
  Fq from_int(std::int64_t k) const;
  Fq from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(Fq x) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;
  Fq frobenius(Fq a) const { return pow(a, impl_->p); }

  /// Trace and norm to the subfield GF(p^e); the result is an element of this
  /// field fixed by x -> x^(p^e).
  Fq trace(Fq x, unsigned subfield_degree = 1) const;
  Fq norm(Fq x, unsigned subfield_degree = 1) const;
  bool in_subfield(Fq x, unsigned subfield_degree) const;

  /// Baby-step giant-step logarithm to the field's generator.
  std::uint64_t discrete_log(Fq x) const;
  /// Table lookup logarithm (used as an oracle and for bulk work).
  std::uint32_t table_log(Fq x) const;
  Fq exp(std::uint64_t k) const;

  std::uint64_t multiplicative_order(Fq x) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  struct Impl {
    std::uint32_t p = 0;
    unsigned d = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // monic, low degree first, size d+1
    Fq generator;
    std::vector<std::uint32_t> log;  // log[code], undefined at 0
    std::vector<std::uint32_t> exp;  // exp[k] for k in [0, q-1)
    std::vector<std::uint32_t> pow_p;  // p^i
  };
  explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  Fq poly_mul(const Impl& f, Fq a, Fq b) const;

  std::shared_ptr<const Impl> impl_;
};

/// Monic irreducibility over GF(p) (Rabin's test). Coefficients low degree first.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace sidon
