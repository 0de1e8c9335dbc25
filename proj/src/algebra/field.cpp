#include "sidon/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "sidon/numtheory.hpp"

namespace sidon {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = *nt::invmod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  if (d == 1) return true;
  const Poly x{0, 1};
  // x^(p^k) mod f, computed by repeated p-th powers.
  auto frob_power = [&](unsigned k) {
    Poly r = x;
    for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
    return r;
  };
  if (poly_sub(frob_power(d), x, p) != Poly{}) return false;
  for (auto r : nt::prime_divisors(d)) {
    Poly g = poly_gcd(f, poly_sub(frob_power(d / static_cast<unsigned>(r)), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FiniteField FiniteField::create(std::uint64_t p, unsigned d,
                                std::optional<std::vector<std::uint32_t>> modulus,
                                FieldLimits limits) {
  if (!nt::is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (d == 0) throw PreconditionError("field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) {
    q *= p;
    if (q > limits.max_order) throw PreconditionError("field order exceeds the configured cap");
  }
  auto impl = std::make_shared<Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->d = d;
  impl->q = static_cast<std::uint32_t>(q);
  for (unsigned i = 0, v = 1; i <= d; ++i, v *= static_cast<unsigned>(p)) impl->pow_p.push_back(v);

  if (modulus) {
    Poly m = *modulus;
    if (m.size() != d + 1 || m.back() != 1)
      throw PreconditionError("modulus must be monic of degree " + std::to_string(d));
    for (auto c : m)
      if (c >= p) throw PreconditionError("modulus coefficients must lie in [0, p)");
    if (!is_irreducible(m, impl->p)) throw PreconditionError("modulus is reducible");
    impl->modulus = std::move(m);
  } else {
    // Enumerate lower coefficient vectors as base-p integers with c_{d-1} most significant.
    for (std::uint64_t code = 0; code < q; ++code) {
      Poly m(d + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        m[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      m[d] = 1;
      if (is_irreducible(m, impl->p)) {
        impl->modulus = std::move(m);
        break;
      }
    }
  }

  FiniteField tmp(impl);
  const auto primes = nt::prime_divisors(q > 2 ? q - 1 : 1);
  std::uint32_t gen = 1;
  if (q > 2) {
    for (gen = 1; gen < q; ++gen) {
      bool ok = true;
      for (auto r : primes) {
        Fq acc{1}, base{gen};
        std::uint64_t e = (q - 1) / r;
        while (e) {
          if (e & 1) acc = tmp.poly_mul(*impl, acc, base);
          base = tmp.poly_mul(*impl, base, base);
          e >>= 1;
        }
        if (acc.code == 1) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
  }
  impl->generator = Fq{gen};

  impl->exp.resize(q - 1);
  impl->log.assign(q, 0);
  Fq cur{1};
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    impl->exp[k] = cur.code;
    impl->log[cur.code] = k;
    cur = tmp.poly_mul(*impl, cur, impl->generator);
  }
  return FiniteField(std::move(impl));
}

Fq FiniteField::poly_mul(const Impl& f, Fq a, Fq b) const {
  if (a.code == 0 || b.code == 0) return {0};
  const unsigned d = f.d;
  const std::uint32_t p = f.p;
  std::uint64_t prod[64] = {};
  std::uint32_t ca[32], cb[32];
  for (unsigned i = 0; i < d; ++i) {
    ca[i] = a.code / f.pow_p[i] % p;
    cb[i] = b.code / f.pow_p[i] % p;
  }
  for (unsigned i = 0; i < d; ++i) {
    if (!ca[i]) continue;
    for (unsigned j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p;
  }
  for (unsigned k = 2 * d - 1; k-- > d;) {
    const std::uint64_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    // t^k = t^(k-d) * t^d and t^d = -sum m_i t^i.
    for (unsigned i = 0; i < d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - f.modulus[i]) * c) % p;
  }
  std::uint32_t code = 0;
  for (unsigned i = 0; i < d; ++i) code += static_cast<std::uint32_t>(prod[i]) * f.pow_p[i];
  return {code};
}

Fq FiniteField::from_int(std::int64_t k) const {
  return {static_cast<std::uint32_t>(nt::mod(k, impl_->p))};
}

Fq FiniteField::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > impl_->d) throw PreconditionError("too many coefficients for field element");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= impl_->p) throw PreconditionError("coefficient out of range");
    code += coeffs[i] * impl_->pow_p[i];
  }
  return {code};
}

std::vector<std::uint32_t> FiniteField::coeffs(Fq x) const {
  std::vector<std::uint32_t> c(impl_->d);
  for (unsigned i = 0; i < impl_->d; ++i) c[i] = x.code / impl_->pow_p[i] % impl_->p;
  return c;
}

Fq FiniteField::add(Fq a, Fq b) const {
  const std::uint32_t p = impl_->p;
  if (impl_->d == 1) return {(a.code + b.code) % p};
  std::uint32_t code = 0;
  for (unsigned i = 0; i < impl_->d; ++i) {
    const std::uint32_t w = impl_->pow_p[i];
    code += ((a.code / w + b.code / w) % p) * w;
  }
  return {code};
}

Fq FiniteField::neg(Fq a) const {
  const std::uint32_t p = impl_->p;
  std::uint32_t code = 0;
  for (unsigned i = 0; i < impl_->d; ++i) {
    const std::uint32_t w = impl_->pow_p[i];
    code += ((p - a.code / w % p) % p) * w;
  }
  return {code};
}

Fq FiniteField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FiniteField::mul(Fq a, Fq b) const {
  if (a.code == 0 || b.code == 0) return {0};
  const std::uint32_t n = impl_->q - 1;
  std::uint32_t k = impl_->log[a.code] + impl_->log[b.code];
  if (k >= n) k -= n;
  return {impl_->exp[k]};
}

Fq FiniteField::inv(Fq a) const {
  if (a.code == 0) throw PreconditionError("inversion of zero");
  const std::uint32_t n = impl_->q - 1;
  const std::uint32_t l = impl_->log[a.code];
  return {impl_->exp[l == 0 ? 0 : n - l]};
}

Fq FiniteField::pow(Fq a, std::uint64_t e) const {
  if (a.code == 0) return e == 0 ? Fq{1} : Fq{0};
  const std::uint64_t n = impl_->q - 1;
  return {impl_->exp[static_cast<std::uint64_t>(impl_->log[a.code]) * (e % n) % n]};
}

Fq FiniteField::exp(std::uint64_t k) const { return {impl_->exp[k % (impl_->q - 1)]}; }

std::uint32_t FiniteField::table_log(Fq x) const {
  if (x.code == 0) throw PreconditionError("logarithm of zero");
  return impl_->log[x.code];
}

Fq FiniteField::trace(Fq x, unsigned e) const {
  if (e == 0 || impl_->d % e != 0) throw PreconditionError("subfield degree must divide the field degree");
  const std::uint64_t qe = nt::ipow(impl_->p, e);
  Fq acc{0}, cur = x;
  for (unsigned i = 0; i < impl_->d / e; ++i) {
    acc = add(acc, cur);
    cur = pow(cur, qe);
  }
  return acc;
}

Fq FiniteField::norm(Fq x, unsigned e) const {
  if (e == 0 || impl_->d % e != 0) throw PreconditionError("subfield degree must divide the field degree");
  const std::uint64_t qe = nt::ipow(impl_->p, e);
  Fq acc{1}, cur = x;
  for (unsigned i = 0; i < impl_->d / e; ++i) {
    acc = mul(acc, cur);
    cur = pow(cur, qe);
  }
  return acc;
}

bool FiniteField::in_subfield(Fq x, unsigned e) const {
  return pow(x, nt::ipow(impl_->p, e)) == x;
}

std::uint64_t FiniteField::discrete_log(Fq x) const {
  if (x.code == 0) throw PreconditionError("discrete log of zero");
  const std::uint64_t n = impl_->q - 1;
  const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<std::uint32_t, std::uint64_t> baby;
  baby.reserve(m * 2);
  Fq cur{1};
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur.code, j);
    cur = poly_mul(*impl_, cur, impl_->generator);
  }
  // cur = g^m; giant factor g^{-m}.
  Fq giant = inv(cur);
  Fq y = x;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(y.code); it != baby.end()) return (i * m + it->second) % n;
    y = poly_mul(*impl_, y, giant);
  }
  throw std::logic_error("discrete_log: generator does not generate the multiplicative group");
}

std::uint64_t FiniteField::multiplicative_order(Fq x) const {
  if (x.code == 0) throw PreconditionError("order of zero");
  std::uint64_t ord = impl_->q - 1;
  for (auto r : nt::prime_divisors(ord == 0 ? 1 : ord)) {
    while (ord % r == 0 && pow(x, ord / r) == one()) ord /= r;
  }
  return ord;
}

}  // namespace sidon
