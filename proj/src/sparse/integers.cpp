#include <algorithm>
#include <cmath>
#include <numeric>

#include "precision.hpp"
#include "sidon/numtheory.hpp"
#include "sidon/presentation.hpp"
#include "sidon/sidon.hpp"
#include "sidon/sparse.hpp"

namespace sidon {

namespace {

constexpr std::uint64_t kCyclicVerifyLimit = 1u << 26;

bool pair_sums_distinct(const std::vector<std::int64_t>& s) {
  std::vector<std::int64_t> sums;
  sums.reserve(s.size() * (s.size() + 1) / 2);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j) sums.push_back(s[i] + s[j]);
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

}  // namespace

bool is_sidon_integers(const std::vector<std::int64_t>& s_in) {
  std::vector<std::int64_t> s = s_in;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() < 2) return true;
  const std::uint64_t range = static_cast<std::uint64_t>(s.back() - s.front());
  const std::uint64_t modulus = 2 * range + 1;
  if (modulus > kCyclicVerifyLimit) return pair_sums_distinct(s);
  const auto g = AbelianGroup::cyclic(modulus);
  ElemSet e;
  for (auto x : s) e.push_back(static_cast<Elem>(x - s.front()));
  return is_sidon(g, e).is_sidon;
}

IntegerSidon log_primes(std::uint64_t x) {
  if (x < 2) throw PreconditionError("log_primes needs X >= 2");
  IntegerSidon out;
  const long double scale = 3.0L * static_cast<long double>(x) * static_cast<long double>(x);
  for (auto p : nt::primes_up_to(x)) {
    auto g = detail::round_guarded(scale * std::log(static_cast<long double>(p)), Rounding::floor, [&] {
      return detail::HP(3) * detail::HP(x) * detail::HP(x) * boost::multiprecision::log(detail::HP(p));
    });
    out.high_precision_recomputations += g.recomputed;
    out.set.push_back(g.value);
  }
  std::sort(out.set.begin(), out.set.end());
  out.sidon = is_sidon_integers(out.set);
  return out;
}

GroupSidon quotient_ring_primes(std::uint64_t m) {
  if (m < 4) throw PreconditionError("quotient_ring_primes needs m >= 4");
  if (m > (1u << 24)) throw PreconditionError("modulus too large for an explicit unit group");
  std::vector<std::uint64_t> units;
  for (std::uint64_t r = 1; r < m; ++r)
    if (nt::gcd(r, m) == 1) units.push_back(r);
  auto pres = present_abelian<std::uint64_t>(units, 1, [m](std::uint64_t a, std::uint64_t b) { return nt::mulmod(a, b, m); });
  GroupSidon out;
  out.group = pres.group;
  for (auto p : nt::primes_up_to(nt::isqrt(m))) {
    if (m % p == 0) continue;
    out.labels.push_back(std::to_string(p));
    out.values.push_back(static_cast<std::int64_t>(p % m));
    out.set.push_back(pres.index(p % m));
  }
  out.set = normalized(out.set);
  out.sidon = is_sidon(out.group, out.set).is_sidon;
  out.iso_note = "(Z/" + std::to_string(m) + ")^x presented as " + out.group.to_string();
  return out;
}

GaussianAngle gaussian_angle(std::uint64_t p, std::uint64_t n) {
  if (p % 4 != 1 || !nt::is_prime(p)) throw PreconditionError("gaussian_angle needs a prime p = 1 (mod 4)");
  GaussianAngle a;
  a.p = p;
  for (std::int64_t b = 1; b * b * 2 < static_cast<std::int64_t>(p); ++b) {
    const auto rest = static_cast<std::int64_t>(p) - b * b;
    const auto r = static_cast<std::int64_t>(nt::isqrt(static_cast<std::uint64_t>(rest)));
    if (r * r == rest) {
      a.re = r;
      a.im = b;
      break;
    }
  }
  // rho^2 then rho^4, exactly.
  const nt::i128 x2 = static_cast<nt::i128>(a.re) * a.re - static_cast<nt::i128>(a.im) * a.im;
  const nt::i128 y2 = 2 * static_cast<nt::i128>(a.re) * a.im;
  a.re4 = static_cast<std::int64_t>(x2 * x2 - y2 * y2);
  a.im4 = static_cast<std::int64_t>(2 * x2 * y2);
  const long double pi = 3.14159265358979323846264338327950288L;
  const long double phi = std::atan2(static_cast<long double>(a.im4), static_cast<long double>(a.re4)) / (2 * pi);
  a.phi = static_cast<double>(phi);
  a.element = detail::round_guarded(static_cast<long double>(n) * phi, Rounding::floor, [&] {
                return detail::HP(n) * boost::multiprecision::atan2(detail::HP(a.im4), detail::HP(a.re4)) /
                       (2 * detail::hp_pi());
              }).value;
  return a;
}

GaussianAngles gaussian_angles(std::uint64_t n) {
  if (n < 16) throw PreconditionError("gaussian_angles needs n >= 16");
  GaussianAngles out;
  for (auto p : nt::primes_up_to(nt::isqrt(n / 16))) {
    if (p % 4 != 1 || 16 * p * p > n) continue;
    out.primes.push_back(gaussian_angle(p, n));
    out.integers.set.push_back(out.primes.back().element);
  }
  std::sort(out.integers.set.begin(), out.integers.set.end());
  out.integers.sidon = is_sidon_integers(out.integers.set);
  const auto g = AbelianGroup::cyclic(n);
  ElemSet e;
  for (auto x : out.integers.set) e.push_back(static_cast<Elem>(x));
  out.sidon_mod_n = is_sidon(g, e).is_sidon;
  return out;
}

std::vector<std::pair<Fq, Fq>> cubic_zero_sum_pairs(const FiniteField& f, const std::vector<Fq>& u) {
  std::vector<Fq> s = u;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<std::pair<Fq, Fq>> out;
  for (Fq x : s) {
    const Fq y = f.neg(x);
    if (y < x) continue;
    if (std::binary_search(s.begin(), s.end(), y)) out.emplace_back(x, y);
  }
  return out;
}

CubicGraph cubic_graph(const FiniteField& f, const std::vector<Fq>& u) {
  if (f.characteristic() <= 3) throw PreconditionError("cubic graph needs characteristic > 3");
  const auto pairs = cubic_zero_sum_pairs(f, u);
  if (pairs.size() > 1) {
    std::string msg = "more than one pair with x + y = 0:";
    for (auto [x, y] : pairs) msg += " {" + std::to_string(x.code) + "," + std::to_string(y.code) + "}";
    throw PreconditionError(msg);
  }
  CubicGraph out;
  const unsigned d = f.degree();
  out.group = AbelianGroup(std::vector<std::uint64_t>(2 * d, f.characteristic()));
  std::vector<std::uint64_t> c(2 * d);
  for (Fq x : u) {
    const auto a = f.coeffs(x), b = f.coeffs(f.pow(x, 3));
    for (unsigned i = 0; i < d; ++i) {
      c[i] = a[i];
      c[d + i] = b[i];
    }
    out.set.push_back(out.group.encode(c));
  }
  out.set = normalized(out.set);
  out.sidon = is_sidon(out.group, out.set).is_sidon;
  return out;
}

std::vector<Fq> cubic_max_subset(const FiniteField& f) {
  std::vector<Fq> out;
  for (std::uint32_t c = 0; c < f.order(); ++c) {
    const Fq x{c};
    if (!(f.neg(x) < x)) out.push_back(x);
  }
  return out;
}

IntegerSidon perturb(const std::vector<std::int64_t>& s, const std::vector<int>& eps) {
  if (s.size() != eps.size()) throw PreconditionError("perturbation needs one epsilon per element");
  if (!is_sidon_integers(s)) throw PreconditionError("input set is not Sidon");
  IntegerSidon out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (eps[i] < -1 || eps[i] > 1) throw PreconditionError("epsilon values must lie in {-1, 0, 1}");
    out.set.push_back(5 * s[i] + eps[i]);
  }
  std::sort(out.set.begin(), out.set.end());
  out.sidon = is_sidon_integers(out.set);
  return out;
}

}  // namespace sidon
