#include <algorithm>
#include <cmath>
#include <numeric>

#include "sidon/numtheory.hpp"
#include "sidon/presentation.hpp"
#include "sidon/sidon.hpp"
#include "sidon/sparse.hpp"

namespace sidon {

namespace {

using nt::i128;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 mod128(i128 a, i128 m) {
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

// Extended gcd on 128-bit values: u*a + v*b = g >= 0.
void ext_gcd128(i128 a, i128 b, i128& u, i128& v, i128& g) {
  i128 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const i128 q = floor_div(r0, r1);
    i128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
    t = t0 - q * t1;
    t0 = t1;
    t1 = t;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  u = s0;
  v = t0;
  g = r0;
}

}  // namespace

BinaryForm reduce_form(BinaryForm f) {
  i128 a = f.a, b = f.b, c = f.c;
  if (a <= 0 || c <= 0) throw PreconditionError("form is not positive definite");
  auto normalize = [&] {
    if (-a < b && b <= a) return;
    // b' = b + 2ar in (-a, a]
    const i128 r = floor_div(a - b, 2 * a);
    c = a * r * r + b * r + c;
    b = b + 2 * a * r;
  };
  normalize();
  while (a > c) {
    std::swap(a, c);
    b = -b;
    normalize();
  }
  if (a == c && b < 0) b = -b;
  return {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(c)};
}

BinaryForm compose_forms(const BinaryForm& f_in, const BinaryForm& g_in) {
  BinaryForm f = f_in, g = g_in;
  if (f.a > g.a) std::swap(f, g);
  const i128 a1 = f.a, b1 = f.b, a2 = g.a, b2 = g.b, c2 = g.c;
  if ((b1 + b2) % 2 != 0) throw PreconditionError("forms have different discriminants");
  const i128 s = (b1 + b2) / 2, n = b2 - s;
  i128 y1, d;
  if (a2 % a1 == 0) {
    y1 = 0;
    d = a1;
  } else {
    i128 u, v;
    ext_gcd128(a2, a1, u, v, d);
    y1 = u;
  }
  i128 x2, y2, d1;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    i128 u, v;
    ext_gcd128(s, d, u, v, d1);
    x2 = u;
    y2 = -v;
  }
  const i128 v1 = a1 / d1, v2 = a2 / d1;
  const i128 r = mod128(y1 * y2 * n - x2 * c2, v1);
  const i128 b3 = b2 + 2 * v2 * r;
  const i128 a3 = v1 * v2;
  const i128 c3 = (c2 * d1 + r * (b2 + v2 * r)) / v1;
  return reduce_form({static_cast<std::int64_t>(a3), static_cast<std::int64_t>(b3), static_cast<std::int64_t>(c3)});
}

QuadraticClassGroup::QuadraticClassGroup(std::int64_t discriminant) : disc_(discriminant) {
  if (disc_ >= 0 || nt::mod(disc_, 4) > 1) throw PreconditionError("discriminant must be negative and 0 or 1 mod 4");
  const std::int64_t n = -disc_;
  if (n > (std::int64_t{1} << 40)) throw PreconditionError("discriminant too large for form enumeration");
  // Reduced: |b| <= a <= c, b >= 0 when |b| = a or a = c; a <= sqrt(|disc|/3).
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - disc_;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      forms_.push_back({a, b, c});
    }
  }
  std::sort(forms_.begin(), forms_.end());
  auto pres = present_abelian<BinaryForm, BinaryFormHash>(forms_, identity(), compose_forms);
  group_ = pres.group;
  by_index_ = pres.element_at;
  for (const auto& [f, i] : pres.index_of) index_.emplace(f, i);
  generators_ = pres.generators;
}

BinaryForm QuadraticClassGroup::identity() const {
  const std::int64_t b = nt::mod(disc_, 2);
  return {1, b, (b * b - disc_) / 4};
}

Elem QuadraticClassGroup::index(const BinaryForm& f) const {
  const BinaryForm r = reduce_form(f);
  auto it = index_.find(r);
  if (it == index_.end() || f.b * f.b - 4 * f.a * f.c != disc_)
    throw PreconditionError("form is not a primitive form of this discriminant");
  return it->second;
}

std::string QuadraticClassGroup::iso_note() const {
  std::string s = "Cl(" + std::to_string(disc_) + ") of order " + std::to_string(forms_.size()) + " presented as " +
                  group_.to_string() + "; generators";
  for (const auto& g : generators_)
    s += " (" + std::to_string(g.a) + "," + std::to_string(g.b) + "," + std::to_string(g.c) + ")";
  return s;
}

std::int64_t fundamental_discriminant_imaginary(std::uint64_t d) {
  if (d == 0 || !nt::is_squarefree(d)) throw PreconditionError("D must be a positive squarefree integer");
  const auto sd = static_cast<std::int64_t>(d);
  return d % 4 == 3 ? -sd : -4 * sd;
}

std::optional<BinaryForm> prime_form(std::int64_t disc, std::uint64_t p) {
  if (nt::kronecker(disc, p) != 1) return std::nullopt;
  const auto sp = static_cast<std::int64_t>(p);
  for (std::int64_t b = 0; b <= sp; ++b) {
    const std::int64_t num = b * b - disc;
    if (num % (4 * sp) == 0) return BinaryForm{sp, b, num / (4 * sp)};
  }
  return std::nullopt;
}

ClassGroupPrimes class_group_primes(std::uint64_t d) {
  const std::int64_t disc = fundamental_discriminant_imaginary(d);
  ClassGroupPrimes out{QuadraticClassGroup(disc), {}, {}, {}, true};
  const auto& g = out.cl.group();
  out.result.group = g;
  out.result.iso_note = out.cl.iso_note();
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> classes;
  for (std::uint64_t p = 2; 16 * p * p * p * p < d; ++p) {
    if (!nt::is_prime(p)) continue;
    const auto f = prime_form(disc, p);
    if (!f) continue;
    out.split_primes.push_back(p);
    const Elem x = out.cl.index(*f);
    if (std::find(classes.begin(), classes.end(), x) != classes.end()) out.injective = false;
    classes.push_back(x);
    if (g.add(x, x) == 0) {
      out.discarded.emplace_back(p, "class has order dividing 2");
    } else if (in[x]) {
      out.discarded.emplace_back(p, "class already present");
    } else if (in[g.neg(x)]) {
      out.discarded.emplace_back(p, "inverse class present");
    } else {
      in[x] = 1;
      out.result.set.push_back(x);
      out.result.labels.push_back("(" + std::to_string(f->a) + "," + std::to_string(f->b) + "," + std::to_string(f->c) + ")");
      out.result.values.push_back(static_cast<std::int64_t>(p));
    }
  }
  out.result.set = normalized(out.result.set);
  out.result.sidon = is_sidon(g, out.result.set).is_sidon;
  return out;
}

}  // namespace sidon
