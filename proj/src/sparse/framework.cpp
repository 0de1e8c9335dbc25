#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "precision.hpp"
#include "sidon/numtheory.hpp"
#include "sidon/presentation.hpp"
#include "sidon/sidon.hpp"
#include "sidon/sparse.hpp"

namespace sidon {

namespace {

using detail::HP;
using nt::i128;

constexpr std::size_t kMaxComponents = 4;
constexpr std::size_t kMaxExactInts = 8;
constexpr std::uint64_t kGroupVerifyLimit = 1u << 26;
const HP kCircleTol("1e-50");

using RoundKey = std::array<std::int64_t, kMaxComponents>;
using ExactKey = std::array<std::int64_t, kMaxExactInts>;

// Generator data of one prime ideal, enough to evaluate every component.
struct Source {
  std::string label;
  std::uint64_t norm = 0;
  std::int64_t gx = 0, gy = 0;  // Gaussian generator
  std::optional<BinaryForm> form;
  std::optional<HP> log_ratio;  // log|pi / conj(pi)| for real quadratic fields
  std::string reason;           // set when phi cannot be evaluated
};

Source make_source(std::string label, std::uint64_t norm, std::int64_t gx = 0, std::int64_t gy = 0,
                   std::optional<BinaryForm> form = std::nullopt) {
  Source s;
  s.label = std::move(label);
  s.norm = norm;
  s.gx = gx;
  s.gy = gy;
  s.form = form;
  return s;
}

struct Ideal {
  Source src;
  ExactKey z{};
  HP t = 0;  // circle value of a log_ratio component
  RoundKey point{};
};

std::pair<std::int64_t, std::int64_t> primitive(i128 x, i128 y) {
  i128 a = x < 0 ? -x : x, b = y < 0 ? -y : y;
  while (b) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  return {static_cast<std::int64_t>(x / a), static_cast<std::int64_t>(y / a)};
}

std::pair<std::int64_t, std::int64_t> fourth_power_direction(std::int64_t x, std::int64_t y) {
  const i128 x2 = static_cast<i128>(x) * x - static_cast<i128>(y) * y, y2 = 2 * static_cast<i128>(x) * y;
  const auto [u, v] = primitive(x2, y2);
  return primitive(static_cast<i128>(u) * u - static_cast<i128>(v) * v, 2 * static_cast<i128>(u) * v);
}

HP circle(HP t) {
  t -= boost::multiprecision::floor(t);
  if (t > 1 - kCircleTol || t < kCircleTol) t = 0;
  return t;
}

bool circle_equal(const HP& a, const HP& b) {
  const HP d = boost::multiprecision::abs(a - b);
  return d < kCircleTol || d > 1 - kCircleTol;
}

class Evaluator {
 public:
  explicit Evaluator(const FrameworkSpec& spec) : spec_(spec) {
    std::size_t off = 0;
    for (const auto& c : spec.components) {
      offsets_.push_back(off);
      off += c.kind == ComponentKind::arg4 ? 2 : (c.kind == ComponentKind::log_ratio ? 0 : 1);
      if (c.kind == ComponentKind::residue) residue_groups_.emplace(c.modulus, unit_group(c.modulus));
    }
    if (spec.field == NumberField::imaginary_quadratic)
      cl_.emplace(fundamental_discriminant_imaginary(spec.d));
  }

  const std::optional<QuadraticClassGroup>& class_group() const { return cl_; }
  void set_regulator(HP r) { regulator_ = r; }
  std::uint64_t log_ratio_modulus() const { return log_ratio_m_; }
  std::uint64_t recomputations() const { return recomputed_; }
  std::uint64_t ties() const { return ties_; }

  bool excluded_by_residue(std::uint64_t p) const {
    for (const auto& c : spec_.components)
      if (c.kind == ComponentKind::residue && c.modulus % p == 0) return true;
    return false;
  }

  void evaluate(Ideal& id) {
    for (std::size_t ci = 0; ci < spec_.components.size(); ++ci) {
      const auto& c = spec_.components[ci];
      const std::size_t o = offsets_[ci];
      switch (c.kind) {
        case ComponentKind::log_norm: {
          const auto n = id.src.norm;
          id.z[o] = static_cast<std::int64_t>(n);
          const long double approx = static_cast<long double>(c.scale_num) / static_cast<long double>(c.scale_den) *
                                     std::log(static_cast<long double>(n));
          id.point[ci] = take(detail::round_guarded(approx, spec_.rounding, [&] {
            return HP(c.scale_num) / HP(c.scale_den) * boost::multiprecision::log(HP(n));
          }));
          break;
        }
        case ComponentKind::residue: {
          const auto r = static_cast<std::int64_t>(id.src.norm % c.modulus);
          id.z[o] = r;
          id.point[ci] = r;
          break;
        }
        case ComponentKind::arg4: {
          const auto [x, y] = fourth_power_direction(id.src.gx, id.src.gy);
          id.z[o] = x;
          id.z[o + 1] = y;
          id.point[ci] = round_angle(x, y, c.modulus);
          break;
        }
        case ComponentKind::class_group: {
          const Elem e = cl_->index(*id.src.form);
          id.z[o] = e;
          id.point[ci] = e;
          break;
        }
        case ComponentKind::log_ratio: {
          id.t = circle(*id.src.log_ratio / regulator_);
          // t vanishes exactly for ramified and inert primes and is irrational otherwise.
          if (id.t == 0) {
            id.point[ci] = 0;
            break;
          }
          const HP v = HP(log_ratio_m_) * id.t;
          id.point[ci] = nt::mod(take(detail::round_guarded(static_cast<long double>(v), spec_.rounding, [&] { return v; })),
                                 static_cast<std::int64_t>(log_ratio_m_));
          break;
        }
      }
    }
  }

  void fix_log_ratio_modulus() {
    for (const auto& c : spec_.components)
      if (c.kind == ComponentKind::log_ratio)
        log_ratio_m_ = c.modulus ? c.modulus : static_cast<std::uint64_t>(boost::multiprecision::ceil(regulator_));
  }

  // Exact value of -phi.
  void negate(const Ideal& a, ExactKey& z, HP& t) const {
    z = a.z;
    t = circle(-a.t);
    for (std::size_t ci = 0; ci < spec_.components.size(); ++ci) {
      const auto& c = spec_.components[ci];
      const std::size_t o = offsets_[ci];
      switch (c.kind) {
        case ComponentKind::log_norm: z[o] = -a.z[o]; break;
        case ComponentKind::residue: z[o] = static_cast<std::int64_t>(*nt::invmod(static_cast<std::uint64_t>(a.z[o]), c.modulus)); break;
        case ComponentKind::arg4: z[o + 1] = -a.z[o + 1]; break;
        case ComponentKind::class_group: z[o] = cl_->group().neg(static_cast<Elem>(a.z[o])); break;
        case ComponentKind::log_ratio: break;
      }
    }
  }

  // Exact value of phi(a) + phi(b); the circle part is returned separately.
  ExactKey exact_sum(const Ideal& a, const Ideal& b) const {
    ExactKey z{};
    for (std::size_t ci = 0; ci < spec_.components.size(); ++ci) {
      const auto& c = spec_.components[ci];
      const std::size_t o = offsets_[ci];
      switch (c.kind) {
        case ComponentKind::log_norm: z[o] = a.z[o] * b.z[o]; break;
        case ComponentKind::residue: z[o] = static_cast<std::int64_t>(nt::mulmod(a.z[o], b.z[o], c.modulus)); break;
        case ComponentKind::arg4: {
          const auto [x, y] = primitive(static_cast<i128>(a.z[o]) * b.z[o] - static_cast<i128>(a.z[o + 1]) * b.z[o + 1],
                                        static_cast<i128>(a.z[o]) * b.z[o + 1] + static_cast<i128>(a.z[o + 1]) * b.z[o]);
          z[o] = x;
          z[o + 1] = y;
          break;
        }
        case ComponentKind::class_group:
          z[o] = cl_->group().add(static_cast<Elem>(a.z[o]), static_cast<Elem>(b.z[o]));
          break;
        case ComponentKind::log_ratio: break;
      }
    }
    return z;
  }

  RoundKey round_sum(const Ideal& a, const Ideal& b) const {
    RoundKey r{};
    for (std::size_t ci = 0; ci < spec_.components.size(); ++ci) {
      const auto& c = spec_.components[ci];
      const auto x = a.point[ci], y = b.point[ci];
      switch (c.kind) {
        case ComponentKind::log_norm: r[ci] = x + y; break;
        case ComponentKind::residue: r[ci] = static_cast<std::int64_t>(nt::mulmod(x, y, c.modulus)); break;
        case ComponentKind::arg4: r[ci] = (x + y) % static_cast<std::int64_t>(c.modulus); break;
        case ComponentKind::class_group: r[ci] = cl_->group().add(static_cast<Elem>(x), static_cast<Elem>(y)); break;
        case ComponentKind::log_ratio: r[ci] = (x + y) % static_cast<std::int64_t>(log_ratio_m_); break;
      }
    }
    return r;
  }

  bool has_circle() const {
    return std::any_of(spec_.components.begin(), spec_.components.end(),
                       [](const auto& c) { return c.kind == ComponentKind::log_ratio; });
  }

  // Cyclic orders of the verification group and the coordinates of a point in it.
  std::vector<std::uint64_t> cyclic_orders(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) const {
    std::vector<std::uint64_t> out;
    for (std::size_t ci = 0; ci < spec_.components.size(); ++ci) {
      const auto& c = spec_.components[ci];
      switch (c.kind) {
        case ComponentKind::log_norm: out.push_back(2 * static_cast<std::uint64_t>(hi[ci] - lo[ci]) + 1); break;
        case ComponentKind::residue:
          for (auto f : residue_groups_.at(c.modulus).group.factors()) out.push_back(f);
          break;
        case ComponentKind::arg4: out.push_back(c.modulus); break;
        case ComponentKind::class_group:
          for (auto f : cl_->group().factors()) out.push_back(f);
          break;
        case ComponentKind::log_ratio: out.push_back(log_ratio_m_); break;
      }
    }
    return out;
  }

  std::vector<std::uint64_t> coordinates(const RoundKey& p, const std::vector<std::int64_t>& lo) const {
    std::vector<std::uint64_t> out;
    for (std::size_t ci = 0; ci < spec_.components.size(); ++ci) {
      const auto& c = spec_.components[ci];
      switch (c.kind) {
        case ComponentKind::log_norm: out.push_back(static_cast<std::uint64_t>(p[ci] - lo[ci])); break;
        case ComponentKind::residue: {
          const auto& g = residue_groups_.at(c.modulus);
          for (auto x : g.group.decode(g.index(static_cast<std::uint64_t>(p[ci])))) out.push_back(x);
          break;
        }
        case ComponentKind::class_group:
          for (auto x : cl_->group().decode(static_cast<Elem>(p[ci]))) out.push_back(x);
          break;
        default: out.push_back(static_cast<std::uint64_t>(p[ci])); break;
      }
    }
    return out;
  }

 private:
  static Presentation<std::uint64_t> unit_group(std::uint64_t m) {
    if (m > (1u << 22)) throw PreconditionError("residue modulus too large");
    std::vector<std::uint64_t> units;
    for (std::uint64_t r = 1; r < m; ++r)
      if (nt::gcd(r, m) == 1) units.push_back(r);
    return present_abelian<std::uint64_t>(units, 1, [m](std::uint64_t a, std::uint64_t b) { return nt::mulmod(a, b, m); });
  }

  std::int64_t take(const detail::Guarded& g) {
    recomputed_ += g.recomputed;
    ties_ += g.tie;
    return g.value;
  }

  // Rounded n * arg(z) / 2 pi on Z/n for a primitive direction z.
  std::int64_t round_angle(std::int64_t x, std::int64_t y, std::uint64_t n) {
    const auto sn = static_cast<std::int64_t>(n);
    // Multiples of pi/4 are the only rational angles of Gaussian integers.
    if (x == 0 || y == 0 || std::abs(x) == std::abs(y)) {
      static const std::array<std::pair<int, int>, 8> dirs{{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
      const int k = static_cast<int>(std::find(dirs.begin(), dirs.end(), std::pair<int, int>(x, y)) - dirs.begin());
      const i128 num = static_cast<i128>(n) * k;
      auto q = static_cast<std::int64_t>(num / 8);
      const auto rem = static_cast<int>(num % 8);
      if (spec_.rounding == Rounding::nearest) {
        if (rem > 4) ++q;
        if (rem == 4) ++ties_;
      }
      return nt::mod(q, sn);
    }
    const long double two_pi = 6.28318530717958647692528676655900577L;
    long double phi = std::atan2(static_cast<long double>(y), static_cast<long double>(x)) / two_pi;
    if (phi < 0) phi += 1;
    const auto v = take(detail::round_guarded(static_cast<long double>(n) * phi, spec_.rounding, [&] {
      HP a = boost::multiprecision::atan2(HP(y), HP(x)) / (2 * detail::hp_pi());
      if (a < 0) a += 1;
      return HP(n) * a;
    }));
    return nt::mod(v, sn);
  }

  const FrameworkSpec& spec_;
  std::vector<std::size_t> offsets_;
  std::map<std::uint64_t, Presentation<std::uint64_t>> residue_groups_;
  std::optional<QuadraticClassGroup> cl_;
  HP regulator_ = 1;
  std::uint64_t log_ratio_m_ = 0;
  std::uint64_t recomputed_ = 0, ties_ = 0;
};

void validate(const FrameworkSpec& spec) {
  if (!(spec.bound >= 2)) throw PreconditionError("framework bound R must be at least 2");
  if (spec.components.empty() || spec.components.size() > kMaxComponents)
    throw PreconditionError("framework needs between 1 and 4 components");
  std::size_t ratios = 0, classes = 0, ints = 0;
  for (const auto& c : spec.components) {
    switch (c.kind) {
      case ComponentKind::log_norm:
        if (c.scale_num == 0 || c.scale_den == 0) throw PreconditionError("log_norm scale must be positive");
        ++ints;
        break;
      case ComponentKind::residue:
        if (spec.field != NumberField::rationals) throw PreconditionError("residue components need the rational field");
        if (c.modulus < 2) throw PreconditionError("residue modulus must be at least 2");
        ++ints;
        break;
      case ComponentKind::arg4:
        if (spec.field != NumberField::gaussian) throw PreconditionError("arg4 components need the Gaussian field");
        if (c.modulus < 1) throw PreconditionError("arg4 modulus must be positive");
        ints += 2;
        break;
      case ComponentKind::class_group:
        if (spec.field != NumberField::imaginary_quadratic)
          throw PreconditionError("class components need an imaginary quadratic field");
        ++classes;
        ++ints;
        break;
      case ComponentKind::log_ratio:
        if (spec.field != NumberField::real_quadratic) throw PreconditionError("log_ratio components need a real quadratic field");
        ++ratios;
        break;
    }
  }
  if (ratios > 1 || classes > 1) throw PreconditionError("at most one class and one log_ratio component");
  if (ints > kMaxExactInts) throw PreconditionError("too many components");
  if ((spec.field == NumberField::imaginary_quadratic || spec.field == NumberField::real_quadratic) && spec.d < 2 &&
      !(spec.field == NumberField::imaginary_quadratic && spec.d == 1))
    throw PreconditionError("quadratic field needs a squarefree D");
}

std::vector<Source> prime_ideals(const FrameworkSpec& spec, const Evaluator& ev, detail::HP& regulator) {
  const auto r = static_cast<std::uint64_t>(std::floor(spec.bound));
  std::vector<Source> out;
  auto coprime = [&](std::uint64_t n) { return nt::gcd(n, spec.conductor) == 1; };
  const auto primes = nt::primes_up_to(r);
  switch (spec.field) {
    case NumberField::rationals:
      for (auto p : primes)
        if (coprime(p) && !ev.excluded_by_residue(p)) out.push_back(make_source(std::to_string(p), p));
      break;
    case NumberField::gaussian:
      for (auto p : primes) {
        if (!coprime(p)) continue;
        if (p == 2) {
          out.push_back(make_source("1+1i", 2, 1, 1));
        } else if (p % 4 == 1) {
          const auto g = gaussian_angle(p, 1);
          out.push_back(make_source(std::to_string(g.re) + "+" + std::to_string(g.im) + "i", p, g.re, g.im));
          out.push_back(make_source(std::to_string(g.re) + "-" + std::to_string(g.im) + "i", p, g.re, -g.im));
        } else if (p * p <= r) {
          out.push_back(make_source(std::to_string(p), p * p, static_cast<std::int64_t>(p), 0));
        }
      }
      break;
    case NumberField::imaginary_quadratic: {
      const auto disc = ev.class_group()->discriminant();
      for (auto p : primes) {
        if (!coprime(p)) continue;
        const auto sp = static_cast<std::int64_t>(p);
        const int k = nt::kronecker(disc, p);
        auto label = [](const BinaryForm& f) {
          return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
        };
        if (k == 1) {
          const auto f = *prime_form(disc, p);
          const BinaryForm g{f.a, -f.b, f.c};
          out.push_back(make_source(label(f), p, 0, 0, f));
          out.push_back(make_source(label(g), p, 0, 0, g));
        } else if (k == 0) {
          for (std::int64_t b = 0; b <= sp; ++b)
            if ((b * b - disc) % (4 * sp) == 0) {
              const BinaryForm f{sp, b, (b * b - disc) / (4 * sp)};
              out.push_back(make_source(label(f), p, 0, 0, f));
              break;
            }
        } else if (p * p <= r) {
          out.push_back(make_source(std::to_string(p), p * p, 0, 0, ev.class_group()->identity()));
        }
      }
      break;
    }
    case NumberField::real_quadratic: {
      const std::int64_t disc = spec.d % 4 == 1 ? static_cast<std::int64_t>(spec.d) : 4 * static_cast<std::int64_t>(spec.d);
      std::vector<std::uint64_t> split;
      for (auto p : primes)
        if (coprime(p) && nt::kronecker(disc, p) == 1) split.push_back(p);
      const auto logs = detail::split_logs(spec.d, split);
      regulator = logs.regulator;
      const std::string root = "*sqrt(" + std::to_string(spec.d) + ")";
      for (auto p : primes) {
        if (!coprime(p)) continue;
        const int k = nt::kronecker(disc, p);
        if (k == 1) {
          auto it = logs.log_ratio.find(p);
          if (it == logs.log_ratio.end()) {
            Source s = make_source("p" + std::to_string(p), p);
            s.reason = "no element of norm +-" + std::to_string(p) + " in Z[sqrt(D)]";
            out.push_back(s);
            out.push_back(s);
            continue;
          }
          const auto& [a, b] = logs.generator.at(p);
          Source s = make_source(a + "+" + b + root, p);
          s.log_ratio = it->second;
          out.push_back(s);
          s.label = a + "-" + b + root;
          s.log_ratio = -it->second;
          out.push_back(s);
        } else if (k == 0) {
          // pi and its conjugate differ by a unit, so phi vanishes.
          Source s = make_source("ramified " + std::to_string(p), p);
          s.log_ratio = HP(0);
          out.push_back(s);
        } else if (p * p <= r) {
          Source s = make_source(std::to_string(p), p * p);
          s.log_ratio = HP(0);
          out.push_back(s);
        }
      }
      break;
    }
  }
  if (out.size() > spec.max_primes)
    throw PreconditionError("|P_R| = " + std::to_string(out.size()) + " exceeds the cap of " + std::to_string(spec.max_primes));
  return out;
}

}  // namespace

FrameworkResult framework_build(const FrameworkSpec& spec) {
  validate(spec);
  Evaluator ev(spec);
  HP regulator = 1;
  const auto sources = prime_ideals(spec, ev, regulator);
  ev.set_regulator(regulator);
  ev.fix_log_ratio_modulus();

  FrameworkResult res;
  res.log_ratio_modulus = ev.log_ratio_modulus();
  std::vector<Ideal> ideals;
  std::vector<std::size_t> kept;
  for (const auto& s : sources) {
    FrameworkIdeal fi;
    fi.label = s.label;
    fi.norm = s.norm;
    Ideal id{s};
    if (!s.reason.empty()) {
      fi.reason = s.reason;
    } else {
      ev.evaluate(id);
      fi.point.assign(id.point.begin(), id.point.begin() + static_cast<std::ptrdiff_t>(spec.components.size()));
      ExactKey nz;
      HP nt_;
      ev.negate(id, nz, nt_);
      if (nz == id.z && circle_equal(nt_, id.t)) {
        fi.reason = "2 phi = 0";
      } else if (std::any_of(kept.begin(), kept.end(), [&](std::size_t j) {
                   return ideals[j].z == nz && circle_equal(ideals[j].t, nt_);
                 })) {
        fi.reason = "-phi already present";
      } else {
        fi.kept = true;
        kept.push_back(ideals.size());
      }
    }
    ideals.push_back(std::move(id));
    res.ideals.push_back(std::move(fi));
  }
  res.high_precision_recomputations = ev.recomputations();
  res.ties = ev.ties();

  // Pairs {i <= j} of kept ideals.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(kept.size() * (kept.size() + 1) / 2);
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = a; b < kept.size(); ++b)
      pairs.emplace_back(static_cast<std::uint32_t>(kept[a]), static_cast<std::uint32_t>(kept[b]));
  auto tsum = [&](const std::pair<std::uint32_t, std::uint32_t>& q) { return circle(ideals[q.first].t + ideals[q.second].t); };
  auto tsum_d = [&](const std::pair<std::uint32_t, std::uint32_t>& q) {
    double s = static_cast<double>(ideals[q.first].t) + static_cast<double>(ideals[q.second].t);
    if (s >= 1 - 1e-12) s -= 1;
    return s;
  };
  auto rkey = [&](const auto& q) { return ev.round_sum(ideals[q.first], ideals[q.second]); };
  auto zkey = [&](const auto& q) { return ev.exact_sum(ideals[q.first], ideals[q.second]); };

  // Sidon in the lattice and check (i): equal rounded sums force equal exact sums.
  std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) { return rkey(x) < rkey(y); });
  res.sidon = true;
  res.check_i = true;
  for (std::size_t a = 0; a < pairs.size();) {
    std::size_t b = a + 1;
    const auto key = rkey(pairs[a]);
    while (b < pairs.size() && rkey(pairs[b]) == key) ++b;
    if (b - a > 1) {
      res.sidon = false;
      const auto z0 = zkey(pairs[a]);
      const HP t0 = tsum(pairs[a]);
      for (std::size_t c = a + 1; c < b && res.check_i; ++c)
        if (zkey(pairs[c]) != z0 || !circle_equal(tsum(pairs[c]), t0)) res.check_i = false;
    }
    a = b;
  }

  // Check (ii): distinct pairs never have equal exact sums.
  const bool circ = ev.has_circle();
  std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    const auto zx = zkey(x), zy = zkey(y);
    if (zx != zy) return zx < zy;
    return circ && tsum_d(x) < tsum_d(y);
  });
  res.check_ii = true;
  for (std::size_t a = 0; a < pairs.size() && res.check_ii;) {
    std::size_t b = a + 1;
    const auto key = zkey(pairs[a]);
    while (b < pairs.size() && zkey(pairs[b]) == key) ++b;
    if (!circ) {
      if (b - a > 1) res.check_ii = false;
    } else {
      // Windows of nearly equal circle values, compared at full precision.
      for (std::size_t w = a; w < b && res.check_ii;) {
        std::size_t e = w + 1;
        while (e < b && tsum_d(pairs[e]) - tsum_d(pairs[e - 1]) < 1e-9) ++e;
        for (std::size_t x = w; x < e && res.check_ii; ++x)
          for (std::size_t y = x + 1; y < e; ++y)
            if (circle_equal(tsum(pairs[x]), tsum(pairs[y]))) {
              res.check_ii = false;
              break;
            }
        w = e;
      }
      if (b - a > 1 && res.check_ii && circle_equal(tsum(pairs[a]), tsum(pairs[b - 1]))) res.check_ii = false;
    }
    a = b;
  }

  for (auto i : kept)
    res.points.emplace_back(ideals[i].point.begin(), ideals[i].point.begin() + static_cast<std::ptrdiff_t>(spec.components.size()));

  // Finite group check when the folded group is small enough.
  if (!kept.empty()) {
    const std::size_t k = spec.components.size();
    std::vector<std::int64_t> lo(k, 0), hi(k, 0);
    for (std::size_t ci = 0; ci < k; ++ci) {
      lo[ci] = hi[ci] = ideals[kept[0]].point[ci];
      for (auto i : kept) {
        lo[ci] = std::min(lo[ci], ideals[i].point[ci]);
        hi[ci] = std::max(hi[ci], ideals[i].point[ci]);
      }
    }
    const auto orders = ev.cyclic_orders(lo, hi);
    long double total = 1;
    for (auto o : orders) total *= static_cast<long double>(o);
    if (total <= static_cast<long double>(kGroupVerifyLimit)) {
      const CyclicProductIso iso(orders);
      res.group = iso.target();
      for (auto i : kept) res.set.push_back(iso.forward(ev.coordinates(ideals[i].point, lo)));
      const std::size_t distinct = normalized(res.set).size();
      res.set = normalized(res.set);
      res.group_verified = true;
      res.sidon = res.sidon && distinct == kept.size() && is_sidon(res.group, res.set).is_sidon;
    }
  }
  return res;
}

}  // namespace sidon
