#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <set>

#include "sidon/numtheory.hpp"
#include "sidon/sidon.hpp"
#include "sidon/sparse.hpp"

using namespace sidon;
using boost::multiprecision::cpp_int;

namespace {

// Quadruple scan over integers.
bool sidon_oracle(const std::vector<std::int64_t>& s) {
  std::set<std::int64_t> sums;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      if (!sums.insert(s[i] + s[j]).second) return false;
  return true;
}

}  // namespace

TEST(SparseIntegers, LogPrimesSmall) {
  auto r = log_primes(10);
  EXPECT_EQ(r.set, (std::vector<std::int64_t>{207, 329, 482, 583}));
  EXPECT_TRUE(r.sidon);
  EXPECT_EQ(log_primes(2).set.size(), 1u);
  EXPECT_THROW(log_primes(1), PreconditionError);
}

TEST(SparseIntegers, LogPrimesHundred) {
  auto r = log_primes(100);
  ASSERT_EQ(r.set.size(), 25u);
  EXPECT_TRUE(r.sidon);
  EXPECT_TRUE(sidon_oracle(r.set));
  const auto primes = nt::primes_up_to(100);
  for (std::size_t i = 0; i < primes.size(); ++i)
    EXPECT_EQ(r.set[i], static_cast<std::int64_t>(std::floor(30000.0L * std::log(static_cast<long double>(primes[i])))));
  EXPECT_LE(r.set.back(), static_cast<std::int64_t>(30000 * std::log(100.0)));
}

TEST(SparseIntegers, IntegerSidonChecks) {
  EXPECT_TRUE(is_sidon_integers({1, 2, 5, 11}));
  EXPECT_FALSE(is_sidon_integers({1, 2, 3}));
  // Wide range falls back to pair sums.
  EXPECT_TRUE(is_sidon_integers({0, 1, 100000000, 300000000}));
  EXPECT_FALSE(is_sidon_integers({0, 100000000, 200000000}));
}

TEST(SparseIntegers, QuotientRingPrimes) {
  auto r = quotient_ring_primes(101);
  EXPECT_EQ(r.values, (std::vector<std::int64_t>{2, 3, 5, 7}));
  EXPECT_TRUE(r.sidon);
  EXPECT_EQ(r.group.order(), 100u);
  EXPECT_TRUE(quotient_ring_primes(30).set.empty());
  EXPECT_EQ(quotient_ring_primes(100).values, (std::vector<std::int64_t>{3, 7}));
  EXPECT_EQ(quotient_ring_primes(100).group.factors(), (std::vector<std::uint64_t>{2, 20}));
  EXPECT_TRUE(quotient_ring_primes(10007).sidon);
}

TEST(SparseIntegers, GaussianAngles) {
  auto a = gaussian_angle(5, 100);
  EXPECT_EQ(a.re, 2);
  EXPECT_EQ(a.im, 1);
  EXPECT_EQ(a.re4, -7);
  EXPECT_EQ(a.im4, 24);
  EXPECT_EQ(a.element, 29);
  auto b = gaussian_angle(13, 100);
  EXPECT_EQ(b.re4, -119);
  EXPECT_EQ(b.im4, 120);
  EXPECT_EQ(b.element, 37);
  EXPECT_TRUE(gaussian_angles(16).integers.set.empty());
  auto c = gaussian_angles(10000);
  EXPECT_TRUE(c.integers.sidon);
  EXPECT_TRUE(sidon_oracle(c.integers.set));
  for (const auto& g : c.primes) {
    EXPECT_LE(16 * g.p * g.p, 10000u);
    EXPECT_GT(g.phi, 0);
    EXPECT_LT(g.phi, 0.5);
    EXPECT_EQ(g.element, static_cast<std::int64_t>(std::floor(10000 * std::atan2(double(g.im4), double(g.re4)) / (2 * M_PI))));
  }
}

TEST(SparseClassGroup, ReductionAndKnownGroups) {
  EXPECT_EQ(reduce_form({3, 2, 1}), (BinaryForm{1, 0, 2}));
  EXPECT_EQ(QuadraticClassGroup(-4).reduced_forms().size(), 1u);
  EXPECT_EQ(QuadraticClassGroup(-23).group().factors(), (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(QuadraticClassGroup(-56).group().factors(), (std::vector<std::uint64_t>{4}));
  EXPECT_EQ(QuadraticClassGroup(-84).group().factors(), (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(QuadraticClassGroup(-20).reduced_forms().size(), 2u);
  EXPECT_EQ(QuadraticClassGroup(-47).reduced_forms().size(), 5u);
  EXPECT_THROW(QuadraticClassGroup(-6), PreconditionError);
}

TEST(SparseClassGroup, CompositionAxioms) {
  for (std::int64_t disc : {-3299, -4 * 2021, -99995}) {
    QuadraticClassGroup cl(disc);
    const auto& fs = cl.reduced_forms();
    const auto e = cl.identity();
    for (const auto& f : fs) {
      EXPECT_EQ(f.b * f.b - 4 * f.a * f.c, disc);
      EXPECT_EQ(compose_forms(f, e), f);
      EXPECT_EQ(compose_forms(f, {f.a, -f.b, f.c}), e);
    }
    for (const auto& f : fs)
      for (const auto& g : fs) {
        const auto fg = compose_forms(f, g);
        ASSERT_EQ(fg, compose_forms(g, f));
        for (const auto& h : fs) ASSERT_EQ(compose_forms(fg, h), compose_forms(f, compose_forms(g, h)));
      }
  }
}

TEST(SparseClassGroup, PrimeClasses) {
  EXPECT_TRUE(class_group_primes(5).result.set.empty());
  EXPECT_THROW(class_group_primes(12), PreconditionError);
  auto r = class_group_primes(9973);
  for (auto p : r.split_primes) {
    EXPECT_TRUE(p == 2 || p == 3);
    EXPECT_EQ(nt::kronecker(r.cl.discriminant(), p), 1);
  }
  EXPECT_TRUE(r.result.sidon);
  EXPECT_TRUE(r.injective);
  for (std::uint64_t d : {1001u, 30031u, 99999u}) {
    if (!nt::is_squarefree(d)) continue;
    auto s = class_group_primes(d);
    EXPECT_TRUE(s.result.sidon) << d;
    EXPECT_TRUE(s.injective) << d;
    EXPECT_EQ(s.result.set.size() + s.discarded.size(), s.split_primes.size());
  }
}

TEST(SparseRealQuadratic, Units) {
  auto u2 = fundamental_unit(2);
  EXPECT_EQ(u2.a, "1");
  EXPECT_EQ(u2.b, "1");
  EXPECT_EQ(u2.norm, -1);
  EXPECT_NEAR(u2.regulator_approx, 0.881373587, 1e-9);
  auto u46 = fundamental_unit(46);
  EXPECT_EQ(u46.a, "24335");
  EXPECT_EQ(u46.b, "3588");
  for (std::uint64_t d = 2; d < 300; ++d) {
    if (nt::isqrt(d) * nt::isqrt(d) == d) continue;
    auto u = fundamental_unit(d);
    const cpp_int a(u.a), b(u.b);
    const cpp_int n = a * a - cpp_int(d) * b * b;
    EXPECT_TRUE(n == 1 || n == -1) << d;
    const long double exact = std::log(static_cast<long double>(a) + static_cast<long double>(b) * std::sqrt((long double)d));
    if (u.a.size() < 7) {
      EXPECT_NEAR(u.regulator_approx, static_cast<double>(exact), 1e-9) << d;
      // The smallest solution: no smaller b works.
      for (std::uint64_t bb = 1; bb < static_cast<std::uint64_t>(b); ++bb) {
        const std::uint64_t t = d * bb * bb;
        for (std::uint64_t s : {t + 1, t - 1}) {
          const auto r = nt::isqrt(s);
          EXPECT_NE(r * r, s) << d << " " << bb;
        }
      }
    }
  }
  EXPECT_THROW(fundamental_unit(49), PreconditionError);
}

TEST(SparseRealQuadratic, Construction) {
  auto r2 = real_quadratic(2);
  EXPECT_EQ(r2.modulus, 1u);
  EXPECT_TRUE(r2.sidon);
  auto r46 = real_quadratic(46);
  EXPECT_EQ(r46.modulus, 11u);
  EXPECT_TRUE(r46.set.empty());
  EXPECT_TRUE(r46.sidon);
  // Primes 2, 3 admissible.
  auto r = real_quadratic(1000003);
  EXPECT_TRUE(r.sidon);
  for (const auto& p : r.primes) {
    const cpp_int a(p.a), b(p.b);
    EXPECT_EQ(a * a - cpp_int(r.d) * b * b, cpp_int(p.sign) * cpp_int(p.p));
    EXPECT_LT(p.element, static_cast<std::int64_t>(r.modulus));
  }
  EXPECT_EQ(r.primes.size() + r.skipped.size(), [&] {
    std::size_t n = 0;
    for (std::uint64_t p : {2u, 3u, 5u, 7u})
      if (10000 * p * p * p * p <= r.d && nt::kronecker(r.d % 4 == 1 ? r.d : 4 * r.d, p) == 1) ++n;
    return n;
  }());
  EXPECT_THROW(real_quadratic(12), PreconditionError);
}

TEST(SparseCubic, SmallFields) {
  auto f7 = FiniteField::create(7, 1);
  auto g = cubic_graph(f7, {Fq{1}, Fq{2}, Fq{3}});
  ElemSet expect;
  for (auto [x, y] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {3, 6}})
    expect.push_back(g.group.encode(std::vector<std::uint64_t>{x, y}));
  EXPECT_EQ(g.set, normalized(expect));
  EXPECT_TRUE(g.sidon);
  EXPECT_TRUE(cubic_graph(f7, {Fq{1}, Fq{6}}).sidon);
  EXPECT_THROW(cubic_graph(f7, {Fq{1}, Fq{6}, Fq{2}, Fq{5}}), PreconditionError);
  EXPECT_EQ(cubic_zero_sum_pairs(f7, {Fq{1}, Fq{6}, Fq{2}, Fq{5}}).size(), 2u);
  EXPECT_THROW(cubic_graph(FiniteField::create(3, 1), {Fq{1}}), PreconditionError);
  for (std::uint64_t p : {7u, 11u, 13u}) {
    auto f = FiniteField::create(p, 1);
    auto u = cubic_max_subset(f);
    EXPECT_EQ(u.size(), (p + 1) / 2);
    EXPECT_TRUE(cubic_graph(f, u).sidon);
  }
  auto f25 = FiniteField::create(5, 2);
  EXPECT_TRUE(cubic_graph(f25, cubic_max_subset(f25)).sidon);
}

TEST(SparsePerturb, Examples) {
  auto a = perturb({1, 2, 5, 11}, {0, 0, 0, 0});
  EXPECT_EQ(a.set, (std::vector<std::int64_t>{5, 10, 25, 55}));
  EXPECT_TRUE(a.sidon);
  auto b = perturb({1, 2, 5, 11}, {1, -1, 1, -1});
  EXPECT_EQ(b.set, (std::vector<std::int64_t>{6, 9, 26, 54}));
  EXPECT_TRUE(sidon_oracle(b.set));
  EXPECT_TRUE(b.sidon);
  EXPECT_EQ(perturb({3}, {1}).set, (std::vector<std::int64_t>{16}));
  EXPECT_THROW(perturb({1, 2, 3}, {0, 0, 0}), PreconditionError);
}

TEST(SparseFramework, ReproducesLogPrimes) {
  FrameworkSpec spec;
  spec.bound = 100;
  spec.components = {{ComponentKind::log_norm, 30000, 1, 0}};
  auto r = framework_build(spec);
  std::vector<std::int64_t> s;
  for (const auto& p : r.points) s.push_back(p[0]);
  std::sort(s.begin(), s.end());
  EXPECT_EQ(s, log_primes(100).set);
  EXPECT_TRUE(r.check_i);
  EXPECT_TRUE(r.check_ii);
  EXPECT_TRUE(r.sidon);
}

TEST(SparseFramework, ReproducesQuotientRing) {
  for (std::uint64_t m : {101u, 10007u}) {
    FrameworkSpec spec;
    spec.conductor = m;
    spec.bound = std::sqrt(static_cast<double>(m));
    spec.components = {{ComponentKind::residue, 1, 1, m}};
    auto r = framework_build(spec);
    std::vector<std::int64_t> s;
    for (const auto& p : r.points) s.push_back(p[0]);
    EXPECT_EQ(s, quotient_ring_primes(m).values);
    EXPECT_TRUE(r.check_i && r.check_ii && r.sidon);
    EXPECT_TRUE(r.group_verified);
  }
}

TEST(SparseFramework, ReproducesGaussianAngles) {
  FrameworkSpec spec;
  spec.field = NumberField::gaussian;
  spec.bound = 25;
  spec.components = {{ComponentKind::arg4, 1, 1, 10000}};
  auto r = framework_build(spec);
  std::vector<std::int64_t> s;
  for (const auto& p : r.points) s.push_back(p[0]);
  std::sort(s.begin(), s.end());
  EXPECT_EQ(s, gaussian_angles(10000).integers.set);
  for (const auto& id : r.ideals)
    if (id.label == "1+1i") EXPECT_EQ(id.reason, "2 phi = 0");
}

TEST(SparseFramework, Hybrid) {
  FrameworkSpec spec;
  spec.conductor = 11;
  spec.bound = 10;
  spec.components = {{ComponentKind::log_norm, 500, 11, 0}, {ComponentKind::residue, 1, 1, 11}};
  auto r = framework_build(spec);
  ASSERT_EQ(r.points.size(), 4u);
  std::vector<std::int64_t> res;
  for (const auto& p : r.points) res.push_back(p[1]);
  EXPECT_EQ(res, (std::vector<std::int64_t>{2, 3, 5, 7}));
  EXPECT_EQ(r.points[0][0], static_cast<std::int64_t>(std::floor(500.0 / 11 * std::log(2.0))));
  EXPECT_TRUE(r.check_i);
  EXPECT_TRUE(r.check_ii);
  EXPECT_TRUE(r.sidon);
  EXPECT_TRUE(r.group_verified);
}

TEST(SparseFramework, QuadraticFields) {
  FrameworkSpec im;
  im.field = NumberField::imaginary_quadratic;
  im.d = 9973;
  im.bound = 30;
  im.components = {{ComponentKind::class_group, 1, 1, 0}};
  auto a = framework_build(im);
  EXPECT_EQ(a.sidon, a.check_i && a.check_ii);
  for (const auto& id : a.ideals)
    if (id.kept) EXPECT_EQ(nt::kronecker(-4 * 9973, id.norm), 1);

  FrameworkSpec re;
  re.field = NumberField::real_quadratic;
  re.d = 46;
  re.bound = 40;
  re.components = {{ComponentKind::log_ratio, 1, 1, 0}};
  auto b = framework_build(re);
  EXPECT_EQ(b.log_ratio_modulus, 11u);
  EXPECT_FALSE(b.points.empty());
  if (b.check_i && b.check_ii) EXPECT_TRUE(b.sidon);

  FrameworkSpec bad;
  bad.field = NumberField::gaussian;
  bad.components = {{ComponentKind::residue, 1, 1, 5}};
  EXPECT_THROW(framework_build(bad), PreconditionError);
  FrameworkSpec big;
  big.bound = 1e6;
  big.components = {{ComponentKind::log_norm, 1, 1, 0}};
  EXPECT_THROW(framework_build(big), PreconditionError);
}
