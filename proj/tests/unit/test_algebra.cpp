#include <gtest/gtest.h>

#include <random>

#include "sidon/field.hpp"
#include "sidon/group.hpp"
#include "sidon/numtheory.hpp"
#include "sidon/presentation.hpp"

using namespace sidon;

namespace {

// Naive polynomial product mod (p, modulus) on coefficient vectors.
std::vector<std::uint32_t> naive_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                     const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const std::size_t d = m.size() - 1;
  std::vector<std::uint64_t> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t k = 2 * d - 1; k >= d; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) prod[k - d + i] = (prod[k - d + i] + (p - c) * m[i]) % p;
  }
  return {prod.begin(), prod.begin() + d};
}

}  // namespace

TEST(NumberTheory, PrimesAndFactorization) {
  EXPECT_TRUE(nt::is_prime(2));
  EXPECT_TRUE(nt::is_prime(1'000'000'007ULL));
  EXPECT_FALSE(nt::is_prime(561));
  EXPECT_FALSE(nt::is_prime(1));
  const auto f = nt::factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], std::make_pair(std::uint64_t{2}, 3u));
  EXPECT_EQ(f[2], std::make_pair(std::uint64_t{5}, 1u));
  EXPECT_EQ(nt::factorize(999'999'000'001ULL * 3).size(), 2u);
  EXPECT_EQ(nt::primes_up_to(30).size(), 10u);
  EXPECT_EQ(nt::prime_power(81), std::make_optional(std::make_pair(std::uint64_t{3}, 4u)));
  EXPECT_FALSE(nt::prime_power(12));
}

TEST(NumberTheory, KroneckerMatchesEulerCriterion) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL})
    for (std::int64_t a = -30; a <= 30; ++a) {
      const auto r = nt::powmod(nt::mod(a, p), (p - 1) / 2, p);
      const int expect = r == 0 ? 0 : (r == 1 ? 1 : -1);
      EXPECT_EQ(nt::kronecker(a, p), expect) << a << " " << p;
    }
  EXPECT_EQ(nt::kronecker(5, 8), -1);
  EXPECT_EQ(nt::kronecker(-3, 2), -1);
  EXPECT_EQ(nt::kronecker(-7, 2), 1);
}

TEST(Field, PrimeFieldGenerator) {
  const auto f = FiniteField::create(3, 1);
  EXPECT_EQ(f.order(), 3u);
  EXPECT_EQ(f.generator().code, 2u);
}

TEST(Field, GF9Arithmetic) {
  const auto f = FiniteField::create(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  const Fq t = f.theta();
  EXPECT_EQ(f.mul(t, t), f.from_int(2));
  EXPECT_EQ(f.trace(t), f.zero());
  // The canonical modulus of GF(9) is t^2 + 1 as well.
  EXPECT_EQ(FiniteField::create(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, Errors) {
  EXPECT_THROW(FiniteField::create(2, 1, std::vector<std::uint32_t>{0, 0, 1}), PreconditionError);
  EXPECT_THROW(FiniteField::create(3, 2, std::vector<std::uint32_t>{2, 0, 1}), PreconditionError);
  EXPECT_THROW(FiniteField::create(4, 1), PreconditionError);
  const auto f = FiniteField::create(5, 1);
  EXPECT_THROW(f.inv(f.zero()), PreconditionError);
  EXPECT_THROW(f.discrete_log(f.zero()), PreconditionError);
  const auto g = FiniteField::create(2, 3);
  EXPECT_THROW(g.trace(g.one(), 2), PreconditionError);
}

TEST(Field, DiscreteLogGF7) {
  const auto f = FiniteField::create(7, 1);
  ASSERT_EQ(f.generator().code, 3u);
  EXPECT_EQ(f.discrete_log(f.from_int(1)), 0u);
  EXPECT_EQ(f.discrete_log(f.from_int(3)), 1u);
  EXPECT_EQ(f.discrete_log(f.from_int(6)), 3u);
}

TEST(Field, AxiomsAgainstNaiveProduct) {
  std::mt19937_64 rng(7);
  for (auto [p, d] : std::vector<std::pair<int, unsigned>>{{2, 1}, {2, 4}, {3, 3}, {5, 2}, {7, 2}, {2, 8}, {13, 1}}) {
    const auto f = FiniteField::create(p, d);
    EXPECT_TRUE(is_irreducible(f.modulus(), p));
    EXPECT_EQ(f.multiplicative_order(f.generator()), f.order() - 1u);
    for (int it = 0; it < 100; ++it) {
      const Fq a{std::uint32_t(rng() % f.order())}, b{std::uint32_t(rng() % f.order())},
          c{std::uint32_t(rng() % f.order())};
      EXPECT_EQ(f.coeffs(f.mul(a, b)), naive_mul(f.coeffs(a), f.coeffs(b), f.modulus(), p));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.mul(a, f.one()), a);
      if (a.code) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
    }
  }
}

TEST(Field, LogExpRoundTripSmallFields) {
  for (std::uint32_t q = 2; q <= 81; ++q) {
    const auto pp = nt::prime_power(q);
    if (!pp) continue;
    const auto f = FiniteField::create(pp->first, pp->second);
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      const Fq x = f.exp(k);
      ASSERT_EQ(f.discrete_log(x), k);
      ASSERT_EQ(f.table_log(x), k);
    }
  }
}

TEST(Field, TraceNormProperties) {
  std::mt19937_64 rng(11);
  for (auto [p, d, e] : std::vector<std::tuple<int, unsigned, unsigned>>{{2, 4, 2}, {3, 2, 1}, {2, 6, 3}, {5, 3, 1}}) {
    const auto f = FiniteField::create(p, d);
    for (int it = 0; it < 100; ++it) {
      const Fq a{std::uint32_t(rng() % f.order())}, b{std::uint32_t(rng() % f.order())};
      EXPECT_TRUE(f.in_subfield(f.trace(a, e), e));
      EXPECT_TRUE(f.in_subfield(f.norm(a, e), e));
      EXPECT_EQ(f.trace(f.add(a, b), e), f.add(f.trace(a, e), f.trace(b, e)));
      EXPECT_EQ(f.norm(f.mul(a, b), e), f.mul(f.norm(a, e), f.norm(b, e)));
    }
  }
}

TEST(Group, InvariantFactorsAndCodec) {
  const auto g = AbelianGroup::from_cyclic_orders(std::vector<std::uint64_t>{6, 4});
  EXPECT_EQ(g.factors(), (std::vector<std::uint64_t>{2, 12}));
  EXPECT_EQ(invariant_factors(std::vector<std::uint64_t>{1, 3, 5}), (std::vector<std::uint64_t>{15}));
  EXPECT_TRUE(AbelianGroup::from_cyclic_orders(std::vector<std::uint64_t>{1}).factors().empty());
  EXPECT_THROW(AbelianGroup(std::vector<std::uint64_t>{4, 6}), PreconditionError);
  for (Elem x = 0; x < g.order(); ++x) EXPECT_EQ(g.encode(g.decode(x)), x);
}

TEST(Group, CyclicProductIsoIsHomomorphicBijection) {
  const CyclicProductIso iso({6, 4, 9});
  const auto& g = iso.target();
  EXPECT_EQ(g.order(), 216u);
  std::vector<char> seen(g.order(), 0);
  for (std::uint64_t a = 0; a < 6; ++a)
    for (std::uint64_t b = 0; b < 4; ++b)
      for (std::uint64_t c = 0; c < 9; ++c) {
        const std::vector<std::uint64_t> v{a, b, c};
        const Elem x = iso.forward(v);
        EXPECT_FALSE(seen[x]);
        seen[x] = 1;
        EXPECT_EQ(iso.backward(x), v);
        const std::vector<std::uint64_t> w{(a + 5) % 6, (b + 3) % 4, (c + 7) % 9};
        const std::vector<std::uint64_t> u{(2 * a + 5) % 6, (2 * b + 3) % 4, (2 * c + 7) % 9};
        EXPECT_EQ(g.add(x, iso.forward(w)), iso.forward(u));
      }
}

TEST(Group, SubgroupGenerated) {
  const auto z6 = AbelianGroup::cyclic(6);
  EXPECT_EQ(subgroup_generated(z6, std::vector<Elem>{2}), (ElemSet{0, 2, 4}));
  const AbelianGroup z55({5, 5});
  const auto h = subgroup_generated(z55, std::vector<Elem>{z55.encode(std::vector<std::uint64_t>{1, 0})});
  EXPECT_EQ(h.size(), 5u);
  for (Elem x : h) EXPECT_EQ(z55.decode(x)[1], 0u);
  const AbelianGroup z44({4, 4});
  const auto k = subgroup_generated(z44, std::vector<Elem>{z44.encode(std::vector<std::uint64_t>{1, 1}),
                                                           z44.encode(std::vector<std::uint64_t>{2, 0})});
  EXPECT_EQ(k.size(), 8u);
  EXPECT_TRUE(is_subgroup(z44, k));
}

TEST(Group, PresentMultiplicativeGroups) {
  // (Z/m)^x for several m; the number of elements of each order must match.
  for (std::uint64_t m : {8ULL, 15ULL, 16ULL, 21ULL, 24ULL, 35ULL, 63ULL, 97ULL, 105ULL}) {
    std::vector<std::uint64_t> units;
    for (std::uint64_t x = 1; x < m; ++x)
      if (nt::gcd(x, m) == 1) units.push_back(x);
    const auto pres = present_abelian(units, std::uint64_t{1},
                                      [m](std::uint64_t a, std::uint64_t b) { return a * b % m; });
    ASSERT_EQ(pres.group.order(), units.size());
    for (Elem x = 0; x < pres.group.order(); ++x)
      for (Elem y = 0; y < pres.group.order(); y += 3)
        ASSERT_EQ(pres.index(pres.element_at[x] * pres.element_at[y] % m), pres.group.add(x, y));
  }
}
