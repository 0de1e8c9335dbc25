#include <gtest/gtest.h>

#include <random>

#include "sidon/dense.hpp"
#include "sidon/incidence.hpp"
#include "sidon/numtheory.hpp"
#include "sidon/sidon.hpp"

using namespace sidon;

namespace {

FiniteField field_of_order(std::uint64_t q) {
  const auto pp = nt::prime_power(q);
  return FiniteField::create(pp->first, pp->second);
}

}  // namespace

TEST(Dense, ErdosTuranQ5) {
  const auto c = construct_dense(DenseName::erdos_turan, FiniteField::create(5, 1));
  std::vector<std::vector<std::uint64_t>> coords;
  for (Elem x : c.set) coords.push_back(c.group.decode(x));
  std::sort(coords.begin(), coords.end());
  const std::vector<std::vector<std::uint64_t>> expect{{0, 0}, {1, 1}, {2, 4}, {3, 4}, {4, 1}};
  EXPECT_EQ(coords, expect);
  EXPECT_THROW(construct_dense(DenseName::erdos_turan, FiniteField::create(2, 2)), PreconditionError);
}

TEST(Dense, SingerQ2IsFano) {
  const auto c = construct_dense(DenseName::singer, FiniteField::create(2, 1));
  EXPECT_EQ(c.group.order(), 7u);
  EXPECT_EQ(c.set.size(), 3u);
  EXPECT_TRUE(is_perfect_difference_set(c.group, c.set));
}

TEST(Dense, HughesQ5FieldPoints) {
  const auto c = construct_dense(DenseName::hughes, FiniteField::create(5, 1));
  auto pts = c.field_points;
  std::sort(pts.begin(), pts.end());
  EXPECT_EQ(pts, (std::vector<std::vector<std::uint32_t>>{{2, 4}, {3, 3}, {4, 2}}));
  EXPECT_TRUE(construct_dense(DenseName::hughes, FiniteField::create(3, 1)).degenerate);
}

TEST(Dense, ParametersAndSidonForSmallQ) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto f = field_of_order(q);
    for (auto name : {DenseName::erdos_turan, DenseName::singer, DenseName::bose, DenseName::spence,
                      DenseName::hughes}) {
      if (name == DenseName::erdos_turan && q % 2 == 0) continue;
      const auto c = construct_dense(name, f);
      EXPECT_EQ(c.group.order(), c.expected_group_order) << to_string(name) << " " << q;
      EXPECT_EQ(c.set.size(), c.expected_size) << to_string(name) << " " << q;
      EXPECT_TRUE(is_sidon(c.group, c.set).is_sidon) << to_string(name) << " " << q;
      EXPECT_EQ(c.field_points.size(), c.set.size());
    }
  }
}

TEST(Dense, SingerDevelopsToPlane) {
  for (std::uint64_t q : {2, 3, 4}) {
    const auto c = construct_dense(DenseName::singer, field_of_order(q));
    EXPECT_EQ(is_projective_plane(develop(c.group, c.set)).order, std::optional<std::uint64_t>(q));
  }
}

TEST(Dense, CoverOfBoseAndHughesTSets) {
  const auto bose = construct_dense(DenseName::bose, FiniteField::create(2, 2));
  const auto tb = is_sidon(bose.group, bose.set).t_set;
  const auto cb = subgroup_union_cover(bose.group, tb, 3);
  ASSERT_EQ(cb.status, CoverStatus::found);
  ASSERT_EQ(cb.subgroups.size(), 1u);
  EXPECT_EQ(cb.subgroups[0].size(), 3u);
  const auto hughes = construct_dense(DenseName::hughes, FiniteField::create(5, 1));
  const auto th = is_sidon(hughes.group, hughes.set).t_set;
  const auto ch = subgroup_union_cover(hughes.group, th, 3);
  ASSERT_EQ(ch.status, CoverStatus::found);
  EXPECT_EQ(ch.subgroups.size(), 3u);
  EXPECT_EQ(subgroup_union_cover(hughes.group, th, 2).status, CoverStatus::none);
}

TEST(Planar, Examples) {
  EXPECT_TRUE(is_planar({FiniteField::create(5, 1), Monomial{2}}).planar);
  const auto cube = is_planar({FiniteField::create(3, 1), Monomial{3}});
  EXPECT_FALSE(cube.planar);
  EXPECT_EQ(cube.witness, Fq{1});
  EXPECT_TRUE(is_planar({FiniteField::create(3, 3), Monomial{4}}).planar);
  // p = 3, d = 2, alpha = 1: d / gcd = 2 is even.
  EXPECT_FALSE(is_planar(dembowski_ostrom_monomial(FiniteField::create(3, 2), 1)).planar);
  const auto f243 = FiniteField::create(3, 5);
  const auto cm = coulter_matthews(f243, 3);
  EXPECT_EQ(std::get<Monomial>(cm.form).exponent, 14u);
  EXPECT_TRUE(is_planar(cm).planar);
  EXPECT_THROW(coulter_matthews(FiniteField::create(3, 3), 3), PreconditionError);
}

TEST(Planar, ParallelMatchesSerial) {
  std::mt19937_64 rng(9);
  const auto f = FiniteField::create(3, 3);
  for (int it = 0; it < 30; ++it) {
    std::vector<Fq> t(f.order());
    for (auto& v : t) v = Fq{std::uint32_t(rng() % f.order())};
    const PlanarCandidate c{f, FunctionTable{t}};
    const auto a = is_planar(c), b = is_planar_serial(c);
    EXPECT_EQ(a.planar, b.planar);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(Planar, GraphTSet) {
  const auto g = planar_graph({FiniteField::create(3, 1), Monomial{2}});
  EXPECT_EQ(g.set.size(), 3u);
  const auto r = is_sidon(g.group, g.set);
  EXPECT_TRUE(r.is_sidon);
  ASSERT_EQ(r.t_set.size(), 3u);
  for (Elem x : r.t_set) EXPECT_EQ(g.group.decode(x)[0], 0u);
  EXPECT_THROW(planar_graph({FiniteField::create(3, 1), Monomial{3}}), PreconditionError);
}

TEST(Planar, X10FormAndPolarization) {
  const auto f = FiniteField::create(3, 3);
  QuadraticForm qf{std::vector<std::vector<Fq>>(3, std::vector<Fq>(3, f.zero()))};
  qf.a[2][0] = f.one();
  qf.a[1][1] = f.one();
  qf.a[0][0] = f.neg(f.one());
  const PlanarCandidate c{f, qf};
  const auto t = c.table();
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const Fq v = f.sub(f.add(f.pow(Fq{x}, 10), f.pow(Fq{x}, 6)), f.pow(Fq{x}, 2));
    EXPECT_EQ(t[x], v);
  }
  EXPECT_TRUE(is_planar(c).planar);
  const auto sym = polarization_symbolic(c);
  EXPECT_EQ(sym.values, polarization_numeric(c).values);
  EXPECT_TRUE(is_nondegenerate(sym));
  for (std::uint32_t x = 0; x < f.order(); ++x) EXPECT_EQ(sym.at(Fq{x}, f.zero()), f.zero());
  const auto g = planar_graph(c);
  EXPECT_TRUE(is_sidon(g.group, g.set).is_sidon);
  // x^2: beta = 2xy.
  const auto f5 = FiniteField::create(5, 1);
  QuadraticForm sq{{{f5.one()}}};
  const auto b = polarization_symbolic({f5, sq});
  for (std::uint32_t x = 0; x < 5; ++x)
    for (std::uint32_t y = 0; y < 5; ++y) EXPECT_EQ(b.at(Fq{x}, Fq{y}).code, 2 * x * y % 5);
  EXPECT_TRUE(is_nondegenerate(b));
  EXPECT_THROW(polarization_symbolic({f5, Monomial{2}}), PreconditionError);
}
