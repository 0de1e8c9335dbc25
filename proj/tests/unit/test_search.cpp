#include <gtest/gtest.h>

#include <set>

#include "sidon/dense.hpp"
#include "sidon/numtheory.hpp"
#include "sidon/search.hpp"
#include "sidon/sidon.hpp"

using namespace sidon;

namespace {

// All Sidon subsets of G by brute force over bitmasks (|G| <= 16).
std::vector<ElemSet> all_sidon(const AbelianGroup& g) {
  std::vector<ElemSet> out;
  const auto n = static_cast<std::uint32_t>(g.order());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ElemSet s;
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1) s.push_back(x);
    if (is_sidon_bruteforce(g, s)) out.push_back(s);
  }
  return out;
}

std::vector<AbelianGroup> small_groups() {
  std::vector<AbelianGroup> gs;
  for (std::uint64_t n = 1; n <= 16; ++n) gs.push_back(AbelianGroup::cyclic(n));
  for (auto f : std::vector<std::vector<std::uint64_t>>{{2, 2}, {2, 4}, {2, 2, 2}, {3, 3}, {2, 6}, {2, 8}, {4, 4}, {2, 2, 4}, {2, 2, 2, 2}})
    gs.emplace_back(f);
  return gs;
}

}  // namespace

TEST(Search, SmallSigma) {
  EXPECT_EQ(max_sidon(AbelianGroup::cyclic(2)).sigma, 1u);
  EXPECT_EQ(max_sidon(AbelianGroup::cyclic(7)).sigma, 3u);
  EXPECT_EQ(max_sidon(AbelianGroup::cyclic(13)).sigma, 4u);
  EXPECT_EQ(max_sidon(AbelianGroup::cyclic(21)).sigma, 5u);
  auto r31 = max_sidon(AbelianGroup::cyclic(31));
  EXPECT_EQ(r31.sigma, 6u);
  EXPECT_TRUE(r31.exhaustive);
  for (const auto& s : r31.extremal_sets) EXPECT_TRUE(is_perfect_difference_set(AbelianGroup::cyclic(31), s));
}

TEST(Search, MatchesBruteForce) {
  for (const auto& g : small_groups()) {
    std::size_t best = 0;
    std::set<ElemSet> canon;
    const auto all = all_sidon(g);
    for (const auto& s : all) best = std::max(best, s.size());
    for (const auto& s : all)
      if (s.size() == best) canon.insert(canonical_form(g, s));
    auto r = max_sidon(g, {.max_sets = SIZE_MAX});
    EXPECT_EQ(r.sigma, best) << g.to_string();
    EXPECT_EQ(std::set<ElemSet>(r.extremal_sets.begin(), r.extremal_sets.end()), canon) << g.to_string();
    EXPECT_EQ(max_sidon_serial(g, {.max_sets = SIZE_MAX}).extremal_sets, r.extremal_sets);
  }
}

TEST(Search, EnumerationReexpands) {
  for (const auto& g : small_groups()) {
    const auto all = all_sidon(g);
    for (std::size_t k = 1; k <= counting_bound(g.order()); ++k) {
      std::set<ElemSet> expect;
      for (const auto& s : all)
        if (s.size() == k) expect.insert(s);
      std::set<ElemSet> got;
      const auto e = enumerate_sidon(g, k);
      EXPECT_TRUE(e.exhaustive);
      for (const auto& c : e.sets) {
        EXPECT_EQ(canonical_form(g, c), c);
        for (int sign = 0; sign < 2; ++sign)
          for (Elem t = 0; t < g.order(); ++t) {
            ElemSet img;
            for (Elem x : c) img.push_back(g.add(sign ? g.neg(x) : x, t));
            got.insert(normalized(img));
          }
      }
      EXPECT_EQ(got, expect) << g.to_string() << " k=" << k;
    }
  }
}

TEST(Search, EnumerationExamples) {
  const auto z7 = AbelianGroup::cyclic(7);
  std::set<ElemSet> pds;
  for (const auto& s : all_sidon(z7))
    if (s.size() == 3 && is_perfect_difference_set(z7, s)) pds.insert(canonical_form(z7, s));
  const auto e = enumerate_sidon(z7, 3);
  EXPECT_EQ(std::set<ElemSet>(e.sets.begin(), e.sets.end()), pds);
  EXPECT_TRUE(enumerate_sidon(AbelianGroup::cyclic(5), 5).sets.empty());
  const AbelianGroup g33(std::vector<std::uint64_t>{3, 3});
  const auto e33 = enumerate_sidon(g33, 3);
  EXPECT_FALSE(e33.sets.empty());
  for (const auto& s : e33.sets) EXPECT_TRUE(is_sidon_bruteforce(g33, s));
}

TEST(Search, BudgetTruncates) {
  auto r = max_sidon(AbelianGroup::cyclic(57), {.node_budget = 50});
  EXPECT_FALSE(r.exhaustive);
  for (const auto& s : r.extremal_sets) EXPECT_TRUE(is_sidon(AbelianGroup::cyclic(57), s).is_sidon);
  // Same answer whatever the thread count.
  auto a = max_sidon(AbelianGroup::cyclic(57), {.node_budget = 5000, .parallel = true});
  auto b = max_sidon(AbelianGroup::cyclic(57), {.node_budget = 5000, .parallel = false});
  EXPECT_EQ(a.sigma, b.sigma);
  EXPECT_EQ(a.extremal_sets, b.extremal_sets);
  EXPECT_EQ(a.nodes_visited, b.nodes_visited);
}

TEST(Search, SingerWitnessesSigma) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const auto [p, d] = *nt::prime_power(q);
    auto c = construct_dense(DenseName::singer, FiniteField::create(p, d));
    auto r = max_sidon(c.group, {.max_sets = 1});
    EXPECT_EQ(r.sigma, c.set.size());
    EXPECT_EQ(r.sigma, counting_bound(c.group.order()));
  }
}

TEST(Conjectures, TSubgroup) {
  auto r2 = test_T_subgroup(2);
  EXPECT_NE(r2.verdict, Verdict::inconclusive);
  auto r3 = test_T_subgroup(3);
  EXPECT_EQ(r3.verdict, Verdict::holds);
  EXPECT_GT(r3.canonical_sets, 0u);
  EXPECT_GE(r3.canonical_sets, r3.affine_classes);
  // Oracle: brute force over all 3-subsets of F_3^2.
  const AbelianGroup g(std::vector<std::uint64_t>{3, 3});
  std::set<ElemSet> canon;
  for (const auto& s : all_sidon(g))
    if (s.size() == 3) {
      canon.insert(canonical_form(g, s));
      EXPECT_TRUE(is_subgroup(g, is_sidon(g, s).t_set));
    }
  EXPECT_EQ(r3.canonical_sets, canon.size());
  auto r5 = test_T_subgroup(5);
  EXPECT_NE(r5.verdict, Verdict::inconclusive);
  std::size_t total = 0;
  for (auto c : r5.class_sizes) total += c;
  EXPECT_EQ(total, r5.canonical_sets);
  EXPECT_EQ(test_T_subgroup(5, {.node_budget = 10, .max_sets = SIZE_MAX}).verdict, Verdict::inconclusive);
}

TEST(Conjectures, Extendable) {
  auto r2 = test_extendable(2);
  EXPECT_EQ(r2.verdict, Verdict::holds);
  EXPECT_EQ(r2.sets_tested, r2.extendable);
  auto r3 = test_extendable(3);
  EXPECT_NE(r3.verdict, Verdict::inconclusive);
  EXPECT_EQ(r3.sets_tested, enumerate_sidon(AbelianGroup::cyclic(13), 3).sets.size());
  // Synthetic negative path: {0, 1, 3} in Z/13 has differences 1, 2, 3 and their
  // negatives; a fourth element must avoid them all.
  const auto z13 = AbelianGroup::cyclic(13);
  std::optional<ElemSet> stuck;
  for (const auto& s : enumerate_sidon(z13, 3).sets)
    if (!find_completion(z13, s)) stuck = s;
  if (stuck) {
    EXPECT_EQ(r3.verdict, Verdict::fails);
    EXPECT_TRUE(r3.counterexample.has_value());
  }
  // Forced failure: a Sidon set of size 3 in Z/7 is already perfect.
  EXPECT_FALSE(find_completion(AbelianGroup::cyclic(7), {1, 2, 4}).has_value());
  EXPECT_EQ(find_completion(AbelianGroup::cyclic(13), {0, 1}).value(), 3u);
}

TEST(Orders, Examples) {
  EXPECT_EQ(admissible_orders(7), (std::vector<OrderMatch>{{OrderForm::q2_q_1, 2}}));
  EXPECT_TRUE(admissible_orders(22).empty());
  EXPECT_EQ(admissible_orders(4), (std::vector<OrderMatch>{{OrderForm::q_minus_1_squared, 3}, {OrderForm::q2, 2}}));
  for (std::uint64_t n : {7u, 8u, 12u, 13u, 16u, 20u, 21u, 25u}) EXPECT_FALSE(admissible_orders(n).empty()) << n;
}

TEST(Orders, MatchesDirectEnumeration) {
  std::map<std::uint64_t, std::vector<OrderMatch>> table;
  for (std::uint64_t q = 200; q >= 2; --q) {
    if (!nt::prime_power(q)) continue;
    const std::uint64_t r = nt::isqrt(q);
    std::vector<std::pair<OrderForm, std::uint64_t>> v{{OrderForm::q2_q_1, q * q + q + 1}, {OrderForm::q2, q * q},
                                                      {OrderForm::q2_minus_1, q * q - 1}};
    if (r * r == q) v.push_back({OrderForm::q2_minus_sqrt_q, q * q - r});
    v.push_back({OrderForm::q_q_minus_1, q * (q - 1)});
    v.push_back({OrderForm::q_minus_1_squared, (q - 1) * (q - 1)});
    for (auto [f, n] : v) table[n].push_back({f, q});
  }
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    auto it = table.find(n);
    EXPECT_EQ(admissible_orders(n), it == table.end() ? std::vector<OrderMatch>{} : it->second) << n;
  }
}
