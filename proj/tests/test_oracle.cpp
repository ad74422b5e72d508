#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wreathgen.hpp"

using namespace wreathgen;

namespace
{

PermGroup tower_group(std::string const &text) { return build_tower(parse_tower(text)).group; }

PermGroup klein_disjoint()
{
  return PermGroup(4, {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)});
}

PermGroup natural(std::string const &token)
{
  GroupSpec s = parse_group_spec(token);
  return PermGroup(s.degree(), standard_generators(s.normalized()));
}

} // namespace

TEST(CayleyTable, MatchesPermutationProducts)
{
  PermGroup g = tower_group("S3;C2");
  CayleyTable table(g);
  ASSERT_EQ(table.size(), 48u);
  EXPECT_TRUE(table.elements()[0].is_identity());
  for (std::size_t a = 0; a < table.size(); ++a) {
    EXPECT_EQ(table.mul(a, table.inverse(a)), 0u);
    for (std::size_t b = 0; b < table.size(); ++b)
      ASSERT_EQ(table.elements()[table.mul(a, b)], table.elements()[a] * table.elements()[b]);
  }
  EXPECT_THROW(CayleyTable(tower_group("C3;C2;C2"), 1000), budget_exceeded);
}

TEST(CayleyTable, ConjugacyClassCounts)
{
  // class numbers: S4 has 5, A5 has 5, A4 has 4, C6 has 6, D4 = C2;C2 has 5
  EXPECT_EQ(CayleyTable(natural("S4")).class_representatives().size(), 5u);
  EXPECT_EQ(CayleyTable(natural("A5")).class_representatives().size(), 5u);
  EXPECT_EQ(CayleyTable(natural("A4")).class_representatives().size(), 4u);
  EXPECT_EQ(CayleyTable(natural("C6")).class_representatives().size(), 6u);
  EXPECT_EQ(CayleyTable(tower_group("C2;C2")).class_representatives().size(), 5u);
}

TEST(LowerBound, Examples)
{
  LowerBound k = d_lower_bound(klein_disjoint());
  EXPECT_EQ(k.value, 2);
  EXPECT_EQ(k.certificate, "abelianization");

  LowerBound a5 = d_lower_bound(natural("A5"));
  EXPECT_EQ(a5.value, 2);
  EXPECT_EQ(a5.certificate, "noncyclic");

  LowerBound h = d_lower_bound(tower_group("C3;C2;C2"));
  EXPECT_EQ(h.value, 2);
  EXPECT_EQ(h.certificate, "abelianization");

  EXPECT_EQ(d_lower_bound(natural("C6")).value, 1);
  EXPECT_EQ(d_lower_bound(PermGroup(3, {})).value, 0);
}

TEST(Nongeneration, Examples)
{
  EXPECT_TRUE(exhaustive_nongeneration(tower_group("C3;C2;C2"), 2));
  EXPECT_TRUE(exhaustive_nongeneration(natural("A5"), 1));
  EXPECT_FALSE(exhaustive_nongeneration(natural("C6"), 1));
  EXPECT_FALSE(exhaustive_nongeneration(tower_group("C3;C2;C2"), 3));
  EXPECT_TRUE(exhaustive_nongeneration(klein_disjoint(), 1));
}

TEST(Nongeneration, ConjugacyReductionIsSound)
{
  GenSearchConfig on, off;
  off.conjugacy_reduction = false;
  for (auto text : {"S3;C2", "C2;C2;C2", "A4;C2", "C2;S3", "S4", "C3;C3", "C2;C2;C3"}) {
    PermGroup g = tower_group(text);
    ASSERT_LE(group_order(g), 2000) << text;
    for (std::size_t k = 1; k <= 3; ++k)
      EXPECT_EQ(exhaustive_nongeneration(g, k, on), exhaustive_nongeneration(g, k, off))
        << text << " k=" << k;
  }
}

TEST(Nongeneration, ImpliesNoRandomWitness)
{
  for (auto [text, k] : std::vector<std::pair<std::string, std::size_t>>{
         {"C3;C2;C2", 2}, {"C2;C2;C2", 2}, {"S3;C2;C2", 2}, {"A5", 1}}) {
    PermGroup g = tower_group(text);
    ASSERT_TRUE(exhaustive_nongeneration(g, k)) << text;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      GenSearchConfig cfg;
      cfg.seed = seed;
      cfg.random_attempts = 100;
      EXPECT_FALSE(find_generating_tuple(g, k, cfg).has_value()) << text;
    }
  }
}

TEST(RandomSearch, Examples)
{
  PermGroup s5 = natural("S5");
  auto w = find_generating_tuple(s5, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(Bsgs(PermGroup(5, *w)).order(), 120);

  PermGroup big = tower_group("A5;C3;C2;C2");
  auto w2 = find_generating_tuple(big, 2);
  ASSERT_TRUE(w2.has_value());
  EXPECT_EQ(Bsgs(PermGroup(60, *w2)).order(), group_order(big));
  auto [x, y] = example_generators(5);
  EXPECT_EQ(Bsgs(PermGroup(60, {x.perm, y.perm})).order(), group_order(big));

  EXPECT_FALSE(find_generating_tuple(klein_disjoint(), 1).has_value());
}

TEST(MinGenerators, DeskScaleTowers)
{
  for (auto [text, d] : std::vector<std::pair<std::string, int>>{
         {"A4;C3", 2}, {"S3;C2", 2}, {"S3;C2;C2", 3}, {"C3;C2;C2", 3}, {"C2;C2", 2}, {"C2;C2;C2", 3}}) {
    GenResult r = min_generators(tower_group(text));
    EXPECT_TRUE(r.exact) << text;
    EXPECT_EQ(r.lower, d) << text;
    EXPECT_EQ(r.upper, d) << text;
    EXPECT_EQ(static_cast<int>(r.witness.size()), d) << text;
  }
  EXPECT_TRUE(exhaustive_nongeneration(tower_group("A4;C3"), 1));
  EXPECT_EQ(min_generators(tower_group("C3;C2;C2")).lower_certificate, "exhaustive(2)");
}

TEST(MinGenerators, AgreesWithNaiveSearch)
{
  for (auto text : {"C2", "C6", "S3", "A4", "C2;C2", "C3;C2", "C2;C3", "S3;C2", "C2;C2;C3"}) {
    PermGroup g = tower_group(text);
    GenResult r = min_generators(g);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.lower, support::brute_d(g)) << text;
  }
  EXPECT_EQ(min_generators(klein_disjoint()).lower, support::brute_d(klein_disjoint()));
  PermGroup trivial(4, {});
  GenResult t = min_generators(trivial);
  EXPECT_TRUE(t.exact);
  EXPECT_EQ(t.upper, 0);
}

TEST(MinGenerators, WitnessesRegenerate)
{
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + static_cast<std::size_t>(trial % 3);
    PermGroup g(n, {support::random_permutation(n, rng), support::random_permutation(n, rng),
                    support::random_permutation(n, rng)});
    GenResult r = min_generators(g);
    EXPECT_EQ(Bsgs(PermGroup(n, r.witness)).order(), group_order(g));
    EXPECT_LE(r.lower, r.upper);
    EXPECT_EQ(r.lower, support::brute_d(g)) << "trial " << trial;
  }
}

TEST(MinGenerators, DeterministicUnderSeed)
{
  for (auto text : {"A5;C3;C2;C2", "S4;C3", "C3;C2;C2"}) {
    GenSearchConfig cfg;
    cfg.seed = 12345;
    GenResult a = min_generators(tower_group(text), cfg);
    GenResult b = min_generators(tower_group(text), cfg);
    EXPECT_EQ(a.lower, b.lower);
    EXPECT_EQ(a.upper, b.upper);
    EXPECT_EQ(a.lower_certificate, b.lower_certificate);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.seed, b.seed);
  }
}

TEST(MinGenerators, LargeGroupUsesBoundsOnly)
{
  GenSearchConfig cfg;
  cfg.exhaustive_order_limit = 100;
  GenResult r = min_generators(tower_group("A5;C3;C2;C2"), cfg);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.lower, 2);
  // a group whose bounds do not meet without exhaustive search
  GenResult h = min_generators(tower_group("C3;C2;C2"), cfg);
  EXPECT_FALSE(h.exact);
  EXPECT_EQ(h.lower, 2);
  EXPECT_EQ(h.upper, 3);
}
