#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wreathgen.hpp"

using namespace wreathgen;

namespace
{

BigCount pow_big(BigCount base, unsigned e)
{
  BigCount res = 1;
  for (unsigned i = 0; i < e; ++i)
    res *= base;
  return res;
}

// all vertex addresses strictly above the leaves
std::vector<VertexAddress> internal_vertices(TowerSpec const &t)
{
  std::vector<VertexAddress> res{{}};
  std::vector<VertexAddress> layer{{}};
  for (std::size_t depth = 0; depth + 1 < t.depth(); ++depth) {
    std::vector<VertexAddress> next;
    for (auto const &v : layer)
      for (std::uint32_t c = 1; c <= t.level(depth + 1).degree(); ++c) {
        auto w = v;
        w.push_back(c);
        next.push_back(w);
      }
    res.insert(res.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return res;
}

bool is_prefix(VertexAddress const &a, VertexAddress const &b)
{
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

} // namespace

TEST(GroupSpec, ParsesTokens)
{
  EXPECT_EQ(parse_group_spec("A5"), GroupSpec::alt(5));
  EXPECT_EQ(parse_group_spec("S3"), GroupSpec::sym(3));
  EXPECT_EQ(parse_group_spec("C12"), GroupSpec::cyc(12));
  EXPECT_EQ(parse_group_spec("A5").order(), 60);
  EXPECT_EQ(parse_group_spec("S4").order(), 24);
}

TEST(GroupSpec, RejectsTrivialAndMalformed)
{
  for (auto bad : {"C1", "S1", "A1", "A2", "C0", "B3", "A", "", "A 5", "a5", "C-2", "5"})
    EXPECT_THROW(parse_group_spec(bad), parse_error) << bad;
}

TEST(GroupSpec, Normalization)
{
  EXPECT_EQ(GroupSpec::alt(3).normalized(), GroupSpec::cyc(3));
  EXPECT_EQ(GroupSpec::sym(2).normalized(), GroupSpec::cyc(2));
  EXPECT_EQ(GroupSpec::alt(4).normalized(), GroupSpec::alt(4));
  EXPECT_TRUE(GroupSpec::alt(3).is_cyclic());
  EXPECT_FALSE(GroupSpec::sym(3).is_cyclic());
}

TEST(TowerSpec, ParsesTopFirst)
{
  TowerSpec t = parse_tower("A5;C3;C2;C2");
  ASSERT_EQ(t.depth(), 4u);
  EXPECT_EQ(t.level(1), GroupSpec::alt(5));
  EXPECT_EQ(t.level(4), GroupSpec::cyc(2));
  EXPECT_EQ(t.leaf_count(), 60);
  EXPECT_EQ(t.to_string(), "A5;C3;C2;C2");
  EXPECT_EQ(parse_tower("A3;S2").normalized().to_string(), "C3;C2");
}

TEST(TowerSpec, RejectsBadText)
{
  for (auto bad : {"", ";", "A5;", ";A5", "A5;;C2", "A5; C2", "A5 ;C2", "C1;C2", "A5,C2"})
    EXPECT_THROW(parse_tower(bad), parse_error) << '"' << bad << '"';
}

TEST(TowerSpec, ClosedFormOrders)
{
  EXPECT_EQ(parse_tower("S3").order(), 6);
  EXPECT_EQ(parse_tower("C3;C2;C2").order(), 1536);
  EXPECT_EQ(parse_tower("A5;C3;C2;C2").order(),
            BigCount(60) * pow_big(3, 5) * pow_big(2, 15) * pow_big(2, 30));
}

TEST(Leaves, Addressing)
{
  EXPECT_EQ(leaf_index(parse_tower("C3;C2"), {1, 1}), 0u);
  EXPECT_EQ(leaf_index(parse_tower("C3;C2"), {3, 2}), 5u);
  EXPECT_EQ(leaf_index(parse_tower("A5;C3;C2;C2"), {1, 1, 1, 2}), 1u);
  EXPECT_THROW(leaf_index(parse_tower("C3;C2"), {1}), precondition_error);
  EXPECT_THROW(leaf_index(parse_tower("C3;C2"), {4, 1}), precondition_error);
  TowerSpec t = parse_tower("S4;C3;C2");
  for (Point leaf = 0; leaf < 24; ++leaf)
    EXPECT_EQ(leaf_index(t, leaf_address(t, leaf)), leaf);
}

TEST(StandardGenerators, Shapes)
{
  auto a5 = standard_generators(GroupSpec::alt(5));
  ASSERT_EQ(a5.size(), 2u);
  EXPECT_EQ(format_cycles(a5[0]), "(1 2 3)");
  EXPECT_EQ(format_cycles(a5[1]), "(1 2 3 4 5)");
  EXPECT_EQ(Bsgs(PermGroup(5, a5)).order(), 60);

  auto a4 = standard_generators(GroupSpec::alt(4));
  EXPECT_EQ(format_cycles(a4[0]), "(1 2 3)");
  EXPECT_EQ(format_cycles(a4[1]), "(2 3 4)");
  EXPECT_EQ(Bsgs(PermGroup(4, a4)).order(), 12);

  auto s3 = standard_generators(GroupSpec::sym(3));
  EXPECT_EQ(format_cycles(s3[0]), "(1 2)");
  EXPECT_EQ(format_cycles(s3[1]), "(1 2 3)");
  EXPECT_EQ(Bsgs(PermGroup(3, s3)).order(), 6);

  auto c6 = standard_generators(GroupSpec::cyc(6));
  ASSERT_EQ(c6.size(), 1u);
  EXPECT_EQ(format_cycles(c6[0]), "(1 2 3 4 5 6)");
}

TEST(ApplyAtVertex, Examples)
{
  TowerSpec big = parse_tower("A5;C3;C2;C2");
  auto swap = apply_at_vertex(big, {1, 1}, parse_cycles("(1 2)", 2));
  EXPECT_EQ(format_cycles(swap.perm), "(1 3)(2 4)");

  TowerSpec small = parse_tower("C3;C2");
  EXPECT_EQ(format_cycles(apply_at_vertex(small, {}, parse_cycles("(1 2 3)", 3)).perm),
            "(1 3 5)(2 4 6)");
  EXPECT_TRUE(apply_at_vertex(small, {2}, Permutation(2)).perm.is_identity());

  EXPECT_THROW(apply_at_vertex(small, {1, 1}, Permutation(2)), precondition_error);
  EXPECT_THROW(apply_at_vertex(small, {}, Permutation(2)), degree_mismatch);
}

TEST(ApplyAtVertex, MatchesTreePicture)
{
  std::mt19937_64 rng(3);
  for (auto text : {"C3;C2", "S3;C2;C3", "A4;C2;C2", "C2;C3;C2;C2"}) {
    TowerSpec t = parse_tower(text);
    auto deg = support::degrees_of(t);
    for (auto const &v : internal_vertices(t)) {
      Permutation sigma = support::random_permutation(deg[v.size()], rng);
      EXPECT_EQ(support::raw(apply_at_vertex(t, v, sigma).perm),
                support::induced_at_vertex(deg, v, support::raw(sigma)))
        << text;
    }
  }
}

TEST(Tower, BlockPreservation)
{
  std::mt19937_64 rng(8);
  for (auto text : {"A5;C3;C2;C2", "S4;C3;C2", "C2;S3;A4", "C6;C2;C2;C2"}) {
    TowerSpec t = parse_tower(text);
    auto tg = build_tower(t);
    for (auto const &g : tg.group.generators())
      EXPECT_TRUE(preserves_blocks(t, g)) << text;
    for (auto const &v : internal_vertices(t)) {
      auto sigma = support::random_permutation(t.level(v.size() + 1).degree(), rng);
      EXPECT_TRUE(preserves_blocks(t, apply_at_vertex(t, v, sigma).perm));
    }
  }
  // a leaf permutation that splits a block is caught
  TowerSpec t = parse_tower("C3;C2");
  EXPECT_FALSE(preserves_blocks(t, parse_cycles("(2 3)", 6)));
  EXPECT_TRUE(preserves_blocks(t, parse_cycles("(1 2)(3 5)(4 6)", 6)));
}

TEST(Tower, DisjointVerticesCommute)
{
  std::mt19937_64 rng(21);
  TowerSpec t = parse_tower("S3;C3;C2;C2");
  auto verts = internal_vertices(t);
  std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 300; ++i) {
    auto const &v = verts[pick(rng)];
    auto const &w = verts[pick(rng)];
    if (is_prefix(v, w) || is_prefix(w, v))
      continue;
    auto a = apply_at_vertex(t, v, support::random_permutation(t.level(v.size() + 1).degree(), rng));
    auto b = apply_at_vertex(t, w, support::random_permutation(t.level(w.size() + 1).degree(), rng));
    EXPECT_EQ(a * b, b * a);
    ++checked;
  }
  EXPECT_GE(checked, 100);
}

TEST(Tower, OrderFormulaUpTo200Leaves)
{
  // sample the tower family by a fixed stride; the acceptance run covers more
  auto towers = support::all_towers(support::acceptance_alphabet(), 5);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < towers.size(); i += 7) {
    auto const &t = towers[i];
    if (t.leaf_count() > 200)
      continue;
    EXPECT_EQ(build_tower(t).bsgs.order(), t.order()) << t.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 300u);
}

TEST(Tower, ProjectionToTopIsHomomorphism)
{
  std::mt19937_64 rng(4);
  for (auto text : {"S4;C3;C2", "A5;C2", "C3;S3;C2"}) {
    TowerSpec t = parse_tower(text);
    auto tg = build_tower(t);
    auto const &gens = tg.group.generators();
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    Bsgs top(PermGroup(t.level(1).degree(), standard_generators(t.level(1).normalized())));
    std::vector<Permutation> images;
    for (int i = 0; i < 100; ++i) {
      Permutation a = gens[pick(rng)] * gens[pick(rng)] * gens[pick(rng)];
      Permutation b = gens[pick(rng)] * gens[pick(rng)];
      Permutation pa = project_to_top(t, a), pb = project_to_top(t, b);
      EXPECT_EQ(project_to_top(t, a * b), pa * pb);
      EXPECT_TRUE(top.contains(pa));
      images.push_back(pa);
    }
    // onto: the projected generators generate G_1
    std::vector<Permutation> proj;
    for (auto const &g : gens)
      proj.push_back(project_to_top(t, g));
    EXPECT_EQ(Bsgs(PermGroup(t.level(1).degree(), proj)).order(), t.level(1).order());
  }
}

TEST(Example, GeneratorsOnFiveLeaves)
{
  auto [x, y] = example_generators(5);
  EXPECT_EQ(x.perm.degree(), 60u);
  EXPECT_EQ(y.perm.order(), 6);
  BigCount full = BigCount(60) * pow_big(3, 5) * pow_big(2, 15) * pow_big(2, 30);
  EXPECT_EQ(Bsgs(PermGroup(60, {x.perm, y.perm})).order(), full);
  EXPECT_TRUE(preserves_blocks(x.tower, x.perm));
  EXPECT_TRUE(preserves_blocks(y.tower, y.perm));
}

TEST(Example, GeneratorsOnSevenLeaves)
{
  auto [x, y] = example_generators(7);
  EXPECT_EQ(x.perm.degree(), 84u);
  BigCount full = BigCount(2520) * pow_big(3, 7) * pow_big(2, 21) * pow_big(2, 42);
  EXPECT_EQ(Bsgs(PermGroup(84, {x.perm, y.perm})).order(), full);
}

TEST(Example, OrderOfY)
{
  for (std::uint32_t n : {5u, 7u, 9u, 11u})
    EXPECT_EQ(example_generators(n).second.perm.order(), 2 * (n - 2)) << n;
}

TEST(Example, RejectsEvenOrSmallN)
{
  for (std::uint32_t n : {3u, 4u, 6u, 8u})
    EXPECT_THROW(example_generators(n), precondition_error) << n;
}

TEST(Example, PowersRecoverVertexElements)
{
  for (std::uint32_t n : {5u, 7u, 9u}) {
    auto [x, y] = example_generators(n);
    TowerSpec t = x.tower;
    Permutation at111 = apply_at_vertex(t, {1, 1, 1}, parse_cycles("(1 2)", 2)).perm;
    Permutation at5 = apply_at_vertex(t, {5}, parse_cycles("(1 2 3)", 3)).perm;
    Bsgs w(PermGroup(x.perm.degree(), {x.perm, y.perm}));

    auto found = [](Permutation const &g, Permutation const &target) {
      Permutation cur = g;
      for (int e = 1; e <= 10000 && !cur.is_identity(); ++e, cur = cur * g)
        if (cur == target)
          return true;
      return false;
    };
    EXPECT_TRUE(found(y.perm, at111)) << n;
    EXPECT_TRUE(found(x.perm, at5)) << n;
    EXPECT_TRUE(w.contains(at111));
    EXPECT_TRUE(w.contains(at5));
  }
}
