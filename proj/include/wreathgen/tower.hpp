#ifndef WREATHGEN_TOWER_HPP
#define WREATHGEN_TOWER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsgs.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace wreathgen
{

enum class GroupKind { Alt, Sym, Cyc };

/**
 * One of A_n, S_n (natural action on n points) or C_n (regular action on n
 * points). Construction validates non-triviality; `normalized()` maps A_3 to
 * C_3 and S_2 to C_2 so that case analysis only ever sees A_n with n >= 4,
 * S_n with n >= 3, and cyclic groups.
 */
struct GroupSpec
{
  GroupKind kind;
  std::uint32_t n;

  GroupSpec(GroupKind kind, std::uint32_t n) : kind(kind), n(n)
  {
    std::uint32_t min = kind == GroupKind::Alt ? 3 : 2;
    if (n < min)
      throw precondition_error("trivial group " + std::string(1, letter()) +
                               std::to_string(n) + " is not allowed");
  }

  static GroupSpec alt(std::uint32_t n) { return {GroupKind::Alt, n}; }
  static GroupSpec sym(std::uint32_t n) { return {GroupKind::Sym, n}; }
  static GroupSpec cyc(std::uint32_t n) { return {GroupKind::Cyc, n}; }

  char letter() const
  {
    switch (kind) {
      case GroupKind::Alt: return 'A';
      case GroupKind::Sym: return 'S';
      default: return 'C';
    }
  }

  GroupSpec normalized() const
  {
    if (kind == GroupKind::Alt && n == 3)
      return cyc(3);
    if (kind == GroupKind::Sym && n == 2)
      return cyc(2);
    return *this;
  }

  bool is_normalized() const { return normalized() == *this; }
  bool is_cyclic() const { return normalized().kind == GroupKind::Cyc; }

  /// Number of points acted on.
  std::uint32_t degree() const { return n; }

  BigCount order() const
  {
    if (kind == GroupKind::Cyc)
      return n;
    BigCount f = 1;
    for (std::uint32_t i = 2; i <= n; ++i)
      f *= i;
    return kind == GroupKind::Alt ? BigCount(f / 2) : f;
  }

  std::string to_string() const { return letter() + std::to_string(n); }

  friend bool operator==(GroupSpec const &, GroupSpec const &) = default;
};

/// Parses a single token such as "A5", "S3" or "C12".
inline GroupSpec parse_group_spec(std::string_view token)
{
  if (token.size() < 2)
    throw parse_error("bad group token \"" + std::string(token) + "\"");
  GroupKind kind;
  switch (token[0]) {
    case 'A': kind = GroupKind::Alt; break;
    case 'S': kind = GroupKind::Sym; break;
    case 'C': kind = GroupKind::Cyc; break;
    default: throw parse_error("bad group token \"" + std::string(token) + "\"");
  }
  std::uint64_t n = 0;
  for (char c : token.substr(1)) {
    if (c < '0' || c > '9')
      throw parse_error("bad group token \"" + std::string(token) + "\"");
    n = n * 10 + static_cast<unsigned>(c - '0');
    if (n > 1000000)
      throw parse_error("degree too large in \"" + std::string(token) + "\"");
  }
  try {
    return GroupSpec(kind, static_cast<std::uint32_t>(n));
  } catch (precondition_error const &) {
    throw parse_error("trivial group \"" + std::string(token) + "\"");
  }
}

/**
 * An iterated wreath product, listed top-first: levels()[0] is G_1 acting on
 * the children of the root, levels().back() is G_k acting at the leaves. In
 * the usual product notation this is G_k wr ... wr G_1.
 */
class TowerSpec
{
public:
  explicit TowerSpec(std::vector<GroupSpec> levels) : _levels(std::move(levels))
  {
    if (_levels.empty())
      throw precondition_error("a tower needs at least one level");
  }

  std::vector<GroupSpec> const &levels() const { return _levels; }
  std::size_t depth() const { return _levels.size(); }
  GroupSpec const &level(std::size_t i) const { return _levels.at(i - 1); } // 1-based

  TowerSpec normalized() const
  {
    std::vector<GroupSpec> res;
    for (auto const &g : _levels)
      res.push_back(g.normalized());
    return TowerSpec(std::move(res));
  }

  /// Sub-tower G_from .. G_k, 1-based; requires from <= depth().
  TowerSpec suffix(std::size_t from) const
  {
    return TowerSpec(std::vector<GroupSpec>(_levels.begin() + static_cast<long>(from - 1),
                                            _levels.end()));
  }

  BigCount leaf_count() const
  {
    BigCount res = 1;
    for (auto const &g : _levels)
      res *= g.degree();
    return res;
  }

  /// prod_i |G_i|^(number of level-(i-1) vertices); refuses towers whose
  /// order would not fit in memory.
  BigCount order() const
  {
    BigCount res = 1;
    BigCount vertices = 1;
    for (auto const &g : _levels) {
      if (vertices > (1u << 20))
        throw budget_exceeded("tower order too large to write out");
      res *= boost::multiprecision::pow(g.order(), static_cast<unsigned>(vertices));
      vertices *= g.degree();
    }
    return res;
  }

  std::string to_string() const
  {
    std::string out;
    for (std::size_t i = 0; i < _levels.size(); ++i) {
      if (i)
        out += ';';
      out += _levels[i].to_string();
    }
    return out;
  }

  friend bool operator==(TowerSpec const &, TowerSpec const &) = default;

private:
  std::vector<GroupSpec> _levels;
};

/// Parses "A5;C3;C2;C2" (top-first). Whitespace is not permitted anywhere.
inline TowerSpec parse_tower(std::string_view text)
{
  std::vector<GroupSpec> levels;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(';', pos);
    std::string_view token = text.substr(pos, next == std::string_view::npos
                                                ? std::string_view::npos
                                                : next - pos);
    if (token.empty())
      throw parse_error("empty level in tower \"" + std::string(text) + "\"");
    levels.push_back(parse_group_spec(token));
    if (next == std::string_view::npos)
      break;
    pos = next + 1;
  }
  return TowerSpec(std::move(levels));
}

/// 1-based child indices from the root; empty is the root itself.
using VertexAddress = std::vector<std::uint32_t>;

/// A leaf permutation together with the tower whose tree it acts on.
struct TreeAutomorphism
{
  TowerSpec tower;
  Permutation perm;

  TreeAutomorphism operator*(TreeAutomorphism const &rhs) const
  {
    if (!(tower == rhs.tower))
      throw precondition_error("tree automorphisms of different towers");
    return {tower, perm * rhs.perm};
  }

  friend bool operator==(TreeAutomorphism const &, TreeAutomorphism const &) = default;
};

namespace detail
{

inline std::vector<std::size_t> degrees(TowerSpec const &t)
{
  std::vector<std::size_t> res;
  for (auto const &g : t.levels())
    res.push_back(g.degree());
  return res;
}

inline std::size_t leaf_count_checked(TowerSpec const &t)
{
  std::size_t n = 1;
  for (auto const &g : t.levels()) {
    if (n > (std::size_t{1} << 26) / g.degree())
      throw budget_exceeded("tower " + t.to_string() + " has too many leaves to materialize");
    n *= g.degree();
  }
  return n;
}

// Leaves below one vertex at depth `depth` (0 = root).
inline std::size_t block_size(std::vector<std::size_t> const &deg, std::size_t depth)
{
  std::size_t bs = 1;
  for (std::size_t j = depth; j < deg.size(); ++j)
    bs *= deg[j];
  return bs;
}

// First leaf below a vertex.
inline std::size_t vertex_offset(std::vector<std::size_t> const &deg, VertexAddress const &v)
{
  if (v.size() > deg.size())
    throw precondition_error("vertex address longer than the tower");
  std::size_t offset = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > deg[i])
      throw precondition_error("address component " + std::to_string(v[i]) +
                               " out of range 1.." + std::to_string(deg[i]));
    offset += (v[i] - 1) * block_size(deg, i + 1);
  }
  return offset;
}

} // namespace detail

/// Leaf a_1 ... a_k maps to sum (a_i - 1) * prod_{j > i} n_j.
inline Point leaf_index(TowerSpec const &t, VertexAddress const &v)
{
  if (v.size() != t.depth())
    throw precondition_error("leaf address must have length " + std::to_string(t.depth()));
  return static_cast<Point>(detail::vertex_offset(detail::degrees(t), v));
}

inline VertexAddress leaf_address(TowerSpec const &t, Point leaf)
{
  auto deg = detail::degrees(t);
  VertexAddress v(deg.size());
  for (std::size_t i = deg.size(); i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(leaf % deg[i]) + 1;
    leaf /= static_cast<Point>(deg[i]);
  }
  return v;
}

/**
 * Generators in natural action: C_n -> (1 .. n); S_n -> (1 2), (1 .. n);
 * A_n -> (1 2 3) with (1 .. n) for odd n or (2 .. n) for even n. The returned
 * list is checked against the group order before it is handed out.
 */
inline std::vector<Permutation> standard_generators(GroupSpec const &s)
{
  if (!s.is_normalized())
    throw precondition_error("standard_generators needs a normalized spec, got " +
                             s.to_string());
  std::uint32_t n = s.n;
  std::vector<Point> all(n);
  for (std::uint32_t i = 0; i < n; ++i)
    all[i] = i + 1;
  std::vector<Permutation> gens;
  switch (s.kind) {
    case GroupKind::Cyc:
      gens.push_back(from_cycles(n, {all}));
      break;
    case GroupKind::Sym:
      gens.push_back(from_cycles(n, {{1, 2}}));
      gens.push_back(from_cycles(n, {all}));
      break;
    case GroupKind::Alt:
      gens.push_back(from_cycles(n, {{1, 2, 3}}));
      if (n % 2 == 1)
        gens.push_back(from_cycles(n, {all}));
      else
        gens.push_back(from_cycles(n, {std::vector<Point>(all.begin() + 1, all.end())}));
      break;
  }
  if (Bsgs(PermGroup(n, gens), s.order()).order() != s.order())
    throw consistency_error("standard generators of " + s.to_string() +
                            " do not generate a group of the right order");
  return gens;
}

/**
 * Permutes the children of vertex `v` (depth i-1) by `sigma`, carrying each
 * child's subtree along rigidly. Leaves outside the subtree of `v` are fixed.
 */
inline TreeAutomorphism apply_at_vertex(TowerSpec const &t, VertexAddress const &v,
                                        Permutation const &sigma)
{
  auto deg = detail::degrees(t);
  if (v.size() >= deg.size())
    throw precondition_error("vertex at depth " + std::to_string(v.size()) +
                             " has no children in a tower of depth " +
                             std::to_string(deg.size()));
  std::size_t children = deg[v.size()];
  if (sigma.degree() != children)
    throw degree_mismatch("vertex has " + std::to_string(children) +
                          " children but permutation has degree " +
                          std::to_string(sigma.degree()));
  std::size_t leaves = detail::leaf_count_checked(t);
  std::size_t offset = detail::vertex_offset(deg, v);
  std::size_t bs = detail::block_size(deg, v.size() + 1);

  std::vector<Point> images(leaves);
  for (std::size_t x = 0; x < leaves; ++x)
    images[x] = static_cast<Point>(x);
  for (std::size_t c = 0; c < children; ++c)
    for (std::size_t r = 0; r < bs; ++r)
      images[offset + c * bs + r] = static_cast<Point>(offset + sigma[static_cast<Point>(c)] * bs + r);
  return {t, Permutation(std::move(images))};
}

struct TowerGroup
{
  PermGroup group;
  Bsgs bsgs;
};

/**
 * The iterated wreath product on its leaves, generated by the standard
 * generators of every level placed at the leftmost vertex of the level
 * above. This only generates the full product because each level acts
 * transitively, so the BSGS order is compared with the product formula.
 */
inline TowerGroup build_tower(TowerSpec const &spec)
{
  TowerSpec t = spec.normalized();
  std::size_t leaves = detail::leaf_count_checked(t);
  std::vector<Permutation> gens;
  VertexAddress leftmost;
  for (auto const &g : t.levels()) {
    for (auto const &s : standard_generators(g))
      gens.push_back(apply_at_vertex(t, leftmost, s).perm);
    leftmost.push_back(1);
  }
  PermGroup group(leaves, std::move(gens));
  Bsgs bsgs(group, t.order());
  if (bsgs.order() != t.order())
    throw consistency_error("tower " + t.to_string() + " generated a group of order " +
                            bsgs.order().str() + ", expected " + t.order().str());
  return {std::move(group), std::move(bsgs)};
}

inline PermGroup tower_generators(TowerSpec const &t) { return build_tower(t).group; }

/// True if every level-i leaf block is mapped onto a level-i leaf block.
inline bool preserves_blocks(TowerSpec const &t, Permutation const &p)
{
  auto deg = detail::degrees(t);
  std::size_t leaves = detail::block_size(deg, 0);
  if (p.degree() != leaves)
    return false;
  for (std::size_t depth = 1; depth < deg.size(); ++depth) {
    std::size_t bs = detail::block_size(deg, depth);
    for (std::size_t start = 0; start < leaves; start += bs) {
      std::size_t target = p[static_cast<Point>(start)] / bs;
      for (std::size_t r = 1; r < bs; ++r)
        if (p[static_cast<Point>(start + r)] / bs != target)
          return false;
    }
  }
  return true;
}

/// Action induced on the n_1 children of the root.
inline Permutation project_to_top(TowerSpec const &t, Permutation const &p)
{
  auto deg = detail::degrees(t);
  std::size_t bs = detail::block_size(deg, 1);
  std::vector<Point> images(deg[0]);
  for (std::size_t c = 0; c < deg[0]; ++c)
    images[c] = static_cast<Point>(p[static_cast<Point>(c * bs)] / bs);
  return Permutation(std::move(images));
}

inline TowerSpec example_tower(std::uint32_t n)
{
  return TowerSpec({GroupSpec::alt(n), GroupSpec::cyc(3), GroupSpec::cyc(2), GroupSpec::cyc(2)});
}

/**
 * Two generators of C2 wr C2 wr C3 wr A_n for odd n >= 5:
 *
 *   x = [(1 2) at 11] [(1 2 3) at 5] [(1 2)(3 4) at the root]
 *   y = [(1 2) at 111] [(2 4 5 ... n) at the root]
 *
 * Factors are listed deepest first and multiplied left to right, so the
 * deepest one acts first.
 */
inline std::pair<TreeAutomorphism, TreeAutomorphism> example_generators(std::uint32_t n)
{
  if (n < 5 || n % 2 == 0)
    throw precondition_error("example generators need odd n >= 5, got " + std::to_string(n));
  TowerSpec t = example_tower(n);

  std::vector<Point> long_cycle{2};
  for (Point i = 4; i <= n; ++i)
    long_cycle.push_back(i);

  TreeAutomorphism x = apply_at_vertex(t, {1, 1}, from_cycles(2, {{1, 2}})) *
                       apply_at_vertex(t, {5}, from_cycles(3, {{1, 2, 3}})) *
                       apply_at_vertex(t, {}, from_cycles(n, {{1, 2}, {3, 4}}));
  TreeAutomorphism y = apply_at_vertex(t, {1, 1, 1}, from_cycles(2, {{1, 2}})) *
                       apply_at_vertex(t, {}, from_cycles(n, {long_cycle}));
  return {std::move(x), std::move(y)};
}

} // namespace wreathgen

#endif // WREATHGEN_TOWER_HPP
