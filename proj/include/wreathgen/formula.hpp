#ifndef WREATHGEN_FORMULA_HPP
#define WREATHGEN_FORMULA_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "errors.hpp"
#include "group.hpp"
#include "tower.hpp"

namespace wreathgen
{

/// Finite abelian group up to the data that matters for generation:
/// prime -> d_p. Zero ranks are never stored.
class AbelianProfile
{
public:
  AbelianProfile() = default;
  explicit AbelianProfile(std::map<std::uint64_t, int> ranks)
  {
    for (auto [p, r] : ranks)
      if (r > 0)
        _ranks[p] = r;
  }

  int rank(std::uint64_t p) const
  {
    auto it = _ranks.find(p);
    return it == _ranks.end() ? 0 : it->second;
  }

  void add(std::uint64_t p, int r = 1)
  {
    if (r > 0)
      _ranks[p] += r;
  }

  /// d(A) = max_p d_p(A); 0 for the trivial group.
  int d() const
  {
    int res = 0;
    for (auto [p, r] : _ranks)
      res = std::max(res, r);
    return res;
  }

  std::map<std::uint64_t, int> const &ranks() const { return _ranks; }

  friend bool operator==(AbelianProfile const &, AbelianProfile const &) = default;

private:
  std::map<std::uint64_t, int> _ranks;
};

enum class FormulaCase { A4, An, Sn, Cyclic, SingleLevel };

inline std::string to_string(FormulaCase c)
{
  switch (c) {
    case FormulaCase::A4: return "A4";
    case FormulaCase::An: return "An";
    case FormulaCase::Sn: return "Sn";
    case FormulaCase::Cyclic: return "Cyclic";
    default: return "SingleLevel";
  }
}

struct FormulaResult
{
  int d;
  FormulaCase case_tag;
  AbelianProfile profile;
};

/// Contribution of G/G' for one normalized level.
inline void add_abelianization(AbelianProfile &a, GroupSpec const &spec)
{
  GroupSpec g = spec.normalized();
  switch (g.kind) {
    case GroupKind::Alt:
      if (g.n == 4)
        a.add(3);
      break;
    case GroupKind::Sym:
      a.add(2);
      break;
    case GroupKind::Cyc:
      for (auto p : prime_divisors(g.n))
        a.add(p);
      break;
  }
}

/// Abelianization of the sub-tower G_from .. G_k; from = k + 1 gives the
/// trivial group.
inline AbelianProfile abelianization(TowerSpec const &t, std::size_t from_level)
{
  if (from_level < 1 || from_level > t.depth() + 1)
    throw precondition_error("from_level " + std::to_string(from_level) +
                             " outside 1.." + std::to_string(t.depth() + 1));
  AbelianProfile a;
  for (std::size_t i = from_level; i <= t.depth(); ++i)
    add_abelianization(a, t.level(i));
  return a;
}

/// d(A wr G_1) for an abelian group A and a top group G_1.
inline int d_abelian_wreath(AbelianProfile const &a, GroupSpec const &top)
{
  GroupSpec g = top.normalized();
  switch (g.kind) {
    case GroupKind::Alt:
      if (g.n == 4)
        return std::max({2, a.d(), a.rank(3) + 1});
      return std::max(2, a.d());
    case GroupKind::Sym:
      return std::max({2, a.d(), a.rank(2) + 1});
    default:
      return a.d() + 1;
  }
}

inline FormulaCase case_of(GroupSpec const &top)
{
  GroupSpec g = top.normalized();
  switch (g.kind) {
    case GroupKind::Alt: return g.n == 4 ? FormulaCase::A4 : FormulaCase::An;
    case GroupKind::Sym: return FormulaCase::Sn;
    default: return FormulaCase::Cyclic;
  }
}

/**
 * d(W) from the four-way case split on the (normalized) top group, with A
 * the abelianization of everything below it. A single level is answered
 * classically: 1 for cyclic groups, 2 otherwise.
 */
inline FormulaResult d_tower(TowerSpec const &spec)
{
  TowerSpec t = spec.normalized();
  GroupSpec const &top = t.level(1);
  if (t.depth() == 1)
    return {top.is_cyclic() ? 1 : 2, FormulaCase::SingleLevel, AbelianProfile{}};

  AbelianProfile a = abelianization(t, 2);
  FormulaCase c = case_of(top);
  int d = 0;
  switch (c) {
    case FormulaCase::A4: d = std::max({2, a.d(), a.rank(3) + 1}); break;
    case FormulaCase::An: d = std::max(2, a.d()); break;
    case FormulaCase::Sn: d = std::max({2, a.d(), a.rank(2) + 1}); break;
    default: d = std::max(2, a.d() + 1); break;
  }
  if (d != std::max(2, d_abelian_wreath(a, top)))
    throw consistency_error("case split and abelian-base reduction disagree for " +
                            t.to_string());
  return {d, c, a};
}

/// Level counts used by the counting formula, taken over all levels.
struct CountingProfile
{
  int a4 = 0;
  int s = 0;
  std::map<std::uint64_t, int> c;

  int cyclic(std::uint64_t p) const
  {
    auto it = c.find(p);
    return it == c.end() ? 0 : it->second;
  }
};

inline CountingProfile counting_profile(TowerSpec const &spec)
{
  CountingProfile cp;
  for (auto const &raw : spec.levels()) {
    GroupSpec g = raw.normalized();
    if (g.kind == GroupKind::Alt && g.n == 4)
      ++cp.a4;
    else if (g.kind == GroupKind::Sym)
      ++cp.s;
    else if (g.kind == GroupKind::Cyc)
      for (auto p : prime_divisors(g.n))
        ++cp.c[p];
  }
  return cp;
}

/// The counting formula only covers towers whose top group is not cyclic.
class cyclic_top_error : public precondition_error
{
public:
  explicit cyclic_top_error(std::string const &what) : precondition_error(what) {}
};

/// max(2, c_2 + s, c_3 + a_4, max_p c_p); needs k >= 2 and a non-cyclic top.
inline int d_corollary(TowerSpec const &spec)
{
  TowerSpec t = spec.normalized();
  if (t.depth() < 2)
    throw precondition_error("counting formula needs at least two levels");
  if (t.level(1).is_cyclic())
    throw cyclic_top_error("counting formula needs a non-cyclic top group, got " +
                             t.level(1).to_string());
  CountingProfile cp = counting_profile(t);
  int d = std::max({2, cp.cyclic(2) + cp.s, cp.cyclic(3) + cp.a4});
  for (auto [p, count] : cp.c)
    d = std::max(d, count);
  return d;
}

} // namespace wreathgen

#endif // WREATHGEN_FORMULA_HPP
