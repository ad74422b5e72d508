#ifndef WREATHGEN_BSGS_HPP
#define WREATHGEN_BSGS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace wreathgen
{

/// A permutation group given by generators on a fixed number of points.
class PermGroup
{
public:
  PermGroup() = default;

  PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : _degree(degree), _generators(std::move(generators))
  {
    for (auto const &g : _generators)
      if (g.degree() != _degree)
        throw degree_mismatch("generator of degree " + std::to_string(g.degree()) +
                              " in a group of degree " + std::to_string(_degree));
  }

  std::size_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _generators; }
  Permutation identity() const { return Permutation(_degree); }

private:
  std::size_t _degree = 0;
  std::vector<Permutation> _generators;
};

namespace detail
{

// Product replacement with an accumulator ("rattle" variant).
class ProductReplacement
{
public:
  ProductReplacement(PermGroup const &g, std::uint64_t seed) : _rng(seed), _acc(g.identity())
  {
    auto const &gens = g.generators();
    std::size_t slots = std::max<std::size_t>(10, gens.size());
    for (std::size_t i = 0; i < slots; ++i)
      _state.push_back(gens.empty() ? g.identity() : gens[i % gens.size()]);
    for (int i = 0; i < 60; ++i)
      next();
  }

  Permutation next()
  {
    std::uniform_int_distribution<std::size_t> pick(0, _state.size() - 1);
    std::size_t i = pick(_rng);
    std::size_t j = pick(_rng);
    while (j == i)
      j = pick(_rng);
    bool invert = (_rng() & 1u) != 0;
    _state[i] = _state[i] * (invert ? _state[j].inverse() : _state[j]);
    _acc = _acc * _state[i];
    return _acc;
  }

private:
  std::mt19937_64 _rng;
  std::vector<Permutation> _state;
  Permutation _acc;
};

} // namespace detail

/**
 * Base and strong generating set built by deterministic Schreier-Sims.
 *
 * Each level stores its base point, the strong generators fixing all earlier
 * base points, and an explicit transversal: for every orbit point beta, a
 * coset representative mapping the base point to beta. New base points are
 * always the smallest point moved by the element that forced the new level,
 * so the structure is reproducible for a given generator list.
 */
class Bsgs
{
public:
  struct Level
  {
    Point base;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal; // indexed by point

    bool in_orbit(Point x) const { return transversal[x].has_value(); }
  };

  Bsgs() = default;

  explicit Bsgs(PermGroup const &group) : _degree(group.degree())
  {
    if (seed_levels(group))
      complete(_levels.size());
  }

  /**
   * Same structure, given an upper bound `target` on the group order (for
   * example the order of a known overgroup). Sifts seeded random elements
   * until the orbit lengths multiply to `target`, which then certifies the
   * result; if random sifting stalls first, the deterministic completion
   * takes over, so order() is exact whenever the bound holds.
   */
  Bsgs(PermGroup const &group, BigCount const &target, std::uint64_t seed = 1)
    : _degree(group.degree())
  {
    if (!seed_levels(group) || order() == target)
      return;
    detail::ProductReplacement pr(group, seed);
    int stalled = 0;
    while (stalled < 48) {
      auto [h, j] = strip(pr.next());
      if (j == _levels.size() && h.is_identity()) {
        ++stalled;
        continue;
      }
      stalled = 0;
      insert_residue(h, j, 0);
      BigCount now = order();
      if (now == target)
        return;
      if (now > target)
        break;
    }
    complete(_levels.size());
  }

  std::size_t degree() const { return _degree; }
  std::vector<Level> const &levels() const { return _levels; }

  std::vector<Point> base() const
  {
    std::vector<Point> res;
    for (auto const &lvl : _levels)
      res.push_back(lvl.base);
    return res;
  }

  /// Union of the per-level generator lists, without repeats.
  std::vector<Permutation> strong_generators() const
  {
    std::vector<Permutation> res;
    for (auto const &lvl : _levels)
      for (auto const &g : lvl.generators)
        if (std::find(res.begin(), res.end(), g) == res.end())
          res.push_back(g);
    return res;
  }

  BigCount order() const
  {
    BigCount res = 1;
    for (auto const &lvl : _levels)
      res *= lvl.orbit.size();
    return res;
  }

  /// Sifts `g` through levels [from, end); returns the residue and the level
  /// at which sifting stopped (levels().size() if it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from = 0) const
  {
    for (std::size_t l = from; l < _levels.size(); ++l) {
      Point beta = g[_levels[l].base];
      if (!_levels[l].in_orbit(beta))
        return {std::move(g), l};
      g = g * _levels[l].transversal[beta]->inverse();
    }
    return {std::move(g), _levels.size()};
  }

  bool contains(Permutation const &g) const
  {
    if (g.degree() != _degree)
      throw degree_mismatch("membership test for degree " + std::to_string(g.degree()) +
                            " in a group of degree " + std::to_string(_degree));
    auto [residue, level] = strip(g);
    return level == _levels.size() && residue.is_identity();
  }

  /// Adds `g` to the group and restores the strong generating property.
  /// Returns false (and changes nothing) if `g` was already a member.
  bool extend(Permutation const &g)
  {
    if (g.degree() != _degree)
      throw degree_mismatch("cannot extend a group of degree " + std::to_string(_degree) +
                            " by a permutation of degree " + std::to_string(g.degree()));
    auto [h, j] = strip(g);
    if (j == _levels.size() && h.is_identity())
      return false;
    insert_residue(h, j, 0);
    complete(j + 1 > _levels.size() ? _levels.size() : j + 1);
    return true;
  }

private:
  std::size_t _degree = 0;
  std::vector<Level> _levels;
  // Per-level resume position in the (orbit point, generator) Schreier scan.
  std::vector<std::pair<std::size_t, std::size_t>> _progress;

  // Base points and per-level generators, orbits built; false for a trivial group.
  bool seed_levels(PermGroup const &group)
  {
    std::vector<Permutation> gens;
    for (auto const &g : group.generators())
      if (!g.is_identity())
        gens.push_back(g);
    if (gens.empty())
      return false;

    // extend the base until no generator fixes it pointwise
    for (auto const &g : gens)
      if (fixed_prefix(g) == _levels.size())
        push_level(g.smallest_moved_point());
    for (auto const &g : gens)
      for (std::size_t l = 0; l <= fixed_prefix(g) && l < _levels.size(); ++l)
        _levels[l].generators.push_back(g);
    for (std::size_t l = 0; l < _levels.size(); ++l)
      rebuild_orbit(l);
    return true;
  }

  void push_level(Point base)
  {
    Level lvl;
    lvl.base = base;
    lvl.transversal.resize(_degree);
    _levels.push_back(std::move(lvl));
    _progress.emplace_back(0, 0);
  }

  // Number of leading base points fixed by g.
  std::size_t fixed_prefix(Permutation const &g) const
  {
    std::size_t l = 0;
    while (l < _levels.size() && g[_levels[l].base] == _levels[l].base)
      ++l;
    return l;
  }

  void rebuild_orbit(std::size_t l)
  {
    Level &lvl = _levels[l];
    for (Point x : lvl.orbit)
      lvl.transversal[x].reset();
    lvl.orbit.assign(1, lvl.base);
    lvl.transversal[lvl.base] = Permutation(_degree);
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
      Point delta = lvl.orbit[i];
      for (auto const &s : lvl.generators) {
        Point gamma = s[delta];
        if (!lvl.in_orbit(gamma)) {
          lvl.transversal[gamma] = *lvl.transversal[delta] * s;
          lvl.orbit.push_back(gamma);
        }
      }
    }
    _progress[l] = {0, 0};
  }

  // h fixes the base points of levels [0, j); add it at levels [from, j].
  void insert_residue(Permutation const &h, std::size_t j, std::size_t from)
  {
    if (j == _levels.size())
      push_level(h.smallest_moved_point());
    for (std::size_t l = from; l <= j; ++l) {
      _levels[l].generators.push_back(h);
      rebuild_orbit(l);
    }
  }

  // Levels at index >= `start` already form a BSGS of their stabilizer;
  // process levels downward from start - 1 until level 0 is complete.
  void complete(std::size_t start)
  {
    std::size_t i = start;
    while (i > 0) {
      std::size_t l = i - 1;
      bool changed = false;
      auto &[bi, si] = _progress[l];
      for (; bi < _levels[l].orbit.size() && !changed; ++bi, si = 0) {
        Point beta = _levels[l].orbit[bi];
        for (; si < _levels[l].generators.size(); ++si) {
          Level const &lvl = _levels[l];
          Permutation const &x = lvl.generators[si];
          Point image = x[beta];
          Permutation schreier =
            *lvl.transversal[beta] * x * lvl.transversal[image]->inverse();
          if (schreier.is_identity())
            continue;
          auto [h, j] = strip(std::move(schreier), l + 1);
          if (j == _levels.size() && h.is_identity())
            continue;
          // resume at the same pair when this level is revisited
          insert_residue(h, j, l + 1);
          i = j + 1;
          changed = true;
          break;
        }
        if (changed)
          break;
      }
      if (!changed)
        --i;
    }
  }
};

} // namespace wreathgen

#endif // WREATHGEN_BSGS_HPP
