#ifndef WREATHGEN_ORACLE_HPP
#define WREATHGEN_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bsgs.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace wreathgen
{

struct GenSearchConfig
{
  std::uint64_t seed = 1;
  std::size_t random_attempts = 200;
  std::size_t exhaustive_order_limit = 20000;
  bool conjugacy_reduction = true;
};

/**
 * Full multiplication table of a small permutation group. Element 0 is the
 * identity; elements are numbered in breadth-first order over the
 * generators, and mul(a, b) is the index of elements()[a] * elements()[b].
 */
class CayleyTable
{
public:
  using Index = std::uint16_t;
  static constexpr std::size_t max_order = 65535;

  explicit CayleyTable(PermGroup const &g, std::size_t order_limit = 20000)
  {
    std::size_t limit = std::min(order_limit, max_order);
    auto const &gens = g.generators();
    _elements.push_back(g.identity());
    _index.emplace(_elements[0], 0);
    std::vector<std::size_t> parent{0}, via{0};
    std::vector<std::vector<Index>> right(gens.size());

    for (std::size_t x = 0; x < _elements.size(); ++x) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Permutation y = _elements[x] * gens[s];
        auto it = _index.find(y);
        std::size_t iy;
        if (it == _index.end()) {
          if (_elements.size() >= limit)
            throw budget_exceeded("group order exceeds the Cayley table limit of " +
                                  std::to_string(limit));
          iy = _elements.size();
          _index.emplace(y, iy);
          _elements.push_back(std::move(y));
          parent.push_back(x);
          via.push_back(s);
        } else {
          iy = it->second;
        }
        right[s].push_back(static_cast<Index>(iy));
      }
    }

    std::size_t n = _elements.size();
    _mul.assign(n * n, 0);
    // column g is filled from column parent(g), since g = parent(g) * gens[via(g)]
    for (std::size_t x = 0; x < n; ++x)
      _mul[x * n] = static_cast<Index>(x);
    for (std::size_t col = 1; col < n; ++col) {
      auto const &r = right[via[col]];
      std::size_t pc = parent[col];
      for (std::size_t x = 0; x < n; ++x)
        _mul[x * n + col] = r[_mul[x * n + pc]];
    }
    _inverse.resize(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (_mul[x * n + y] == 0) {
          _inverse[x] = static_cast<Index>(y);
          break;
        }
    for (auto const &s : gens)
      _generators.push_back(static_cast<Index>(_index.at(s)));
  }

  std::size_t size() const { return _elements.size(); }
  std::vector<Permutation> const &elements() const { return _elements; }
  std::size_t index_of(Permutation const &p) const { return _index.at(p); }
  std::size_t mul(std::size_t a, std::size_t b) const { return _mul[a * size() + b]; }
  std::size_t inverse(std::size_t a) const { return _inverse[a]; }
  std::vector<Index> const &generator_indices() const { return _generators; }

  /// Representatives (smallest index) of the conjugacy classes, ascending.
  std::vector<std::size_t> class_representatives() const
  {
    std::size_t n = size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> reps;
    std::vector<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[x])
        continue;
      reps.push_back(x);
      seen[x] = true;
      queue.assign(1, x);
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (auto s : _generators) {
          std::size_t c = mul(mul(_inverse[s], queue[i]), s);
          if (!seen[c]) {
            seen[c] = true;
            queue.push_back(c);
          }
        }
    }
    return reps;
  }

private:
  std::vector<Permutation> _elements;
  std::unordered_map<Permutation, std::size_t, PermutationHash> _index;
  std::vector<Index> _mul;
  std::vector<Index> _inverse;
  std::vector<Index> _generators;
};

namespace detail
{

// Breadth-first subgroup closure over the table, reusing marks between calls.
class SubgroupCloser
{
public:
  explicit SubgroupCloser(CayleyTable const &table)
    : _table(table), _stamp(table.size(), 0), _queue(table.size())
  {}

  bool generates(std::vector<std::size_t> const &tuple)
  {
    std::size_t n = _table.size();
    if (n == 1)
      return true;
    if (++_epoch == 0) {
      std::fill(_stamp.begin(), _stamp.end(), 0);
      _epoch = 1;
    }
    std::size_t head = 0, tail = 0;
    _queue[tail++] = 0;
    _stamp[0] = _epoch;
    while (head < tail) {
      std::size_t x = _queue[head++];
      for (std::size_t t : tuple) {
        std::size_t y = _table.mul(x, t);
        if (_stamp[y] != _epoch) {
          _stamp[y] = _epoch;
          _queue[tail++] = y;
          // a subgroup with more than half the elements is everything
          if (2 * tail > n)
            return true;
        }
      }
    }
    return tail == n;
  }

private:
  CayleyTable const &_table;
  std::vector<std::uint32_t> _stamp;
  std::vector<std::size_t> _queue;
  std::uint32_t _epoch = 0;
};

} // namespace detail

/**
 * First generating k-tuple in scan order, or nullopt if none exists. The
 * first slot runs over conjugacy class representatives when
 * `conjugacy_reduction` is set (generation is invariant under simultaneous
 * conjugation); later slots run over all elements by index.
 */
inline std::optional<std::vector<std::size_t>>
scan_generating_tuple(CayleyTable const &table, std::size_t k, bool conjugacy_reduction)
{
  if (k == 0)
    return table.size() == 1 ? std::optional<std::vector<std::size_t>>(std::vector<std::size_t>{})
                             : std::nullopt;
  std::vector<std::size_t> first;
  if (conjugacy_reduction) {
    first = table.class_representatives();
  } else {
    first.resize(table.size());
    for (std::size_t i = 0; i < first.size(); ++i)
      first[i] = i;
  }

  detail::SubgroupCloser closer(table);
  std::vector<std::size_t> tuple(k, 0);
  std::size_t n = table.size();

  // one partition per first-slot representative
  for (std::size_t rep : first) {
    tuple[0] = rep;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      for (std::size_t s = 1; s < k; ++s)
        tuple[s] = idx[s];
      if (closer.generates(tuple))
        return tuple;
      bool done = true;
      for (std::size_t s = k; s > 1;) {
        --s;
        if (++idx[s] < n) {
          done = false;
          break;
        }
        idx[s] = 0;
      }
      if (done)
        break;
    }
  }
  return std::nullopt;
}

/// True iff no k elements generate the group. Needs |G| within the limit.
inline bool exhaustive_nongeneration(PermGroup const &g, std::size_t k,
                                     GenSearchConfig const &cfg = {})
{
  CayleyTable table(g, cfg.exhaustive_order_limit);
  return !scan_generating_tuple(table, k, cfg.conjugacy_reduction).has_value();
}

namespace detail
{

inline bool generates(PermGroup const &g, std::vector<Permutation> const &tuple,
                      BigCount const &order)
{
  return Bsgs(PermGroup(g.degree(), tuple), order).order() == order;
}

} // namespace detail

/// Seeded random search for a generating k-tuple, each candidate certified
/// by comparing BSGS orders. Deterministic for a given seed.
inline std::optional<std::vector<Permutation>>
find_generating_tuple(PermGroup const &g, std::size_t k, GenSearchConfig const &cfg,
                      BigCount const &order)
{
  if (k == 0)
    return order == 1 ? std::optional<std::vector<Permutation>>(std::vector<Permutation>{})
                      : std::nullopt;
  detail::ProductReplacement pr(g, cfg.seed);
  for (std::size_t attempt = 0; attempt < cfg.random_attempts; ++attempt) {
    std::vector<Permutation> tuple;
    for (std::size_t i = 0; i < k; ++i)
      tuple.push_back(pr.next());
    if (detail::generates(g, tuple, order))
      return tuple;
  }
  return std::nullopt;
}

inline std::optional<std::vector<Permutation>>
find_generating_tuple(PermGroup const &g, std::size_t k, GenSearchConfig const &cfg = {})
{
  return find_generating_tuple(g, k, cfg, group_order(g));
}

struct LowerBound
{
  int value;
  std::string certificate;
};

/**
 * max(d(G/G'), 2 if G is not cyclic). d(G/G') is taken over the primes
 * dividing |G| (all of them at most the degree). G is cyclic exactly when
 * it is abelian and every p-rank of G = G/G' is at most one.
 */
inline LowerBound d_lower_bound(PermGroup const &g)
{
  BigCount order = group_order(g);
  if (order == 1)
    return {0, "abelianization"};
  PermGroup derived = derived_subgroup(g);
  int dab = 0;
  for (auto p : primes_up_to(g.degree()))
    if (order % p == 0)
      dab = std::max(dab, abelian_p_rank(g, p, order, derived));
  bool cyclic = is_abelian(g) && dab <= 1;
  int noncyclic = cyclic ? 1 : 2;
  if (dab >= noncyclic)
    return {dab, "abelianization"};
  return {noncyclic, "noncyclic"};
}

struct GenResult
{
  int lower = 0;
  std::string lower_certificate;
  int upper = 0;
  std::vector<Permutation> witness;
  bool exact = false;
  std::uint64_t seed = 0;
  BigCount order;
};

/**
 * Certified bounds on d(G). The upper bound is the smallest k (from the lower
 * bound upward) with a random witness; the lower bound starts from
 * d_lower_bound and, for groups within the Cayley table limit, is raised by
 * exhaustive scans that either prove no (upper - 1)-tuple generates or
 * produce a smaller witness.
 */
inline GenResult min_generators(PermGroup const &g, GenSearchConfig const &cfg = {})
{
  GenResult res;
  res.seed = cfg.seed;
  res.order = group_order(g);
  auto lb = d_lower_bound(g);
  res.lower = lb.value;
  res.lower_certificate = lb.certificate;

  std::vector<Permutation> given;
  for (auto const &s : g.generators())
    if (!s.is_identity())
      given.push_back(s);

  if (res.order == 1) {
    res.upper = 0;
    res.exact = true;
    return res;
  }

  for (std::size_t k = static_cast<std::size_t>(std::max(1, res.lower));; ++k) {
    if (k >= given.size()) {
      res.upper = static_cast<int>(given.size());
      res.witness = given;
      break;
    }
    if (auto w = find_generating_tuple(g, k, cfg, res.order)) {
      res.upper = static_cast<int>(k);
      res.witness = std::move(*w);
      break;
    }
  }

  if (res.lower < res.upper && res.order <= cfg.exhaustive_order_limit &&
      res.order <= CayleyTable::max_order) {
    CayleyTable table(g, cfg.exhaustive_order_limit);
    while (res.lower < res.upper) {
      std::size_t k = static_cast<std::size_t>(res.upper - 1);
      if (auto t = scan_generating_tuple(table, k, cfg.conjugacy_reduction)) {
        res.upper = static_cast<int>(k);
        res.witness.clear();
        for (auto i : *t)
          res.witness.push_back(table.elements()[i]);
      } else {
        res.lower = res.upper;
        res.lower_certificate = "exhaustive(" + std::to_string(k) + ")";
      }
    }
  }

  if (!detail::generates(g, res.witness, res.order))
    throw consistency_error("witness does not generate the group");
  if (res.lower > res.upper)
    throw consistency_error("lower bound exceeds a witnessed upper bound");
  res.exact = res.lower == res.upper;
  return res;
}

} // namespace wreathgen

#endif // WREATHGEN_ORACLE_HPP
