#ifndef WREATHGEN_TESTS_SUPPORT_HPP
#define WREATHGEN_TESTS_SUPPORT_HPP

// Deliberately naive reference implementations. They share nothing with the
// library beyond the Permutation type used to hand data back and forth.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "wreathgen.hpp"

namespace support
{

using Raw = std::vector<std::uint32_t>;

inline Raw raw(wreathgen::Permutation const &p)
{
  return Raw(p.images().begin(), p.images().end());
}

// points move through a first, then b
inline Raw then(Raw const &a, Raw const &b)
{
  Raw res(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    res[i] = b[a[i]];
  return res;
}

inline Raw identity(std::size_t n)
{
  Raw res(n);
  std::iota(res.begin(), res.end(), 0u);
  return res;
}

inline std::set<Raw> closure(std::size_t degree, std::vector<Raw> const &gens)
{
  std::set<Raw> seen{identity(degree)};
  std::vector<Raw> frontier{identity(degree)};
  while (!frontier.empty()) {
    std::vector<Raw> next;
    for (auto const &x : frontier)
      for (auto const &g : gens) {
        Raw y = then(x, g);
        if (seen.insert(y).second)
          next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::set<Raw> closure(wreathgen::PermGroup const &g)
{
  std::vector<Raw> gens;
  for (auto const &s : g.generators())
    gens.push_back(raw(s));
  return closure(g.degree(), gens);
}

/// Smallest k such that some k elements generate; tiny groups only.
inline int brute_d(wreathgen::PermGroup const &g)
{
  auto all = closure(g);
  std::vector<Raw> elems(all.begin(), all.end());
  std::size_t order = elems.size();
  if (order == 1)
    return 0;
  for (int k = 1;; ++k) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<Raw> tuple;
      for (auto i : idx)
        tuple.push_back(elems[i]);
      if (closure(g.degree(), tuple).size() == order)
        return k;
      // nondecreasing index tuples cover every multiset
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == elems.size() - 1)
        --pos;
      if (pos < 0)
        break;
      std::size_t v = ++idx[static_cast<std::size_t>(pos)];
      for (auto j = static_cast<std::size_t>(pos) + 1; j < idx.size(); ++j)
        idx[j] = v;
    }
  }
}

inline wreathgen::Permutation random_permutation(std::size_t n, std::mt19937_64 &rng)
{
  std::vector<wreathgen::Point> v(n);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  return wreathgen::Permutation(v);
}

/**
 * Leaf permutation induced by sigma at vertex v, straight from the tree
 * picture: a leaf below v has its coordinate at depth |v| moved by sigma,
 * every other leaf is fixed.
 */
inline Raw induced_at_vertex(std::vector<std::size_t> const &degrees,
                             std::vector<std::uint32_t> const &v, Raw const &sigma)
{
  std::size_t leaves = 1;
  for (auto d : degrees)
    leaves *= d;
  Raw res(leaves);
  for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
    // leaf -> address (0-based digits, most significant first)
    std::vector<std::size_t> addr(degrees.size());
    std::size_t rest = leaf;
    for (std::size_t i = degrees.size(); i-- > 0;) {
      addr[i] = rest % degrees[i];
      rest /= degrees[i];
    }
    bool below = true;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (addr[i] != v[i] - 1)
        below = false;
    if (below)
      addr[v.size()] = sigma[addr[v.size()]];
    std::size_t image = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      image = image * degrees[i] + addr[i];
    res[leaf] = static_cast<std::uint32_t>(image);
  }
  return res;
}

inline std::vector<std::size_t> degrees_of(wreathgen::TowerSpec const &t)
{
  std::vector<std::size_t> res;
  for (auto const &g : t.levels())
    res.push_back(g.degree());
  return res;
}

/// Every tower over the given tokens with 1..max_depth levels.
inline std::vector<wreathgen::TowerSpec> all_towers(std::vector<std::string> const &tokens,
                                                    std::size_t max_depth)
{
  std::vector<wreathgen::TowerSpec> res;
  std::vector<std::vector<wreathgen::GroupSpec>> layer{{}};
  for (std::size_t k = 1; k <= max_depth; ++k) {
    std::vector<std::vector<wreathgen::GroupSpec>> next;
    for (auto const &prefix : layer)
      for (auto const &tok : tokens) {
        auto levels = prefix;
        levels.push_back(wreathgen::parse_group_spec(tok));
        res.emplace_back(levels);
        next.push_back(std::move(levels));
      }
    layer = std::move(next);
  }
  return res;
}

inline std::vector<std::string> const &acceptance_alphabet()
{
  static std::vector<std::string> const tokens{"A4", "A5", "S3", "S4", "S5",
                                               "C2", "C3", "C4", "C5", "C6"};
  return tokens;
}

} // namespace support

#endif // WREATHGEN_TESTS_SUPPORT_HPP
