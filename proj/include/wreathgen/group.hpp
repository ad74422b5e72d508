#ifndef WREATHGEN_GROUP_HPP
#define WREATHGEN_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "bsgs.hpp"
#include "errors.hpp"
#include "permutation.hpp"

namespace wreathgen
{

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n)
{
  std::vector<std::uint64_t> res;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (is_prime(p))
      res.push_back(p);
  return res;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> res;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      res.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    res.push_back(n);
  return res;
}

inline BigCount group_order(PermGroup const &g) { return Bsgs(g).order(); }

/// Every element of <g>, by breadth-first closure over right multiplication
/// by generators. Throws budget_exceeded once more than `limit` are found.
inline std::vector<Permutation> enumerate_elements(PermGroup const &g,
                                                   std::size_t limit = 40320)
{
  std::vector<Permutation> elems{g.identity()};
  std::unordered_set<Permutation, PermutationHash> seen{g.identity()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto const &s : g.generators()) {
      Permutation y = elems[i] * s;
      if (seen.insert(y).second) {
        if (elems.size() >= limit)
          throw budget_exceeded("group has more than " + std::to_string(limit) +
                                " elements");
        elems.push_back(std::move(y));
      }
    }
  }
  return elems;
}

/// Generators for the normal closure of `seeds` in `g`, returned together
/// with the BSGS that certified closure.
inline std::pair<PermGroup, Bsgs> normal_closure_with_bsgs(PermGroup const &g,
                                                           std::vector<Permutation> seeds)
{
  std::vector<Permutation> gens;
  Bsgs closure(PermGroup(g.degree(), {}));
  std::deque<Permutation> pending(seeds.begin(), seeds.end());
  while (!pending.empty()) {
    Permutation n = std::move(pending.front());
    pending.pop_front();
    if (!closure.extend(n))
      continue;
    gens.push_back(n);
    for (auto const &s : g.generators())
      pending.push_back(n.conjugate(s));
  }
  return {PermGroup(g.degree(), std::move(gens)), std::move(closure)};
}

inline PermGroup normal_closure(PermGroup const &g, std::vector<Permutation> seeds)
{
  return normal_closure_with_bsgs(g, std::move(seeds)).first;
}

/// G' as the normal closure of the commutators of generator pairs.
inline PermGroup derived_subgroup(PermGroup const &g)
{
  std::vector<Permutation> comms;
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(g, std::move(comms));
}

/// Exact log_p of n; nullopt if n is not a power of p.
inline std::optional<int> exact_log(BigCount n, std::uint64_t p)
{
  if (n < 1)
    return std::nullopt;
  int e = 0;
  while (n > 1) {
    if (n % p != 0)
      return std::nullopt;
    n /= p;
    ++e;
  }
  return e;
}

/**
 * d_p(G/G'): the rank of the Sylow p-subgroup of the abelianization, read off
 * as log_p [G : <G', g_1^p, ..., g_r^p>]. The index is required to be a power
 * of p; anything else means the BSGS machinery is broken.
 */
inline int abelian_p_rank(PermGroup const &g, std::uint64_t p, BigCount const &group_order,
                          PermGroup const &derived)
{
  if (!is_prime(p))
    throw precondition_error("abelian_p_rank requires a prime, got " + std::to_string(p));
  std::vector<Permutation> gens = derived.generators();
  for (auto const &s : g.generators())
    gens.push_back(s.pow(static_cast<long long>(p)));
  BigCount sub = Bsgs(PermGroup(g.degree(), std::move(gens))).order();
  if (group_order % sub != 0)
    throw consistency_error("subgroup order does not divide group order");
  auto e = exact_log(group_order / sub, p);
  if (!e)
    throw consistency_error("index of <G', g^p> is not a power of " + std::to_string(p));
  return *e;
}

inline int abelian_p_rank(PermGroup const &g, std::uint64_t p)
{
  return abelian_p_rank(g, p, group_order(g), derived_subgroup(g));
}

inline bool is_abelian(PermGroup const &g)
{
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

} // namespace wreathgen

#endif // WREATHGEN_GROUP_HPP
