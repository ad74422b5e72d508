#ifndef WREATHGEN_MODFP_HPP
#define WREATHGEN_MODFP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bsgs.hpp"
#include "errors.hpp"
#include "fp.hpp"
#include "group.hpp"
#include "tower.hpp"

namespace wreathgen
{

/// F_p-space with one invertible action matrix per generator of `group`.
struct FpModule
{
  PrimeField field;
  std::size_t dim;
  PermGroup group;
  std::vector<FpMatrix> actions;
};

/// V = F_p^n with the group permuting coordinates.
inline FpModule permutation_module(PermGroup const &g, std::uint64_t p)
{
  PrimeField f(p);
  std::vector<FpMatrix> actions;
  for (auto const &s : g.generators())
    actions.push_back(FpMatrix::permutation_matrix(f, s));
  return {f, g.degree(), g, std::move(actions)};
}

inline FpModule trivial_module(PermGroup const &g, std::uint64_t p, std::size_t dim = 1)
{
  PrimeField f(p);
  std::vector<FpMatrix> actions(g.generators().size(), FpMatrix::identity(f, dim));
  return {f, dim, g, std::move(actions)};
}

/// A subspace of a module's underlying space, in reduced echelon form.
struct SubmoduleBasis
{
  RowSpace basis;

  std::size_t dim() const { return basis.rank(); }
};

inline bool is_action_closed(FpModule const &m, SubmoduleBasis const &sub)
{
  for (auto const &row : sub.basis.rows())
    for (auto const &a : m.actions)
      if (!sub.basis.contains(times(row, a)))
        return false;
  return true;
}

/// Smallest action-closed subspace containing the seeds.
inline SubmoduleBasis spin(FpModule const &m, std::vector<FpVector> const &seeds)
{
  RowSpace space(m.field, m.dim);
  std::vector<FpVector> queue;
  for (auto const &s : seeds) {
    if (s.size() != m.dim)
      throw precondition_error("seed vector has wrong length");
    if (space.insert(s))
      queue.push_back(s);
  }
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto const &a : m.actions) {
      FpVector w = times(queue[i], a);
      if (space.insert(w))
        queue.push_back(std::move(w));
    }
  return {std::move(space)};
}

/// I_p = kernel of the coordinate sum, spanned by e_{i,i+1}.
inline SubmoduleBasis aug_submodule(FpModule const &m)
{
  RowSpace space(m.field, m.dim);
  for (std::size_t i = 0; i + 1 < m.dim; ++i) {
    FpVector e(m.dim, 0);
    e[i] = 1;
    e[i + 1] = m.field.neg(1);
    space.insert(std::move(e));
  }
  return {std::move(space)};
}

/// Z_p = constant vectors.
inline SubmoduleBasis constant_submodule(FpModule const &m)
{
  RowSpace space(m.field, m.dim);
  space.insert(FpVector(m.dim, 1));
  return {std::move(space)};
}

/// The action on `sub`, written in the coordinates of sub.basis.rows().
inline FpModule restrict_module(FpModule const &m, SubmoduleBasis const &sub)
{
  std::size_t r = sub.dim();
  std::vector<FpMatrix> actions;
  for (auto const &a : m.actions) {
    FpMatrix res(m.field, r, r);
    for (std::size_t i = 0; i < r; ++i) {
      FpVector c = sub.basis.coordinates(times(sub.basis.rows()[i], a));
      for (std::size_t j = 0; j < r; ++j)
        res(i, j) = c[j];
    }
    actions.push_back(std::move(res));
  }
  return {m.field, r, m.group, std::move(actions)};
}

/// True if every generator acts trivially on m / sub.
inline bool quotient_is_trivial(FpModule const &m, SubmoduleBasis const &sub)
{
  for (std::size_t i = 0; i < m.dim; ++i) {
    FpVector e(m.dim, 0);
    e[i] = 1;
    for (auto const &a : m.actions) {
      FpVector d = times(e, a);
      d[i] = m.field.sub(d[i], 1);
      if (!sub.basis.contains(d))
        return false;
    }
  }
  return true;
}

/// dim of {phi : M_g phi = phi M_g for every generator action M_g}.
inline std::size_t endomorphism_dim(FpModule const &m)
{
  std::size_t r = m.dim;
  if (r == 0)
    return 0;
  auto const &f = m.field;
  // unknown phi(a, b) is column a * r + b
  RowSpace equations(f, r * r);
  for (auto const &g : m.actions)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        // (M phi)(i, j) - (phi M)(i, j) = sum_k M(i,k) phi(k,j) - phi(i,k) M(k,j)
        FpVector eq(r * r, 0);
        for (std::size_t k = 0; k < r; ++k) {
          eq[k * r + j] = f.add(eq[k * r + j], g(i, k));
          eq[i * r + k] = f.sub(eq[i * r + k], g(k, j));
        }
        equations.insert(std::move(eq));
      }
  return r * r - equations.rank();
}

/// dim C_M(G), the joint kernel of (M_g - 1).
inline std::size_t fixed_points(FpModule const &m)
{
  std::size_t r = m.dim;
  if (r == 0)
    return 0;
  FpMatrix stacked(m.field, r, r * m.actions.size());
  for (std::size_t s = 0; s < m.actions.size(); ++s) {
    FpMatrix d = m.actions[s] - FpMatrix::identity(m.field, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        stacked(i, s * r + j) = d(i, j);
  }
  return left_nullity(stacked);
}

inline std::size_t fixed_points(FpModule const &m, SubmoduleBasis const &sub)
{
  return fixed_points(restrict_module(m, sub));
}

/**
 * Linear conditions on the generator images of a derivation.
 *
 * A derivation is fixed by u = (delta(s_1), ..., delta(s_r)), a vector of
 * length r * dim M. Walking the Cayley graph breadth-first and applying
 * delta(x s) = delta(x)^s + delta(s) expresses delta(x) as u D_x; every
 * edge that lands on an element already seen forces u (D_old - D_new) = 0.
 * Those conditions, and nothing else, make u extend to a derivation on G.
 */
struct CocycleSystem
{
  std::size_t unknowns;
  RowSpace constraints;
  std::size_t group_order;

  bool satisfied_by(FpVector const &u) const
  {
    auto const &f = constraints.field();
    for (auto const &row : constraints.rows()) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < unknowns; ++i)
        acc = f.add(acc, f.mul(row[i], u[i]));
      if (acc != 0)
        return false;
    }
    return true;
  }

  std::size_t dim_solutions() const { return unknowns - constraints.rank(); }
};

inline CocycleSystem cocycle_system(FpModule const &m, std::size_t element_limit = 20160)
{
  auto const &gens = m.group.generators();
  if (gens.size() != m.actions.size())
    throw precondition_error("module has " + std::to_string(m.actions.size()) +
                             " actions for " + std::to_string(gens.size()) + " generators");
  auto const &f = m.field;
  std::size_t r = m.dim;
  std::size_t unknowns = gens.size() * r;
  RowSpace constraints(f, unknowns);

  std::vector<FpMatrix> e_s;
  for (std::size_t s = 0; s < gens.size(); ++s) {
    FpMatrix e(f, unknowns, r);
    for (std::size_t i = 0; i < r; ++i)
      e(s * r + i, i) = 1;
    e_s.push_back(std::move(e));
  }

  std::vector<Permutation> elems{m.group.identity()};
  std::vector<FpMatrix> derivs{FpMatrix(f, unknowns, r)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index{{elems[0], 0}};

  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = elems[x] * gens[s];
      FpMatrix dy = derivs[x] * m.actions[s] + e_s[s];
      auto it = index.find(y);
      if (it == index.end()) {
        if (elems.size() >= element_limit)
          throw budget_exceeded("group has more than " + std::to_string(element_limit) +
                                " elements");
        index.emplace(y, elems.size());
        elems.push_back(std::move(y));
        derivs.push_back(std::move(dy));
        continue;
      }
      FpMatrix diff = derivs[it->second] - dy;
      for (std::size_t j = 0; j < r; ++j) {
        FpVector eq(unknowns);
        for (std::size_t i = 0; i < unknowns; ++i)
          eq[i] = diff(i, j);
        constraints.insert(std::move(eq));
      }
    }
  }
  return {unknowns, std::move(constraints), elems.size()};
}

/// Generator images of the inner derivation g -> a - a^g.
inline FpVector inner_derivation(FpModule const &m, FpVector const &a)
{
  FpVector u;
  for (auto const &act : m.actions) {
    FpVector ag = times(a, act);
    for (std::size_t i = 0; i < m.dim; ++i)
      u.push_back(m.field.sub(a[i], ag[i]));
  }
  return u;
}

struct CohomReport
{
  std::size_t dim_Z1;
  std::size_t dim_B1;
  std::size_t dim_H1;
  std::size_t dim_fixed;
  std::size_t end_dim;
  std::optional<std::size_t> r;           // dim over End(M), when End(M) = F_p
  std::optional<std::size_t> s_component; // dim_End H^1, when End(M) = F_p
  std::size_t group_order;
};

inline CohomReport cocycle_dims(PermGroup const &g, FpModule const &m,
                                std::size_t element_limit = 20160)
{
  if (g.generators() != m.group.generators())
    throw precondition_error("module is not a module for this generating set");
  CocycleSystem sys = cocycle_system(m, element_limit);
  std::size_t fixed = fixed_points(m);
  std::size_t z1 = sys.dim_solutions();
  std::size_t b1 = m.dim - fixed;
  if (b1 > z1)
    throw consistency_error("coboundaries exceed cocycles");
  std::size_t e = endomorphism_dim(m);
  CohomReport rep{z1, b1, z1 - b1, fixed, e, std::nullopt, std::nullopt, sys.group_order};
  if (e == 1) {
    rep.r = m.dim;
    rep.s_component = rep.dim_H1;
  }
  return rep;
}

inline int s_param(int dp_abar, int h1)
{
  if (dp_abar < 0 || h1 < 0)
    throw precondition_error("s needs nonnegative inputs");
  return dp_abar + h1;
}

/// floor((s - 1) / r) + 2
inline int h_param(int s, int r)
{
  if (r < 1 || s < 0)
    throw precondition_error("h needs r >= 1 and s >= 0");
  int num = s - 1;
  int q = num >= 0 ? num / r : -((-num + r - 1) / r);
  return q + 2;
}

/// Raised when an irreducible module's endomorphisms are not just scalars.
class nonscalar_endomorphisms : public std::runtime_error
{
public:
  explicit nonscalar_endomorphisms(std::string const &what) : std::runtime_error(what) {}
};

namespace detail
{

// Calls fn(v) for every vector of F_p^dim (lexicographic, last coordinate fastest).
template <typename Fn>
void for_each_vector(PrimeField const &f, std::size_t dim, Fn &&fn)
{
  FpVector v(dim, 0);
  while (true) {
    if (!fn(v))
      return;
    std::size_t i = dim;
    while (true) {
      if (i == 0)
        return;
      --i;
      if (++v[i] < f.p())
        break;
      v[i] = 0;
    }
  }
}

inline std::uint64_t ipow_capped(std::uint64_t p, std::size_t e, std::uint64_t cap)
{
  std::uint64_t res = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (res > cap / p)
      return cap + 1;
    res *= p;
  }
  return res;
}

} // namespace detail

/// Full vector enumeration is allowed while p^n stays within this bound.
inline constexpr std::uint64_t exhaustive_vector_budget = std::uint64_t{1} << 20;

/// Natural A_n on n points, from the standard generators.
inline PermGroup alternating_group(std::uint32_t n)
{
  return PermGroup(n, standard_generators(GroupSpec::alt(n).normalized()));
}

struct IpReport
{
  std::uint32_t n;
  std::uint64_t p;
  bool verified = false;  // false when p^n exceeds the enumeration budget
  std::size_t dim_Ip = 0;
  bool p_divides_n = false;
  bool quotient_trivial = false; // V / I_p is the trivial module
  std::optional<bool> unique_maximal;
  std::optional<bool> direct_sum;
  std::optional<bool> irreducible;
  std::size_t end_dim = 0;
  std::optional<std::size_t> r;
  std::size_t vectors_checked = 0;
};

/**
 * Exhaustive check of the structure of I_p inside the permutation module of
 * a permutation group. Every vector outside I_p is spun to decide whether
 * I_p is the unique maximal submodule, and every nonzero vector of I_p is
 * spun to decide irreducibility. When p does not divide n the decomposition
 * V = I_p + Z_p is checked as well. Above the enumeration budget nothing is asserted.
 */
inline IpReport check_Ip_structure(PermGroup const &g, std::uint64_t p)
{
  auto n = static_cast<std::uint32_t>(g.degree());
  if (n < 2)
    throw precondition_error("I_p checks need at least two points");
  PrimeField f(p);
  IpReport rep;
  rep.n = n;
  rep.p = p;
  rep.p_divides_n = n % p == 0;

  FpModule v = permutation_module(g, p);
  SubmoduleBasis ip = aug_submodule(v);
  rep.dim_Ip = ip.dim();
  rep.quotient_trivial = quotient_is_trivial(v, ip);
  if (!is_action_closed(v, ip))
    throw consistency_error("I_p is not a submodule");

  if (detail::ipow_capped(p, n, exhaustive_vector_budget) > exhaustive_vector_budget)
    return rep;
  rep.verified = true;

  bool unique_max = true;
  bool irreducible = true;
  detail::for_each_vector(f, n, [&](FpVector const &x) {
    bool inside = ip.basis.contains(x);
    bool zero = std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; });
    if (zero)
      return true;
    ++rep.vectors_checked;
    std::size_t spun = spin(v, {x}).dim();
    if (inside && spun != ip.dim())
      irreducible = false;
    if (!inside && spun != n)
      unique_max = false;
    return true;
  });
  rep.unique_maximal = unique_max;
  rep.irreducible = irreducible;

  if (!rep.p_divides_n) {
    SubmoduleBasis zp = constant_submodule(v);
    RowSpace both = ip.basis;
    for (auto const &row : zp.basis.rows())
      both.insert(row);
    rep.direct_sum = ip.dim() + zp.dim() == n && both.rank() == n;
  } else {
    rep.direct_sum = false;
  }

  FpModule ip_mod = restrict_module(v, ip);
  rep.end_dim = endomorphism_dim(ip_mod);
  if (irreducible) {
    if (rep.end_dim != 1)
      throw nonscalar_endomorphisms("End(I_p) has dimension " + std::to_string(rep.end_dim));
    rep.r = ip.dim();
  }
  return rep;
}

/// The I_p checks for the natural action of A_n.
inline IpReport check_Ip_structure(std::uint32_t n, std::uint64_t p)
{
  if (n < 4)
    throw precondition_error("I_p checks need n >= 4");
  return check_Ip_structure(alternating_group(n), p);
}

} // namespace wreathgen

#endif // WREATHGEN_MODFP_HPP
