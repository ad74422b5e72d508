#ifndef WREATHGEN_COMMANDS_HPP
#define WREATHGEN_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bsgs.hpp"
#include "errors.hpp"
#include "formula.hpp"
#include "modfp.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "tower.hpp"

namespace wreathgen::cli
{

using json = nlohmann::ordered_json;

enum class Command { formula, verify, module, cohom, example };

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int parse = 2;
inline constexpr int budget = 3;
inline constexpr int mismatch = 4;
} // namespace exit_code

struct CliConfig
{
  Command command = Command::formula;
  std::string tower;
  std::string group;
  std::uint32_t n = 0;
  std::uint64_t p = 0;
  GenSearchConfig search;
  std::size_t max_leaves = 1024; // towers with more leaves are not built
  int dp = 1;                    // d_p of the abelian quotient fed into s
  bool verify = false;
  std::optional<std::string> out;
};

struct CommandResult
{
  json doc;
  int exit_code = exit_code::ok;
  std::string error; // set when doc is null
};

inline std::string decimal(BigCount const &n) { return n.str(); }

inline json to_json(AbelianProfile const &a)
{
  json res = json::object();
  for (auto [p, r] : a.ranks())
    res[std::to_string(p)] = r;
  return res;
}

inline json to_json(FormulaResult const &r)
{
  return json{{"d", r.d}, {"case", to_string(r.case_tag)}, {"abelianization", to_json(r.profile)}};
}

inline json to_json(GenResult const &r)
{
  json witness = json::array();
  for (auto const &w : r.witness)
    witness.push_back(format_cycles(w));
  return json{{"lower", r.lower},
              {"lower_certificate", r.lower_certificate},
              {"upper", r.upper},
              {"witness", witness},
              {"status", r.exact ? "exact" : "bounds_only"},
              {"seed", r.seed},
              {"order", decimal(r.order)}};
}

inline json perm_json(Permutation const &p)
{
  return json{{"degree", p.degree()}, {"cycles", format_cycles(p)}};
}

template <typename T>
json optional_json(std::optional<T> const &v)
{
  return v ? json(*v) : json(nullptr);
}

inline CommandResult cmd_formula(std::string const &tower_text)
{
  TowerSpec t = parse_tower(tower_text);
  json doc = to_json(d_tower(t));
  doc["tower"] = t.normalized().to_string();
  return {doc, exit_code::ok, {}};
}

/**
 * Formula value next to the oracle's certified bounds. The exit code flags
 * a mismatch whenever the formula falls outside the bounds, which for an
 * exact oracle means any disagreement.
 */
inline CommandResult cmd_verify(CliConfig const &cfg)
{
  TowerSpec t = parse_tower(cfg.tower).normalized();
  FormulaResult f = d_tower(t);
  json doc{{"tower", t.to_string()}, {"formula", to_json(f)}};

  if (t.leaf_count() > cfg.max_leaves) {
    doc["oracle"] = json{{"lower", nullptr},
                         {"lower_certificate", nullptr},
                         {"upper", nullptr},
                         {"witness", json::array()},
                         {"status", "bounds_only"},
                         {"seed", cfg.search.seed},
                         {"order", nullptr}};
    doc["agrees"] = nullptr;
    doc["warning"] = "tower has " + decimal(t.leaf_count()) + " leaves, above the limit of " +
                     std::to_string(cfg.max_leaves) + "; oracle not run";
    return {doc, exit_code::ok, {}};
  }

  TowerGroup tg = build_tower(t);
  GenResult g = min_generators(tg.group, cfg.search);
  doc["oracle"] = to_json(g);
  bool within = g.lower <= f.d && f.d <= g.upper;
  if (g.exact) {
    doc["agrees"] = g.lower == f.d;
  } else {
    doc["agrees"] = nullptr;
    doc["warning"] = "oracle bounds are not tight; formula value " +
                     std::string(within ? "lies within" : "lies outside") + " them";
  }
  return {doc, within ? exit_code::ok : exit_code::mismatch, {}};
}

namespace detail
{

inline void add_cohomology(json &doc, IpReport const &ip, CohomReport const &c, int dp)
{
  doc["dim_H1"] = c.dim_H1;
  int s = s_param(dp, static_cast<int>(c.dim_H1));
  doc["s"] = s;
  doc["r"] = optional_json(ip.r);
  doc["h"] = ip.r ? json(h_param(s, static_cast<int>(*ip.r))) : json(nullptr);
  doc["dp"] = dp;
}

inline json ip_json(IpReport const &ip)
{
  return json{{"n", ip.n},
              {"p", ip.p},
              {"dim_Ip", ip.dim_Ip},
              {"irreducible", optional_json(ip.irreducible)},
              {"unique_maximal", optional_json(ip.unique_maximal)},
              {"end_dim", ip.end_dim},
              {"verified", ip.verified},
              {"p_divides_n", ip.p_divides_n},
              {"direct_sum", optional_json(ip.direct_sum)}};
}

inline CohomReport ip_cohomology(PermGroup const &g, std::uint64_t p)
{
  FpModule v = permutation_module(g, p);
  FpModule ip = restrict_module(v, aug_submodule(v));
  return cocycle_dims(g, ip);
}

} // namespace detail

/// Structure of I_p for A_n and its first cohomology.
inline CommandResult cmd_module(CliConfig const &cfg)
{
  IpReport ip = check_Ip_structure(cfg.n, cfg.p);
  CohomReport c = detail::ip_cohomology(alternating_group(cfg.n), cfg.p);
  json doc = detail::ip_json(ip);
  detail::add_cohomology(doc, ip, c, cfg.dp);
  return {doc, exit_code::ok, {}};
}

/// H^1 of a natural permutation group on its I_p.
inline CommandResult cmd_cohom(CliConfig const &cfg)
{
  GroupSpec spec = parse_group_spec(cfg.group);
  PermGroup g(spec.degree(), standard_generators(spec.normalized()));
  CohomReport c = detail::ip_cohomology(g, cfg.p);
  IpReport ip = check_Ip_structure(g, cfg.p);
  json doc = detail::ip_json(ip);
  detail::add_cohomology(doc, ip, c, cfg.dp);
  doc["group"] = spec.to_string();
  doc["group_order"] = c.group_order;
  doc["dim_Z1"] = c.dim_Z1;
  doc["dim_B1"] = c.dim_B1;
  doc["dim_fixed"] = c.dim_fixed;
  return {doc, exit_code::ok, {}};
}

inline CommandResult cmd_example(CliConfig const &cfg)
{
  auto [x, y] = example_generators(cfg.n);
  json doc{{"n", cfg.n},
           {"tower", x.tower.to_string()},
           {"leaves", x.perm.degree()},
           {"x", perm_json(x.perm)},
           {"y", perm_json(y.perm)},
           {"y_order", decimal(y.perm.order())}};
  int code = exit_code::ok;
  if (cfg.verify) {
    BigCount expected = x.tower.order();
    BigCount order = Bsgs(PermGroup(x.perm.degree(), {x.perm, y.perm}), expected).order();
    doc["generated"] = order == expected;
    doc["order"] = decimal(order);
    doc["expected_order"] = decimal(expected);
    if (order != expected)
      code = exit_code::mismatch;
  }
  return {doc, code, {}};
}

/// Runs one command, mapping library exceptions to exit codes.
inline CommandResult run(CliConfig const &cfg)
{
  try {
    switch (cfg.command) {
      case Command::formula: return cmd_formula(cfg.tower);
      case Command::verify: return cmd_verify(cfg);
      case Command::module: return cmd_module(cfg);
      case Command::cohom: return cmd_cohom(cfg);
      case Command::example: return cmd_example(cfg);
    }
  } catch (parse_error const &e) {
    return {nullptr, exit_code::parse, e.what()};
  } catch (precondition_error const &e) {
    return {nullptr, exit_code::parse, e.what()};
  } catch (degree_mismatch const &e) {
    return {nullptr, exit_code::parse, e.what()};
  } catch (budget_exceeded const &e) {
    return {nullptr, exit_code::budget, e.what()};
  } catch (std::exception const &e) {
    return {nullptr, exit_code::internal, e.what()};
  }
  return {nullptr, exit_code::internal, "unknown command"};
}

} // namespace wreathgen::cli

#endif // WREATHGEN_COMMANDS_HPP
