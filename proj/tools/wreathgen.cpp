#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wreathgen/commands.hpp"

namespace cli = wreathgen::cli;

namespace
{

constexpr char const *tower_help =
  "iterated wreath product, top group first, levels separated by ';' "
  "(e.g. A5;C3;C2;C2). Product notation writes the same group bottom-first, "
  "as C2 wr C2 wr C3 wr A5. Tokens are A<n>, S<n>, C<n> with no whitespace";

void add_search_options(CLI::App *sub, cli::CliConfig &cfg)
{
  sub->add_option("--seed", cfg.search.seed, "seed for the random witness search");
  sub->add_option("--attempts", cfg.search.random_attempts,
                  "random tuples tried per candidate size")
    ->check(CLI::PositiveNumber);
  sub->add_option("--order-limit", cfg.search.exhaustive_order_limit,
                  "largest group order for exhaustive search")
    ->check(CLI::PositiveNumber);
  sub->add_option("--max-leaves", cfg.max_leaves, "largest tower (in leaves) that is built")
    ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Minimal generating sets of iterated wreath products"};
  app.require_subcommand(1);
  cli::CliConfig cfg;
  std::string out;

  auto *formula = app.add_subcommand("formula", "closed-form d(W) for a tower");
  formula->add_option("--tower", cfg.tower, tower_help)->required();

  auto *verify = app.add_subcommand("verify", "formula value against the generation oracle");
  verify->add_option("--tower", cfg.tower, tower_help)->required();
  add_search_options(verify, cfg);

  auto *module = app.add_subcommand("module", "structure of I_p for A_n and its H^1");
  module->add_option("--n", cfg.n, "degree of A_n")->required()->check(CLI::PositiveNumber);
  module->add_option("--p", cfg.p, "prime")->required()->check(CLI::PositiveNumber);
  module->add_option("--dp", cfg.dp, "d_p of the abelian quotient entering s")
    ->check(CLI::NonNegativeNumber);

  auto *cohom = app.add_subcommand("cohom", "H^1(G, I_p) for a natural permutation group");
  cohom->add_option("--group", cfg.group, "group token such as A4, S5, C6")->required();
  cohom->add_option("--p", cfg.p, "prime")->required()->check(CLI::PositiveNumber);
  cohom->add_option("--dp", cfg.dp, "d_p of the abelian quotient entering s")
    ->check(CLI::NonNegativeNumber);

  auto *example = app.add_subcommand("example", "the two generators x, y for odd n >= 5");
  example->add_option("--n", cfg.n, "degree of the top alternating group")->required();
  example->add_flag("--verify", cfg.verify, "check that x and y generate the whole tower");

  for (auto *sub : {formula, verify, module, cohom, example})
    sub->add_option("--out", out, "write the JSON report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_code::parse;
  }

  if (*formula)
    cfg.command = cli::Command::formula;
  else if (*verify)
    cfg.command = cli::Command::verify;
  else if (*module)
    cfg.command = cli::Command::module;
  else if (*cohom)
    cfg.command = cli::Command::cohom;
  else
    cfg.command = cli::Command::example;
  if (!out.empty())
    cfg.out = out;

  cli::CommandResult res = cli::run(cfg);
  if (res.doc.is_null()) {
    std::cerr << "error: " << res.error << "\n";
    return res.exit_code;
  }

  std::string text = res.doc.dump(2) + "\n";
  if (cfg.out) {
    std::ofstream f(*cfg.out);
    if (!f) {
      std::cerr << "error: cannot write " << *cfg.out << "\n";
      return cli::exit_code::internal;
    }
    f << text;
  } else {
    std::cout << text;
  }
  if (res.doc.contains("warning"))
    std::cerr << "warning: " << res.doc["warning"].get<std::string>() << "\n";
  return res.exit_code;
}
