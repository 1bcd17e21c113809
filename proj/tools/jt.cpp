// jt: Koszul homology, indices and joint torsion of commuting tuples.

#include <iostream>

#include "CLI11.hpp"
#include "jt/commands.hpp"

namespace {

struct Options {
  std::string input, at, alpha, construction, suite;
  std::size_t i = 0, j = 0, m = 0, replay = 0;
  bool json = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Koszul homology, Fredholm indices and joint torsion of commuting tuples"};
  app.require_subcommand(1);
  Options o;
  jt::CommandArgs args;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "problem file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", o.json, "print the report as JSON");
  };
  auto pair = [&](CLI::App* sub) {
    sub->add_option("--i", o.i, "first index (default 1)")->check(CLI::PositiveNumber);
    sub->add_option("--j", o.j, "second index (default 2)")->check(CLI::PositiveNumber);
  };
  auto at = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--at", o.at, "localization point, e.g. 3/2");
    if (required) opt->required();
  };

  auto* homology = app.add_subcommand("homology", "dimensions of H(A) (invariant factors over F[z])");
  common(homology);
  at(homology, false);
  auto* index = app.add_subcommand("index", "Ind(A) = dim H_- - dim H_+");
  common(index);
  at(index, false);
  auto* torsion = app.add_subcommand("torsion", "joint torsion transition number tau_{i,j}(A)");
  common(torsion);
  pair(torsion);
  at(torsion, false);
  auto* lefschetz = app.add_subcommand("lefschetz", "multiplicative Lefschetz number (requires H(A) = 0)");
  common(lefschetz);
  pair(lefschetz);
  at(lefschetz, false);
  auto* tame = app.add_subcommand("tame-symbol", "tame symbol of two factored polynomials");
  common(tame);
  auto* local = app.add_subcommand("local", "joint torsion of the (z - at)-primary parts");
  common(local);
  pair(local);
  at(local, false);
  auto* polydisc = app.add_subcommand("polydisc", "tau_{1,j}(f, z_1 - a_1, ..., z_n - a_n)");
  common(polydisc);
  polydisc->add_option("--j", o.j, "index 2..n+1")->required()->check(CLI::PositiveNumber);
  polydisc->add_option("--alpha", o.alpha, "point as \"a1,a2,...\" (default: the file's point)");
  auto* bitriangle = app.add_subcommand("bitriangle", "validate a bitriangle and compare its torsion isomorphisms");
  common(bitriangle);
  bitriangle->add_option("--construction", o.construction, "trivial, Xm or X1")
      ->required()
      ->check(CLI::IsMember({"trivial", "Xm", "X1"}));
  pair(bitriangle);
  bitriangle->add_option("--m", o.m, "slot for Xm (2..n)")->check(CLI::PositiveNumber);
  at(bitriangle, false);
  auto* verify = app.add_subcommand("verify", "run a randomized verification suite");
  std::vector<std::string> names;
  for (const auto& s : jt::suite_catalog()) names.push_back(s.name);
  verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(names));
  verify->add_option("--trials", args.trials, "number of trials")->check(CLI::PositiveNumber);
  verify->add_option("--seed", args.seed, "base seed");
  verify->add_option("--max-dim", args.config.max_dim, "largest dim E for random matrix tuples");
  verify->add_option("--jobs", args.config.jobs, "worker threads (0: all cores)");
  verify->add_option("--replay-trial", o.replay, "rerun a single trial");
  verify->add_flag("--json", o.json, "print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return jt::kParse;
  }

  CLI::App* sub = app.get_subcommands().front();
  args.command = sub->get_name();
  auto given = [&](const char* name) { return sub->get_option_no_throw(name) && sub->count(name) > 0; };
  if (given("--input")) args.input = o.input;
  if (given("--i")) args.i = o.i;
  if (given("--j")) args.j = o.j;
  if (given("--m")) args.m = o.m;
  if (given("--at")) args.at = o.at;
  if (given("--alpha")) args.alpha = o.alpha;
  if (given("--construction")) args.construction = o.construction;
  if (given("--suite")) args.suite = o.suite;
  if (given("--replay-trial")) args.replay_trial = o.replay;

  jt::Outcome out = jt::run_command(args);
  if (o.json) {
    std::cout << out.report.dump(2) << "\n";
  } else if (out.exit_code >= jt::kPrecondition) {
    std::cerr << "jt " << args.command << ": " << out.report["result"]["message"].get<std::string>() << "\n";
  } else {
    std::cout << jt::render_text(out.report);
  }
  return out.exit_code;
}
