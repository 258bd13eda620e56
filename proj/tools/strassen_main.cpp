// Command-line front end: solve, verify, bounds and oracle subcommands.
// Exit codes: 0 success, 2 invalid input, 3 internal invariant failure.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strassen/cli/commands.hpp"
#include "strassen/cli/instance.hpp"
#include "strassen/errors.hpp"

namespace {

constexpr int kInputErrorExit = 2;
constexpr int kInvariantErrorExit = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace strassen;

  CLI::App app{"Strassen couplings for discrete stochastic domination"};
  app.require_subcommand(1);

  cli::SolveOptions solve_options;
  std::string solve_file;
  bool exact = false;
  CLI::App* solve = app.add_subcommand("solve", "Compute the k-th approximant");
  solve->add_option("--steps", solve_options.steps, "Number of steps k")
      ->required();
  solve->add_flag("--trace", solve_options.trace, "Append the step traces");
  auto* float_flag =
      solve->add_flag("--float", solve_options.as_float,
                      "Print coupling entries as floating point");
  solve->add_flag("--exact", exact, "Print coupling entries as p/q (default)")
      ->excludes(float_flag);
  solve->add_flag("--oracle-check", solve_options.oracle_check,
                  "Also run the max-flow oracle on the truncated data");
  solve->add_option("FILE", solve_file, "Instance file")->required();

  std::string coupling_file;
  std::string verify_instance_file;
  CLI::App* verify =
      app.add_subcommand("verify", "Check a coupling against an instance");
  verify->add_option("COUPLING_FILE", coupling_file)->required();
  verify->add_option("INSTANCE_FILE", verify_instance_file)->required();

  std::vector<Index> pair;
  std::string eps_text;
  std::string bounds_file;
  CLI::App* bounds =
      app.add_subcommand("bounds", "Pointwise k0 certificate for one entry");
  bounds->add_option("--pair", pair, "Indices N M")->expected(2)->required();
  bounds->add_option("--eps", eps_text, "Tolerance P/Q")->required();
  bounds->add_option("FILE", bounds_file)->required();

  std::string oracle_file;
  CLI::App* oracle =
      app.add_subcommand("oracle", "Solve a finite instance by max flow");
  oracle->add_option("FILE", oracle_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    nlohmann::json doc;
    if (*solve) {
      doc = cli::cmd_solve(cli::parse_instance(cli::read_file(solve_file)),
                           solve_options);
    } else if (*verify) {
      nlohmann::json coupling_doc;
      try {
        coupling_doc = nlohmann::json::parse(cli::read_file(coupling_file));
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
      }
      doc = cli::cmd_verify(
          coupling_doc,
          cli::parse_instance(cli::read_file(verify_instance_file)));
    } else if (*bounds) {
      Rational eps = cli::parse_rational(eps_text, "--eps");
      doc = cli::cmd_bounds(cli::parse_instance(cli::read_file(bounds_file)),
                            pair[0], pair[1], eps);
    } else {
      doc = cli::cmd_oracle(cli::parse_instance(cli::read_file(oracle_file)));
    }
    std::cout << cli::render(doc);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariantErrorExit;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputErrorExit;
  }
  return 0;
}
