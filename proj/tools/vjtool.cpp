// vjtool: compute minimal bases of upward-closed sets from ideal oracles.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vj/cli.hpp"

namespace {

void add_ground_truth(CLI::App* cmd, vj::cli::RunConfig& config, std::string& algo) {
  cmd->add_option("--alphabet", config.alphabet_path, "alphabet file")->required();
  cmd->add_option("--basis", config.basis_path, "ground truth as a basis file");
  cmd->add_option("--automaton", config.automaton_path, "ground truth as an upward-closed automaton file");
  cmd->add_option("--algo", algo, "rewriting, learning or both")
      ->check(CLI::IsMember({"rewriting", "learning", "both"}));
  cmd->add_option("--seed", config.seed, "seed (recorded for reproducibility)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal bases of upward-closed sets of words from ideal oracles"};
  app.require_subcommand(1);

  vj::cli::RunConfig config;
  vj::cli::RandomInstanceConfig random;
  std::string algo = "learning";
  std::string automaton_path;
  bool compact = false;

  auto* basis = app.add_subcommand("basis", "run the algorithm(s) and write the result bundle");
  add_ground_truth(basis, config, algo);
  basis->add_option("--out", config.out_dir, "output directory");
  basis->add_flag("--dot", config.emit_dot, "also write automaton.dot (learning)");
  basis->add_flag("--compact", config.compact_dot, "omit self-loops in automaton.dot");
  basis->add_flag("--query-log", config.emit_query_log, "write queries.log (learning)");

  auto* stats = app.add_subcommand("stats", "run the algorithm(s) and print only the query counts");
  add_ground_truth(stats, config, algo);

  auto* check = app.add_subcommand("check-upward", "decide whether an automaton's language is upward-closed");
  check->add_option("--alphabet", config.alphabet_path, "alphabet file")->required();
  check->add_option("automaton", automaton_path, "automaton file")->required();

  auto* dot = app.add_subcommand("dot", "print an automaton in Graphviz syntax");
  dot->add_option("--alphabet", config.alphabet_path, "alphabet file")->required();
  dot->add_option("automaton", automaton_path, "automaton file")->required();
  dot->add_flag("--compact", compact, "omit self-loops");

  auto* instance = app.add_subcommand("random-instance", "write a random alphabet.txt and basis.txt");
  instance->add_option("--letters,-k", random.letters, "number of letters")->check(CLI::Range(1, 26));
  instance->add_option("--density", random.density, "probability of each ordered letter pair")
      ->check(CLI::Range(0.0, 1.0));
  instance->add_option("--max-words", random.max_words, "largest basis size");
  instance->add_option("--max-len", random.max_len, "longest basis word");
  instance->add_option("--seed", random.seed, "random seed");
  instance->add_option("--out", random.out_dir, "output directory");

  auto* nk = app.add_subcommand("nk-basis", "minimal basis of an upward-closed subset of N^k");
  nk->add_option("--vectors", config.vector_basis_path, "ground truth as a vector basis file")->required();
  nk->add_option("--dim", config.dimension, "dimension, required for an empty vector file");
  nk->add_option("--algo", algo, "rewriting, learning or both")->check(CLI::IsMember({"rewriting", "learning", "both"}));
  nk->add_option("--seed", config.seed, "seed (recorded for reproducibility)");
  nk->add_option("--out", config.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? vj::cli::kExitOk : vj::cli::kExitBadInput;
  }

  return vj::cli::run_guarded(
      [&] {
        config.algo = vj::cli::parse_algo_mode(algo);
        if (*basis) return vj::cli::cmd_basis(config, std::cout);
        if (*stats) return vj::cli::cmd_stats(config, std::cout);
        if (*check) return vj::cli::cmd_check_upward(config.alphabet_path, automaton_path, std::cout);
        if (*dot) return vj::cli::cmd_dot(config.alphabet_path, automaton_path, compact, std::cout);
        if (*instance) return vj::cli::cmd_random_instance(random, std::cout);
        return vj::cli::cmd_nk_basis(config, std::cout);
      },
      std::cerr);
}
