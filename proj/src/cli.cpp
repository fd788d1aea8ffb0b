#include "vj/cli.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "vj/basis.hpp"
#include "vj/error.hpp"
#include "vj/oracle.hpp"
#include "vj/qo_automaton.hpp"
#include "vj/quotient.hpp"

namespace vj::cli {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

fs::path output_dir(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

const char* algo_name(Algorithm a) { return a == Algorithm::kRewriting ? "rewriting" : "learning"; }

std::vector<Algorithm> algorithms(AlgoMode mode) {
  switch (mode) {
    case AlgoMode::kRewriting: return {Algorithm::kRewriting};
    case AlgoMode::kLearning: return {Algorithm::kLearning};
    case AlgoMode::kBoth: break;
  }
  return {Algorithm::kRewriting, Algorithm::kLearning};
}

// Ground truth for the word commands; each algorithm gets its own oracle.
class GroundTruth {
public:
  GroundTruth(const Alphabet& alphabet, const RunConfig& config) : alphabet_(alphabet) {
    const int given = config.basis_path.has_value() + config.automaton_path.has_value() +
                      config.vector_basis_path.has_value();
    if (given != 1 || config.vector_basis_path)
      throw std::invalid_argument("give exactly one of --basis or --automaton");
    if (config.basis_path) {
      basis_ = parse_basis(alphabet, read_file(*config.basis_path));
    } else {
      Dfa a = dfa_trim_reachable(parse_dfa(alphabet, read_file(*config.automaton_path)));
      if (std::holds_alternative<Violation>(check_quasi_ordered(alphabet, a)))
        throw std::invalid_argument("the automaton's language is not upward-closed");
      automaton_ = std::move(a);
    }
  }

  std::unique_ptr<IdealOracle> oracle() const {
    if (automaton_) return std::make_unique<AutomatonOracle>(alphabet_, *automaton_);
    return std::make_unique<BasisOracle>(alphabet_, basis_);
  }

private:
  const Alphabet& alphabet_;
  Basis basis_;
  std::optional<Dfa> automaton_;
};

struct RunResult {
  Algorithm algorithm;
  Basis basis;
  std::optional<QoAutomaton> automaton;
  std::size_t ideal = 0;
  std::size_t membership = 0;
  std::size_t equivalence = 0;
  std::string query_log;
};

RunResult run_one(const Alphabet& alphabet, const GroundTruth& truth, Algorithm algorithm, bool want_log) {
  RunResult r{algorithm, {}, std::nullopt, 0, 0, 0, {}};
  auto oracle = truth.oracle();
  if (algorithm == Algorithm::kRewriting) {
    RewritingStats stats;
    r.basis = vj_rewriting(alphabet, *oracle, &stats);
    r.membership = stats.words_examined;
    r.equivalence = stats.coverage_checks;
  } else {
    std::ostringstream log_text;
    QueryLog log(log_text, alphabet);
    LearningStats stats;
    QoAutomaton a = vj_learning(alphabet, *oracle, want_log ? &log : nullptr, &stats);
    r.basis = basis_from_automaton(alphabet, a);
    r.automaton = std::move(a);
    r.membership = stats.membership;
    r.equivalence = stats.equivalence;
    r.query_log = log_text.str();
  }
  r.ideal = oracle->queries();
  return r;
}

std::string word_list(const Alphabet& alphabet, const Basis& basis) {
  std::string out;
  for (const auto& w : basis) out += " " + format_word(alphabet, w);
  return out;
}

std::vector<RunResult> run_all(const Alphabet& alphabet, const RunConfig& config) {
  const GroundTruth truth(alphabet, config);
  std::vector<RunResult> results;
  for (Algorithm a : algorithms(config.algo)) results.push_back(run_one(alphabet, truth, a, config.emit_query_log));
  return results;
}

bool same_bases(const Alphabet& alphabet, const std::vector<RunResult>& results) {
  return representative_basis(alphabet, results[0].basis) == representative_basis(alphabet, results[1].basis);
}

std::string prefix(const RunConfig& config, Algorithm a) {
  return config.algo == AlgoMode::kBoth ? std::string(algo_name(a)) + " " : std::string();
}

Alphabet random_alphabet(std::mt19937_64& rng, std::size_t k, double density) {
  auto chance = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < density; };
  std::vector<std::pair<Letter, Letter>> pairs;
  for (Letter i = 0; i < k; ++i)
    for (Letter j = 0; j < k; ++j)
      if (i != j && chance()) pairs.emplace_back(i, j);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet::from_pairs(std::move(names), pairs);
}

}  // namespace

AlgoMode parse_algo_mode(const std::string& text) {
  if (text == "rewriting") return AlgoMode::kRewriting;
  if (text == "learning") return AlgoMode::kLearning;
  if (text == "both") return AlgoMode::kBoth;
  throw std::invalid_argument("unknown algorithm '" + text + "'");
}

std::string stats_line(std::size_t ideal, std::size_t membership, std::size_t equivalence) {
  return "queries: ideal=" + std::to_string(ideal) + " membership=" + std::to_string(membership) +
         " equivalence=" + std::to_string(equivalence);
}

int cmd_basis(const RunConfig& config, std::ostream& out) {
  const Alphabet alphabet = parse_alphabet(read_file(config.alphabet_path));
  const auto results = run_all(alphabet, config);
  const fs::path dir = output_dir(config.out_dir);
  for (const auto& r : results) {
    const std::string name = algo_name(r.algorithm);
    const std::string stats = stats_line(r.ideal, r.membership, r.equivalence);
    write_file(dir / ("basis-" + name + ".txt"), format_basis(alphabet, r.basis));
    write_file(dir / ("stats-" + name + ".txt"), stats + "\n");
    if (r.automaton) {
      write_file(dir / "automaton.txt", format_dfa(alphabet, r.automaton->dfa));
      if (config.emit_dot)
        write_file(dir / "automaton.dot", dfa_to_dot(alphabet, r.automaton->dfa, config.compact_dot));
      if (config.emit_query_log) write_file(dir / "queries.log", r.query_log);
    }
    out << prefix(config, r.algorithm) << "basis (" << r.basis.size() << " words):" << word_list(alphabet, r.basis)
        << "\n"
        << prefix(config, r.algorithm) << stats << "\n";
  }
  if (results.size() < 2) return kExitOk;
  const bool equal = same_bases(alphabet, results);
  write_file(dir / "verdict.txt", equal ? "equal\n" : "unequal\n");
  out << "verdict: " << (equal ? "equal" : "unequal") << "\n";
  return equal ? kExitOk : kExitMismatch;
}

int cmd_stats(const RunConfig& config, std::ostream& out) {
  const Alphabet alphabet = parse_alphabet(read_file(config.alphabet_path));
  const auto results = run_all(alphabet, config);
  for (const auto& r : results)
    out << prefix(config, r.algorithm) << stats_line(r.ideal, r.membership, r.equivalence) << "\n";
  return results.size() < 2 || same_bases(alphabet, results) ? kExitOk : kExitMismatch;
}

int cmd_nk_basis(const RunConfig& config, std::ostream& out) {
  if (!config.vector_basis_path || config.basis_path || config.automaton_path)
    throw std::invalid_argument("nk-basis takes exactly one --vectors file");
  const VecBasis input = parse_vec_basis(read_file(*config.vector_basis_path));
  std::size_t k = 0;
  if (!input.empty()) {
    k = input.front().size();
    if (config.dimension && *config.dimension != k) throw std::invalid_argument("--dim disagrees with the vectors");
  } else if (config.dimension) {
    k = *config.dimension;
  } else {
    throw std::invalid_argument("empty vector basis: give its dimension with --dim");
  }
  if (k > Alphabet::kMaxLetters) throw std::invalid_argument("dimension above " + std::to_string(Alphabet::kMaxLetters));

  const fs::path dir = output_dir(config.out_dir);
  std::vector<VecBasis> found;
  for (Algorithm a : algorithms(config.algo)) {
    QuotientRun run;
    found.push_back(vj_vectors(vec_oracle_from_basis(input), k, a, &run));
    const std::string name = algo_name(a);
    const std::string stats = stats_line(run.ideal_queries, run.membership_queries, run.equivalence_queries);
    write_file(dir / ("vec-basis-" + name + ".txt"), format_vec_basis(found.back()));
    write_file(dir / ("stats-" + name + ".txt"), stats + "\n");
    out << prefix(config, a) << "basis (" << found.back().size() << " vectors):";
    for (const auto& v : found.back()) {
      std::string text = format_vec_basis({v});
      text.pop_back();
      out << " (" << text << ")";
    }
    out << "\n" << prefix(config, a) << stats << "\n";
  }
  if (found.size() < 2) return kExitOk;
  const bool equal = found[0] == found[1];
  write_file(dir / "verdict.txt", equal ? "equal\n" : "unequal\n");
  out << "verdict: " << (equal ? "equal" : "unequal") << "\n";
  return equal ? kExitOk : kExitMismatch;
}

int cmd_check_upward(const std::string& alphabet_path, const std::string& automaton_path, std::ostream& out) {
  const Alphabet alphabet = parse_alphabet(read_file(alphabet_path));
  const Dfa given = parse_dfa(alphabet, read_file(automaton_path));
  const Dfa a = dfa_trim_reachable(given);
  const auto outcome = check_quasi_ordered(alphabet, a);
  if (const auto* v = std::get_if<Violation>(&outcome)) {
    out << "not upward-closed\n"
        << "witness: " << format_word(alphabet, v->lower) << " <= " << format_word(alphabet, v->upper) << "\n"
        << "accepted: " << format_word(alphabet, v->lower) << "\n"
        << "rejected: " << format_word(alphabet, v->upper) << "\n";
    return kExitOk;
  }
  const auto& order = std::get<Ordered>(outcome).order;
  out << "upward-closed\n";
  if (a.state_count() != given.state_count()) out << "# unreachable states removed, states renumbered\n";
  out << "order:\n";
  for (State p = 0; p < a.state_count(); ++p) {
    out << "q" << p << " <=";
    for (State q = 0; q < a.state_count(); ++q)
      if (order(p, q)) out << " q" << q;
    out << "\n";
  }
  return kExitOk;
}

int cmd_dot(const std::string& alphabet_path, const std::string& automaton_path, bool compact, std::ostream& out) {
  const Alphabet alphabet = parse_alphabet(read_file(alphabet_path));
  out << dfa_to_dot(alphabet, parse_dfa(alphabet, read_file(automaton_path)), compact);
  return kExitOk;
}

int cmd_random_instance(const RandomInstanceConfig& config, std::ostream& out) {
  if (config.letters == 0 || config.letters > 26) throw std::invalid_argument("letter count must be within 1..26");
  if (!(config.density >= 0.0 && config.density <= 1.0)) throw std::invalid_argument("density must be within [0, 1]");
  std::mt19937_64 rng(config.seed);
  auto below = [&](std::uint64_t n) { return rng() % n; };
  const Alphabet alphabet = random_alphabet(rng, config.letters, config.density);
  Basis basis(below(config.max_words + 1));
  for (auto& w : basis) {
    w.resize(below(config.max_len + 1));
    for (auto& a : w) a = static_cast<Letter>(below(config.letters));
  }
  const fs::path dir = output_dir(config.out_dir);
  write_file(dir / "alphabet.txt", format_alphabet(alphabet));
  write_file(dir / "basis.txt", format_basis(alphabet, basis));
  out << "alphabet: " << config.letters << " letters\n"
      << "basis (" << basis.size() << " words):" << word_list(alphabet, basis) << "\n";
  return kExitOk;
}

int run_guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const fs::filesystem_error& e) {
    err << "file error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitBadInput;
}

}  // namespace vj::cli
