#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

namespace vj::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitFailure = 3;  // I/O or internal errors

enum class AlgoMode { kRewriting, kLearning, kBoth };

// Throws std::invalid_argument for anything but rewriting, learning or both.
AlgoMode parse_algo_mode(const std::string& text);

struct RunConfig {
  std::string alphabet_path;
  // Exactly one ground truth: a basis, an upward-closed automaton, or (for
  // nk-basis) a vector basis.
  std::optional<std::string> basis_path;
  std::optional<std::string> automaton_path;
  std::optional<std::string> vector_basis_path;
  std::optional<std::size_t> dimension;  // vector bases only, needed when the file is empty
  AlgoMode algo = AlgoMode::kLearning;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  bool emit_dot = false;
  bool compact_dot = false;
  bool emit_query_log = false;
};

struct RandomInstanceConfig {
  std::size_t letters = 3;
  double density = 0.0;  // probability of each ordered pair of distinct letters
  std::size_t max_words = 5;
  std::size_t max_len = 4;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
};

// Each command writes its summary to `out` and returns an exit status. Bad
// input surfaces as exceptions; run_guarded maps them to kExitBadInput
// and anything else to kExitFailure.
int cmd_basis(const RunConfig& config, std::ostream& out);
int cmd_stats(const RunConfig& config, std::ostream& out);
int cmd_nk_basis(const RunConfig& config, std::ostream& out);
int cmd_check_upward(const std::string& alphabet_path, const std::string& automaton_path, std::ostream& out);
int cmd_dot(const std::string& alphabet_path, const std::string& automaton_path, bool compact, std::ostream& out);
int cmd_random_instance(const RandomInstanceConfig& config, std::ostream& out);

int run_guarded(const std::function<int()>& command, std::ostream& err);

std::string stats_line(std::size_t ideal, std::size_t membership, std::size_t equivalence);

}  // namespace vj::cli
