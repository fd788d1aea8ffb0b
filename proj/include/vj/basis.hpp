#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vj/lstar.hpp"
#include "vj/oracle.hpp"
#include "vj/qo_automaton.hpp"
#include "vj/star_product.hpp"

namespace vj {

struct RewritingStats {
  std::size_t words_examined = 0;
  std::size_t basis_changes = 0;
  std::size_t coverage_checks = 0;  // complement decompositions tested
};

// Enumerates words, keeps those in U, and after every change of the candidate
// set tests whether U meets the complement of its upward closure. Returns the
// minimized candidate set.
Basis vj_rewriting(const Alphabet& alphabet, IdealOracle& oracle, RewritingStats* stats = nullptr);

// A strictly increasing path from the initial state: states[0] is initial
// and consecutive states are distinct.
struct IncreasingPath {
  std::vector<State> states;
  Word label;
};

// Paths ending in an accepting state, using per step only letters minimal
// among those realizing the step; depth-first, letters in index order.
std::vector<IncreasingPath> minimal_accepting_paths(const Alphabet& alphabet, const QoAutomaton& a);

// Paths ending in a rejecting state one transition below an accepting one,
// using per step only letters maximal among those realizing the step.
std::vector<IncreasingPath> near_accepting_paths(const Alphabet& alphabet, const QoAutomaton& a);

// Sigma_0* a_1? Sigma_1* ... a_n? Sigma_n* with Sigma_i the self-loop letters
// of the i-th state (empty ones omitted).
StarProduct rejection_product(const Alphabet& alphabet, const QoAutomaton& a, const IncreasingPath& path);

// Minimally adequate teacher over the oracle. Equivalence queries take
// minimal quasi-ordered automata; anything else is a ContractViolation.
class OracleTeacher final : public QoTeacher {
public:
  OracleTeacher(const Alphabet& alphabet, IdealOracle& oracle) : alphabet_(alphabet), oracle_(oracle) {}

protected:
  bool answer_membership(const Word& w) override;
  std::optional<Word> answer_equivalence(const QoAutomaton& hypothesis) override;

private:
  const Alphabet& alphabet_;
  IdealOracle& oracle_;
};

struct LearningStats {
  LearnStats learner;
  std::size_t membership = 0;   // teacher membership queries
  std::size_t equivalence = 0;  // teacher equivalence queries
};

// Minimal quasi-ordered automaton of U. One initial query on (Sigma)* settles
// the empty set without running the learner.
QoAutomaton vj_learning(const Alphabet& alphabet, IdealOracle& oracle, QueryLog* log = nullptr,
                        LearningStats* stats = nullptr);

// Labels of the minimal strictly increasing accepting paths, minimized.
Basis basis_from_automaton(const Alphabet& alphabet, const QoAutomaton& a);

}  // namespace vj
