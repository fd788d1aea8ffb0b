#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "vj/alphabet.hpp"
#include "vj/dfa.hpp"
#include "vj/qo_automaton.hpp"

namespace vj {

// Optional query trace: `M <word> -> 0|1` and `E <hash> -> ok|cex <word>`.
class QueryLog {
public:
  QueryLog(std::ostream& out, const Alphabet& alphabet) : out_(&out), alphabet_(&alphabet) {}
  void membership(const Word& w, bool answer);
  void equivalence(const Dfa& hypothesis, const std::optional<Word>& counterexample);

private:
  std::ostream* out_;
  const Alphabet* alphabet_;
};

// Minimally adequate teacher for a fixed regular language. `equivalence`
// returns nullopt when the hypothesis is right, a counterexample otherwise.
class Teacher {
public:
  virtual ~Teacher() = default;

  bool membership(const Word& w);
  std::optional<Word> equivalence(const Dfa& hypothesis);

  std::size_t membership_queries() const { return membership_queries_; }
  std::size_t equivalence_queries() const { return equivalence_queries_; }
  void set_log(QueryLog* log) { log_ = log; }

protected:
  virtual bool answer_membership(const Word& w) = 0;
  virtual std::optional<Word> answer_equivalence(const Dfa& hypothesis) = 0;

private:
  std::size_t membership_queries_ = 0;
  std::size_t equivalence_queries_ = 0;
  QueryLog* log_ = nullptr;
};

// Teacher whose equivalence queries take minimal quasi-ordered automata.
class QoTeacher {
public:
  virtual ~QoTeacher() = default;

  bool membership(const Word& w);
  std::optional<Word> equivalence(const QoAutomaton& hypothesis);

  std::size_t membership_queries() const { return membership_queries_; }
  std::size_t equivalence_queries() const { return equivalence_queries_; }

protected:
  virtual bool answer_membership(const Word& w) = 0;
  virtual std::optional<Word> answer_equivalence(const QoAutomaton& hypothesis) = 0;

private:
  std::size_t membership_queries_ = 0;
  std::size_t equivalence_queries_ = 0;
};

// Teacher backed by a known automaton; counterexamples are shortest words of
// the symmetric difference.
class DfaTeacher final : public Teacher {
public:
  explicit DfaTeacher(Dfa target) : target_(std::move(target)) {}

protected:
  bool answer_membership(const Word& w) override { return target_.accepts(w); }
  std::optional<Word> answer_equivalence(const Dfa& hypothesis) override;

private:
  Dfa target_;
};

class DfaQoTeacher final : public QoTeacher {
public:
  explicit DfaQoTeacher(Dfa target) : target_(std::move(target)) {}

  // Hypotheses this teacher was asked about, in order.
  const std::vector<QoAutomaton>& hypotheses() const { return seen_; }

protected:
  bool answer_membership(const Word& w) override { return target_.accepts(w); }
  std::optional<Word> answer_equivalence(const QoAutomaton& hypothesis) override;

private:
  Dfa target_;
  std::vector<QoAutomaton> seen_;
};

// Angluin's table: prefix-closed rows S, suffix-closed columns E, entries for
// S and S.letters, with memoized membership answers.
class ObservationTable {
public:
  ObservationTable(std::size_t letter_count, Teacher& teacher);

  const std::vector<Word>& prefixes() const { return prefixes_; }
  const std::vector<Word>& suffixes() const { return suffixes_; }

  // Adds w and all of its prefixes.
  void add_prefixes_of(const Word& w);
  void add_suffix(const Word& e);

  std::vector<bool> row(const Word& s);
  bool entry(const Word& w);

  // A row s.a matching no row of S, if any.
  std::optional<Word> find_unclosed();
  // A suffix a.e separating two equal rows of S, if any.
  std::optional<Word> find_inconsistency();

  // Requires a closed and consistent table.
  Dfa hypothesis();

private:
  std::size_t k_;
  Teacher* teacher_;
  std::vector<Word> prefixes_;
  std::vector<Word> suffixes_;
  std::map<Word, bool> answers_;
};

// Learns the minimal complete DFA of the teacher's language. Throws
// TeacherInconsistency when a counterexample does not contradict the
// hypothesis according to earlier answers.
Dfa lstar_learn(const Alphabet& alphabet, Teacher& teacher);

struct LearnStats {
  std::size_t inner_membership = 0;
  std::size_t inner_equivalence = 0;
  std::size_t order_violations = 0;  // hypotheses rejected without the teacher
  std::size_t hypothesis_states_max = 0;
};

// L* against an adapter that forwards membership queries, checks each
// hypothesis for being quasi-ordered and only forwards ordered ones. A
// violation pair (w, w') is resolved with one membership query on w.
QoAutomaton learn_qo_automaton(const Alphabet& alphabet, QoTeacher& teacher, QueryLog* log = nullptr,
                               LearnStats* stats = nullptr);

}  // namespace vj
