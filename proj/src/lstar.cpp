#include "vj/lstar.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "vj/error.hpp"
#include "vj/order.hpp"

namespace vj {

void QueryLog::membership(const Word& w, bool answer) {
  *out_ << "M " << format_word(*alphabet_, w) << " -> " << (answer ? 1 : 0) << '\n';
}

void QueryLog::equivalence(const Dfa& hypothesis, const std::optional<Word>& counterexample) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(dfa_hash(hypothesis)));
  *out_ << "E " << hash << " -> ";
  if (counterexample) *out_ << "cex " << format_word(*alphabet_, *counterexample) << '\n';
  else *out_ << "ok\n";
}

bool Teacher::membership(const Word& w) {
  ++membership_queries_;
  const bool answer = answer_membership(w);
  if (log_) log_->membership(w, answer);
  return answer;
}

std::optional<Word> Teacher::equivalence(const Dfa& hypothesis) {
  ++equivalence_queries_;
  auto cex = answer_equivalence(hypothesis);
  if (log_) log_->equivalence(hypothesis, cex);
  return cex;
}

bool QoTeacher::membership(const Word& w) {
  ++membership_queries_;
  return answer_membership(w);
}

std::optional<Word> QoTeacher::equivalence(const QoAutomaton& hypothesis) {
  ++equivalence_queries_;
  return answer_equivalence(hypothesis);
}

namespace {

std::optional<Word> symmetric_difference_witness(const Dfa& target, const Dfa& hypothesis) {
  auto a = dfa_inclusion_witness(target, hypothesis);
  auto b = dfa_inclusion_witness(hypothesis, target);
  if (!a) return b;
  if (!b) return a;
  return length_lex_less(*b, *a) ? b : a;
}

}  // namespace

std::optional<Word> DfaTeacher::answer_equivalence(const Dfa& hypothesis) {
  return symmetric_difference_witness(target_, hypothesis);
}

std::optional<Word> DfaQoTeacher::answer_equivalence(const QoAutomaton& hypothesis) {
  seen_.push_back(hypothesis);
  return symmetric_difference_witness(target_, hypothesis.dfa);
}

ObservationTable::ObservationTable(std::size_t letter_count, Teacher& teacher)
    : k_(letter_count), teacher_(&teacher), prefixes_{Word{}}, suffixes_{Word{}} {}

bool ObservationTable::entry(const Word& w) {
  if (auto it = answers_.find(w); it != answers_.end()) return it->second;
  const bool answer = teacher_->membership(w);
  answers_.emplace(w, answer);
  return answer;
}

std::vector<bool> ObservationTable::row(const Word& s) {
  std::vector<bool> r;
  r.reserve(suffixes_.size());
  Word w;
  for (const auto& e : suffixes_) {
    w = s;
    w.insert(w.end(), e.begin(), e.end());
    r.push_back(entry(w));
  }
  return r;
}

void ObservationTable::add_prefixes_of(const Word& w) {
  for (std::size_t len = 0; len <= w.size(); ++len) {
    Word p(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
    if (std::find(prefixes_.begin(), prefixes_.end(), p) == prefixes_.end()) prefixes_.push_back(std::move(p));
  }
}

void ObservationTable::add_suffix(const Word& e) {
  if (std::find(suffixes_.begin(), suffixes_.end(), e) == suffixes_.end()) suffixes_.push_back(e);
}

std::optional<Word> ObservationTable::find_unclosed() {
  std::set<std::vector<bool>> rows;
  for (const auto& s : prefixes_) rows.insert(row(s));
  for (const auto& s : prefixes_)
    for (Letter a = 0; a < k_; ++a) {
      Word sa = s;
      sa.push_back(a);
      if (!rows.contains(row(sa))) return sa;
    }
  return std::nullopt;
}

std::optional<Word> ObservationTable::find_inconsistency() {
  std::vector<std::vector<bool>> rows;
  for (const auto& s : prefixes_) rows.push_back(row(s));
  for (std::size_t i = 0; i < prefixes_.size(); ++i)
    for (std::size_t j = i + 1; j < prefixes_.size(); ++j) {
      if (rows[i] != rows[j]) continue;
      for (Letter a = 0; a < k_; ++a) {
        Word si = prefixes_[i];
        si.push_back(a);
        Word sj = prefixes_[j];
        sj.push_back(a);
        const auto ri = row(si);
        const auto rj = row(sj);
        for (std::size_t c = 0; c < suffixes_.size(); ++c)
          if (ri[c] != rj[c]) {
            Word e{a};
            e.insert(e.end(), suffixes_[c].begin(), suffixes_[c].end());
            return e;
          }
      }
    }
  return std::nullopt;
}

Dfa ObservationTable::hypothesis() {
  std::map<std::vector<bool>, State> ids;
  std::vector<const Word*> reps;
  for (const auto& s : prefixes_) {
    auto [it, fresh] = ids.emplace(row(s), static_cast<State>(reps.size()));
    if (fresh) reps.push_back(&s);
  }
  Dfa dfa(k_, reps.size(), ids.at(row(Word{})));
  for (State q = 0; q < reps.size(); ++q) {
    dfa.set_accepting(q, entry(*reps[q]));
    for (Letter a = 0; a < k_; ++a) {
      Word sa = *reps[q];
      sa.push_back(a);
      auto it = ids.find(row(sa));
      if (it == ids.end()) throw InternalError("hypothesis built from a table that is not closed");
      dfa.set_transition(q, a, it->second);
    }
  }
  return dfa;
}

Dfa lstar_learn(const Alphabet& alphabet, Teacher& teacher) {
  ObservationTable table(alphabet.size(), teacher);
  while (true) {
    while (true) {
      if (auto s = table.find_unclosed()) {
        table.add_prefixes_of(*s);
        continue;
      }
      if (auto e = table.find_inconsistency()) {
        table.add_suffix(*e);
        continue;
      }
      break;
    }
    // renumbered canonically; a closed consistent table is already minimal
    const Dfa hypothesis = dfa_minimize(table.hypothesis());
    const auto cex = teacher.equivalence(hypothesis);
    if (!cex) return hypothesis;
    alphabet.check_word(*cex);
    if (table.entry(*cex) == hypothesis.accepts(*cex))
      throw TeacherInconsistency("counterexample '" + format_word(alphabet, *cex) +
                                 "' is classified the same by the hypothesis and by earlier answers");
    table.add_prefixes_of(*cex);
  }
}

namespace {

class QoAdapter final : public Teacher {
public:
  QoAdapter(const Alphabet& alphabet, QoTeacher& inner, LearnStats& stats)
      : alphabet_(alphabet), inner_(inner), stats_(stats) {}

  const std::optional<QoAutomaton>& accepted() const { return accepted_; }

protected:
  bool answer_membership(const Word& w) override { return inner_.membership(w); }

  std::optional<Word> answer_equivalence(const Dfa& hypothesis) override {
    const Dfa trimmed = dfa_trim_reachable(hypothesis);
    stats_.hypothesis_states_max = std::max(stats_.hypothesis_states_max, trimmed.state_count());
    auto outcome = check_quasi_ordered(alphabet_, trimmed);
    if (auto* v = std::get_if<Violation>(&outcome)) {
      ++stats_.order_violations;
      // the hypothesis accepts lower and rejects upper
      return inner_.membership(v->lower) ? v->upper : v->lower;
    }
    QoAutomaton qa{trimmed, std::get<Ordered>(std::move(outcome)).order};
    auto cex = inner_.equivalence(qa);
    if (!cex) accepted_ = std::move(qa);
    return cex;
  }

private:
  const Alphabet& alphabet_;
  QoTeacher& inner_;
  LearnStats& stats_;
  std::optional<QoAutomaton> accepted_;
};

}  // namespace

QoAutomaton learn_qo_automaton(const Alphabet& alphabet, QoTeacher& teacher, QueryLog* log, LearnStats* stats) {
  LearnStats local;
  QoAdapter adapter(alphabet, teacher, local);
  adapter.set_log(log);
  const Dfa learned = lstar_learn(alphabet, adapter);
  local.inner_membership = adapter.membership_queries();
  local.inner_equivalence = adapter.equivalence_queries();
  if (stats) *stats = local;
  if (!adapter.accepted() || !(adapter.accepted()->dfa == learned))
    throw InternalError("learner finished on a hypothesis the teacher never accepted");
  return *adapter.accepted();
}

}  // namespace vj
