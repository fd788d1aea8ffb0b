#include "vj/basis.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "vj/error.hpp"

namespace vj {

bool BasisOracle::answer(const StarProduct& p) {
  return std::any_of(basis_.begin(), basis_.end(), [&](const Word& b) { return sp_member(alphabet_, p, b); });
}

bool AutomatonOracle::answer(const StarProduct& p) {
  return !dfa_is_empty(dfa_product_intersect(automaton_, sp_to_dfa(alphabet_, p)));
}

Basis vj_rewriting(const Alphabet& alphabet, IdealOracle& oracle, RewritingStats* stats) {
  RewritingStats local;
  Basis candidates;
  Basis minimized;
  IdealUnion complement = complement_up_basis(alphabet, minimized);
  auto covers = [&]() {
    ++local.coverage_checks;
    for (const auto& p : complement)
      if (oracle.intersects(p)) return false;
    return true;
  };
  auto finish = [&]() {
    if (stats) *stats = local;
    return minimized;
  };
  if (covers()) return finish();
  WordEnumerator words(alphabet.size());
  while (auto w = words.next()) {
    ++local.words_examined;
    if (!oracle.intersects(principal_ideal(alphabet, *w))) continue;
    candidates.push_back(*w);
    ++local.basis_changes;
    Basis next = minimize_basis(alphabet, candidates);
    // same upward closure, same complement
    if (next != minimized) {
      minimized = std::move(next);
      complement = complement_up_basis(alphabet, minimized);
    }
    if (covers()) return finish();
  }
  throw TeacherInconsistency("ideal oracle answers admit no finite basis over the alphabet");
}

namespace {

enum class PathKind { kMinimalAccepting, kNearAccepting };

// Depth-first walk over strictly increasing paths; `emit` returns false to stop.
class PathWalker {
public:
  PathWalker(const Alphabet& alphabet, const QoAutomaton& a, PathKind kind,
             std::function<bool(const IncreasingPath&)> emit)
      : alphabet_(alphabet), a_(a), kind_(kind), emit_(std::move(emit)) {}

  void run() {
    path_.states.assign(1, a_.dfa.initial());
    path_.label.clear();
    walk();
  }

private:
  bool walk() {
    const Dfa& dfa = a_.dfa;
    const State q = path_.states.back();
    const std::size_t k = dfa.letter_count();
    if (kind_ == PathKind::kMinimalAccepting && dfa.accepting(q)) return emit_(path_);
    if (kind_ == PathKind::kNearAccepting) {
      if (dfa.accepting(q)) return true;
      bool near = false;
      for (Letter x = 0; x < k && !near; ++x) near = dfa.accepting(dfa.next(q, x));
      if (near && !emit_(path_)) return false;
    }
    // successors in order of their first letter
    std::vector<State> targets;
    for (Letter x = 0; x < k; ++x) {
      const State t = dfa.next(q, x);
      if (t != q && a_.order.strictly_below(q, t) && std::find(targets.begin(), targets.end(), t) == targets.end())
        targets.push_back(t);
    }
    for (State t : targets) {
      if (kind_ == PathKind::kNearAccepting && dfa.accepting(t)) continue;
      LetterSet step;
      for (Letter x = 0; x < k; ++x)
        if (dfa.next(q, x) == t) step.insert(x);
      const auto letters =
          kind_ == PathKind::kMinimalAccepting ? alphabet_.minimal_in(step) : alphabet_.maximal_in(step);
      for (Letter x : letters) {
        path_.states.push_back(t);
        path_.label.push_back(x);
        const bool go_on = walk();
        path_.states.pop_back();
        path_.label.pop_back();
        if (!go_on) return false;
      }
    }
    return true;
  }

  const Alphabet& alphabet_;
  const QoAutomaton& a_;
  PathKind kind_;
  std::function<bool(const IncreasingPath&)> emit_;
  IncreasingPath path_;
};

std::vector<IncreasingPath> collect(const Alphabet& alphabet, const QoAutomaton& a, PathKind kind) {
  std::vector<IncreasingPath> out;
  PathWalker(alphabet, a, kind, [&](const IncreasingPath& p) {
    out.push_back(p);
    return true;
  }).run();
  return out;
}

std::string describe(const std::vector<std::string>& broken, const std::vector<StructureClause>& clauses) {
  std::string msg = "hypothesis is not a minimal quasi-ordered automaton:";
  for (const auto& b : broken) msg += " " + b;
  for (auto c : clauses) msg += " structure-" + std::to_string(static_cast<int>(c));
  return msg;
}

}  // namespace

std::vector<IncreasingPath> minimal_accepting_paths(const Alphabet& alphabet, const QoAutomaton& a) {
  return collect(alphabet, a, PathKind::kMinimalAccepting);
}

std::vector<IncreasingPath> near_accepting_paths(const Alphabet& alphabet, const QoAutomaton& a) {
  return collect(alphabet, a, PathKind::kNearAccepting);
}

StarProduct rejection_product(const Alphabet& alphabet, const QoAutomaton& a, const IncreasingPath& path) {
  const Dfa& dfa = a.dfa;
  StarProduct p;
  for (std::size_t i = 0; i < path.states.size(); ++i) {
    if (i > 0) p.atoms.push_back(Atom::optional(alphabet, path.label[i - 1]));
    LetterSet loops;
    for (Letter x = 0; x < dfa.letter_count(); ++x)
      if (dfa.next(path.states[i], x) == path.states[i]) loops.insert(x);
    // downward-closed by monotonicity: x' <= x loops wherever x does
    if (!loops.empty()) p.atoms.push_back(Atom::star(alphabet, loops));
  }
  return p;
}

bool OracleTeacher::answer_membership(const Word& w) {
  return oracle_.intersects(principal_ideal(alphabet_, w));
}

std::optional<Word> OracleTeacher::answer_equivalence(const QoAutomaton& hypothesis) {
  const Dfa& dfa = hypothesis.dfa;
  auto in_u = [&](const Word& w) { return oracle_.intersects(principal_ideal(alphabet_, w)); };

  if (dfa_is_empty(dfa)) {
    if (!oracle_.intersects(full_product(alphabet_))) return std::nullopt;
    WordEnumerator words(alphabet_.size());
    while (auto w = words.next())
      if (in_u(*w)) return w;
    throw TeacherInconsistency("oracle reports a non-empty set without members");
  }

  const auto broken = validate_qo_invariants(alphabet_, hypothesis);
  const auto clauses = validate_minimal_structure(hypothesis);
  if (!broken.empty() || !clauses.empty()) throw ContractViolation(describe(broken, clauses));

  // L(A) within U: the minimal path labels lie below every accepted word.
  std::optional<Word> cex;
  PathWalker(alphabet_, hypothesis, PathKind::kMinimalAccepting, [&](const IncreasingPath& p) {
    if (in_u(p.label)) return true;
    cex = p.label;
    return false;
  }).run();
  if (cex) return cex;

  // U within L(A): every rejected word lies in one of these products, all of
  // whose words are rejected.
  PathWalker(alphabet_, hypothesis, PathKind::kNearAccepting, [&](const IncreasingPath& path) {
    const StarProduct p = rejection_product(alphabet_, hypothesis, path);
    if (!oracle_.intersects(p)) return true;
    ProductEnumerator words(alphabet_, p);
    while (auto w = words.next())
      if (in_u(*w)) {
        cex = std::move(*w);
        return false;
      }
    throw TeacherInconsistency("oracle reports a finite product meeting U without a member");
  }).run();
  return cex;
}

QoAutomaton vj_learning(const Alphabet& alphabet, IdealOracle& oracle, QueryLog* log, LearningStats* stats) {
  if (!oracle.intersects(full_product(alphabet))) {
    Dfa empty(alphabet.size(), 1, 0);
    if (stats) *stats = LearningStats{};
    StateRelation order(1);
    order.set(0, 0);
    return QoAutomaton{std::move(empty), std::move(order)};
  }
  OracleTeacher teacher(alphabet, oracle);
  LearningStats local;
  QoAutomaton result = learn_qo_automaton(alphabet, teacher, log, &local.learner);
  local.membership = teacher.membership_queries();
  local.equivalence = teacher.equivalence_queries();
  if (stats) *stats = local;
  return result;
}

Basis basis_from_automaton(const Alphabet& alphabet, const QoAutomaton& a) {
  if (dfa_is_empty(a.dfa)) return {};
  std::set<Word> labels;
  PathWalker(alphabet, a, PathKind::kMinimalAccepting, [&](const IncreasingPath& p) {
    labels.insert(p.label);
    return true;
  }).run();
  return minimize_basis(alphabet, Basis(labels.begin(), labels.end()));
}

}  // namespace vj
