#include "vj/qo_automaton.hpp"

#include <algorithm>
#include <map>

#include "vj/error.hpp"

namespace vj {

StateRelation compute_state_order(const Dfa& a, std::size_t* inclusion_checks) {
  const std::size_t n = a.state_count();
  StateRelation rel(n);
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q) {
      if (inclusion_checks) ++*inclusion_checks;
      rel.set(p, q, !dfa_state_inclusion_witness(a, p, q).has_value());
    }
  return rel;
}

namespace {

Word concat(const Word& a, std::initializer_list<Letter> mid, const Word& b) {
  Word w = a;
  w.insert(w.end(), mid.begin(), mid.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

OrderCheckOutcome check_quasi_ordered(const Alphabet& alphabet, const Dfa& a) {
  if (a.letter_count() != alphabet.size()) throw std::invalid_argument("automaton and alphabet disagree");
  const auto access = dfa_access_words(a);
  for (const auto& w : access)
    if (!w) throw ContractViolation("check_quasi_ordered needs a reachable automaton");
  const StateRelation order = compute_state_order(a);
  const std::size_t n = a.state_count();
  const std::size_t k = alphabet.size();

  // The two conditions the induced order cannot break.
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q) {
      if (!order(p, q)) continue;
      if (a.accepting(p) && !a.accepting(q)) throw InternalError("induced order: accepting states not upward-closed");
      for (Letter l = 0; l < k; ++l)
        if (!order(a.next(p, l), a.next(q, l))) throw InternalError("induced order: transitions not monotone in the state");
    }

  // (i) monotonicity in the letter
  for (State q = 0; q < n; ++q)
    for (Letter lo = 0; lo < k; ++lo)
      for (Letter hi = 0; hi < k; ++hi) {
        if (lo == hi || !alphabet.leq(lo, hi)) continue;
        const State s = a.next(q, lo);
        const State t = a.next(q, hi);
        if (order(s, t)) continue;
        const Word v = *dfa_state_inclusion_witness(a, s, t);
        return Violation{concat(*access[q], {lo}, v), concat(*access[q], {hi}, v)};
      }
  // (ii) inflationary transitions
  for (State q = 0; q < n; ++q)
    for (Letter l = 0; l < k; ++l) {
      const State t = a.next(q, l);
      if (order(q, t)) continue;
      const Word v = *dfa_state_inclusion_witness(a, q, t);
      return Violation{concat(*access[q], {}, v), concat(*access[q], {l}, v)};
    }
  return Ordered{order};
}

std::vector<std::string> validate_qo_invariants(const Alphabet& alphabet, const QoAutomaton& qa) {
  const Dfa& a = qa.dfa;
  const StateRelation& le = qa.order;
  const std::size_t n = a.state_count();
  const std::size_t k = a.letter_count();
  std::vector<std::string> broken;
  if (le.size() != n || k != alphabet.size()) return {"shape"};
  bool refl = true, trans = true, up = true, mono = true, infl = true;
  for (State p = 0; p < n; ++p) {
    refl = refl && le(p, p);
    for (State q = 0; q < n; ++q) {
      if (!le(p, q)) continue;
      for (State r = 0; r < n; ++r)
        if (le(q, r) && !le(p, r)) trans = false;
      if (a.accepting(p) && !a.accepting(q)) up = false;
      for (Letter lo = 0; lo < k; ++lo)
        for (Letter hi = 0; hi < k; ++hi)
          if (alphabet.leq(lo, hi) && !le(a.next(p, lo), a.next(q, hi))) mono = false;
    }
    for (Letter l = 0; l < k; ++l)
      if (!le(p, a.next(p, l))) infl = false;
  }
  if (!refl) broken.emplace_back("order-reflexive");
  if (!trans) broken.emplace_back("order-transitive");
  if (!up) broken.emplace_back("accepting-upward-closed");
  if (!mono) broken.emplace_back("monotone");
  if (!infl) broken.emplace_back("inflationary");
  return broken;
}

std::vector<StructureClause> validate_minimal_structure(const QoAutomaton& qa) {
  const Dfa& a = qa.dfa;
  const StateRelation& le = qa.order;
  const std::size_t n = a.state_count();
  std::vector<StructureClause> broken;

  bool partial = true;
  for (State p = 0; p < n; ++p)
    for (State q = 0; q < n; ++q)
      if (p != q && le(p, q) && le(q, p)) partial = false;
  // acyclic apart from self-loops: Kahn's algorithm on non-loop edges
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<State>> succ(n);
  for (State q = 0; q < n; ++q)
    for (Letter l = 0; l < a.letter_count(); ++l) {
      const State t = a.next(q, l);
      if (t != q && std::find(succ[q].begin(), succ[q].end(), t) == succ[q].end()) {
        succ[q].push_back(t);
        ++indeg[t];
      }
    }
  std::vector<State> ready;
  for (State q = 0; q < n; ++q)
    if (indeg[q] == 0) ready.push_back(q);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const State q = ready.back();
    ready.pop_back();
    ++removed;
    for (State t : succ[q])
      if (--indeg[t] == 0) ready.push_back(t);
  }
  if (!partial || removed != n) broken.push_back(StructureClause::kPartialOrderAcyclic);

  bool initial_min = true;
  for (State q = 0; q < n; ++q) initial_min = initial_min && le(a.initial(), q);
  if (!initial_min) broken.push_back(StructureClause::kInitialMinimum);

  const auto accepting = a.accepting_states();
  if (!accepting.empty()) {
    // every state must reach an accepting state
    std::vector<bool> reaches(n, false);
    for (State f : accepting) reaches[f] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (State q = 0; q < n; ++q) {
        if (reaches[q]) continue;
        for (Letter l = 0; l < a.letter_count(); ++l)
          if (reaches[a.next(q, l)]) {
            reaches[q] = true;
            grew = true;
            break;
          }
      }
    }
    if (!std::all_of(reaches.begin(), reaches.end(), [](bool b) { return b; }))
      broken.push_back(StructureClause::kAcceptingReachable);
  }

  bool unique_max = accepting.size() <= 1;
  if (accepting.size() == 1)
    for (State q = 0; q < n; ++q) unique_max = unique_max && le(q, accepting.front());
  if (!unique_max) broken.push_back(StructureClause::kUniqueAcceptingMaximum);
  return broken;
}

QoAutomaton make_qo_automaton(const Alphabet& alphabet, const Dfa& a) {
  auto outcome = check_quasi_ordered(alphabet, a);
  if (auto* ord = std::get_if<Ordered>(&outcome)) return QoAutomaton{a, std::move(ord->order)};
  throw ContractViolation("automaton does not recognize an upward-closed language");
}

Dfa upward_closure_dfa(const Alphabet& alphabet, const Basis& basis) {
  for (const auto& b : basis) alphabet.check_word(b);
  const std::size_t k = alphabet.size();
  using Progress = std::vector<std::size_t>;
  // id 0 is reserved for the single absorbing accepting state
  std::map<Progress, State> ids;
  std::vector<Progress> states;
  auto done = [&](const Progress& p) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (p[i] == basis[i].size()) return true;
    return false;
  };
  std::vector<std::vector<State>> succ;
  auto intern = [&](const Progress& p) -> State {
    if (done(p)) return 0;
    auto [it, fresh] = ids.emplace(p, static_cast<State>(states.size() + 1));
    if (fresh) states.push_back(p);
    return it->second;
  };
  const State start = intern(Progress(basis.size(), 0));
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::vector<State> row(k);
    for (Letter x = 0; x < k; ++x) {
      Progress p = states[i];
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (p[j] < basis[j].size() && alphabet.leq_unchecked(basis[j][p[j]], x)) ++p[j];
      row[x] = intern(p);
    }
    succ.push_back(std::move(row));
  }
  Dfa dfa(k, states.size() + 1, start);
  dfa.set_accepting(0);
  for (State q = 0; q < states.size(); ++q)
    for (Letter x = 0; x < k; ++x) dfa.set_transition(q + 1, x, succ[q][x]);
  return dfa;
}

}  // namespace vj
