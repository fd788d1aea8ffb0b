#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vj/alphabet.hpp"

namespace vj {

using State = std::uint32_t;

// Complete deterministic automaton over letters 0..letter_count-1.
class Dfa {
public:
  Dfa() = default;
  // All transitions initially loop on their source state.
  Dfa(std::size_t letter_count, std::size_t state_count, State initial = 0);

  std::size_t letter_count() const { return k_; }
  std::size_t state_count() const { return accepting_.size(); }
  State initial() const { return initial_; }
  void set_initial(State q);

  bool accepting(State q) const { return accepting_.at(q); }
  void set_accepting(State q, bool value = true) { accepting_.at(q) = value; }
  std::vector<State> accepting_states() const;

  State next(State q, Letter a) const { return delta_[static_cast<std::size_t>(q) * k_ + a]; }
  void set_transition(State q, Letter a, State target);

  State run(const Word& w, State from) const;
  State run(const Word& w) const { return run(w, initial_); }
  bool accepts(const Word& w) const { return accepting(run(w)); }

  friend bool operator==(const Dfa&, const Dfa&) = default;

private:
  std::size_t k_ = 0;
  State initial_ = 0;
  std::vector<bool> accepting_;
  std::vector<State> delta_;  // row-major: state, then letter
};

Dfa dfa_complement(const Dfa& a);
// Product on reachable state pairs, numbered breadth-first.
Dfa dfa_product_intersect(const Dfa& a, const Dfa& b);

// Shortest (then lexicographically least) accepted word; nullopt iff L(a) is empty.
std::optional<Word> dfa_shortest_accepted(const Dfa& a);
bool dfa_is_empty(const Dfa& a);
// Shortest word in L(a) \ L(b); nullopt iff L(a) is included in L(b).
std::optional<Word> dfa_inclusion_witness(const Dfa& a, const Dfa& b);
bool dfa_included(const Dfa& a, const Dfa& b);
bool dfa_equivalent(const Dfa& a, const Dfa& b);

// Shortest word leading from `from` into an accepting state while leading from
// `to` into a rejecting one, i.e. a witness against L_from being included in L_to.
std::optional<Word> dfa_state_inclusion_witness(const Dfa& a, State from, State to);

// Shortest access word for every state (nullopt for unreachable ones).
std::vector<std::optional<Word>> dfa_access_words(const Dfa& a);
bool dfa_is_reachable(const Dfa& a);
// Restriction to reachable states, renumbered breadth-first.
Dfa dfa_trim_reachable(const Dfa& a);

// The minimal complete DFA, states numbered breadth-first from the initial
// state taking letters in index order; equal languages give equal objects.
Dfa dfa_minimize(const Dfa& a);

// Deterministic content hash (FNV-1a over the canonical text form).
std::uint64_t dfa_hash(const Dfa& a);

// Text form: `states: n`, `initial: i`, `accepting: i j ...`, then one
// `trans: q x q'` line per state and letter (all of them required).
Dfa parse_dfa(const Alphabet& alphabet, std::string_view text);
std::string format_dfa(const Alphabet& alphabet, const Dfa& a);

// Graphviz rendering; `compact` omits self-loops (implicitly looping).
std::string dfa_to_dot(const Alphabet& alphabet, const Dfa& a, bool compact);

}  // namespace vj
