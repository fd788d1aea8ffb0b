#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "vj/alphabet.hpp"
#include "vj/dfa.hpp"
#include "vj/order.hpp"

namespace vj {

// Square boolean relation on states.
class StateRelation {
public:
  StateRelation() = default;
  explicit StateRelation(std::size_t n) : n_(n), bits_(n * n, false) {}

  std::size_t size() const { return n_; }
  bool operator()(State p, State q) const { return bits_[static_cast<std::size_t>(p) * n_ + q]; }
  void set(State p, State q, bool v = true) { bits_[static_cast<std::size_t>(p) * n_ + q] = v; }
  bool strictly_below(State p, State q) const { return (*this)(p, q) && !(*this)(q, p); }

  friend bool operator==(const StateRelation&, const StateRelation&) = default;

private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

// A complete DFA together with a state quasi-order making the accepting
// states upward-closed and the transition function monotone and inflationary.
struct QoAutomaton {
  Dfa dfa;
  StateRelation order;
};

// q <= q' iff L_q is included in L_q'; one product-emptiness check per ordered
// pair of states, counted into `inclusion_checks` when given.
StateRelation compute_state_order(const Dfa& a, std::size_t* inclusion_checks = nullptr);

struct Ordered {
  StateRelation order;
};
// w embeds into w', the automaton accepts w and rejects w'.
struct Violation {
  Word lower;
  Word upper;
};
using OrderCheckOutcome = std::variant<Ordered, Violation>;

// Decides whether a reachable DFA recognizes an upward-closed language. Throws
// ContractViolation when `a` has unreachable states.
OrderCheckOutcome check_quasi_ordered(const Alphabet& alphabet, const Dfa& a);

// Names of the violated quasi-ordered automaton conditions (empty when all
// hold): "order-reflexive", "order-transitive", "accepting-upward-closed",
// "monotone", "inflationary".
std::vector<std::string> validate_qo_invariants(const Alphabet& alphabet, const QoAutomaton& a);

enum class StructureClause {
  kPartialOrderAcyclic = 1,
  kInitialMinimum = 2,
  kAcceptingReachable = 3,
  kUniqueAcceptingMaximum = 4,
};

// Clauses of the structure of minimal quasi-ordered automata that `a` breaks.
std::vector<StructureClause> validate_minimal_structure(const QoAutomaton& a);

// Learned/minimized DFA paired with its computed order. Throws
// ContractViolation if the language is not upward-closed.
QoAutomaton make_qo_automaton(const Alphabet& alphabet, const Dfa& a);

// Automaton of the upward closure of a basis: one greedy matching pointer
// per basis word; not minimized.
Dfa upward_closure_dfa(const Alphabet& alphabet, const Basis& basis);

}  // namespace vj
