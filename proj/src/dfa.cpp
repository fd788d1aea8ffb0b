#include "vj/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vj/error.hpp"
#include "text_util.hpp"

namespace vj {

Dfa::Dfa(std::size_t letter_count, std::size_t state_count, State initial)
    : k_(letter_count), initial_(initial), accepting_(state_count, false), delta_(letter_count * state_count) {
  if (state_count == 0) throw std::invalid_argument("a complete DFA needs at least one state");
  if (initial >= state_count) throw std::out_of_range("initial state out of range");
  for (std::size_t q = 0; q < state_count; ++q)
    for (std::size_t a = 0; a < k_; ++a) delta_[q * k_ + a] = static_cast<State>(q);
}

void Dfa::set_initial(State q) {
  if (q >= state_count()) throw std::out_of_range("initial state out of range");
  initial_ = q;
}

std::vector<State> Dfa::accepting_states() const {
  std::vector<State> out;
  for (State q = 0; q < state_count(); ++q)
    if (accepting_[q]) out.push_back(q);
  return out;
}

void Dfa::set_transition(State q, Letter a, State target) {
  if (q >= state_count() || target >= state_count()) throw std::out_of_range("transition state out of range");
  if (a >= k_) throw std::out_of_range("transition letter out of range");
  delta_[static_cast<std::size_t>(q) * k_ + a] = target;
}

State Dfa::run(const Word& w, State from) const {
  State q = from;
  for (Letter a : w) {
    if (a >= k_) throw std::out_of_range("word uses a letter outside the alphabet");
    q = next(q, a);
  }
  return q;
}

Dfa dfa_complement(const Dfa& a) {
  Dfa out = a;
  for (State q = 0; q < a.state_count(); ++q) out.set_accepting(q, !a.accepting(q));
  return out;
}

namespace {

void require_same_letters(const Dfa& a, const Dfa& b) {
  if (a.letter_count() != b.letter_count()) throw std::invalid_argument("automata over different alphabets");
}

// Breadth-first search over state pairs of (a, b) starting at (pa, pb) for a
// pair satisfying `goal`; returns the shortest path label.
template <class Goal>
std::optional<Word> pair_search(const Dfa& a, State pa, const Dfa& b, State pb, Goal goal) {
  const std::size_t nb = b.state_count();
  const auto id = [nb](State x, State y) { return static_cast<std::size_t>(x) * nb + y; };
  std::vector<std::int64_t> parent(a.state_count() * nb, -1);
  std::vector<Letter> via(a.state_count() * nb, 0);
  std::deque<std::pair<State, State>> queue;
  parent[id(pa, pb)] = static_cast<std::int64_t>(id(pa, pb));
  queue.emplace_back(pa, pb);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (goal(x, y)) {
      Word w;
      std::size_t cur = id(x, y);
      while (static_cast<std::size_t>(parent[cur]) != cur) {
        w.push_back(via[cur]);
        cur = static_cast<std::size_t>(parent[cur]);
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Letter l = 0; l < a.letter_count(); ++l) {
      const State nx = a.next(x, l);
      const State ny = b.next(y, l);
      const std::size_t n = id(nx, ny);
      if (parent[n] >= 0) continue;
      parent[n] = static_cast<std::int64_t>(id(x, y));
      via[n] = l;
      queue.emplace_back(nx, ny);
    }
  }
  return std::nullopt;
}

}  // namespace

Dfa dfa_product_intersect(const Dfa& a, const Dfa& b) {
  require_same_letters(a, b);
  const std::size_t k = a.letter_count();
  std::map<std::pair<State, State>, State> number;
  std::vector<std::pair<State, State>> order;
  auto intern = [&](State x, State y) {
    auto [it, fresh] = number.emplace(std::make_pair(x, y), static_cast<State>(order.size()));
    if (fresh) order.emplace_back(x, y);
    return it->second;
  };
  intern(a.initial(), b.initial());
  std::vector<std::vector<State>> succ;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [x, y] = order[i];
    std::vector<State> row(k);
    for (Letter l = 0; l < k; ++l) row[l] = intern(a.next(x, l), b.next(y, l));
    succ.push_back(std::move(row));
  }
  Dfa out(k, order.size(), 0);
  for (State q = 0; q < order.size(); ++q) {
    out.set_accepting(q, a.accepting(order[q].first) && b.accepting(order[q].second));
    for (Letter l = 0; l < k; ++l) out.set_transition(q, l, succ[q][l]);
  }
  return out;
}

std::optional<Word> dfa_shortest_accepted(const Dfa& a) {
  // pair search against a one-state automaton
  Dfa unit(a.letter_count(), 1, 0);
  return pair_search(a, a.initial(), unit, 0, [&](State x, State) { return a.accepting(x); });
}

bool dfa_is_empty(const Dfa& a) { return !dfa_shortest_accepted(a).has_value(); }

std::optional<Word> dfa_inclusion_witness(const Dfa& a, const Dfa& b) {
  require_same_letters(a, b);
  return pair_search(a, a.initial(), b, b.initial(),
                     [&](State x, State y) { return a.accepting(x) && !b.accepting(y); });
}

bool dfa_included(const Dfa& a, const Dfa& b) { return !dfa_inclusion_witness(a, b).has_value(); }

bool dfa_equivalent(const Dfa& a, const Dfa& b) { return dfa_included(a, b) && dfa_included(b, a); }

std::optional<Word> dfa_state_inclusion_witness(const Dfa& a, State from, State to) {
  if (from >= a.state_count() || to >= a.state_count()) throw std::out_of_range("state out of range");
  return pair_search(a, from, a, to, [&](State x, State y) { return a.accepting(x) && !a.accepting(y); });
}

std::vector<std::optional<Word>> dfa_access_words(const Dfa& a) {
  std::vector<std::optional<Word>> words(a.state_count());
  std::deque<State> queue{a.initial()};
  words[a.initial()] = Word{};
  while (!queue.empty()) {
    const State q = queue.front();
    queue.pop_front();
    for (Letter l = 0; l < a.letter_count(); ++l) {
      const State t = a.next(q, l);
      if (words[t]) continue;
      Word w = *words[q];
      w.push_back(l);
      words[t] = std::move(w);
      queue.push_back(t);
    }
  }
  return words;
}

namespace {

// Breadth-first numbering of the states reachable from the initial state.
std::vector<State> bfs_order(const Dfa& a) {
  std::vector<State> order{a.initial()};
  std::vector<bool> seen(a.state_count(), false);
  seen[a.initial()] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter l = 0; l < a.letter_count(); ++l) {
      const State t = a.next(order[i], l);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  return order;
}

// Quotient of `a` by `cls` (a state -> class map compatible with delta),
// restricted to classes reachable from the initial one, numbered breadth-first.
Dfa quotient_bfs(const Dfa& a, const std::vector<State>& cls, std::size_t class_count) {
  std::vector<State> rep(class_count, 0);
  std::vector<bool> has_rep(class_count, false);
  for (State q = 0; q < a.state_count(); ++q)
    if (!has_rep[cls[q]]) {
      rep[cls[q]] = q;
      has_rep[cls[q]] = true;
    }
  const std::size_t k = a.letter_count();
  std::vector<std::int64_t> number(class_count, -1);
  std::vector<State> order{cls[a.initial()]};
  number[cls[a.initial()]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter l = 0; l < k; ++l) {
      const State t = cls[a.next(rep[order[i]], l)];
      if (number[t] < 0) {
        number[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
      }
    }
  Dfa out(k, order.size(), 0);
  for (State q = 0; q < order.size(); ++q) {
    const State r = rep[order[q]];
    out.set_accepting(q, a.accepting(r));
    for (Letter l = 0; l < k; ++l) out.set_transition(q, l, static_cast<State>(number[cls[a.next(r, l)]]));
  }
  return out;
}

}  // namespace

bool dfa_is_reachable(const Dfa& a) { return bfs_order(a).size() == a.state_count(); }

Dfa dfa_trim_reachable(const Dfa& a) {
  std::vector<State> cls(a.state_count());
  for (State q = 0; q < a.state_count(); ++q) cls[q] = q;
  return quotient_bfs(a, cls, a.state_count());
}

Dfa dfa_minimize(const Dfa& input) {
  const Dfa a = dfa_trim_reachable(input);
  const std::size_t n = a.state_count();
  const std::size_t k = a.letter_count();
  // Moore refinement: split classes by (class, successor classes) signatures.
  std::vector<State> cls(n);
  for (State q = 0; q < n; ++q) cls[q] = a.accepting(q) ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<State>, State> ids;
    std::vector<State> next(n);
    for (State q = 0; q < n; ++q) {
      std::vector<State> sig;
      sig.reserve(k + 1);
      sig.push_back(cls[q]);
      for (Letter l = 0; l < k; ++l) sig.push_back(cls[a.next(q, l)]);
      auto [it, fresh] = ids.emplace(std::move(sig), static_cast<State>(ids.size()));
      next[q] = it->second;
    }
    const bool stable = ids.size() == count;
    count = ids.size();
    cls = std::move(next);
    if (stable) break;
  }
  return quotient_bfs(a, cls, count);
}

std::uint64_t dfa_hash(const Dfa& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(a.letter_count());
  mix(a.state_count());
  mix(a.initial());
  for (State q = 0; q < a.state_count(); ++q) {
    mix(a.accepting(q) ? 1 : 0);
    for (Letter l = 0; l < a.letter_count(); ++l) mix(a.next(q, l));
  }
  return h;
}

Dfa parse_dfa(const Alphabet& alphabet, std::string_view text) {
  std::optional<std::size_t> states;
  std::optional<State> initial;
  std::vector<State> accepting;
  struct Trans {
    State from;
    Letter letter;
    State to;
  };
  std::vector<Trans> trans;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(line_no) + ": " + msg); };
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      fail("expected a state number, got '" + s + "'");
    return std::stoul(s);
  };
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto [key, rest] = detail::split_key(body);
    auto fields = detail::split_ws(rest);
    if (key == "states") {
      if (fields.size() != 1) fail("'states:' takes one number");
      states = number(fields[0]);
      if (*states == 0) fail("an automaton needs at least one state");
    } else if (key == "initial") {
      if (fields.size() != 1) fail("'initial:' takes one state");
      initial = static_cast<State>(number(fields[0]));
    } else if (key == "accepting") {
      for (const auto& f : fields) accepting.push_back(static_cast<State>(number(f)));
    } else if (key == "trans") {
      if (fields.size() != 3) fail("'trans:' takes a state, a letter and a state");
      Letter l{};
      try {
        l = alphabet.index_of(fields[1]);
      } catch (const std::out_of_range&) {
        fail("unknown letter '" + fields[1] + "'");
      }
      trans.push_back({static_cast<State>(number(fields[0])), l, static_cast<State>(number(fields[2]))});
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }
  if (!states) throw ParseError("missing 'states:' line");
  if (!initial) throw ParseError("missing 'initial:' line");
  const std::size_t n = *states;
  const std::size_t k = alphabet.size();
  if (*initial >= n) throw ParseError("initial state out of range");
  Dfa dfa(k, n, *initial);
  for (State q : accepting) {
    if (q >= n) throw ParseError("accepting state out of range");
    dfa.set_accepting(q);
  }
  std::vector<bool> seen(n * k, false);
  for (const auto& t : trans) {
    if (t.from >= n || t.to >= n) throw ParseError("transition state out of range");
    const std::size_t slot = static_cast<std::size_t>(t.from) * k + t.letter;
    if (seen[slot]) throw ParseError("duplicate transition for state " + std::to_string(t.from));
    seen[slot] = true;
    dfa.set_transition(t.from, t.letter, t.to);
  }
  for (std::size_t slot = 0; slot < n * k; ++slot)
    if (!seen[slot])
      throw ParseError("automaton is not complete: state " + std::to_string(slot / k) + " lacks letter '" +
                       alphabet.name(static_cast<Letter>(slot % k)) + "'");
  return dfa;
}

std::string format_dfa(const Alphabet& alphabet, const Dfa& a) {
  std::ostringstream out;
  out << "states: " << a.state_count() << '\n';
  out << "initial: " << a.initial() << '\n';
  out << "accepting:";
  for (State q : a.accepting_states()) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < a.state_count(); ++q)
    for (Letter l = 0; l < a.letter_count(); ++l)
      out << "trans: " << q << ' ' << alphabet.name(l) << ' ' << a.next(q, l) << '\n';
  return out.str();
}

std::string dfa_to_dot(const Alphabet& alphabet, const Dfa& a, bool compact) {
  std::ostringstream out;
  out << "digraph automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  start [shape=point];\n";
  for (State q = 0; q < a.state_count(); ++q)
    out << "  q" << q << " [shape=" << (a.accepting(q) ? "doublecircle" : "circle") << "];\n";
  out << "  start -> q" << a.initial() << ";\n";
  for (State q = 0; q < a.state_count(); ++q) {
    // group letters by target, targets in first-letter order
    std::vector<std::pair<State, std::string>> edges;
    for (Letter l = 0; l < a.letter_count(); ++l) {
      const State t = a.next(q, l);
      if (compact && t == q) continue;
      auto it = std::find_if(edges.begin(), edges.end(), [t](const auto& e) { return e.first == t; });
      if (it == edges.end()) {
        edges.emplace_back(t, alphabet.name(l));
      } else {
        it->second += ',';
        it->second += alphabet.name(l);
      }
    }
    for (const auto& [t, label] : edges) out << "  q" << q << " -> q" << t << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vj
