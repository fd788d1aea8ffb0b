#pragma once

// Brute-force oracles and random generators shared by the test suites. The
// oracles deliberately avoid the library's algorithms they are checking.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "vj/alphabet.hpp"
#include "vj/dfa.hpp"
#include "vj/order.hpp"
#include "vj/star_product.hpp"

namespace vj::testing {

// Portable across standard libraries: mt19937_64 output is fully specified.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

private:
  std::mt19937_64 engine_;
};

// All words of length <= max_len, length-lex order.
inline std::vector<Word> all_words(std::size_t k, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (Letter a = 0; a < k; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

// Embedding by trying every increasing position map.
inline bool brute_subword_leq(const Alphabet& al, const Word& u, const Word& w) {
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (i == u.size()) return true;
    for (std::size_t p = j; p < w.size(); ++p)
      if (al.leq(u[i], w[p]) && go(i + 1, p + 1)) return true;
    return false;
  };
  return go(0, 0);
}

inline bool brute_up_member(const Alphabet& al, const Basis& b, const Word& w) {
  for (const auto& x : b)
    if (brute_subword_leq(al, x, w)) return true;
  return false;
}

// Membership by trying every factorization of w along the atoms.
inline bool brute_sp_member(const StarProduct& p, const Word& w) {
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t atom, std::size_t pos) {
    if (atom == p.atoms.size()) return pos == w.size();
    const Atom& a = p.atoms[atom];
    if (go(atom + 1, pos)) return true;
    if (a.is_star()) {
      for (std::size_t end = pos; end < w.size() && a.letters().contains(w[end]); ++end)
        if (go(atom + 1, end + 1)) return true;
      return false;
    }
    return pos < w.size() && a.letters().contains(w[pos]) && go(atom + 1, pos + 1);
  };
  return go(0, 0);
}

inline bool brute_union_member(const IdealUnion& u, const Word& w) {
  for (const auto& p : u)
    if (brute_sp_member(p, w)) return true;
  return false;
}

// Quasi-order: random pairs closed reflexively and transitively.
inline Alphabet random_alphabet(Rng& rng, std::size_t k, double density) {
  std::vector<std::pair<Letter, Letter>> pairs;
  for (Letter i = 0; i < k; ++i)
    for (Letter j = 0; j < k; ++j)
      if (i != j && rng.chance(density)) pairs.emplace_back(i, j);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet::from_pairs(names, pairs);
}

inline Word random_word(Rng& rng, std::size_t k, std::size_t max_len) {
  Word w(rng.between(0, max_len));
  for (auto& a : w) a = static_cast<Letter>(rng.below(k));
  return w;
}

inline Basis random_basis(Rng& rng, std::size_t k, std::size_t max_words, std::size_t max_len) {
  Basis b(rng.between(0, max_words));
  for (auto& w : b) w = random_word(rng, k, max_len);
  return b;
}

inline LetterSet random_down_set(Rng& rng, const Alphabet& al) {
  LetterSet s;
  for (Letter a = 0; a < al.size(); ++a)
    if (rng.chance(0.5)) s = s | al.down_set(a);
  if (s.empty()) s = al.down_set(static_cast<Letter>(rng.below(al.size())));
  return s;
}

inline StarProduct random_product(Rng& rng, const Alphabet& al, std::size_t max_atoms) {
  StarProduct p;
  const std::size_t n = rng.between(0, max_atoms);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.chance(0.5)) p.atoms.push_back(Atom::star(al, random_down_set(rng, al)));
    else p.atoms.push_back(Atom::optional(al, static_cast<Letter>(rng.below(al.size()))));
  }
  return p;
}

inline Dfa random_dfa(Rng& rng, std::size_t k, std::size_t max_states) {
  const std::size_t n = rng.between(1, max_states);
  Dfa d(k, n, 0);
  for (State q = 0; q < n; ++q) {
    d.set_accepting(q, rng.chance(0.5));
    for (Letter a = 0; a < k; ++a) d.set_transition(q, a, static_cast<State>(rng.below(n)));
  }
  return d;
}

// Upward closure checked on all pairs of words up to `max_len`.
inline std::optional<std::pair<Word, Word>> brute_upward_violation(const Alphabet& al, const Dfa& d,
                                                                   std::size_t max_len) {
  const auto words = all_words(al.size(), max_len);
  for (const auto& u : words) {
    if (!d.accepts(u)) continue;
    for (const auto& w : words)
      if (!d.accepts(w) && brute_subword_leq(al, u, w)) return std::make_pair(u, w);
  }
  return std::nullopt;
}

// Minimal automaton of the words of length at least n.
inline Dfa length_at_least_dfa(std::size_t k, std::size_t n) {
  Dfa d(k, n + 1, 0);
  d.set_accepting(static_cast<State>(n));
  for (State q = 0; q <= n; ++q)
    for (Letter a = 0; a < k; ++a) d.set_transition(q, a, static_cast<State>(std::min<std::size_t>(q + 1, n)));
  return d;
}

inline bool agree_up_to(const Dfa& d, const std::function<bool(const Word&)>& lang, std::size_t max_len) {
  for (const auto& w : all_words(d.letter_count(), max_len))
    if (d.accepts(w) != lang(w)) return false;
  return true;
}

// Union of the products' automata.
inline Dfa union_dfa(const Alphabet& al, const IdealUnion& u) {
  Dfa acc(al.size(), 1, 0);
  acc.set_accepting(0, false);
  for (const auto& p : u)
    acc = dfa_minimize(dfa_complement(dfa_product_intersect(dfa_complement(acc), dfa_complement(sp_to_dfa(al, p)))));
  return acc;
}

inline Word w_(const Alphabet& al, std::string_view s) { return parse_word(al, s); }

}  // namespace vj::testing
