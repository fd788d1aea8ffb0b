#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vj/alphabet.hpp"
#include "vj/order.hpp"

namespace vj {

class Dfa;

// One factor of a *-product: either `a?` (epsilon or one letter below a) or
// `S*` (any word over a non-empty downward-closed letter set S).
class Atom {
public:
  enum class Kind { kOptional, kStar };

  // Throws std::out_of_range for letters outside the alphabet.
  static Atom optional(const Alphabet& alphabet, Letter a);
  // Throws std::invalid_argument unless `letters` is non-empty and
  // downward-closed in the alphabet.
  static Atom star(const Alphabet& alphabet, LetterSet letters);

  Kind kind() const { return kind_; }
  bool is_star() const { return kind_ == Kind::kStar; }
  Letter letter() const { return letter_; }   // kOptional only
  LetterSet letters() const { return set_; }  // kStar: the set; kOptional: down-set of letter()

  // Does the atom's language contain the one-letter word `x`?
  bool admits(Letter x) const { return set_.contains(x); }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

private:
  Atom(Kind kind, Letter letter, LetterSet set) : kind_(kind), letter_(letter), set_(set) {}

  Kind kind_;
  Letter letter_;
  LetterSet set_;
};

// Concatenation of atoms; the empty product denotes {epsilon}.
struct StarProduct {
  std::vector<Atom> atoms;

  friend bool operator==(const StarProduct&, const StarProduct&) = default;
  friend auto operator<=>(const StarProduct&, const StarProduct&) = default;
};

// Finite union of *-products (a downward-closed language).
using IdealUnion = std::vector<StarProduct>;

bool sp_member(const Alphabet& alphabet, const StarProduct& p, const Word& w);

// The product a_1? ... a_n?, whose language is the downward closure of w.
StarProduct principal_ideal(const Alphabet& alphabet, const Word& w);

// The product (Sigma)* (for an empty alphabet: the empty product).
StarProduct full_product(const Alphabet& alphabet);

// Ideal decomposition of the complement of the upward closure of w.
IdealUnion complement_up_word(const Alphabet& alphabet, const Word& w);

// Ideal decomposition of L(p) intersected with L(q), duplicates removed.
IdealUnion sp_intersect(const Alphabet& alphabet, const StarProduct& p, const StarProduct& q);

// Ideal decomposition of the complement of the upward closure of `basis`,
// normalized after every fold step.
IdealUnion complement_up_basis(const Alphabet& alphabet, const Basis& basis);

// Minimal complete DFA for L(p).
Dfa sp_to_dfa(const Alphabet& alphabet, const StarProduct& p);
// Complete DFA for L(p) with at most |p| + 2 states, not minimized. State i
// (i <= |p|) means the prefix read so far is in L(atoms[0..j)) exactly for
// j >= i; state |p| + 1 is the sink.
Dfa sp_position_dfa(const Alphabet& alphabet, const StarProduct& p);

// Words of L(p), each once, in length-lex order.
class ProductEnumerator {
public:
  ProductEnumerator(const Alphabet& alphabet, StarProduct p);
  std::optional<Word> next();

private:
  bool fill_from(std::size_t pos);

  std::vector<std::uint32_t> dfa_storage_;  // flattened transitions of the position DFA
  std::size_t k_ = 0;
  std::uint32_t sink_ = 0;
  std::vector<std::size_t> max_len_;  // longest readable word per state
  Word word_;
  std::vector<std::uint32_t> path_;
  bool started_ = false;
  bool done_ = false;
};

// Duplicate and language-included members removed; language unchanged.
// Inclusion is decided on the products' automata.
IdealUnion normalize(const Alphabet& alphabet, IdealUnion u);

// Text syntax: whitespace-separated atoms, `x?` or `(xyz)*` (`(x,y,z)*` for
// multi-character names); an empty line is the empty product.
std::string format_product(const Alphabet& alphabet, const StarProduct& p);
StarProduct parse_product(const Alphabet& alphabet, std::string_view text);
// One product per line.
std::string format_union(const Alphabet& alphabet, const IdealUnion& u);
IdealUnion parse_union(const Alphabet& alphabet, std::string_view text);

}  // namespace vj
