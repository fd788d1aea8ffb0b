#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vj/alphabet.hpp"

namespace vj {

// A finite set of words standing for its upward closure.
using Basis = std::vector<Word>;

bool letter_leq(const Alphabet& alphabet, Letter a, Letter b);

// Subword embedding order: u embeds into w, letters may be upgraded along the
// alphabet order. Left-greedy scan; throws std::out_of_range on letters outside
// the alphabet.
bool subword_leq(const Alphabet& alphabet, const Word& u, const Word& w);

// Length first, then lexicographic by letter index.
bool length_lex_less(const Word& u, const Word& w);

// Drops every word strictly dominated by another member; among equivalent
// words keeps the length-lex least. Result is sorted length-lex.
Basis minimize_basis(const Alphabet& alphabet, Basis basis);

// Minimal bases are unique only up to equivalent letters. This one replaces
// every letter by the least index of its class first, so two bases of the
// same upward closure give equal results.
Basis representative_basis(const Alphabet& alphabet, Basis basis);

bool up_member(const Alphabet& alphabet, const Basis& basis, const Word& w);

// Sorted length-lex copy without duplicates.
Basis canonical_basis(Basis basis);

// Emits every word over the alphabet once, in length-lex order.
class WordEnumerator {
public:
  explicit WordEnumerator(std::size_t letter_count) : k_(letter_count) {}

  // Empty only when the alphabet has no letters and epsilon was emitted.
  std::optional<Word> next();

private:
  std::size_t k_;
  Word current_;
  bool started_ = false;
};

// One word per line; see format_word for the token conventions.
Basis parse_basis(const Alphabet& alphabet, std::string_view text);
std::string format_basis(const Alphabet& alphabet, const Basis& basis);

}  // namespace vj
