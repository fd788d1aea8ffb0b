#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vj {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Set of letters of an alphabet with at most 64 letters.
class LetterSet {
public:
  constexpr LetterSet() = default;
  constexpr explicit LetterSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr LetterSet all(std::size_t k) {
    return LetterSet(k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  }
  static constexpr LetterSet single(Letter a) { return LetterSet(std::uint64_t{1} << a); }

  constexpr bool contains(Letter a) const { return (bits_ >> a) & 1U; }
  constexpr void insert(Letter a) { bits_ |= std::uint64_t{1} << a; }
  constexpr void erase(Letter a) { bits_ &= ~(std::uint64_t{1} << a); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(LetterSet o) const { return (bits_ & ~o.bits_) == 0; }

  // Letters in increasing index order.
  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<Letter>(std::countr_zero(b)));
    return out;
  }

  friend constexpr LetterSet operator&(LetterSet a, LetterSet b) { return LetterSet(a.bits_ & b.bits_); }
  friend constexpr LetterSet operator|(LetterSet a, LetterSet b) { return LetterSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(LetterSet, LetterSet) = default;
  friend constexpr auto operator<=>(LetterSet a, LetterSet b) { return a.bits_ <=> b.bits_; }

private:
  std::uint64_t bits_ = 0;
};

// A finite alphabet with a quasi-order (reflexive, transitive) on its letters.
class Alphabet {
public:
  static constexpr std::size_t kMaxLetters = 64;

  Alphabet() = default;

  // `leq[i][j]` states letter i is below letter j. Throws std::invalid_argument
  // unless the relation is reflexive and transitive and names are usable.
  Alphabet(std::vector<std::string> names, std::vector<std::vector<bool>> leq);

  // Builds the reflexive-transitive closure of `pairs` ((lo, hi) index pairs).
  static Alphabet from_pairs(std::vector<std::string> names,
                             const std::vector<std::pair<Letter, Letter>>& pairs);
  // Letters named a, b, c, ... ordered by equality only.
  static Alphabet discrete(std::size_t k);
  // Letters named a, b, c, ... ordered as the chain a < b < c < ...
  static Alphabet chain(std::size_t k);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter a) const;
  const std::vector<std::string>& names() const { return names_; }
  // Throws std::out_of_range for unknown names.
  Letter index_of(std::string_view name) const;

  // Throws std::out_of_range on invalid indices.
  bool leq(Letter a, Letter b) const;
  bool equivalent(Letter a, Letter b) const { return leq(a, b) && leq(b, a); }
  bool strictly_below(Letter a, Letter b) const { return leq(a, b) && !leq(b, a); }
  // Unchecked, for hot loops that already validated their input.
  bool leq_unchecked(Letter a, Letter b) const { return ((up_[a].bits() >> b) & 1U) != 0; }

  bool is_discrete() const;
  bool single_char_names() const { return single_char_; }

  LetterSet everything() const { return LetterSet::all(size()); }
  LetterSet up_set(Letter a) const { return up_.at(a); }
  LetterSet down_set(Letter a) const { return down_.at(a); }
  bool is_downward_closed(LetterSet s) const;
  // Elements of `s` with nothing strictly above them in `s`; equivalent
  // maximal letters are all kept.
  std::vector<Letter> maximal_in(LetterSet s) const;
  std::vector<Letter> minimal_in(LetterSet s) const;

  void check_word(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

private:
  std::vector<std::string> names_;
  std::vector<LetterSet> up_;    // up_[a] = { b : a <= b }
  std::vector<LetterSet> down_;  // down_[a] = { b : b <= a }
  bool single_char_ = true;
};

// Text form: line `letters: a b c`, then `le: x y` lines for x <= y.
Alphabet parse_alphabet(std::string_view text);
std::string format_alphabet(const Alphabet& alphabet);

// Words print as concatenated names when every name is one character and as
// comma-separated names otherwise; the empty word prints as the token below.
inline constexpr std::string_view kEpsilonToken = "ε";
std::string format_word(const Alphabet& alphabet, const Word& w);
Word parse_word(const Alphabet& alphabet, std::string_view text);

}  // namespace vj
