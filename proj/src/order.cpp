#include "vj/order.hpp"

#include <algorithm>

#include "vj/error.hpp"
#include "text_util.hpp"

namespace vj {

bool letter_leq(const Alphabet& alphabet, Letter a, Letter b) { return alphabet.leq(a, b); }

bool subword_leq(const Alphabet& alphabet, const Word& u, const Word& w) {
  alphabet.check_word(u);
  alphabet.check_word(w);
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < u.size(); ++j)
    if (alphabet.leq_unchecked(u[i], w[j])) ++i;
  return i == u.size();
}

bool length_lex_less(const Word& u, const Word& w) {
  if (u.size() != w.size()) return u.size() < w.size();
  return u < w;
}

Basis canonical_basis(Basis basis) {
  std::sort(basis.begin(), basis.end(), length_lex_less);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

Basis minimize_basis(const Alphabet& alphabet, Basis basis) {
  basis = canonical_basis(std::move(basis));
  // A strictly smaller dominating word is never longer, and an equivalent one
  // has the same length, so shorter survivors are final when a length starts.
  Basis kept;
  std::size_t i = 0;
  while (i < basis.size()) {
    std::size_t j = i;
    while (j < basis.size() && basis[j].size() == basis[i].size()) ++j;
    const std::size_t shorter = kept.size();
    Basis group;
    for (std::size_t g = i; g < j; ++g) {
      bool covered = false;
      for (std::size_t s = 0; s < shorter && !covered; ++s) covered = subword_leq(alphabet, kept[s], basis[g]);
      if (!covered) group.push_back(basis[g]);
    }
    for (std::size_t g = 0; g < group.size(); ++g) {
      bool drop = false;
      for (std::size_t h = 0; h < group.size() && !drop; ++h) {
        if (h == g || !subword_leq(alphabet, group[h], group[g])) continue;
        // equivalent words: only the length-lex least (earlier) survives
        drop = !subword_leq(alphabet, group[g], group[h]) || h < g;
      }
      if (!drop) kept.push_back(group[g]);
    }
    i = j;
  }
  return kept;
}

Basis representative_basis(const Alphabet& alphabet, Basis basis) {
  for (auto& w : basis) {
    alphabet.check_word(w);
    for (auto& a : w) {
      const auto same = alphabet.up_set(a) & alphabet.down_set(a);
      a = same.letters().front();
    }
  }
  return minimize_basis(alphabet, std::move(basis));
}

bool up_member(const Alphabet& alphabet, const Basis& basis, const Word& w) {
  return std::any_of(basis.begin(), basis.end(), [&](const Word& b) { return subword_leq(alphabet, b, w); });
}

std::optional<Word> WordEnumerator::next() {
  if (!started_) {
    started_ = true;
    return current_;
  }
  if (k_ == 0) return std::nullopt;
  // odometer increment, least significant letter last
  std::size_t pos = current_.size();
  while (pos > 0) {
    --pos;
    if (current_[pos] + 1 < k_) {
      ++current_[pos];
      std::fill(current_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, current_.end(), Letter{0});
      return current_;
    }
  }
  current_.assign(current_.size() + 1, Letter{0});
  return current_;
}

Basis parse_basis(const Alphabet& alphabet, std::string_view text) {
  Basis basis;
  for (auto line : detail::split_lines(text)) {
    auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    basis.push_back(parse_word(alphabet, body));
  }
  return basis;
}

std::string format_basis(const Alphabet& alphabet, const Basis& basis) {
  std::string out;
  for (const auto& w : basis) {
    out += format_word(alphabet, w);
    out += '\n';
  }
  return out;
}

}  // namespace vj
