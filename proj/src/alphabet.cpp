#include "vj/alphabet.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "vj/error.hpp"
#include "text_util.hpp"

namespace vj {

namespace {

std::string default_name(std::size_t i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

std::vector<std::string> default_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(default_name(i));
  return names;
}

void check_name(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty letter name");
  if (name == kEpsilonToken) throw std::invalid_argument("letter name clashes with the empty-word token");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '?' || c == '(' || c == ')' ||
        c == '*' || c == ':')
      throw std::invalid_argument("letter name '" + name + "' contains a reserved character");
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names, std::vector<std::vector<bool>> leq)
    : names_(std::move(names)) {
  const std::size_t k = names_.size();
  if (k > kMaxLetters) throw std::invalid_argument("alphabets are limited to 64 letters");
  if (leq.size() != k) throw std::invalid_argument("order matrix has wrong dimension");
  for (const auto& row : leq)
    if (row.size() != k) throw std::invalid_argument("order matrix has wrong dimension");
  for (std::size_t i = 0; i < k; ++i) {
    check_name(names_[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate letter name '" + names_[i] + "'");
    if (names_[i].size() != 1) single_char_ = false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!leq[i][i]) throw std::invalid_argument("letter order is not reflexive at '" + names_[i] + "'");
    for (std::size_t j = 0; j < k; ++j) {
      if (!leq[i][j]) continue;
      for (std::size_t l = 0; l < k; ++l)
        if (leq[j][l] && !leq[i][l])
          throw std::invalid_argument("letter order is not transitive: " + names_[i] + " <= " + names_[j] +
                                      " <= " + names_[l]);
    }
  }
  up_.assign(k, LetterSet{});
  down_.assign(k, LetterSet{});
  for (Letter i = 0; i < k; ++i)
    for (Letter j = 0; j < k; ++j)
      if (leq[i][j]) {
        up_[i].insert(j);
        down_[j].insert(i);
      }
}

Alphabet Alphabet::from_pairs(std::vector<std::string> names,
                              const std::vector<std::pair<Letter, Letter>>& pairs) {
  const std::size_t k = names.size();
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) rel[i][i] = true;
  for (auto [lo, hi] : pairs) {
    if (lo >= k || hi >= k) throw std::out_of_range("order pair refers to an unknown letter");
    rel[lo][hi] = true;
  }
  // Warshall closure.
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (rel[i][m])
        for (std::size_t j = 0; j < k; ++j)
          if (rel[m][j]) rel[i][j] = true;
  return Alphabet(std::move(names), std::move(rel));
}

Alphabet Alphabet::discrete(std::size_t k) { return from_pairs(default_names(k), {}); }

Alphabet Alphabet::chain(std::size_t k) {
  std::vector<std::pair<Letter, Letter>> pairs;
  for (Letter i = 0; i + 1 < k; ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(default_names(k), pairs);
}

const std::string& Alphabet::name(Letter a) const { return names_.at(a); }

Letter Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Letter>(i);
  throw std::out_of_range("unknown letter '" + std::string(name) + "'");
}

bool Alphabet::leq(Letter a, Letter b) const {
  if (a >= size() || b >= size()) throw std::out_of_range("letter index out of range");
  return leq_unchecked(a, b);
}

bool Alphabet::is_discrete() const {
  for (Letter a = 0; a < size(); ++a)
    if (up_[a] != LetterSet::single(a)) return false;
  return true;
}

bool Alphabet::is_downward_closed(LetterSet s) const {
  for (Letter a : s.letters())
    if (a >= size() || !down_[a].subset_of(s)) return false;
  return true;
}

std::vector<Letter> Alphabet::maximal_in(LetterSet s) const {
  std::vector<Letter> out;
  for (Letter a : s.letters()) {
    bool dominated = false;
    for (Letter b : s.letters())
      if (strictly_below(a, b)) dominated = true;
    if (!dominated) out.push_back(a);
  }
  return out;
}

std::vector<Letter> Alphabet::minimal_in(LetterSet s) const {
  std::vector<Letter> out;
  for (Letter a : s.letters()) {
    bool dominated = false;
    for (Letter b : s.letters())
      if (strictly_below(b, a)) dominated = true;
    if (!dominated) out.push_back(a);
  }
  return out;
}

void Alphabet::check_word(const Word& w) const {
  for (Letter a : w)
    if (a >= size()) throw std::out_of_range("word uses a letter outside the alphabet");
}

Alphabet parse_alphabet(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> raw_pairs;
  bool have_letters = false;
  std::size_t line_no = 0;
  for (const auto& line : detail::split_lines(text)) {
    ++line_no;
    auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto [key, rest] = detail::split_key(body);
    auto fields = detail::split_ws(rest);
    if (key == "letters") {
      if (have_letters) throw ParseError("line " + std::to_string(line_no) + ": duplicate 'letters:' line");
      have_letters = true;
      names.assign(fields.begin(), fields.end());
    } else if (key == "le") {
      if (!have_letters) throw ParseError("line " + std::to_string(line_no) + ": 'le:' before 'letters:'");
      if (fields.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": 'le:' needs two letters");
      raw_pairs.emplace_back(fields[0], fields[1]);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_letters) throw ParseError("missing 'letters:' line");
  std::vector<std::pair<Letter, Letter>> pairs;
  auto lookup = [&](const std::string& n) -> Letter {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw ParseError("unknown letter '" + n + "' in order relation");
    return static_cast<Letter>(it - names.begin());
  };
  for (const auto& [lo, hi] : raw_pairs) pairs.emplace_back(lookup(lo), lookup(hi));
  try {
    return Alphabet::from_pairs(std::move(names), pairs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_alphabet(const Alphabet& alphabet) {
  std::ostringstream out;
  out << "letters:";
  for (const auto& n : alphabet.names()) out << ' ' << n;
  out << '\n';
  for (Letter a = 0; a < alphabet.size(); ++a)
    for (Letter b = 0; b < alphabet.size(); ++b)
      if (a != b && alphabet.leq(a, b)) out << "le: " << alphabet.name(a) << ' ' << alphabet.name(b) << '\n';
  return out.str();
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return std::string(kEpsilonToken);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !alphabet.single_char_names()) out += ',';
    out += alphabet.name(w[i]);
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  text = detail::trim(text);
  Word w;
  if (text == kEpsilonToken) return w;
  if (text.empty()) throw ParseError("empty word text; write '" + std::string(kEpsilonToken) + "'");
  try {
    if (alphabet.single_char_names()) {
      for (char c : text) w.push_back(alphabet.index_of(std::string_view(&c, 1)));
    } else {
      for (auto part : detail::split_on(text, ',')) w.push_back(alphabet.index_of(detail::trim(part)));
    }
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  }
  return w;
}

}  // namespace vj
