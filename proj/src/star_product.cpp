#include "vj/star_product.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "vj/dfa.hpp"
#include "vj/error.hpp"
#include "text_util.hpp"

namespace vj {

Atom Atom::optional(const Alphabet& alphabet, Letter a) {
  if (a >= alphabet.size()) throw std::out_of_range("atom letter outside the alphabet");
  return Atom(Kind::kOptional, a, alphabet.down_set(a));
}

Atom Atom::star(const Alphabet& alphabet, LetterSet letters) {
  if (letters.empty()) throw std::invalid_argument("star atom over an empty letter set");
  if (!letters.subset_of(alphabet.everything())) throw std::invalid_argument("star atom uses unknown letters");
  if (!alphabet.is_downward_closed(letters))
    throw std::invalid_argument("star atom letter set is not downward-closed");
  return Atom(Kind::kStar, 0, letters);
}

bool sp_member(const Alphabet& alphabet, const StarProduct& p, const Word& w) {
  alphabet.check_word(w);
  const std::size_t n = w.size();
  // reach[j]: w[0..j) is in the language of the atoms processed so far
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (const Atom& atom : p.atoms) {
    std::vector<bool> next = reach;  // the atom read as epsilon
    for (std::size_t j = 1; j <= n; ++j) {
      if (!atom.admits(w[j - 1])) continue;
      if (atom.is_star() ? static_cast<bool>(next[j - 1]) : static_cast<bool>(reach[j - 1])) next[j] = true;
    }
    reach = std::move(next);
  }
  return reach[n];
}

StarProduct principal_ideal(const Alphabet& alphabet, const Word& w) {
  StarProduct p;
  for (Letter a : w) p.atoms.push_back(Atom::optional(alphabet, a));
  return p;
}

StarProduct full_product(const Alphabet& alphabet) {
  StarProduct p;
  if (alphabet.size() > 0) p.atoms.push_back(Atom::star(alphabet, alphabet.everything()));
  return p;
}

namespace {

// Language-preserving local rewrites: merges S* T* when one set contains the
// other, and drops c? next to S* when c is in S.
StarProduct simplify(StarProduct p) {
  bool changed = true;
  while (changed) {
    changed = false;
    auto& atoms = p.atoms;
    for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
      const Atom& x = atoms[i];
      const Atom& y = atoms[i + 1];
      std::ptrdiff_t drop = -1;
      if (x.is_star() && y.is_star()) {
        if (y.letters().subset_of(x.letters())) drop = static_cast<std::ptrdiff_t>(i + 1);
        else if (x.letters().subset_of(y.letters())) drop = static_cast<std::ptrdiff_t>(i);
      } else if (x.is_star() && y.letters().subset_of(x.letters())) {
        drop = static_cast<std::ptrdiff_t>(i + 1);
      } else if (y.is_star() && x.letters().subset_of(y.letters())) {
        drop = static_cast<std::ptrdiff_t>(i);
      }
      if (drop >= 0) {
        atoms.erase(atoms.begin() + drop);
        changed = true;
        break;
      }
    }
  }
  return p;
}

void dedupe(IdealUnion& u) {
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
}

IdealUnion prepend(const Atom& atom, const IdealUnion& tails) {
  IdealUnion out;
  out.reserve(tails.size());
  for (const auto& t : tails) {
    StarProduct p;
    p.atoms.reserve(t.atoms.size() + 1);
    p.atoms.push_back(atom);
    p.atoms.insert(p.atoms.end(), t.atoms.begin(), t.atoms.end());
    out.push_back(simplify(std::move(p)));
  }
  return out;
}

void append(IdealUnion& into, const IdealUnion& from) { into.insert(into.end(), from.begin(), from.end()); }

}  // namespace

IdealUnion complement_up_word(const Alphabet& alphabet, const Word& w) {
  alphabet.check_word(w);
  IdealUnion out;
  const std::size_t n = w.size();
  if (n == 0) return out;
  const LetterSet all = alphabet.everything();
  // Star sets avoiding the upward closure of each letter of w.
  std::vector<LetterSet> avoid(n);
  std::vector<std::vector<Letter>> choices(n);
  for (std::size_t j = 0; j < n; ++j) {
    avoid[j] = LetterSet(all.bits() & ~alphabet.up_set(w[j]).bits());
    choices[j] = alphabet.maximal_in(alphabet.up_set(w[j]));
  }
  // Product for greedy-matching exactly a_1..a_m then failing on a_{m+1}.
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      StarProduct p;
      for (std::size_t j = 0; j <= m; ++j) {
        if (!avoid[j].empty()) p.atoms.push_back(Atom::star(alphabet, avoid[j]));
        if (j < m) p.atoms.push_back(Atom::optional(alphabet, choices[j][pick[j]]));
      }
      out.push_back(simplify(std::move(p)));
      std::size_t pos = m;
      while (pos > 0 && pick[pos - 1] + 1 == choices[pos - 1].size()) pick[--pos] = 0;
      if (pos == 0) break;
      ++pick[pos - 1];
    }
  }
  dedupe(out);
  return out;
}

IdealUnion sp_intersect(const Alphabet& alphabet, const StarProduct& p, const StarProduct& q) {
  const auto& pa = p.atoms;
  const auto& qa = q.atoms;
  std::map<std::pair<std::size_t, std::size_t>, IdealUnion> memo;

  std::function<const IdealUnion&(std::size_t, std::size_t)> go =
      [&](std::size_t i, std::size_t j) -> const IdealUnion& {
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    IdealUnion out;
    if (i == pa.size() || j == qa.size()) {
      out.push_back(StarProduct{});
    } else {
      const Atom& x = pa[i];
      const Atom& y = qa[j];
      if (!x.is_star() && !y.is_star()) {
        append(out, go(i + 1, j));
        append(out, go(i, j + 1));
        for (Letter c : alphabet.maximal_in(x.letters() & y.letters()))
          append(out, prepend(Atom::optional(alphabet, c), go(i + 1, j + 1)));
      } else if (x.is_star() && !y.is_star()) {
        append(out, go(i, j + 1));
        append(out, go(i + 1, j));
        for (Letter c : alphabet.maximal_in(x.letters() & y.letters()))
          append(out, prepend(Atom::optional(alphabet, c), go(i, j + 1)));
      } else if (!x.is_star() && y.is_star()) {
        append(out, go(i + 1, j));
        append(out, go(i, j + 1));
        for (Letter c : alphabet.maximal_in(x.letters() & y.letters()))
          append(out, prepend(Atom::optional(alphabet, c), go(i + 1, j)));
      } else {
        IdealUnion tails = go(i + 1, j);
        append(tails, go(i, j + 1));
        const LetterSet common = x.letters() & y.letters();
        if (common.empty()) out = std::move(tails);
        else out = prepend(Atom::star(alphabet, common), tails);
      }
    }
    dedupe(out);
    return memo.emplace(key, std::move(out)).first->second;
  };
  IdealUnion result = go(0, 0);
  for (auto& r : result) r = simplify(std::move(r));
  dedupe(result);
  return result;
}

IdealUnion complement_up_basis(const Alphabet& alphabet, const Basis& basis) {
  IdealUnion acc{full_product(alphabet)};
  for (const Word& b : minimize_basis(alphabet, basis)) {
    const IdealUnion comp = complement_up_word(alphabet, b);
    IdealUnion next;
    for (const auto& p : acc)
      for (const auto& q : comp) append(next, sp_intersect(alphabet, p, q));
    acc = normalize(alphabet, std::move(next));
    if (acc.empty()) break;
  }
  return acc;
}

Dfa sp_position_dfa(const Alphabet& alphabet, const StarProduct& p) {
  const std::size_t n = p.atoms.size();
  const std::size_t k = alphabet.size();
  const auto sink = static_cast<State>(n + 1);
  Dfa dfa(k, n + 2, 0);
  for (State m = 0; m <= n; ++m) {
    dfa.set_accepting(m);
    for (Letter x = 0; x < k; ++x) {
      State target = sink;
      // first atom that can consume x: a star atom at index >= m-1 or an
      // optional atom at index >= m
      for (std::size_t t = (m == 0 ? 0 : m - 1); t < n; ++t) {
        const Atom& atom = p.atoms[t];
        if (!atom.admits(x)) continue;
        if (atom.is_star() || t >= m) {
          target = static_cast<State>(t + 1);
          break;
        }
      }
      dfa.set_transition(m, x, target);
    }
  }
  return dfa;
}

Dfa sp_to_dfa(const Alphabet& alphabet, const StarProduct& p) { return dfa_minimize(sp_position_dfa(alphabet, p)); }

ProductEnumerator::ProductEnumerator(const Alphabet& alphabet, StarProduct p) : k_(alphabet.size()) {
  const Dfa dfa = sp_position_dfa(alphabet, p);
  const std::size_t n = p.atoms.size();
  sink_ = static_cast<State>(n + 1);
  dfa_storage_.resize((n + 2) * k_);
  for (State q = 0; q < n + 2; ++q)
    for (Letter x = 0; x < k_; ++x) dfa_storage_[q * k_ + x] = dfa.next(q, x);
  // transitions never decrease the state index, so one backward pass suffices
  constexpr auto kUnbounded = std::numeric_limits<std::size_t>::max();
  max_len_.assign(n + 2, 0);
  for (std::size_t m = n + 1; m-- > 0;) {
    std::size_t best = 0;
    for (Letter x = 0; x < k_; ++x) {
      const State t = dfa_storage_[m * k_ + x];
      if (t == sink_) continue;
      if (t == m || max_len_[t] == kUnbounded) {
        best = kUnbounded;
        break;
      }
      best = std::max(best, max_len_[t] + 1);
    }
    max_len_[m] = best;
  }
  max_len_[sink_] = 0;
  path_.push_back(0);
}

// Lexicographically least completion of word_[0..pos) to the current length.
bool ProductEnumerator::fill_from(std::size_t pos) {
  for (; pos < word_.size(); ++pos) {
    const std::size_t remaining = word_.size() - pos - 1;
    bool found = false;
    for (Letter x = 0; x < k_ && !found; ++x) {
      const State t = dfa_storage_[path_[pos] * k_ + x];
      if (t != sink_ && max_len_[t] >= remaining) {
        word_[pos] = x;
        path_[pos + 1] = t;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::optional<Word> ProductEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return word_;
  }
  const std::size_t len = word_.size();
  for (std::size_t pos = len; pos-- > 0;) {
    const std::size_t remaining = len - pos - 1;
    for (Letter x = word_[pos] + 1; x < k_; ++x) {
      const State t = dfa_storage_[path_[pos] * k_ + x];
      if (t != sink_ && max_len_[t] >= remaining) {
        word_[pos] = x;
        path_[pos + 1] = t;
        if (!fill_from(pos + 1)) throw InternalError("product enumeration lost its completion");
        return word_;
      }
    }
  }
  // Languages of *-products are prefix-closed: no word of this length left
  // means the next length is tried, and its absence ends the stream.
  if (max_len_[0] < len + 1) {
    done_ = true;
    return std::nullopt;
  }
  word_.assign(len + 1, 0);
  path_.assign(len + 2, 0);
  if (!fill_from(0)) throw InternalError("product enumeration lost its completion");
  return word_;
}

IdealUnion normalize(const Alphabet& alphabet, IdealUnion u) {
  dedupe(u);
  // sort length-lex-ish so shorter products are preferred among equals
  std::stable_sort(u.begin(), u.end(),
                   [](const StarProduct& a, const StarProduct& b) { return a.atoms.size() < b.atoms.size(); });
  std::vector<Dfa> dfas;
  std::vector<LetterSet> used;
  dfas.reserve(u.size());
  for (const auto& p : u) {
    dfas.push_back(sp_position_dfa(alphabet, p));
    LetterSet s;
    for (const auto& a : p.atoms) s = s | a.letters();
    used.push_back(s);
  }
  auto included = [&](std::size_t i, std::size_t j) {
    return used[i].subset_of(used[j]) && dfa_included(dfas[i], dfas[j]);
  };
  std::vector<bool> removed(u.size(), false);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size() && !removed[i]; ++j) {
      if (i == j || removed[j] || !included(i, j)) continue;
      // equal languages: keep the earlier one
      if (!included(j, i) || j < i) removed[i] = true;
    }
  }
  IdealUnion out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!removed[i]) out.push_back(std::move(u[i]));
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_product(const Alphabet& alphabet, const StarProduct& p) {
  const bool multi = !alphabet.single_char_names();
  std::string out;
  for (std::size_t i = 0; i < p.atoms.size(); ++i) {
    if (i > 0) out += ' ';
    const Atom& a = p.atoms[i];
    if (a.is_star()) {
      out += '(';
      bool first = true;
      for (Letter x : a.letters().letters()) {
        if (!first && multi) out += ',';
        first = false;
        out += alphabet.name(x);
      }
      out += ")*";
    } else {
      out += alphabet.name(a.letter());
      out += '?';
    }
  }
  return out;
}

StarProduct parse_product(const Alphabet& alphabet, std::string_view text) {
  StarProduct p;
  try {
    for (const auto& tok : detail::split_ws(text)) {
      std::string_view t = tok;
      if (t.size() >= 3 && t.front() == '(' && t.substr(t.size() - 2) == ")*") {
        auto inner = t.substr(1, t.size() - 3);
        LetterSet s;
        if (alphabet.single_char_names()) {
          for (char c : inner) s.insert(alphabet.index_of(std::string_view(&c, 1)));
        } else {
          for (auto part : detail::split_on(inner, ',')) s.insert(alphabet.index_of(detail::trim(part)));
        }
        p.atoms.push_back(Atom::star(alphabet, s));
      } else if (t.size() >= 2 && t.back() == '?') {
        p.atoms.push_back(Atom::optional(alphabet, alphabet.index_of(t.substr(0, t.size() - 1))));
      } else {
        throw ParseError("malformed atom '" + tok + "'");
      }
    }
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return p;
}

std::string format_union(const Alphabet& alphabet, const IdealUnion& u) {
  std::string out;
  for (const auto& p : u) {
    out += format_product(alphabet, p);
    out += '\n';
  }
  return out;
}

IdealUnion parse_union(const Alphabet& alphabet, std::string_view text) {
  IdealUnion u;
  for (auto line : detail::split_lines(text)) u.push_back(parse_product(alphabet, line));
  return u;
}

}  // namespace vj
