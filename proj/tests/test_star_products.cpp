#include "doctest.h"
#include "support.hpp"
#include "vj/dfa.hpp"
#include "vj/error.hpp"
#include "vj/star_product.hpp"

using namespace vj;
using vj::testing::Rng;
using vj::testing::w_;

namespace {

std::vector<Word> language_up_to(const StarProduct& p, std::size_t k, std::size_t len) {
  std::vector<Word> out;
  for (const auto& w : vj::testing::all_words(k, len))
    if (vj::testing::brute_sp_member(p, w)) out.push_back(w);
  return out;
}

std::vector<Word> take(ProductEnumerator& e, std::size_t n) {
  std::vector<Word> out;
  while (out.size() < n)
    if (auto w = e.next()) out.push_back(*w); else break;
  return out;
}

}  // namespace

TEST_SUITE("star-products") {

TEST_CASE("atoms validate their letter sets") {
  const Alphabet chain = Alphabet::chain(3);
  CHECK_NOTHROW(Atom::star(chain, LetterSet(0b011)));
  CHECK_THROWS_AS(Atom::star(chain, LetterSet(0b010)), std::invalid_argument);
  CHECK_THROWS_AS(Atom::star(chain, LetterSet()), std::invalid_argument);
  CHECK_THROWS_AS(Atom::optional(chain, 3), std::out_of_range);
  CHECK(Atom::optional(chain, 1).letters() == LetterSet(0b011));
}

TEST_CASE("product text round-trip") {
  const Alphabet al = Alphabet::discrete(3);
  const StarProduct p = parse_product(al, "(b)* a? (ac)*");
  CHECK(p.atoms.size() == 3);
  CHECK(format_product(al, p) == "(b)* a? (ac)*");
  CHECK(parse_product(al, "").atoms.empty());
  CHECK_THROWS_AS(parse_product(al, "(d)*"), ParseError);
  const IdealUnion u{p, StarProduct{}};
  CHECK(parse_union(al, format_union(al, u)) == u);
}

TEST_CASE("membership examples") {
  const Alphabet eq = Alphabet::discrete(2);
  const StarProduct p = parse_product(eq, "(b)* a? (a)*");
  CHECK(sp_member(eq, p, Word{}));
  CHECK(sp_member(eq, p, w_(eq, "bba")));
  CHECK_FALSE(sp_member(eq, p, w_(eq, "ab")));
  CHECK(sp_to_dfa(eq, p).accepts(w_(eq, "bba")));
  CHECK_FALSE(sp_to_dfa(eq, p).accepts(w_(eq, "ab")));
  CHECK(sp_member(eq, StarProduct{}, Word{}));
  CHECK_FALSE(sp_member(eq, StarProduct{}, w_(eq, "a")));
}

TEST_CASE("membership agrees with factorization search and the automaton") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    const StarProduct p = vj::testing::random_product(rng, al, 5);
    const Dfa d = sp_to_dfa(al, p);
    const Dfa pos = sp_position_dfa(al, p);
    CHECK(pos.state_count() <= p.atoms.size() + 2);
    for (const auto& w : vj::testing::all_words(k, k == 3 ? 5 : 6)) {
      const bool truth = vj::testing::brute_sp_member(p, w);
      REQUIRE(sp_member(al, p, w) == truth);
      REQUIRE(d.accepts(w) == truth);
      REQUIRE(pos.accepts(w) == truth);
    }
  }
}

TEST_CASE("principal ideals are downward closures") {
  const Alphabet eq = Alphabet::discrete(2);
  CHECK(principal_ideal(eq, Word{}).atoms.empty());
  CHECK(format_product(eq, principal_ideal(eq, w_(eq, "ab"))) == "a? b?");
  const Alphabet chain = Alphabet::chain(2);
  CHECK(language_up_to(principal_ideal(chain, w_(chain, "b")), 2, 3) ==
        std::vector<Word>{Word{}, w_(chain, "a"), w_(chain, "b")});
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    const Word w = vj::testing::random_word(rng, k, 4);
    for (const auto& u : vj::testing::all_words(k, 5))
      REQUIRE(sp_member(al, principal_ideal(al, w), u) == vj::testing::brute_subword_leq(al, u, w));
  }
}

TEST_CASE("complement of an upward closure: examples") {
  const Alphabet eq = Alphabet::discrete(2);
  CHECK(complement_up_word(eq, Word{}).empty());
  const Dfa expected = sp_to_dfa(eq, parse_product(eq, "(b)* (a)*"));
  CHECK(dfa_equivalent(vj::testing::union_dfa(eq, complement_up_word(eq, w_(eq, "ab"))), expected));
  CHECK(normalize(eq, complement_up_word(eq, w_(eq, "ab"))) == IdealUnion{parse_product(eq, "(b)* (a)*")});
  const Alphabet one = Alphabet::discrete(1);
  const Dfa small = vj::testing::union_dfa(one, complement_up_word(one, w_(one, "aa")));
  CHECK(dfa_equivalent(small, sp_to_dfa(one, parse_product(one, "a?"))));
}

TEST_CASE("complement of an upward closure partitions the words with it") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.35);
    const Word w = vj::testing::random_word(rng, k, 4);
    const IdealUnion c = complement_up_word(al, w);
    for (const auto& p : c)
      for (const auto& atom : p.atoms)
        if (atom.is_star()) CHECK(al.is_downward_closed(atom.letters()));
    for (const auto& u : vj::testing::all_words(k, 6))
      REQUIRE(vj::testing::brute_union_member(c, u) != vj::testing::brute_subword_leq(al, w, u));
  }
}

TEST_CASE("intersection: examples") {
  const Alphabet eq = Alphabet::discrete(2);
  const StarProduct p = parse_product(eq, "(a)* b?");
  CHECK(sp_intersect(eq, p, StarProduct{}) == IdealUnion{StarProduct{}});
  const Alphabet one = Alphabet::discrete(1);
  CHECK(dfa_equivalent(vj::testing::union_dfa(one, sp_intersect(one, parse_product(one, "(a)*"), parse_product(one, "a?"))),
                       sp_to_dfa(one, parse_product(one, "a?"))));
  const IdealUnion meet = sp_intersect(eq, p, parse_product(eq, "(b)* a?"));
  std::vector<Word> lang;
  for (const auto& w : vj::testing::all_words(2, 4))
    if (vj::testing::brute_union_member(meet, w)) lang.push_back(w);
  CHECK(lang == std::vector<Word>{Word{}, w_(eq, "a"), w_(eq, "b")});
}

TEST_CASE("intersection matches the product automaton") {
  Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.35);
    const StarProduct p = vj::testing::random_product(rng, al, 4);
    const StarProduct q = vj::testing::random_product(rng, al, 4);
    const IdealUnion meet = sp_intersect(al, p, q);
    REQUIRE(dfa_equivalent(vj::testing::union_dfa(al, meet), dfa_product_intersect(sp_to_dfa(al, p), sp_to_dfa(al, q))));
    for (const auto& w : vj::testing::all_words(k, 4))
      REQUIRE(vj::testing::brute_union_member(meet, w) ==
              (vj::testing::brute_sp_member(p, w) && vj::testing::brute_sp_member(q, w)));
  }
}

TEST_CASE("complement of a basis: examples") {
  const Alphabet eq = Alphabet::discrete(2);
  const IdealUnion all = complement_up_basis(eq, {});
  REQUIRE(all.size() == 1);
  CHECK(all.front() == full_product(eq));
  CHECK(complement_up_basis(eq, {Word{}}).empty());
  const IdealUnion c = complement_up_basis(eq, {w_(eq, "a"), w_(eq, "bb")});
  std::vector<Word> lang;
  for (const auto& w : vj::testing::all_words(2, 5))
    if (vj::testing::brute_union_member(c, w)) lang.push_back(w);
  CHECK(lang == std::vector<Word>{Word{}, w_(eq, "b")});
}

TEST_CASE("complement of a basis is exact") {
  Rng rng(15);
  for (int i = 0; i < 150; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    const Basis b = vj::testing::random_basis(rng, k, 4, 3);
    const IdealUnion c = complement_up_basis(al, b);
    for (const auto& w : vj::testing::all_words(k, 5))
      REQUIRE(vj::testing::brute_union_member(c, w) != vj::testing::brute_up_member(al, b, w));
  }
}

TEST_CASE("automaton shapes for simple products") {
  const Alphabet eq = Alphabet::discrete(2);
  const Dfa eps = sp_to_dfa(eq, StarProduct{});
  CHECK(eps.state_count() == 2);
  CHECK(eps.accepts(Word{}));
  CHECK_FALSE(eps.accepts(w_(eq, "a")));
  const Dfa all = sp_to_dfa(eq, full_product(eq));
  CHECK(all.state_count() == 1);
  CHECK(all.accepting(0));
}

TEST_CASE("enumeration: examples") {
  const Alphabet eq = Alphabet::discrete(2);
  ProductEnumerator empty(eq, StarProduct{});
  CHECK(take(empty, 5) == std::vector<Word>{Word{}});
  ProductEnumerator opt(eq, parse_product(eq, "a?"));
  CHECK(take(opt, 5) == std::vector<Word>{Word{}, w_(eq, "a")});
  ProductEnumerator star(eq, parse_product(eq, "(b)* a?"));
  CHECK(take(star, 6) ==
        std::vector<Word>{Word{}, w_(eq, "a"), w_(eq, "b"), w_(eq, "ba"), w_(eq, "bb"), w_(eq, "bba")});
}

TEST_CASE("enumeration equals filtered word enumeration") {
  Rng rng(16);
  for (int i = 0; i < 150; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    const StarProduct p = vj::testing::random_product(rng, al, 4);
    const auto expected = language_up_to(p, k, 5);
    ProductEnumerator e(al, p);
    std::vector<Word> got;
    while (auto w = e.next()) {
      if (w->size() > 5) break;
      got.push_back(*w);
    }
    REQUIRE(got == expected);
  }
}

TEST_CASE("normalize: examples") {
  const Alphabet eq = Alphabet::discrete(2);
  const StarProduct p = parse_product(eq, "(b)* a? (a)*");
  CHECK(normalize(eq, {p, p}) == IdealUnion{p});
  CHECK(normalize(eq, {parse_product(eq, "(b)*"), p}) == IdealUnion{p});
  CHECK(normalize(eq, {}).empty());
}

TEST_CASE("normalize preserves the language and leaves no included member") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    IdealUnion u;
    for (std::size_t n = rng.between(0, 5); n > 0; --n) u.push_back(vj::testing::random_product(rng, al, 4));
    const IdealUnion v = normalize(al, u);
    CHECK(dfa_equivalent(vj::testing::union_dfa(al, u), vj::testing::union_dfa(al, v)));
    for (std::size_t x = 0; x < v.size(); ++x)
      for (std::size_t y = 0; y < v.size(); ++y)
        if (x != y) CHECK_FALSE(dfa_included(sp_to_dfa(al, v[x]), sp_to_dfa(al, v[y])));
  }
}

TEST_CASE("product languages are downward-closed and directed") {
  Rng rng(18);
  for (int i = 0; i < 60; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    const StarProduct p = vj::testing::random_product(rng, al, 4);
    const auto lang = language_up_to(p, k, 4);
    const auto words = vj::testing::all_words(k, 4);
    for (const auto& w : lang)
      for (const auto& u : words)
        if (vj::testing::brute_subword_leq(al, u, w)) REQUIRE(sp_member(al, p, u));
    const auto wide = language_up_to(p, k, 8);
    for (std::size_t x = 0; x < lang.size(); x += 3)
      for (std::size_t y = 0; y < lang.size(); y += 3) {
        const auto& u = lang[x];
        const auto& v = lang[y];
        bool directed = false;
        for (const auto& z : wide) {
          if (z.size() > u.size() + v.size()) break;
          if (vj::testing::brute_subword_leq(al, u, z) && vj::testing::brute_subword_leq(al, v, z)) {
            directed = true;
            break;
          }
        }
        REQUIRE(directed);
      }
  }
}

}  // TEST_SUITE
