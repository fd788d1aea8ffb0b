#include <set>

#include "doctest.h"
#include "support.hpp"
#include "vj/basis.hpp"
#include "vj/error.hpp"
#include "vj/oracle.hpp"

using namespace vj;
using vj::testing::Rng;
using vj::testing::w_;

namespace {

QoAutomaton minimal_qo(const Alphabet& al, const Basis& b) {
  return make_qo_automaton(al, dfa_minimize(upward_closure_dfa(al, b)));
}

// Exposes the teacher's equivalence answers to tests.
struct TeacherProbe {
  TeacherProbe(const Alphabet& al, Basis truth) : oracle(al, std::move(truth)), teacher(al, oracle) {}
  BasisOracle oracle;
  OracleTeacher teacher;
};

std::set<Word> labels(const std::vector<IncreasingPath>& paths) {
  std::set<Word> out;
  for (const auto& p : paths) out.insert(p.label);
  return out;
}

}  // namespace

TEST_SUITE("vj-core") {

TEST_CASE("basis oracle answers membership through principal ideals") {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    const Basis b = vj::testing::random_basis(rng, k, 4, 3);
    BasisOracle oracle(al, b);
    for (const auto& w : vj::testing::all_words(k, 4))
      REQUIRE(oracle.intersects(principal_ideal(al, w)) == up_member(al, b, w));
  }
}

TEST_CASE("basis and automaton oracles agree") {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    const Basis b = vj::testing::random_basis(rng, k, 4, 3);
    BasisOracle by_basis(al, b);
    AutomatonOracle by_automaton(al, dfa_minimize(upward_closure_dfa(al, b)));
    for (int j = 0; j < 30; ++j) {
      const StarProduct p = vj::testing::random_product(rng, al, 4);
      REQUIRE(by_basis.intersects(p) == by_automaton.intersects(p));
    }
    CHECK(by_basis.queries() == 30);
  }
}

TEST_CASE("rewriting: examples") {
  const Alphabet eq = Alphabet::discrete(3);
  BasisOracle none(eq, {});
  RewritingStats stats;
  CHECK(vj_rewriting(eq, none, &stats).empty());
  CHECK(none.queries() == 1);
  CHECK(stats.coverage_checks == 1);
  CHECK(stats.words_examined == 0);

  BasisOracle eps(eq, {Word{}});
  CHECK(vj_rewriting(eq, eps) == Basis{Word{}});

  const Basis abc = parse_basis(eq, "a\nbb\nccc\n");
  BasisOracle abc_oracle(eq, abc);
  CHECK(vj_rewriting(eq, abc_oracle, &stats) == abc);
  CHECK(stats.basis_changes >= 3);
}

TEST_CASE("teacher: empty hypothesis yields the first member") {
  const Alphabet eq = Alphabet::discrete(2);
  TeacherProbe probe(eq, {w_(eq, "a")});
  StateRelation rel(1);
  rel.set(0, 0);
  CHECK(probe.teacher.equivalence(QoAutomaton{Dfa(2, 1, 0), rel}) == w_(eq, "a"));
  TeacherProbe empty(eq, {});
  CHECK_FALSE(empty.teacher.equivalence(QoAutomaton{Dfa(2, 1, 0), rel}).has_value());
}

TEST_CASE("teacher: correct hypotheses are accepted") {
  const Alphabet eq2 = Alphabet::discrete(2);
  TeacherProbe sigma2(eq2, {w_(eq2, "aa"), w_(eq2, "ab"), w_(eq2, "ba"), w_(eq2, "bb")});
  CHECK_FALSE(sigma2.teacher.equivalence(make_qo_automaton(eq2, vj::testing::length_at_least_dfa(2, 2))).has_value());

  const Alphabet eq3 = Alphabet::discrete(3);
  const Basis abc = parse_basis(eq3, "a\nbb\nccc\n");
  TeacherProbe abc_probe(eq3, abc);
  const QoAutomaton a = minimal_qo(eq3, abc);
  CHECK_FALSE(abc_probe.teacher.equivalence(a).has_value());

  const auto step1 = labels(minimal_accepting_paths(eq3, a));
  for (const auto& w : abc) CHECK(step1.count(w) == 1);
  const auto step2 = near_accepting_paths(eq3, a);
  CHECK(step2.size() >= 2);
  for (const auto& path : step2) CHECK_FALSE(a.dfa.accepting(path.states.back()));
}

TEST_CASE("teacher: malformed hypotheses are contract violations") {
  const Alphabet eq = Alphabet::discrete(1);
  TeacherProbe probe(eq, {Word{}});
  Dfa twice(1, 2, 0);
  twice.set_transition(0, 0, 1);
  twice.set_transition(1, 0, 0);
  twice.set_accepting(0);
  twice.set_accepting(1);
  CHECK_THROWS_AS(probe.teacher.equivalence(QoAutomaton{twice, compute_state_order(twice)}), ContractViolation);
}

TEST_CASE("teacher counterexamples separate wrong hypotheses") {
  Rng rng(43);
  for (int i = 0; i < 120; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    const Basis truth = vj::testing::random_basis(rng, k, 3, 3);
    const Basis guess = vj::testing::random_basis(rng, k, 3, 3);
    TeacherProbe probe(al, truth);
    const auto cex = probe.teacher.equivalence(minimal_qo(al, guess));
    const bool same = dfa_equivalent(upward_closure_dfa(al, truth), upward_closure_dfa(al, guess));
    REQUIRE(cex.has_value() != same);
    if (cex) REQUIRE(up_member(al, truth, *cex) != up_member(al, guess, *cex));
  }
}

TEST_CASE("path steps are sound and complete") {
  Rng rng(44);
  for (int i = 0; i < 80; ++i) {
    const std::size_t k = rng.between(1, 3);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    const Basis b = vj::testing::random_basis(rng, k, 3, 3);
    const QoAutomaton a = minimal_qo(al, b);
    if (dfa_is_empty(a.dfa)) continue;
    const auto accepting_paths = minimal_accepting_paths(al, a);
    std::vector<StarProduct> products;
    for (const auto& path : near_accepting_paths(al, a)) products.push_back(rejection_product(al, a, path));
    for (const auto& w : vj::testing::all_words(k, 5)) {
      bool in_some = false;
      for (const auto& p : products) {
        if (!sp_member(al, p, w)) continue;
        in_some = true;
        REQUIRE_FALSE(a.dfa.accepts(w));
      }
      if (!a.dfa.accepts(w)) REQUIRE(in_some);
      if (a.dfa.accepts(w)) {
        bool dominates = false;
        for (const auto& path : accepting_paths) dominates = dominates || subword_leq(al, path.label, w);
        REQUIRE(dominates);
      }
    }
  }
}

TEST_CASE("learning: examples") {
  const Alphabet eq2 = Alphabet::discrete(2);
  BasisOracle none(eq2, {});
  const QoAutomaton empty = vj_learning(eq2, none);
  CHECK(empty.dfa.state_count() == 1);
  CHECK_FALSE(empty.dfa.accepting(0));
  CHECK(none.queries() == 1);

  BasisOracle sigma2(eq2, {w_(eq2, "aa"), w_(eq2, "ab"), w_(eq2, "ba"), w_(eq2, "bb")});
  const QoAutomaton chain = vj_learning(eq2, sigma2);
  CHECK(chain.dfa == vj::testing::length_at_least_dfa(2, 2));

  const Alphabet eq3 = Alphabet::discrete(3);
  const Basis abc = parse_basis(eq3, "a\nbb\nccc\n");
  BasisOracle abc_oracle(eq3, abc);
  const QoAutomaton a = vj_learning(eq3, abc_oracle);
  for (const auto& w : vj::testing::all_words(3, 6)) REQUIRE(a.dfa.accepts(w) == up_member(eq3, abc, w));
}

TEST_CASE("basis extraction: examples") {
  const Alphabet eq2 = Alphabet::discrete(2);
  CHECK(basis_from_automaton(eq2, make_qo_automaton(eq2, Dfa(2, 1, 0))).empty());
  CHECK(basis_from_automaton(eq2, make_qo_automaton(eq2, vj::testing::length_at_least_dfa(2, 2))) ==
        Basis{w_(eq2, "aa"), w_(eq2, "ab"), w_(eq2, "ba"), w_(eq2, "bb")});
  const Alphabet eq3 = Alphabet::discrete(3);
  const Basis abc = parse_basis(eq3, "a\nbb\nccc\n");
  BasisOracle abc_oracle(eq3, abc);
  CHECK(basis_from_automaton(eq3, vj_learning(eq3, abc_oracle)) == abc);
}

TEST_CASE("both algorithms recover the minimized basis from either oracle") {
  Rng rng(45);
  for (int i = 0; i < 80; ++i) {
    const std::size_t k = rng.between(1, 4);
    const Alphabet al = vj::testing::random_alphabet(rng, k, 0.3);
    const Basis b = vj::testing::random_basis(rng, k, 5, 4);
    const Basis truth = representative_basis(al, b);
    AutomatonOracle by_automaton(al, dfa_minimize(upward_closure_dfa(al, b)));
    REQUIRE(representative_basis(al, vj_rewriting(al, by_automaton)) == truth);
    BasisOracle by_basis(al, b);
    LearningStats stats;
    const QoAutomaton a = vj_learning(al, by_basis, nullptr, &stats);
    REQUIRE(representative_basis(al, basis_from_automaton(al, a)) == truth);
    CHECK(stats.learner.inner_equivalence <= a.dfa.state_count());
    CHECK(validate_minimal_structure(a).empty());
  }
}

}  // TEST_SUITE
