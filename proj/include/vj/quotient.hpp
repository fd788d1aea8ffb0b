#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "vj/basis.hpp"
#include "vj/oracle.hpp"
#include "vj/star_product.hpp"

namespace vj {

// A monoid generated by an alphabet through a surjective monotone
// homomorphism from words. `eval` maps a word to its element and
// `ideal_image` maps a *-product to the downward closure of its image.
template <class Q>
concept MonoidQuotient = requires(const Q& q, const Word& w, const StarProduct& p) {
  typename Q::Element;
  typename Q::Ideal;
  { q.eval(w) } -> std::convertible_to<typename Q::Element>;
  { q.ideal_image(p) } -> std::convertible_to<typename Q::Ideal>;
};

// Quotients whose order on elements is decidable, so images of bases can be
// minimized.
template <class Q>
concept OrderedMonoidQuotient = MonoidQuotient<Q> && requires(const Q& q, const typename Q::Element& e) {
  { q.element_leq(e, e) } -> std::convertible_to<bool>;
};

using Coord = std::uint64_t;
using Vec = std::vector<Coord>;
inline constexpr Coord kOmega = std::numeric_limits<Coord>::max();

// I_z = { x : x_i < z_i for all i } for z over positive naturals and omega.
class VecIdeal {
public:
  // Throws std::invalid_argument on a zero component.
  explicit VecIdeal(std::vector<Coord> bounds);

  const std::vector<Coord>& bounds() const { return z_; }
  std::size_t dimension() const { return z_.size(); }
  bool contains(const Vec& x) const;

  friend bool operator==(const VecIdeal&, const VecIdeal&) = default;

private:
  std::vector<Coord> z_;
};

using VecBasis = std::vector<Vec>;
using VecOracle = std::function<bool(const VecIdeal&)>;

bool vec_leq(const Vec& a, const Vec& b);
// Componentwise antichain of the minimal elements, sorted.
VecBasis minimize_vec_basis(VecBasis basis);

Vec parikh(std::size_t letter_count, const Word& w);

// Downward closure of the Parikh image of L(p): omega for letters under a star,
// otherwise one more than the count among optional atoms. Requires a discrete
// alphabet (std::invalid_argument otherwise).
VecIdeal ideal_image_parikh(const Alphabet& alphabet, const StarProduct& p);

// Parikh map Sigma* -> N^k for a discrete alphabet.
class ParikhQuotient {
public:
  using Element = Vec;
  using Ideal = VecIdeal;

  explicit ParikhQuotient(const Alphabet& alphabet);

  Vec eval(const Word& w) const { return parikh(alphabet_->size(), w); }
  VecIdeal ideal_image(const StarProduct& p) const { return ideal_image_parikh(*alphabet_, p); }
  bool element_leq(const Vec& a, const Vec& b) const { return vec_leq(a, b); }

private:
  const Alphabet* alphabet_;
};
static_assert(OrderedMonoidQuotient<ParikhQuotient>);

// U = up(Bv): I_z meets U iff some basis vector lies in I_z.
VecOracle vec_oracle_from_basis(VecBasis basis);

// Ideal oracle on words for the preimage of U: P meets it iff U meets the
// image ideal of P.
template <MonoidQuotient Q>
FunctionOracle lifted_oracle(const Q& quotient, std::function<bool(const typename Q::Ideal&)> oracle) {
  return FunctionOracle(
      [&quotient, oracle = std::move(oracle)](const StarProduct& p) { return oracle(quotient.ideal_image(p)); });
}

enum class Algorithm { kRewriting, kLearning };

struct QuotientRun {
  Basis word_basis;
  std::size_t ideal_queries = 0;
  // rewriting: words tested and coverage checks; learning: teacher queries
  std::size_t membership_queries = 0;
  std::size_t equivalence_queries = 0;
};

// Word basis of the preimage of U computed by the chosen algorithm, mapped
// through eval; minimized when the quotient's order is decidable.
template <MonoidQuotient Q>
std::vector<typename Q::Element> quotient_basis(const Alphabet& alphabet, const Q& quotient,
                                                std::function<bool(const typename Q::Ideal&)> oracle,
                                                Algorithm algorithm, QuotientRun* run = nullptr) {
  FunctionOracle words = lifted_oracle(quotient, std::move(oracle));
  Basis basis;
  std::size_t membership = 0;
  std::size_t equivalence = 0;
  if (algorithm == Algorithm::kRewriting) {
    RewritingStats stats;
    basis = vj_rewriting(alphabet, words, &stats);
    membership = stats.words_examined;
    equivalence = stats.coverage_checks;
  } else {
    LearningStats stats;
    basis = basis_from_automaton(alphabet, vj_learning(alphabet, words, nullptr, &stats));
    membership = stats.membership;
    equivalence = stats.equivalence;
  }
  std::vector<typename Q::Element> image;
  for (const auto& w : basis) image.push_back(quotient.eval(w));
  if constexpr (OrderedMonoidQuotient<Q>) {
    std::vector<typename Q::Element> kept;
    for (std::size_t i = 0; i < image.size(); ++i) {
      bool drop = false;
      for (std::size_t j = 0; j < image.size() && !drop; ++j) {
        if (i == j || !quotient.element_leq(image[j], image[i])) continue;
        drop = !quotient.element_leq(image[i], image[j]) || j < i;
      }
      if (!drop) kept.push_back(image[i]);
    }
    image = std::move(kept);
  }
  if (run) {
    run->word_basis = std::move(basis);
    run->ideal_queries = words.queries();
    run->membership_queries = membership;
    run->equivalence_queries = equivalence;
  }
  return image;
}

// Minimal basis of U inside N^k from an oracle on the ideals I_z.
VecBasis vj_vectors(const VecOracle& oracle, std::size_t k, Algorithm algorithm = Algorithm::kLearning,
                    QuotientRun* run = nullptr);

// One tuple per line, comma-separated naturals.
VecBasis parse_vec_basis(std::string_view text);
std::string format_vec_basis(const VecBasis& basis);
std::string format_vec_ideal(const VecIdeal& ideal);

}  // namespace vj
