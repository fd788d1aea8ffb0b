#pragma once

#include <atomic>
#include <cstddef>
#include <functional>

#include "vj/dfa.hpp"
#include "vj/order.hpp"
#include "vj/qo_automaton.hpp"
#include "vj/star_product.hpp"

namespace vj {

// Answers "does the fixed upward-closed set U meet L(P)?" for *-products P.
class IdealOracle {
public:
  virtual ~IdealOracle() = default;

  bool intersects(const StarProduct& p) {
    queries_.fetch_add(1, std::memory_order_relaxed);
    return answer(p);
  }
  std::size_t queries() const { return queries_.load(std::memory_order_relaxed); }

protected:
  virtual bool answer(const StarProduct& p) = 0;

private:
  std::atomic<std::size_t> queries_{0};
};

// U = up(B). L(P) is downward-closed, so up(b) meets L(P) iff b is in L(P).
class BasisOracle final : public IdealOracle {
public:
  BasisOracle(const Alphabet& alphabet, Basis basis) : alphabet_(alphabet), basis_(std::move(basis)) {}
  const Basis& basis() const { return basis_; }

protected:
  bool answer(const StarProduct& p) override;

private:
  const Alphabet& alphabet_;
  Basis basis_;
};

// U given by an automaton; answers by emptiness of the product with L(P).
class AutomatonOracle final : public IdealOracle {
public:
  AutomatonOracle(const Alphabet& alphabet, Dfa automaton) : alphabet_(alphabet), automaton_(std::move(automaton)) {}
  const Dfa& automaton() const { return automaton_; }

protected:
  bool answer(const StarProduct& p) override;

private:
  const Alphabet& alphabet_;
  Dfa automaton_;
};

// Adapts any callable.
class FunctionOracle final : public IdealOracle {
public:
  explicit FunctionOracle(std::function<bool(const StarProduct&)> fn) : fn_(std::move(fn)) {}

protected:
  bool answer(const StarProduct& p) override { return fn_(p); }

private:
  std::function<bool(const StarProduct&)> fn_;
};

}  // namespace vj
