#include "vj/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "vj/error.hpp"
#include "text_util.hpp"

namespace vj {

VecIdeal::VecIdeal(std::vector<Coord> bounds) : z_(std::move(bounds)) {
  for (Coord c : z_)
    if (c == 0) throw std::invalid_argument("ideal bounds must be positive");
}

bool VecIdeal::contains(const Vec& x) const {
  if (x.size() != z_.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (z_[i] != kOmega && x[i] >= z_[i]) return false;
  return true;
}

bool vec_leq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

VecBasis minimize_vec_basis(VecBasis basis) {
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  VecBasis out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < basis.size() && !dominated; ++j) dominated = j != i && vec_leq(basis[j], basis[i]);
    if (!dominated) out.push_back(basis[i]);
  }
  return out;
}

Vec parikh(std::size_t letter_count, const Word& w) {
  Vec v(letter_count, 0);
  for (Letter a : w) {
    if (a >= letter_count) throw std::out_of_range("word uses a letter outside the alphabet");
    ++v[a];
  }
  return v;
}

VecIdeal ideal_image_parikh(const Alphabet& alphabet, const StarProduct& p) {
  if (!alphabet.is_discrete()) throw std::invalid_argument("the Parikh image needs a discrete alphabet");
  const std::size_t k = alphabet.size();
  std::vector<Coord> z(k, 1);
  for (const Atom& atom : p.atoms) {
    if (atom.is_star()) {
      for (Letter a : atom.letters().letters()) z[a] = kOmega;
    } else if (z[atom.letter()] != kOmega) {
      ++z[atom.letter()];
    }
  }
  return VecIdeal(std::move(z));
}

ParikhQuotient::ParikhQuotient(const Alphabet& alphabet) : alphabet_(&alphabet) {
  if (!alphabet.is_discrete()) throw std::invalid_argument("the Parikh quotient needs a discrete alphabet");
}

VecOracle vec_oracle_from_basis(VecBasis basis) {
  return [basis = std::move(basis)](const VecIdeal& ideal) {
    return std::any_of(basis.begin(), basis.end(), [&](const Vec& b) { return ideal.contains(b); });
  };
}

VecBasis vj_vectors(const VecOracle& oracle, std::size_t k, Algorithm algorithm, QuotientRun* run) {
  const Alphabet alphabet = Alphabet::discrete(k);
  const ParikhQuotient quotient(alphabet);
  return minimize_vec_basis(quotient_basis(alphabet, quotient, std::function<bool(const VecIdeal&)>(oracle),
                                           algorithm, run));
}

VecBasis parse_vec_basis(std::string_view text) {
  VecBasis basis;
  std::size_t line_no = 0;
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    auto body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    Vec v;
    for (auto part : detail::split_on(body, ',')) {
      auto t = detail::trim(part);
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("line " + std::to_string(line_no) + ": expected comma-separated naturals");
      v.push_back(std::stoull(std::string(t)));
    }
    if (!basis.empty() && basis.front().size() != v.size())
      throw ParseError("line " + std::to_string(line_no) + ": tuples of different dimensions");
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string format_vec_basis(const VecBasis& basis) {
  std::string out;
  for (const auto& v : basis) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(v[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_vec_ideal(const VecIdeal& ideal) {
  std::string out;
  for (std::size_t i = 0; i < ideal.dimension(); ++i) {
    if (i > 0) out += ',';
    out += ideal.bounds()[i] == kOmega ? std::string("inf") : std::to_string(ideal.bounds()[i]);
  }
  return out;
}

}  // namespace vj
