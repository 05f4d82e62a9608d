#include <doctest.h>

#include <random>

#include "kschubert/basis.hpp"
#include "kschubert/ops.hpp"
#include "oracle.hpp"

using namespace kschubert;

namespace {

Polynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
  std::vector<Term> terms;
  for (int k = 0; k < 6; ++k) {
    terms.push_back({Monomial::from_exponents(Alphabet::x(), {e(rng), e(rng), e(rng), e(rng)}), c(rng)});
  }
  return Polynomial::from_terms(terms);
}

}  // namespace

TEST_CASE("divided differences agree with the term-by-term formula") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = random_poly(rng);
    for (int i = 1; i <= 3; ++i) {
      CHECK(oracle::from_library(divided_difference(i, p)) == oracle::partial(i, oracle::from_library(p)));
      CHECK(oracle::from_library(apply(OperatorKind::pi, i, p)) == oracle::pi(i, oracle::from_library(p)));
    }
  }
}

TEST_CASE("operator relations") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_poly(rng);
    for (int i = 1; i <= 3; ++i) {
      CHECK(divided_difference(i, divided_difference(i, p)).is_zero());
      CHECK(apply(OperatorKind::pi, i, apply(OperatorKind::pi, i, p)) == apply(OperatorKind::pi, i, p));
      CHECK(apply(OperatorKind::mu, i, apply(OperatorKind::mu, i, p)) == -apply(OperatorKind::mu, i, p));
      CHECK(swap_variables(i, swap_variables(i, p)) == p);
    }
    for (OperatorKind k : {OperatorKind::partial, OperatorKind::pi, OperatorKind::mu}) {
      using Word = std::vector<int>;
      CHECK(apply_word(k, Word{1, 2, 1}, p) == apply_word(k, Word{2, 1, 2}, p));
      CHECK(apply_word(k, Word{1, 3}, p) == apply_word(k, Word{3, 1}, p));
    }
  }
}

TEST_CASE("phi lowers Grothendieck classes") {
  const Permutation w{3, 2, 1};
  const ClassExpansion e = apply_phi(1, {{w, Polynomial(1)}});
  // s_1 w = 312 < w (left multiplication acts on values).
  CHECK(e.at(Permutation{3, 1, 2}) == Polynomial(1));
  CHECK(e.at(w) == Polynomial(-1));
  CHECK(apply_phi(1, {{Permutation{1, 3, 2}, Polynomial(1)}}).empty());
}
