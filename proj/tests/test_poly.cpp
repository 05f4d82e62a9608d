#include <doctest.h>

#include "kschubert/basis.hpp"
#include "kschubert/poly.hpp"
#include "oracle.hpp"

using namespace kschubert;

TEST_CASE("arithmetic is exact and canonical") {
  const Polynomial p = X(1) + X(2) - X(1) * X(2);
  CHECK(p == ksum(X(1), X(2)));
  CHECK((p - p).is_zero());
  CHECK(p.size() == 3);
  CHECK(p.min_degree() == 1);
  CHECK(p.max_degree() == 2);
  CHECK((X(1) + Polynomial(1)).pow(3).coefficient(Monomial::power({Alphabet::x(), 1}, 2)) == 3);
  const Polynomial merged =
      Polynomial::from_terms({{Monomial::power({Alphabet::x(), 1}, 1), 2}, {Monomial::power({Alphabet::x(), 1}, 1), -2}});
  CHECK(merged.is_zero());
  const Integer big("123456789012345678901234567890");
  CHECK((Polynomial(big) * Polynomial(big)).terms().front().coeff == big * big);
  CHECK(oracle::from_library(p * p) == oracle::operator*(oracle::from_library(p), oracle::from_library(p)));
}

TEST_CASE("alphabets: renaming, swapping, zeroing") {
  const Polynomial p = X(1) * Y(2) + Z(1);
  CHECK(p.alphabets() == std::vector<Alphabet>{Alphabet::x(), Alphabet::y(), Alphabet::z()});
  CHECK(p.max_index(Alphabet::y()) == 2);
  CHECK(p.swap_alphabets(Alphabet::x(), Alphabet::y()) == Y(1) * X(2) + Z(1));
  CHECK(p.set_zero(Alphabet::z()) == X(1) * Y(2));
  CHECK(Alphabet::parse("Y3") == Alphabet::family(3));
  CHECK(Alphabet::family(2).name() == "Y2");
  CHECK(p.substitute({{{Alphabet::z(), 1}, X(3)}}) == X(1) * Y(2) + X(3));
}

TEST_CASE("specialization follows the blocks") {
  // G_1432(y1, x1, x2, x3) from the operator definition.
  const Polynomial g = grothendieck(Permutation{1, 4, 3, 2});
  const Polynomial s = specialize(g, SetComposition({{1}, {2, 3, 4}}), {Alphabet::y(), Alphabet::x()});
  const Polynomial y = Y(1), one(1);
  const Polynomial expected = y * y * ksum(X(1), X(2)) + (y - y * y) * X(1) * X(1) + (y - y * y) * X(1) * X(2) +
                              (one - y - y + y * y) * X(1) * X(1) * X(2);
  CHECK(s == expected);
}

TEST_CASE("evaluation and the tilde substitution") {
  const Polynomial p = X(1) * X(1) - Y(1);
  const std::map<Variable, Rational> pt = {{{Alphabet::x(), 1}, Rational(1, 2)}, {{Alphabet::y(), 1}, Rational(3)}};
  CHECK(p.eval(pt) == Rational(-11, 4));
  // x~ = x/(x-1): x1^2 -> x1^2 / (x1-1)^2.
  const TildeSubstitution t = rational_substitute_tilde(X(1) * X(1) + X(1));
  CHECK(t.powers.at({Alphabet::x(), 1}) == 2);
  CHECK(t.numerator == X(1) * X(1) + X(1) * (X(1) - Polynomial(1)));
}

TEST_CASE("printing") {
  CHECK((X(1) - Polynomial(2) * X(2) * X(2)).to_string() == "x1 - 2*x2^2");
  CHECK(Polynomial().to_string() == "0");
}
