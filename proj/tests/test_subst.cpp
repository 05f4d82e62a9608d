#include <doctest.h>

#include "kschubert/basis.hpp"
#include "kschubert/subst.hpp"

using namespace kschubert;

namespace {

std::vector<int> complement(const std::vector<int>& P, int n) {
  std::vector<int> Q;
  for (int i = 1; i <= n; ++i) {
    if (std::find(P.begin(), P.end(), i) == P.end()) Q.push_back(i);
  }
  return Q;
}

}  // namespace

TEST_CASE("first-variable substitution, three ways") {
  for (int n = 2; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const SubstitutionExpansion e = substitute_first_variable(w, n);
      CHECK(substitute_first_variable(w, n, FirstVariableMethod::constants) == e);
      CHECK(substitute_first_variable(w, n, FirstVariableMethod::phi) == e);
      CHECK(assemble(e) ==
            specialize(grothendieck(w), SetComposition({{1}, complement({1}, n)}), {Alphabet::y(), Alphabet::x()}));
      for (const auto& [key, c] : e.terms) CHECK(key.perms.front().size() <= n - 1);
    }
  }
}

TEST_CASE("ls_substitution with w(1) = n uses the empty product") {
  const Permutation w{3, 1, 2};
  const SubstitutionExpansion e = ls_substitution(w, 3);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms.begin()->first.power == 2);
  CHECK(e.terms.begin()->first.perms.front() == Permutation{});
}

TEST_CASE("psi_inverse rejects inadmissible indices") {
  CHECK_THROWS(psi_inverse(Permutation{1, 4, 3, 2}, 4, {3}, {3}));
}

TEST_CASE("single substitution at every position") {
  for (const Permutation& w : all_permutations(4)) {
    for (int q = 1; q < 4; ++q) {
      const std::vector<int> rest = complement({q}, 4);
      CHECK(assemble(substitute_single(w, q, 4)) ==
            specialize(grothendieck(w), SetComposition({{q}, rest}), {Alphabet::y(), Alphabet::x()}));
    }
  }
}

TEST_CASE("two-set and multi-set decompositions reconstruct G and S") {
  const int n = 4;
  for (const Permutation& w : all_permutations(n)) {
    for (Family f : {Family::grothendieck, Family::schubert}) {
      const Polynomial& src = f == Family::schubert ? schubert(w) : grothendieck(w);
      CHECK(assemble(two_set_decomposition(w, {1, 3}, {2, 4}, f)) ==
            specialize(src, SetComposition({{1, 3}, {2, 4}}), {Alphabet::y(), Alphabet::z()}));
      const SetComposition A({{1}, {2, 3}, {4}});
      CHECK(assemble(multi_set_decomposition(w, A, f)) ==
            specialize(src, A, {Alphabet::family(1), Alphabet::family(2), Alphabet::family(3)}));
      const SetComposition B({{2, 4}, {1}, {3}});
      CHECK(assemble(multi_set_decomposition(w, B, f)) ==
            specialize(src, B, {Alphabet::family(1), Alphabet::family(2), Alphabet::family(3)}));
    }
  }
}

TEST_CASE("H decompositions") {
  const int n = 3;
  for (const Permutation& w : all_permutations(n)) {
    const SetComposition A({{2}, {1, 3}});
    const SubstitutionExpansion e = h_decomposition_exact(w, A);
    CHECK(assemble(e) == specialize(hpolynomial(w, n, false), A, e.alphabets));
    // The display form agrees with the rank a+b pullback modulo the ideals.
    const SubstitutionExpansion d = two_set_decomposition(w, {2}, {1, 3}, Family::h);
    const SetComposition B = extend_composition(A, d.ranks);
    const Polynomial pulled = specialize(hpolynomial(w, d.ranks[0] + d.ranks[1], false), B, d.alphabets);
    CHECK(h_to_grothendieck(d).terms == expand_product_grothendieck(pulled, d.alphabets, d.ranks).terms);
  }
}

TEST_CASE("extensions and quiver shapes") {
  const SetComposition A = interval_extension({2, 5, 9, 12});
  CHECK(A.total() == 32);
  CHECK(A[0] == std::vector<int>{1, 2, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22});
  CHECK(A[3] == std::vector<int>{10, 11, 12});
  const QuiverShape q = quiver_epsilon_shape({2, 5, 9, 12});
  CHECK(q.descent == 12);
  CHECK(q.shape == std::vector<int>{20, 20, 20, 17, 17, 17, 17, 10, 10, 10, 0, 0});
  CHECK(shape(epsilon(A), 12) == q.shape);
  CHECK(staircase_lambda(4) == std::vector<int>{6, 5, 3, 0});
  const SetComposition E = extend_composition(SetComposition({{2}, {1, 3, 4}}), {3, 3});
  CHECK(E[0] == std::vector<int>{2, 5, 6});
  CHECK(E[1] == std::vector<int>{1, 3, 4});
  CHECK(epsilon(E) == Permutation{4, 1, 5, 6, 2, 3});
}

TEST_CASE("minimal rank") {
  CHECK(minimal_rank(X(1) * X(1), Alphabet::x(), 1) == 3);
  CHECK(minimal_rank(Polynomial(1), Alphabet::x(), 2) == 2);
}

TEST_CASE("Schubert coefficients as structure constants") {
  const MonomialCertificate c = schubert_coefficient_as_constant(Permutation{1, 4, 3, 2}, {2, 1, 0, 0}, 4);
  CHECK(c.coefficient == 1);
  CHECK(c.constant == 1);
  CHECK(c.lambda_prime == std::vector<int>{6, 5, 4, 2});
  CHECK_THROWS(schubert_coefficient_as_constant(Permutation{1, 4, 3, 2}, {4, 0, 0, 0}, 4));
}
