#include <doctest.h>

#include "kschubert/basis.hpp"
#include "kschubert/pipedream.hpp"

using namespace kschubert;

namespace {

Integer coefficient_sum(const Polynomial& p) {
  Integer s = 0;
  for (const Term& t : p.terms()) s += t.coeff;
  return s;
}

}  // namespace

TEST_CASE("rc-graphs are counted by the Schubert polynomial at 1") {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const std::vector<RcGraph> graphs = enumerate_rcgraphs(w, n);
      CHECK(Integer(static_cast<long>(graphs.size())) == coefficient_sum(schubert(w)));
      for (const RcGraph& R : graphs) {
        CHECK(R.permutation() == w);
        CHECK(static_cast<int>(R.crossings.size()) == w.length());
        CHECK(absorbable(R, Side::right) == absorbable_geometric(R, Side::right));
        CHECK(absorbable(R, Side::left) == absorbable_geometric(R, Side::left));
        CHECK(R.transpose().permutation() == w.inverse());
      }
    }
  }
}

TEST_CASE("bottom rc-graph") {
  for (const Permutation& w : all_permutations(4)) {
    const RcGraph B = bottom_rcgraph(w, 4);
    CHECK(B.permutation() == w);
    CHECK(absorbable(B, Side::right).empty());
  }
}

TEST_CASE("rc-graphs of 132") {
  const Permutation w{1, 3, 2};
  const std::vector<RcGraph> graphs = enumerate_rcgraphs(w, 3);
  REQUIRE(graphs.size() == 2);
  CHECK(enumerate_double_rcgraphs(w, 3).size() == 4);
  CHECK(enumerate_marked_rcgraphs(w, 3, Side::right).size() == 3);
  CHECK(make_rcgraph(3, {{1, 2}}).permutation() == w);
  CHECK_THROWS(make_rcgraph(3, {{1, 1}, {1, 1}}));
  const std::string art = render_ascii(graphs.front());
  CHECK(art.find('+') != std::string::npos);
}

TEST_CASE("reading order and letters") {
  CHECK(letter({2, 3}) == 4);
  CHECK(letter({-2, 1}) == 2);
  CHECK(staircase_positions(3).size() == 3);
  CHECK(reading_before({1, 2}, {1, 1}));
  CHECK(reading_before({1, 1}, {2, 1}));
  CHECK(double_staircase_positions(3).size() == 6);
}
