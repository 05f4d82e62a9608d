#pragma once

#include <utility>
#include <vector>

#include "kschubert/basis.hpp"
#include "kschubert/perm.hpp"
#include "kschubert/pipedream.hpp"
#include "kschubert/poly.hpp"

namespace kschubert {

/// One cover w -> w t_{a,b}, a < b.
struct ChainCover {
  int a = 0;
  int b = 0;
  bool marked = false;
  friend bool operator==(const ChainCover&, const ChainCover&) = default;
};

/// A chain in Bruhat order given by its start and its covers.
/// In a climbing chain the level of a cover is its a.
struct MarkedChain {
  Permutation start;
  std::vector<ChainCover> covers;

  /// start, w_1, ..., w_t.
  std::vector<Permutation> perms() const;
  Permutation end() const;
  int length() const { return static_cast<int>(covers.size()); }
  int marks() const;
  /// (-1)^{length - marks}.
  int sign() const;
  /// alpha_k = marked covers at level k, k = 1..n-1.
  std::vector<int> weight(int n) const;
  friend bool operator==(const MarkedChain&, const MarkedChain&) = default;
};

enum class Marking { groth, hpoly };

/// Covers compose to Bruhat covers and the levels climb as required.
bool is_climbing(const MarkedChain& c, int n);
/// Per level scan. groth: the first cover is marked and unmarked covers
/// continue an increasing run (b drops). hpoly: unmarked covers either open
/// the level or continue a decreasing run (b grows).
bool valid_marking(const MarkedChain& c, Marking marking);
/// Half-open index ranges of the maximal increasing runs of a k-Bruhat chain.
std::vector<std::pair<int, int>> increasing_segments(const MarkedChain& c);

/// Climbing chains from w to omega_0 in S_n, all covers unmarked.
std::vector<MarkedChain> climbing_chains(const Permutation& w, int n);
std::vector<MarkedChain> enumerate_climbing_marked_chains(const Permutation& w, int n, Marking marking);

/// Marked chains in the 1-Bruhat order on S_n starting at w with j marks (any end).
std::vector<MarkedChain> marked_chains_level1(const Permutation& w, int n, int j);
/// Marked chains in the 1-Bruhat order from w that end at some n.v.
std::vector<MarkedChain> marked_chains_to_top(const Permutation& w, int n);

/// x_1 G_w restricted to S_n via increasing 1-Bruhat chains.
BasisExpansion monk_multiply_x1(const Permutation& w, int n);
/// x_1^j G_w restricted to S_n via marked 1-Bruhat chains with j marks.
BasisExpansion monk_power(const Permutation& w, int j, int n);

/// Sum of (-1)^{l-m} x^delta / x^alpha, or the double staircase divided by
/// the marked factors x_a + y_{u(a)} - x_a y_{u(a)}.
Polynomial groth_from_chains(const Permutation& w, int n, bool dbl);
Polynomial h_from_chains(const Permutation& w, int n, bool dbl);

/// Left marked rc-graph to climbing marked chain: fill lexicographically
/// minimal vacancies; covers at left marks stay unmarked.
MarkedChain rcgraph_to_chain(const MarkedRcGraph& R);
/// Inverse: the vacancy of a cover u -> u t_{a,b} is (a, u(a)).
MarkedRcGraph chain_to_rcgraph(const MarkedChain& c, int n);

}  // namespace kschubert
