#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kschubert/hecke.hpp"
#include "kschubert/perm.hpp"
#include "kschubert/poly.hpp"

namespace kschubert {

/// (row, column); rows are negative for the upper half of a double rc-graph.
using Position = std::pair<int, int>;

/// Reading order: rows top to bottom; positive rows right to left,
/// negative rows (upside-down graphs) left to right.
bool reading_before(const Position& a, const Position& b);
/// Letter of a position: |i| + j - 1.
int letter(const Position& p);
/// Staircase positions i + j <= n in reading order.
std::vector<Position> staircase_positions(int n);

struct RcGraph {
  int n = 0;
  std::vector<Position> crossings;  // sorted in reading order

  std::vector<int> word() const;
  /// Permutation of the reading word; throws when the word is not reduced.
  Permutation permutation() const;
  RcGraph transpose() const;
  std::vector<Position> sorted_crossings() const;
  friend bool operator==(const RcGraph&, const RcGraph&) = default;
};

RcGraph make_rcgraph(int n, std::vector<Position> crossings);

std::vector<RcGraph> enumerate_rcgraphs(const Permutation& w, int n);
/// Row i gets code(w)_i crossings left-justified.
RcGraph bottom_rcgraph(const Permutation& w, int n);
/// Absorbable positions via the Hecke characterization.
std::vector<Position> absorbable(const RcGraph& R, Side side);
/// Absorbable positions via pipes crossing northeast (right) or southwest (left).
std::vector<Position> absorbable_geometric(const RcGraph& R, Side side);

struct MarkedRcGraph {
  RcGraph base;
  std::vector<Position> marks;
  Side side = Side::right;
};

/// All R with all subsets of absorbable positions on the given side as marks.
std::vector<MarkedRcGraph> enumerate_marked_rcgraphs(const Permutation& w, int n, Side side);

enum class RcVariant { marked_sum, absorb_product };

/// Marked-sum form or absorbable-product form of G_w.
Polynomial groth_from_rcgraphs(const Permutation& w, int n, RcVariant variant, Side side, bool dbl);
/// marked_sum: marks plus complement product; absorb_product: complement of R and abs(R).
Polynomial h_from_rcgraphs(const Permutation& w, int n, RcVariant variant, Side side, bool dbl);

/// Pair of rc-graphs for (u, v) with v^{-1} u = w and additive lengths.
struct DoubleRcGraph {
  int n = 0;
  Permutation u, v;
  RcGraph ru, rv;

  /// ru as rows 1.., rv upside down as rows -1, -2, ..., in reading order.
  std::vector<Position> positions() const;
  std::vector<int> word() const;
};

std::vector<DoubleRcGraph> enumerate_double_rcgraphs(const Permutation& w, int n);
/// Positions of the doubled staircase in reading order.
std::vector<Position> double_staircase_positions(int n);
std::vector<Position> absorbable(const DoubleRcGraph& D, Side side);

Polynomial groth_from_double(const Permutation& w, int n, RcVariant variant, Side side = Side::right);
Polynomial h_from_double(const Permutation& w, int n, Side side = Side::right);

/// ASCII drawing: '+' crossing, '/' elbow; marks drawn as 'o'.
std::string render_ascii(const RcGraph& R, const std::vector<Position>& marks = {});

}  // namespace kschubert
