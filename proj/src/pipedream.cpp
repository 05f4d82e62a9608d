#include "kschubert/pipedream.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kschubert {

bool reading_before(const Position& a, const Position& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.first < 0 ? a.second < b.second : a.second > b.second;
}

int letter(const Position& p) { return std::abs(p.first) + p.second - 1; }

std::vector<Position> staircase_positions(int n) {
  std::vector<Position> out;
  for (int i = 1; i < n; ++i) {
    for (int j = n - i; j >= 1; --j) out.emplace_back(i, j);
  }
  return out;
}

std::vector<Position> double_staircase_positions(int n) {
  std::vector<Position> out;
  for (int i = n - 1; i >= 1; --i) {
    for (int j = 1; i + j <= n; ++j) out.emplace_back(-i, j);
  }
  const auto lower = staircase_positions(n);
  out.insert(out.end(), lower.begin(), lower.end());
  return out;
}

namespace {

std::vector<int> letters_of(const std::vector<Position>& ps) {
  std::vector<int> w;
  w.reserve(ps.size());
  for (const auto& p : ps) w.push_back(letter(p));
  return w;
}

// Vacant cells of `cells` absorbable into the occupied set on the given side.
std::vector<Position> absorbable_cells(const std::vector<Position>& cells, const std::vector<Position>& occupied,
                                       Side side) {
  std::vector<Position> out;
  for (const Position& p : cells) {
    if (std::find(occupied.begin(), occupied.end(), p) != occupied.end()) continue;
    std::vector<Position> T = occupied;
    T.insert(std::upper_bound(T.begin(), T.end(), p, reading_before), p);
    std::vector<int> P;
    int r = 0;
    for (int k = 0; k < static_cast<int>(T.size()); ++k) {
      if (T[k] == p) {
        r = k + 1;
      } else {
        P.push_back(k + 1);
      }
    }
    if (absorbable_letter(letters_of(T), P, r, side)) out.push_back(p);
  }
  return out;
}

Polynomial weight(const Position& p, bool dbl) {
  return dbl ? ksum(X(p.first), Y(p.second)) : X(p.first);
}

Polynomial coweight(const Position& p, bool dbl) {
  Polynomial g = Polynomial(1) - X(p.first);
  return dbl ? g * (Polynomial(1) - Y(p.second)) : g;
}

// Double rc-graph row weight: x_i, with x_{-i} read as y_i.
Polynomial row_weight(const Position& p) { return p.first > 0 ? X(p.first) : Y(-p.first); }

template <class F>
Polynomial product_over(const std::vector<Position>& ps, F f) {
  Polynomial out(1);
  for (const auto& p : ps) out *= f(p);
  return out;
}

std::vector<Position> set_minus(const std::vector<Position>& all, const std::vector<Position>& a,
                                const std::vector<Position>& b = {}) {
  std::vector<Position> out;
  for (const auto& p : all) {
    if (std::find(a.begin(), a.end(), p) == a.end() && std::find(b.begin(), b.end(), p) == b.end()) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<int> RcGraph::word() const { return letters_of(crossings); }

Permutation RcGraph::permutation() const {
  const auto [w, absorbed] = evaluate_u_word(word());
  if (absorbed != 0) throw std::invalid_argument("crossing word is not reduced");
  return w;
}

RcGraph RcGraph::transpose() const {
  std::vector<Position> t;
  for (const auto& [i, j] : crossings) t.emplace_back(j, i);
  return make_rcgraph(n, std::move(t));
}

std::vector<Position> RcGraph::sorted_crossings() const {
  std::vector<Position> s = crossings;
  std::sort(s.begin(), s.end());
  return s;
}

RcGraph make_rcgraph(int n, std::vector<Position> crossings) {
  for (const auto& [i, j] : crossings) {
    if (i < 1 || j < 1 || i + j > n) throw std::invalid_argument("crossing outside the staircase");
  }
  std::sort(crossings.begin(), crossings.end(), reading_before);
  if (std::adjacent_find(crossings.begin(), crossings.end()) != crossings.end()) {
    throw std::invalid_argument("repeated crossing");
  }
  return RcGraph{n, std::move(crossings)};
}

std::vector<RcGraph> enumerate_rcgraphs(const Permutation& w, int n) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
  const std::vector<Position> cells = staircase_positions(n);
  const int total = static_cast<int>(cells.size());
  const int target = w.length();
  const std::vector<int> winv = w.inverse().one_line(n);
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i + 1;
  std::vector<Position> chosen;
  std::vector<RcGraph> out;
  // Every prefix is below w in weak order, so each new inversion is one of w.
  auto dfs = [&](auto&& self, int idx) -> void {
    if (static_cast<int>(chosen.size()) == target) {
      out.push_back(RcGraph{n, chosen});
      return;
    }
    if (total - idx < target - static_cast<int>(chosen.size())) return;
    const int a = letter(cells[idx]);
    const int lo = cur[a - 1], hi = cur[a];
    if (lo < hi && winv[lo - 1] > winv[hi - 1]) {
      std::swap(cur[a - 1], cur[a]);
      chosen.push_back(cells[idx]);
      self(self, idx + 1);
      chosen.pop_back();
      std::swap(cur[a - 1], cur[a]);
    }
    self(self, idx + 1);
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(),
            [](const RcGraph& a, const RcGraph& b) { return a.sorted_crossings() < b.sorted_crossings(); });
  return out;
}

RcGraph bottom_rcgraph(const Permutation& w, int n) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
  const std::vector<int> c = w.code();
  std::vector<Position> cross;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    for (int j = 1; j <= c[i]; ++j) cross.emplace_back(i + 1, j);
  }
  RcGraph R = make_rcgraph(n, std::move(cross));
  if (R.permutation() != w) throw std::logic_error("bottom rc-graph does not represent w");
  return R;
}

std::vector<Position> absorbable(const RcGraph& R, Side side) {
  return absorbable_cells(staircase_positions(R.n), R.crossings, side);
}

std::vector<Position> absorbable_geometric(const RcGraph& R, Side side) {
  const int n = R.n;
  auto is_cross = [&R](int r, int c) {
    return std::find(R.crossings.begin(), R.crossings.end(), Position{r, c}) != R.crossings.end();
  };
  // step[pipe][(r,c)] = time at which the pipe visits the tile.
  std::vector<std::map<Position, int>> step(n + 1);
  std::map<Position, std::vector<int>> visitors;
  for (int pipe = 1; pipe <= n; ++pipe) {
    int r = pipe, c = 1, t = 0;
    bool east = true;
    while (r >= 1) {
      step[pipe][{r, c}] = t++;
      visitors[{r, c}].push_back(pipe);
      const bool cross = r + c <= n && is_cross(r, c);
      if (!cross) east = !east;
      // After the tile the pipe moves in its (possibly new) direction.
      if (east) {
        ++c;
      } else {
        --r;
      }
    }
  }
  std::vector<Position> out;
  for (const Position& p : staircase_positions(n)) {
    if (is_cross(p.first, p.second)) continue;
    const auto& meet = visitors[p];
    if (meet.size() != 2) throw std::logic_error("elbow tile not visited by two pipes");
    const int a = meet[0], b = meet[1];
    for (const Position& q : R.crossings) {
      if (!step[a].count(q) || !step[b].count(q)) continue;
      const bool northeast = step[a].at(q) > step[a].at(p);
      if ((side == Side::right) == northeast) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), reading_before);
  return out;
}

std::vector<MarkedRcGraph> enumerate_marked_rcgraphs(const Permutation& w, int n, Side side) {
  std::vector<MarkedRcGraph> out;
  for (const RcGraph& R : enumerate_rcgraphs(w, n)) {
    const std::vector<Position> abs = absorbable(R, side);
    for (unsigned mask = 0; mask < (1u << abs.size()); ++mask) {
      MarkedRcGraph m{R, {}, side};
      for (std::size_t k = 0; k < abs.size(); ++k) {
        if (mask & (1u << k)) m.marks.push_back(abs[k]);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

Polynomial groth_from_rcgraphs(const Permutation& w, int n, RcVariant variant, Side side, bool dbl) {
  auto f = [dbl](const Position& p) { return weight(p, dbl); };
  auto g = [dbl](const Position& p) { return coweight(p, dbl); };
  Polynomial total;
  if (variant == RcVariant::marked_sum) {
    for (const MarkedRcGraph& m : enumerate_marked_rcgraphs(w, n, side)) {
      const Polynomial term = product_over(m.base.crossings, f) * product_over(m.marks, f);
      total.add_scaled(term, m.marks.size() % 2 == 0 ? 1 : -1);
    }
  } else {
    for (const RcGraph& R : enumerate_rcgraphs(w, n)) {
      total += product_over(R.crossings, f) * product_over(absorbable(R, side), g);
    }
  }
  return total;
}

Polynomial h_from_rcgraphs(const Permutation& w, int n, RcVariant variant, Side side, bool dbl) {
  auto f = [dbl](const Position& p) { return weight(p, dbl); };
  auto g = [dbl](const Position& p) { return coweight(p, dbl); };
  const std::vector<Position> cells = staircase_positions(n);
  Polynomial total;
  if (variant == RcVariant::marked_sum) {
    for (const MarkedRcGraph& m : enumerate_marked_rcgraphs(w, n, side)) {
      total += product_over(m.base.crossings, f) * product_over(m.marks, f) *
               product_over(set_minus(cells, m.base.crossings, m.marks), g);
    }
  } else {
    for (const RcGraph& R : enumerate_rcgraphs(w, n)) {
      total += product_over(R.crossings, f) * product_over(set_minus(cells, R.crossings, absorbable(R, side)), g);
    }
  }
  return total;
}

std::vector<Position> DoubleRcGraph::positions() const {
  std::vector<Position> out = ru.crossings;
  for (const auto& [i, j] : rv.crossings) out.emplace_back(-i, j);
  std::sort(out.begin(), out.end(), reading_before);
  return out;
}

std::vector<int> DoubleRcGraph::word() const { return letters_of(positions()); }

std::vector<DoubleRcGraph> enumerate_double_rcgraphs(const Permutation& w, int n) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
  std::vector<DoubleRcGraph> out;
  const int lw = w.length();
  for (const Permutation& v : all_permutations(n)) {
    const Permutation u = v * w;
    if (u.length() + v.length() != lw) continue;
    const auto rus = enumerate_rcgraphs(u, n);
    const auto rvs = enumerate_rcgraphs(v, n);
    for (const RcGraph& rv : rvs) {
      for (const RcGraph& ru : rus) out.push_back(DoubleRcGraph{n, u, v, ru, rv});
    }
  }
  return out;
}

std::vector<Position> absorbable(const DoubleRcGraph& D, Side side) {
  return absorbable_cells(double_staircase_positions(D.n), D.positions(), side);
}

Polynomial groth_from_double(const Permutation& w, int n, RcVariant variant, Side side) {
  auto g = [](const Position& p) { return Polynomial(1) - row_weight(p); };
  Polynomial total;
  for (const DoubleRcGraph& D : enumerate_double_rcgraphs(w, n)) {
    const std::vector<Position> ps = D.positions();
    const std::vector<Position> abs = absorbable(D, side);
    const Polynomial base = product_over(ps, row_weight);
    if (variant == RcVariant::absorb_product) {
      total += base * product_over(abs, g);
      continue;
    }
    for (unsigned mask = 0; mask < (1u << abs.size()); ++mask) {
      std::vector<Position> marks;
      for (std::size_t k = 0; k < abs.size(); ++k) {
        if (mask & (1u << k)) marks.push_back(abs[k]);
      }
      total.add_scaled(base * product_over(marks, row_weight), marks.size() % 2 == 0 ? 1 : -1);
    }
  }
  return total;
}

Polynomial h_from_double(const Permutation& w, int n, Side side) {
  auto g = [](const Position& p) { return Polynomial(1) - row_weight(p); };
  const std::vector<Position> cells = double_staircase_positions(n);
  Polynomial total;
  for (const DoubleRcGraph& D : enumerate_double_rcgraphs(w, n)) {
    const std::vector<Position> ps = D.positions();
    total += product_over(ps, row_weight) * product_over(set_minus(cells, ps, absorbable(D, side)), g);
  }
  return total;
}

std::string render_ascii(const RcGraph& R, const std::vector<Position>& marks) {
  std::string s;
  for (int i = 1; i < R.n; ++i) {
    for (int j = 1; i + j <= R.n; ++j) {
      const Position p{i, j};
      if (std::find(R.crossings.begin(), R.crossings.end(), p) != R.crossings.end()) {
        s += '+';
      } else if (std::find(marks.begin(), marks.end(), p) != marks.end()) {
        s += 'o';
      } else {
        s += '/';
      }
    }
    s += '\n';
  }
  return s;
}

}  // namespace kschubert
