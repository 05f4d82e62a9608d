#include "kschubert/chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace kschubert {

std::vector<Permutation> MarkedChain::perms() const {
  std::vector<Permutation> out{start};
  for (const ChainCover& c : covers) out.push_back(out.back() * Permutation::transposition(c.a, c.b));
  return out;
}

Permutation MarkedChain::end() const { return perms().back(); }

int MarkedChain::marks() const {
  return static_cast<int>(std::count_if(covers.begin(), covers.end(), [](const ChainCover& c) { return c.marked; }));
}

int MarkedChain::sign() const { return (length() - marks()) % 2 == 0 ? 1 : -1; }

std::vector<int> MarkedChain::weight(int n) const {
  std::vector<int> alpha(std::max(n - 1, 0), 0);
  for (const ChainCover& c : covers) {
    if (c.marked) ++alpha.at(c.a - 1);
  }
  return alpha;
}

namespace {

// First position k where w does not yet read n, n-1, ..., n-k+1; n when w = omega_0.
int climbing_level(const Permutation& w, int n) {
  int k = 1;
  while (k < n && w(k) == n - k + 1) ++k;
  return k;
}

}  // namespace

bool is_climbing(const MarkedChain& c, int n) {
  Permutation cur = c.start;
  if (cur.size() > n) return false;
  for (const ChainCover& cv : c.covers) {
    if (cv.a != climbing_level(cur, n) || cv.b > n || !is_cover(cur, cv.a, cv.b)) return false;
    cur = cur * Permutation::transposition(cv.a, cv.b);
  }
  return cur == Permutation::longest(n);
}

bool valid_marking(const MarkedChain& c, Marking marking) {
  for (std::size_t i = 0; i < c.covers.size(); ++i) {
    const ChainCover& cv = c.covers[i];
    if (cv.marked) continue;
    const bool opens = i == 0 || c.covers[i - 1].a != cv.a;
    if (marking == Marking::groth) {
      if (opens || cv.b >= c.covers[i - 1].b) return false;
    } else if (!opens && cv.b <= c.covers[i - 1].b) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> increasing_segments(const MarkedChain& c) {
  std::vector<std::pair<int, int>> out;
  const int t = c.length();
  int begin = 0;
  for (int i = 1; i <= t; ++i) {
    const bool breaks = i == t || !(c.covers[i - 1].a < c.covers[i].a ||
                                    (c.covers[i - 1].a == c.covers[i].a && c.covers[i - 1].b > c.covers[i].b));
    if (breaks) {
      out.emplace_back(begin, i);
      begin = i;
    }
  }
  return out;
}

namespace {

void climb(const Permutation& cur, int n, std::vector<ChainCover>& path, const Permutation& start,
           std::vector<MarkedChain>& out) {
  const int k = climbing_level(cur, n);
  if (k == n) {
    out.push_back({start, path});
    return;
  }
  for (int b = k + 1; b <= n; ++b) {
    if (!is_cover(cur, k, b)) continue;
    path.push_back({k, b, false});
    climb(cur * Permutation::transposition(k, b), n, path, start, out);
    path.pop_back();
  }
}

// Every valid marking of an unmarked chain, marks chosen cover by cover.
void markings(MarkedChain& c, std::size_t i, Marking marking, std::vector<MarkedChain>& out) {
  if (i == c.covers.size()) {
    out.push_back(c);
    return;
  }
  const ChainCover& cv = c.covers[i];
  const bool opens = i == 0 || c.covers[i - 1].a != cv.a;
  const bool may_skip = marking == Marking::groth ? !opens && cv.b < c.covers[i - 1].b
                                                  : opens || cv.b > c.covers[i - 1].b;
  c.covers[i].marked = true;
  markings(c, i + 1, marking, out);
  if (may_skip) {
    c.covers[i].marked = false;
    markings(c, i + 1, marking, out);
  }
}

}  // namespace

std::vector<MarkedChain> climbing_chains(const Permutation& w, int n) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
  std::vector<MarkedChain> out;
  std::vector<ChainCover> path;
  climb(w, n, path, w, out);
  return out;
}

std::vector<MarkedChain> enumerate_climbing_marked_chains(const Permutation& w, int n, Marking marking) {
  std::vector<MarkedChain> out;
  for (MarkedChain c : climbing_chains(w, n)) markings(c, 0, marking, out);
  return out;
}

namespace {

// Depth-first over 1-Bruhat covers; emits chains whose mark count hits j.
void level1(const Permutation& cur, int n, int j, int marks, std::vector<ChainCover>& path,
            const Permutation& start, std::vector<MarkedChain>& out) {
  if (marks == j && !path.empty()) out.push_back({start, path});
  for (int b = 2; b <= n; ++b) {
    if (!is_cover(cur, 1, b)) continue;
    const Permutation next = cur * Permutation::transposition(1, b);
    if (marks < j) {
      path.push_back({1, b, true});
      level1(next, n, j, marks + 1, path, start, out);
      path.pop_back();
    }
    if (!path.empty() && b < path.back().b) {
      path.push_back({1, b, false});
      level1(next, n, j, marks, path, start, out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<MarkedChain> marked_chains_level1(const Permutation& w, int n, int j) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
  std::vector<MarkedChain> out;
  if (j == 0) {
    out.push_back({w, {}});
    return out;
  }
  std::vector<ChainCover> path;
  level1(w, n, j, 0, path, w, out);
  return out;
}

std::vector<MarkedChain> marked_chains_to_top(const Permutation& w, int n) {
  std::vector<MarkedChain> out;
  if (w(1) == n) {
    out.push_back({w, {}});
    return out;
  }
  for (int j = 1; j < n; ++j) {
    for (MarkedChain& c : marked_chains_level1(w, n, j)) {
      if (c.end()(1) == n) out.push_back(std::move(c));
    }
  }
  return out;
}

BasisExpansion monk_multiply_x1(const Permutation& w, int n) { return monk_power(w, 1, n); }

BasisExpansion monk_power(const Permutation& w, int j, int n) {
  BasisExpansion e{n, {}};
  for (const MarkedChain& c : marked_chains_level1(w, n, j)) e.coeffs[c.end()] += (c.length() - j) % 2 == 0 ? 1 : -1;
  for (auto it = e.coeffs.begin(); it != e.coeffs.end();) {
    it = it->second == 0 ? e.coeffs.erase(it) : std::next(it);
  }
  return e;
}

namespace {

// Staircase product with the marked vacancies (a, u(a)) removed.
Polynomial chain_term(const MarkedChain& c, int n, bool dbl) {
  std::vector<std::vector<int>> removed(n + 1, std::vector<int>(n + 1, 0));
  const std::vector<Permutation> ps = c.perms();
  for (std::size_t i = 0; i < c.covers.size(); ++i) {
    if (!c.covers[i].marked) continue;
    const int a = c.covers[i].a, col = ps[i](a);
    if (a + col > n || removed[a][col]) throw std::logic_error("marked cover outside the staircase");
    removed[a][col] = 1;
  }
  if (!dbl) {
    std::vector<int> exps(std::max(n - 1, 0), 0);
    for (int i = 1; i < n; ++i) {
      exps[i - 1] = n - i;
      for (int col = 1; col <= n; ++col) exps[i - 1] -= removed[i][col];
    }
    return Polynomial::monomial(Monomial::from_exponents(Alphabet::x(), exps));
  }
  Polynomial p(1);
  for (int i = 1; i < n; ++i) {
    for (int col = 1; i + col <= n; ++col) {
      if (!removed[i][col]) p *= ksum(X(i), Y(col));
    }
  }
  return p;
}

Polynomial chain_sum(const Permutation& w, int n, bool dbl, Marking marking) {
  Polynomial total;
  for (const MarkedChain& c : enumerate_climbing_marked_chains(w, n, marking)) {
    total.add_scaled(chain_term(c, n, dbl), c.sign());
  }
  return total;
}

}  // namespace

Polynomial groth_from_chains(const Permutation& w, int n, bool dbl) { return chain_sum(w, n, dbl, Marking::groth); }

Polynomial h_from_chains(const Permutation& w, int n, bool dbl) { return chain_sum(w, n, dbl, Marking::hpoly); }

MarkedChain rcgraph_to_chain(const MarkedRcGraph& R) {
  if (R.side != Side::left) throw std::invalid_argument("the chain bijection takes left marked rc-graphs");
  const int n = R.base.n;
  MarkedChain chain{R.base.permutation(), {}};
  std::vector<Position> cur = R.base.crossings;
  Permutation w = chain.start;
  // Lexicographic order on pairs, not reading order.
  std::vector<Position> cells = staircase_positions(n);
  std::sort(cells.begin(), cells.end());
  for (const Position& p : cells) {
    if (std::find(cur.begin(), cur.end(), p) != cur.end()) continue;
    cur.push_back(p);
    const Permutation next = make_rcgraph(n, cur).permutation();
    int a = 0, b = 0;
    for (int i = 1; i <= n; ++i) {
      if (w(i) != next(i)) (a == 0 ? a : b) = i;
    }
    if (b == 0 || next.length() != w.length() + 1) throw std::logic_error("filling a vacancy is not a cover");
    const bool unmarked = std::find(R.marks.begin(), R.marks.end(), p) != R.marks.end();
    chain.covers.push_back({a, b, !unmarked});
    w = next;
  }
  return chain;
}

MarkedRcGraph chain_to_rcgraph(const MarkedChain& c, int n) {
  if (!is_climbing(c, n)) throw std::invalid_argument("not a climbing chain");
  if (!valid_marking(c, Marking::groth)) throw std::invalid_argument("not a valid marking");
  std::vector<Position> vacant, marks;
  const std::vector<Permutation> ps = c.perms();
  for (std::size_t i = 0; i < c.covers.size(); ++i) {
    const Position p{c.covers[i].a, ps[i](c.covers[i].a)};
    vacant.push_back(p);
    if (!c.covers[i].marked) marks.push_back(p);
  }
  std::vector<Position> crossings;
  for (const Position& p : staircase_positions(n)) {
    if (std::find(vacant.begin(), vacant.end(), p) == vacant.end()) crossings.push_back(p);
  }
  RcGraph base = make_rcgraph(n, std::move(crossings));
  std::sort(marks.begin(), marks.end(), reading_before);
  return MarkedRcGraph{std::move(base), std::move(marks), Side::left};
}

}  // namespace kschubert
