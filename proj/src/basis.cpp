#include "kschubert/basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "kschubert/ops.hpp"
#include "memo.hpp"

namespace kschubert {

namespace {

using PolyCache = detail::MemoTable<Permutation, Polynomial, PermutationHash>;

bool weakly_decreasing(const std::vector<int>& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] > c[i - 1]) return false;
  }
  return true;
}

// Walks from w up to a dominant permutation by raising ascents where the
// code increases, then applies the operators back down.
const Polynomial& from_dominant(const Permutation& w, OperatorKind kind, PolyCache& cache) {
  if (const Polynomial* hit = cache.find(w)) return *hit;
  std::vector<std::pair<Permutation, int>> path;  // (permutation, ascent raised)
  Permutation cur = w;
  const Polynomial* base = nullptr;
  for (;;) {
    if (const Polynomial* hit = cache.find(cur)) {
      base = hit;
      break;
    }
    const std::vector<int> c = cur.code();
    if (weakly_decreasing(c)) {
      base = &cache.insert(cur, Polynomial::monomial(Monomial::from_exponents(Alphabet::x(), c)));
      break;
    }
    int i = 1;
    while (c[i - 1] >= (i < static_cast<int>(c.size()) ? c[i] : 0)) ++i;
    path.emplace_back(cur, i);
    cur = cur * Permutation::simple(i);
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    base = &cache.insert(it->first, apply(kind, it->second, *base));
  }
  return *base;
}

PolyCache& groth_cache() {
  static PolyCache cache;
  return cache;
}

PolyCache& schubert_cache() {
  static PolyCache cache;
  return cache;
}

PolyCache& double_cache() {
  static PolyCache cache;
  return cache;
}

// Top-down recursion inside S_n; results are stable so the cache ignores n.
const Polynomial& double_in(const Permutation& w, int n) {
  if (const Polynomial* hit = double_cache().find(w)) return *hit;
  if (w == Permutation::longest(n)) return double_cache().insert(w, staircase(n, true));
  int i = 1;
  while (w(i) > w(i + 1)) ++i;
  return double_cache().insert(w, apply(OperatorKind::pi, i, double_in(w * Permutation::simple(i), n)));
}

struct HKey {
  Permutation w;
  int n;
  bool dbl;
  HMethod method;
  friend bool operator==(const HKey&, const HKey&) = default;
};

struct HKeyHash {
  std::size_t operator()(const HKey& k) const noexcept {
    return PermutationHash{}(k.w) * 31 + static_cast<std::size_t>(k.n) * 7 + (k.dbl ? 3 : 0) +
           (k.method == HMethod::alternating ? 1 : 0);
  }
};

detail::MemoTable<HKey, Polynomial, HKeyHash>& h_cache() {
  static detail::MemoTable<HKey, Polynomial, HKeyHash> cache;
  return cache;
}

const Polynomial& basis_polynomial(const Permutation& w, Basis basis) {
  return basis == Basis::grothendieck ? grothendieck(w) : schubert(w);
}

void require_x_only(const Polynomial& p) {
  for (Alphabet a : p.alphabets()) {
    if (a != Alphabet::x()) throw std::invalid_argument("basis expansion needs a polynomial in x only");
  }
}

}  // namespace

Polynomial staircase(int n, bool dbl) {
  Polynomial p(1);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; i + j <= n; ++j) p *= dbl ? ksum(X(i), Y(j)) : X(i);
  }
  return p;
}

const Polynomial& grothendieck(const Permutation& w) { return from_dominant(w, OperatorKind::pi, groth_cache()); }

const Polynomial& schubert(const Permutation& w) { return from_dominant(w, OperatorKind::partial, schubert_cache()); }

const Polynomial& grothendieck_double(const Permutation& w) { return double_in(w, std::max(w.size(), 1)); }

Polynomial grothendieck_from_top(const Permutation& w, int n, bool dbl) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
  return apply_word(OperatorKind::pi, w.inverse() * Permutation::longest(n), staircase(n, dbl));
}

Polynomial schubert_from_top(const Permutation& w, int n) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
  return apply_word(OperatorKind::partial, w.inverse() * Permutation::longest(n), staircase(n, false));
}

const Polynomial& hpolynomial(const Permutation& w, int n, bool dbl, HMethod method) {
  if (w.size() > n) throw std::invalid_argument("permutation outside S_n");
  const HKey key{w, n, dbl, method};
  if (const Polynomial* hit = h_cache().find(key)) return *hit;
  Polynomial result;
  if (method == HMethod::alternating) {
    const int lw = w.length();
    for (const Permutation& v : all_permutations(n)) {
      if (!bruhat_leq(w, v)) continue;
      const Polynomial& g = grothendieck(v, dbl);
      result.add_scaled(g, (v.length() - lw) % 2 == 0 ? 1 : -1);
    }
  } else if (w == Permutation::longest(n)) {
    result = staircase(n, dbl);
  } else {
    int i = 1;
    while (w(i) > w(i + 1)) ++i;
    result = apply(OperatorKind::mu, i, hpolynomial(w * Permutation::simple(i), n, dbl, method));
  }
  return h_cache().insert(key, std::move(result));
}

Integer BasisExpansion::operator[](const Permutation& w) const {
  auto it = coeffs.find(w);
  return it == coeffs.end() ? Integer(0) : it->second;
}

BasisExpansion BasisExpansion::restricted(int n) const {
  BasisExpansion out{n, {}};
  for (const auto& [w, c] : coeffs) {
    if (w.size() <= n) out.coeffs.emplace(w, c);
  }
  return out;
}

bool BasisExpansion::fits(int n) const {
  return std::all_of(coeffs.begin(), coeffs.end(), [n](const auto& kv) { return kv.first.size() <= n; });
}

std::map<Permutation, Integer> stable_expansion(const Polynomial& p, Basis basis) {
  require_x_only(p);
  std::map<Permutation, Integer> out;
  Polynomial rest = p;
  std::size_t steps = 0;
  while (!rest.is_zero()) {
    if (++steps > 50'000'000) throw std::logic_error("basis expansion did not terminate");
    // Last term of the lowest-degree block is lexicographically minimal there.
    const int d = rest.min_degree();
    std::size_t k = 0;
    while (k + 1 < rest.terms().size() && rest.terms()[k + 1].monomial.degree() == d) ++k;
    const Term lead = rest.terms()[k];
    const Permutation w = Permutation::from_code(lead.monomial.exponents(Alphabet::x()));
    rest.add_scaled(basis_polynomial(w, basis), -lead.coeff);
    out[w] += lead.coeff;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

namespace {

BasisExpansion expand_within(const Polynomial& p, int N, Basis basis) {
  BasisExpansion e{N, stable_expansion(p, basis)};
  if (!e.fits(N)) throw std::domain_error("expansion leaves S_N; N is too small");
  return e;
}

}  // namespace

BasisExpansion expand_grothendieck(const Polynomial& p, int N) { return expand_within(p, N, Basis::grothendieck); }

BasisExpansion expand_schubert(const Polynomial& p, int N) { return expand_within(p, N, Basis::schubert); }

BasisExpansion expand_linear(const Polynomial& p, int N, Basis basis) {
  require_x_only(p);
  BasisExpansion result{N, {}};
  if (p.is_zero()) return result;
  // G_w has lowest degree l(w) but may cancel higher terms, so only S has an upper bound.
  const int lo = p.min_degree(), hi = basis == Basis::schubert ? p.max_degree() : N * (N - 1) / 2;
  std::vector<Permutation> candidates;
  for (const Permutation& w : all_permutations(N)) {
    if (w.length() >= lo && w.length() <= hi) candidates.push_back(w);
  }
  // Rows are monomials, columns candidates, plus the right-hand side.
  std::map<Monomial, std::size_t, std::less<>> row_of;
  auto row = [&row_of](const Monomial& m) {
    return row_of.try_emplace(m, row_of.size()).first->second;
  };
  std::vector<std::vector<std::pair<std::size_t, Integer>>> columns;
  for (const Permutation& w : candidates) {
    auto& col = columns.emplace_back();
    for (const auto& t : basis_polynomial(w, basis).terms()) col.emplace_back(row(t.monomial), t.coeff);
  }
  std::vector<std::pair<std::size_t, Integer>> rhs;
  for (const auto& t : p.terms()) rhs.emplace_back(row(t.monomial), t.coeff);

  const std::size_t rows = row_of.size(), cols = candidates.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [r, c] : columns[j]) a[r][j] = c;
  }
  for (const auto& [r, c] : rhs) a[r][cols] = c;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t piv = r;
    while (piv < rows && a[piv][j] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const Rational inv = 1 / a[r][j];
    for (std::size_t k = j; k <= cols; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][j] == 0) continue;
      const Rational f = a[i][j];
      for (std::size_t k = j; k <= cols; ++k) {
        if (a[r][k] != 0) a[i][k] -= f * a[r][k];
      }
    }
    pivot_col.push_back(j);
    ++r;
  }
  if (pivot_col.size() != cols) throw std::logic_error("candidate basis polynomials are dependent");
  for (std::size_t i = r; i < rows; ++i) {
    if (a[i][cols] != 0) throw std::domain_error("no expansion inside S_N; N is too small");
  }
  for (std::size_t i = 0; i < r; ++i) {
    const Rational& c = a[i][cols];
    if (c == 0) continue;
    if (c.get_den() != 1) throw std::logic_error("non-integral basis coefficient");
    result.coeffs.emplace(candidates[pivot_col[i]], c.get_num());
  }
  return result;
}

namespace {

struct ProductKey {
  Permutation u, v;
  Basis basis;
  friend bool operator==(const ProductKey&, const ProductKey&) = default;
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const noexcept {
    return PermutationHash{}(k.u) * 1000003u ^ PermutationHash{}(k.v) ^ static_cast<std::size_t>(k.basis);
  }
};

}  // namespace

BasisExpansion structure_constants(const Permutation& u, const Permutation& v, int N, Basis basis) {
  static detail::MemoTable<ProductKey, std::map<Permutation, Integer>, ProductKeyHash> cache;
  const ProductKey key = u <= v ? ProductKey{u, v, basis} : ProductKey{v, u, basis};
  const auto* full = cache.find(key);
  if (!full) {
    full = &cache.insert(key, stable_expansion(basis_polynomial(u, basis) * basis_polynomial(v, basis), basis));
  }
  return BasisExpansion{N, *full}.restricted(N);
}

Polynomial reconstruct(const BasisExpansion& e, Basis basis) {
  Polynomial p;
  for (const auto& [w, c] : e.coeffs) p.add_scaled(basis_polynomial(w, basis), c);
  return p;
}

}  // namespace kschubert
