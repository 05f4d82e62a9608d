#include "kschubert/ops.hpp"

#include <stdexcept>
#include <unordered_map>

namespace kschubert {

namespace {

const Alphabet kX = Alphabet::x();

// Removes x_i and x_{i+1} from m, returning their exponents.
Monomial split_pair(const Monomial& m, int i, int& a, int& b) {
  a = m.exponent({kX, i});
  b = m.exponent({kX, i + 1});
  return m.with_exponent({kX, i}, 0).with_exponent({kX, i + 1}, 0);
}

}  // namespace

Polynomial swap_variables(int i, const Polynomial& p) {
  return p.rename([i](Variable v) {
    if (v.alphabet == kX && v.index == i) return Variable{kX, i + 1};
    if (v.alphabet == kX && v.index == i + 1) return Variable{kX, i};
    return v;
  });
}

Polynomial divided_difference(int i, const Polynomial& p) {
  const Polynomial f = p - swap_variables(i, p);
  // Group by the cofactor of x_i^a x_{i+1}^b; each group is a polynomial in
  // x_i whose coefficients are polynomials in t = x_{i+1}.
  using Univariate = std::map<int, Integer>;
  std::unordered_map<Monomial, std::map<int, Univariate>, MonomialHash> groups;
  for (const auto& t : f.terms()) {
    int a = 0, b = 0;
    const Monomial rest = split_pair(t.monomial, i, a, b);
    groups[rest][a][b] += t.coeff;
  }
  std::vector<Term> out;
  for (auto& [rest, by_a] : groups) {
    const int top = by_a.rbegin()->first;
    Univariate q;  // running quotient coefficient Q_{a-1}
    for (int a = top; a >= 1; --a) {
      Univariate next;
      for (const auto& [e, c] : q) next[e + 1] += c;
      if (auto it = by_a.find(a); it != by_a.end()) {
        for (const auto& [e, c] : it->second) next[e] += c;
      }
      for (const auto& [e, c] : next) {
        if (c != 0) out.push_back({rest * Monomial::power({kX, i}, a - 1) * Monomial::power({kX, i + 1}, e), c});
      }
      q = std::move(next);
    }
    Univariate rem;
    for (const auto& [e, c] : q) rem[e + 1] += c;
    if (auto it = by_a.find(0); it != by_a.end()) {
      for (const auto& [e, c] : it->second) rem[e] += c;
    }
    for (const auto& [e, c] : rem) {
      if (c != 0) throw std::logic_error("divided difference left a nonzero remainder");
    }
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial apply(OperatorKind kind, int i, const Polynomial& p) {
  if (i < 1) throw std::invalid_argument("operator index must be positive");
  switch (kind) {
    case OperatorKind::partial:
      return divided_difference(i, p);
    case OperatorKind::pi:
      return divided_difference(i, p - p * X(i + 1));
    case OperatorKind::mu:
      return divided_difference(i, p - p * X(i + 1)) - p;
  }
  return p;
}

Polynomial apply_word(OperatorKind kind, const std::vector<int>& word, const Polynomial& p) {
  Polynomial r = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply(kind, *it, r);
  return r;
}

Polynomial apply_word(OperatorKind kind, const Permutation& w, const Polynomial& p) {
  return apply_word(kind, w.reduced_word(), p);
}

ClassExpansion apply_phi(int i, const ClassExpansion& expansion) {
  ClassExpansion out;
  const Permutation s = Permutation::simple(i);
  for (const auto& [w, c] : expansion) {
    const Permutation sw = s * w;
    if (sw.length() < w.length()) {
      out[sw] += c;
      out[w] -= c;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace kschubert
