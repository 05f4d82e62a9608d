#pragma once

#include <map>

#include "kschubert/perm.hpp"
#include "kschubert/poly.hpp"

namespace kschubert {

enum class Basis { grothendieck, schubert };
enum class HMethod { operators, alternating };

/// x^delta for single, prod_{i+j<=n} (x_i + y_j - x_i y_j) for double.
Polynomial staircase(int n, bool dbl);

/// Stable G_w(x), reached from a dominant monomial by pi operators (memoized).
const Polynomial& grothendieck(const Permutation& w);
/// G_w(x;y) = pi_{w^{-1} w0} of the double staircase (memoized, stable).
const Polynomial& grothendieck_double(const Permutation& w);
inline const Polynomial& grothendieck(const Permutation& w, bool dbl) {
  return dbl ? grothendieck_double(w) : grothendieck(w);
}
/// Literal definition inside S_n along one reduced word of w^{-1} w0.
Polynomial grothendieck_from_top(const Permutation& w, int n, bool dbl);

const Polynomial& schubert(const Permutation& w);
Polynomial schubert_from_top(const Permutation& w, int n);

/// H_w inside S_n; n is mandatory since H is not stable.
const Polynomial& hpolynomial(const Permutation& w, int n, bool dbl, HMethod method = HMethod::operators);

struct BasisExpansion {
  int N = 0;
  std::map<Permutation, Integer> coeffs;

  Integer operator[](const Permutation& w) const;
  /// Keeps only keys in S_N.
  BasisExpansion restricted(int n) const;
  bool fits(int n) const;
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

/// Full expansion in the stable basis by lowest-degree lex-minimal subtraction.
std::map<Permutation, Integer> stable_expansion(const Polynomial& p, Basis basis = Basis::grothendieck);
/// Expansion with support required inside S_N; throws std::domain_error otherwise.
BasisExpansion expand_grothendieck(const Polynomial& p, int N);
BasisExpansion expand_schubert(const Polynomial& p, int N);
/// Same result by exact rational linear algebra over candidate support in S_N.
BasisExpansion expand_linear(const Polynomial& p, int N, Basis basis = Basis::grothendieck);

/// c^w_{u,v} for w in S_N, read from the stable expansion of the product.
BasisExpansion structure_constants(const Permutation& u, const Permutation& v, int N,
                                   Basis basis = Basis::grothendieck);
/// Sum of c_w times the basis polynomial.
Polynomial reconstruct(const BasisExpansion& e, Basis basis = Basis::grothendieck);

}  // namespace kschubert
