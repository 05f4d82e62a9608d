#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kschubert/perm.hpp"
#include "kschubert/poly.hpp"

namespace kschubert {

enum class HeckeBasis { e, tilde };
enum class Side { right, left };

/// Element of H_n(0) with polynomial coefficients, stored in the e-basis.
class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {}
  /// c * e_w.
  static HeckeElement basis_element(int n, const Permutation& w, const Polynomial& c = 1);
  /// u_i = e_{s_i}.
  static HeckeElement u(int n, int i);
  /// v_i = u_i + 1.
  static HeckeElement v(int n, int i);

  int rank() const { return n_; }
  const std::map<Permutation, Polynomial>& coeffs() const { return coeffs_; }
  Polynomial coefficient(const Permutation& w, HeckeBasis basis = HeckeBasis::e) const;
  /// Coefficients in the requested basis; tilde e_w = sum of e_v over v <= w.
  std::map<Permutation, Polynomial> coefficients(HeckeBasis basis) const;
  static HeckeElement from_coefficients(int n, const std::map<Permutation, Polynomial>& c, HeckeBasis basis);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator*=(const Polynomial& c);
  /// Right multiplication by u_i.
  HeckeElement times_u(int i) const;
  /// Left multiplication by u_i.
  HeckeElement u_times(int i) const;
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  void add(const Permutation& w, const Polynomial& c);
  int n_;
  std::map<Permutation, Polynomial> coeffs_;
};

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

/// prod_{i=1}^{n-1} prod_{j=n-1}^{i} (1 + (x_i + y_{j-i+1} - x_i y_{j-i+1}) u_j); y = 0 when !dbl.
HeckeElement cauchy_product(int n, bool dbl);

/// e_u e_v = (-1)^k e_w; returns (w, k).
std::pair<Permutation, int> hecke_product(const Permutation& u, const Permutation& v);
/// Evaluates u_{a_1} ... u_{a_r}: returns (w, number of absorbed letters).
std::pair<Permutation, int> evaluate_u_word(const std::vector<int>& word);
/// delta of a word in the v_i: the Demazure product.
Permutation demazure(const std::vector<int>& word);
/// tilde e_u tilde e_v = tilde e_w.
Permutation demazure_product(const Permutation& u, const Permutation& v);

/// Whether letter r of Q (1-based) is absorbable into the reduced subword at
/// positions P, with the cancelling letter before r (right) or after (left).
bool absorbable_letter(const std::vector<int>& Q, const std::vector<int>& P, int r, Side side = Side::right);

}  // namespace kschubert
