#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kschubert/perm.hpp"

namespace kschubert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Named variable family: x, y, z, or Y1, Y2, ... for s-fold specializations.
class Alphabet {
 public:
  constexpr Alphabet() = default;
  static constexpr Alphabet x() { return Alphabet(0); }
  static constexpr Alphabet y() { return Alphabet(1); }
  static constexpr Alphabet z() { return Alphabet(2); }
  /// The family Y^{(k)}, k >= 1.
  static constexpr Alphabet family(int k) { return Alphabet(2 + k); }
  static Alphabet parse(const std::string& name);

  constexpr int id() const { return id_; }
  std::string name() const;
  friend constexpr bool operator==(Alphabet, Alphabet) = default;
  friend constexpr auto operator<=>(Alphabet, Alphabet) = default;

 private:
  constexpr explicit Alphabet(int id) : id_(id) {}
  int id_ = 0;
};

/// A variable is an alphabet together with a positive index.
struct Variable {
  Alphabet alphabet;
  int index = 1;
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
  std::string name() const;
};

/// Packed sparse exponent record, sorted by (alphabet, index).
class Monomial {
 public:
  Monomial() = default;
  static Monomial power(Variable v, int e);
  /// Dense exponents for one alphabet.
  static Monomial from_exponents(Alphabet a, const std::vector<int>& exps);

  int degree() const { return degree_; }
  int exponent(Variable v) const;
  bool is_one() const { return factors_.empty(); }
  /// (variable, exponent) pairs in canonical order.
  std::vector<std::pair<Variable, int>> factors() const;
  /// Dense exponent vector of alphabet a with trailing zeros stripped.
  std::vector<int> exponents(Alphabet a) const;
  Monomial with_exponent(Variable v, int e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Term order: degree ascending, then lexicographically descending exponents.
  friend bool operator<(const Monomial& a, const Monomial& b);
  /// Lexicographic comparison on dense exponents, variables in canonical order.
  static int compare_lex(const Monomial& a, const Monomial& b);

  const std::vector<std::uint32_t>& packed() const { return factors_; }
  static std::uint32_t pack(Variable v, int e);
  static Variable unpack_variable(std::uint32_t f);
  static int unpack_exponent(std::uint32_t f) { return static_cast<int>(f & 0xffu); }
  static Monomial from_packed(std::vector<std::uint32_t> packed);

 private:
  std::vector<std::uint32_t> factors_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial monomial;
  Integer coeff;
};

/// Sparse polynomial with exact integer coefficients, terms kept in term order.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT: constants convert implicitly
  Polynomial(const Integer& c);  // NOLINT
  static Polynomial monomial(const Monomial& m, const Integer& c = 1);
  static Polynomial variable(Variable v);
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Monomial& m) const;
  int min_degree() const;
  int max_degree() const;
  int degree_in(Variable v) const;
  /// Largest index of a used variable of alphabet a (0 if unused).
  int max_index(Alphabet a) const;
  std::vector<Alphabet> alphabets() const;
  Polynomial lowest_degree_part() const;
  Polynomial homogeneous_part(int d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Integer& c);
  friend bool operator==(const Polynomial& p, const Polynomial& q);
  /// p + c * q in one pass.
  void add_scaled(const Polynomial& q, const Integer& c);
  Polynomial pow(int e) const;

  /// Applies an injective variable renaming.
  Polynomial rename(const std::function<Variable(Variable)>& f) const;
  /// Sets every variable of alphabet a to zero.
  Polynomial set_zero(Alphabet a) const;
  /// Exchanges two alphabets.
  Polynomial swap_alphabets(Alphabet a, Alphabet b) const;
  /// Substitutes polynomials for variables; unmapped variables stay.
  Polynomial substitute(const std::map<Variable, Polynomial>& images) const;

  Rational eval(const std::map<Variable, Rational>& point) const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// x_i, y_j, z_j shorthands.
Polynomial X(int i);
Polynomial Y(int j);
Polynomial Z(int j);
/// x_i + y_j - x_i y_j, the K-theoretic sum of two variables.
Polynomial ksum(const Polynomial& a, const Polynomial& b);

/// x_{a^i_j} -> j-th variable of targets[i].
Polynomial specialize(const Polynomial& p, const SetComposition& blocks, const std::vector<Alphabet>& targets);

Integer coefficient(const Polynomial& p, const Monomial& m);
Polynomial lowest_degree_part(const Polynomial& p);
Rational eval_rational(const Polynomial& p, const std::map<Variable, Rational>& point);

/// Result of x -> x/(x-1): p(x~) = numerator / prod (v - 1)^{powers[v]}.
struct TildeSubstitution {
  Polynomial numerator;
  std::map<Variable, int> powers;
};
TildeSubstitution rational_substitute_tilde(const Polynomial& p);

}  // namespace kschubert
