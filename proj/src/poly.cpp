#include "kschubert/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace kschubert {

Alphabet Alphabet::parse(const std::string& name) {
  if (name == "x") return x();
  if (name == "y") return y();
  if (name == "z") return z();
  if (name.size() > 1 && name[0] == 'Y') {
    std::size_t used = 0;
    const int k = std::stoi(name.substr(1), &used);
    if (used == name.size() - 1 && k >= 1 && k < 250) return family(k);
  }
  throw std::invalid_argument("unknown alphabet: " + name);
}

std::string Alphabet::name() const {
  switch (id_) {
    case 0: return "x";
    case 1: return "y";
    case 2: return "z";
    default: return "Y" + std::to_string(id_ - 2);
  }
}

std::string Variable::name() const {
  if (alphabet.id() > 2) return alphabet.name() + "_" + std::to_string(index);
  return alphabet.name() + std::to_string(index);
}

std::uint32_t Monomial::pack(Variable v, int e) {
  if (v.index < 1 || v.index > 0xffff) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > 0xff) throw std::out_of_range("exponent out of range");
  return (static_cast<std::uint32_t>(v.alphabet.id()) << 24) |
         (static_cast<std::uint32_t>(v.index) << 8) | static_cast<std::uint32_t>(e);
}

Variable Monomial::unpack_variable(std::uint32_t f) {
  const int id = static_cast<int>(f >> 24);
  const Alphabet a = id == 0 ? Alphabet::x() : id == 1 ? Alphabet::y() : id == 2 ? Alphabet::z() : Alphabet::family(id - 2);
  return {a, static_cast<int>((f >> 8) & 0xffffu)};
}

Monomial Monomial::from_packed(std::vector<std::uint32_t> packed) {
  Monomial m;
  m.factors_ = std::move(packed);
  for (std::uint32_t f : m.factors_) m.degree_ += unpack_exponent(f);
  return m;
}

Monomial Monomial::power(Variable v, int e) {
  Monomial m;
  if (e > 0) {
    m.factors_.push_back(pack(v, e));
    m.degree_ = e;
  }
  return m;
}

Monomial Monomial::from_exponents(Alphabet a, const std::vector<int>& exps) {
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    if (exps[i] > 0) {
      m.factors_.push_back(pack({a, static_cast<int>(i) + 1}, exps[i]));
      m.degree_ += exps[i];
    }
  }
  return m;
}

int Monomial::exponent(Variable v) const {
  const std::uint32_t key = pack(v, 0);
  auto it = std::lower_bound(factors_.begin(), factors_.end(), key);
  if (it != factors_.end() && (*it & ~0xffu) == key) return unpack_exponent(*it);
  return 0;
}

std::vector<std::pair<Variable, int>> Monomial::factors() const {
  std::vector<std::pair<Variable, int>> out;
  for (std::uint32_t f : factors_) out.emplace_back(unpack_variable(f), unpack_exponent(f));
  return out;
}

std::vector<int> Monomial::exponents(Alphabet a) const {
  std::vector<int> out;
  for (std::uint32_t f : factors_) {
    const Variable v = unpack_variable(f);
    if (v.alphabet != a) continue;
    out.resize(v.index, 0);
    out[v.index - 1] = unpack_exponent(f);
  }
  return out;
}

Monomial Monomial::with_exponent(Variable v, int e) const {
  const std::uint32_t key = pack(v, 0);
  Monomial m = *this;
  auto it = std::lower_bound(m.factors_.begin(), m.factors_.end(), key);
  if (it != m.factors_.end() && (*it & ~0xffu) == key) {
    m.degree_ -= unpack_exponent(*it);
    if (e == 0) {
      m.factors_.erase(it);
    } else {
      *it = pack(v, e);
    }
  } else if (e > 0) {
    m.factors_.insert(it, pack(v, e));
  }
  m.degree_ += e;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    const std::uint32_t vi = *i & ~0xffu, vj = *j & ~0xffu;
    if (vi < vj) {
      m.factors_.push_back(*i++);
    } else if (vj < vi) {
      m.factors_.push_back(*j++);
    } else {
      const int e = Monomial::unpack_exponent(*i) + Monomial::unpack_exponent(*j);
      if (e > 0xff) throw std::out_of_range("exponent out of range");
      m.factors_.push_back(vi | static_cast<std::uint32_t>(e));
      ++i;
      ++j;
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

int Monomial::compare_lex(const Monomial& a, const Monomial& b) {
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    const std::uint32_t vi = *i & ~0xffu, vj = *j & ~0xffu;
    if (vi < vj) return 1;
    if (vj < vi) return -1;
    const int ei = unpack_exponent(*i), ej = unpack_exponent(*j);
    if (ei != ej) return ei > ej ? 1 : -1;
    ++i;
    ++j;
  }
  if (i != a.factors_.end()) return 1;
  if (j != b.factors_.end()) return -1;
  return 0;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return Monomial::compare_lex(a, b) > 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t f : m.packed()) {
    h ^= f;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Monomial(), Integer(c)});
}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(Variable v) { return monomial(Monomial::power(v, 1)); }

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

int Polynomial::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.front().monomial.degree();
}

int Polynomial::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.back().monomial.degree();
}

int Polynomial::degree_in(Variable v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(v));
  return d;
}

int Polynomial::max_index(Alphabet a) const {
  int n = 0;
  for (const auto& t : terms_) {
    for (std::uint32_t f : t.monomial.packed()) {
      const Variable v = Monomial::unpack_variable(f);
      if (v.alphabet == a) n = std::max(n, v.index);
    }
  }
  return n;
}

std::vector<Alphabet> Polynomial::alphabets() const {
  std::vector<Alphabet> out;
  for (const auto& t : terms_) {
    for (std::uint32_t f : t.monomial.packed()) {
      const Alphabet a = Monomial::unpack_variable(f).alphabet;
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial Polynomial::lowest_degree_part() const {
  if (terms_.empty()) throw std::domain_error("lowest degree part of the zero polynomial");
  return homogeneous_part(terms_.front().monomial.degree());
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p;
  for (const auto& t : terms_) {
    if (t.monomial.degree() == d) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void Polynomial::add_scaled(const Polynomial& q, const Integer& c) {
  if (c == 0 || q.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto i = terms_.begin();
  auto j = q.terms_.begin();
  while (i != terms_.end() || j != q.terms_.end()) {
    if (j == q.terms_.end() || (i != terms_.end() && i->monomial < j->monomial)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->monomial < i->monomial) {
      out.push_back({j->monomial, j->coeff * c});
      ++j;
    } else {
      Integer s = i->coeff + j->coeff * c;
      if (s != 0) out.push_back({std::move(i->monomial), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  add_scaled(q, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  add_scaled(q, -1);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (q.terms_.size() == 1 && q.terms_[0].monomial.is_one()) return p * q.terms_[0].coeff;
  if (p.terms_.size() == 1 && p.terms_[0].monomial.is_one()) return q * p.terms_[0].coeff;
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(p.terms_.size() * q.terms_.size());
  Integer prod;
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) {
      mpz_mul(prod.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
      acc[a.monomial * b.monomial] += prod;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  Polynomial r;
  r.terms_ = std::move(terms);
  return r;
}

Polynomial operator*(Polynomial p, const Integer& c) {
  if (c == 0) return {};
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  *this = *this * q;
  return *this;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    if (!(p.terms_[i].monomial == q.terms_[i].monomial) || p.terms_[i].coeff != q.terms_[i].coeff) return false;
  }
  return true;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

Polynomial Polynomial::rename(const std::function<Variable(Variable)>& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> packed;
    for (std::uint32_t g : t.monomial.packed()) {
      packed.push_back(Monomial::pack(f(Monomial::unpack_variable(g)), Monomial::unpack_exponent(g)));
    }
    std::sort(packed.begin(), packed.end());
    for (std::size_t k = 1; k < packed.size(); ++k) {
      if ((packed[k] & ~0xffu) == (packed[k - 1] & ~0xffu)) throw std::invalid_argument("renaming is not injective");
    }
    out.push_back({Monomial::from_packed(std::move(packed)), t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::set_zero(Alphabet a) const {
  Polynomial p;
  for (const auto& t : terms_) {
    bool uses = false;
    for (std::uint32_t f : t.monomial.packed()) uses = uses || Monomial::unpack_variable(f).alphabet == a;
    if (!uses) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::swap_alphabets(Alphabet a, Alphabet b) const {
  return rename([a, b](Variable v) {
    if (v.alphabet == a) return Variable{b, v.index};
    if (v.alphabet == b) return Variable{a, v.index};
    return v;
  });
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial>& images) const {
  Polynomial out;
  for (const auto& t : terms_) {
    Polynomial term = monomial(Monomial(), t.coeff);
    Monomial rest;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto it = images.find(v);
      if (it == images.end()) {
        rest = rest * Monomial::power(v, e);
      } else {
        term *= it->second.pow(e);
      }
    }
    out += term * monomial(rest);
  }
  return out;
}

Rational Polynomial::eval(const std::map<Variable, Rational>& point) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational value = t.coeff;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("no value for variable " + v.name());
      for (int k = 0; k < e; ++k) value *= it->second;
    }
    total += value;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    Integer c = t.coeff;
    if (k > 0) {
      s += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    std::string mono;
    for (const auto& [v, e] : t.monomial.factors()) {
      if (!mono.empty()) mono += "*";
      mono += v.name();
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

Polynomial X(int i) { return Polynomial::variable({Alphabet::x(), i}); }
Polynomial Y(int j) { return Polynomial::variable({Alphabet::y(), j}); }
Polynomial Z(int j) { return Polynomial::variable({Alphabet::z(), j}); }

Polynomial ksum(const Polynomial& a, const Polynomial& b) { return a + b - a * b; }

Polynomial specialize(const Polynomial& p, const SetComposition& blocks, const std::vector<Alphabet>& targets) {
  if (targets.size() != blocks.size()) throw std::invalid_argument("one target alphabet per block required");
  std::map<int, Variable> image;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      image[blocks[i][j]] = Variable{targets[i], static_cast<int>(j) + 1};
    }
  }
  return p.rename([&image](Variable v) {
    if (v.alphabet != Alphabet::x()) throw std::invalid_argument("specialize acts on the x alphabet only");
    auto it = image.find(v.index);
    if (it == image.end()) throw std::invalid_argument("variable index outside the composition");
    return it->second;
  });
}

Integer coefficient(const Polynomial& p, const Monomial& m) { return p.coefficient(m); }
Polynomial lowest_degree_part(const Polynomial& p) { return p.lowest_degree_part(); }
Rational eval_rational(const Polynomial& p, const std::map<Variable, Rational>& point) { return p.eval(point); }

TildeSubstitution rational_substitute_tilde(const Polynomial& p) {
  TildeSubstitution out;
  for (const auto& t : p.terms()) {
    for (const auto& [v, e] : t.monomial.factors()) {
      int& d = out.powers[v];
      d = std::max(d, e);
    }
  }
  std::map<Variable, std::vector<Polynomial>> shifted;  // (v - 1)^k, k = 0..D_v
  for (const auto& [v, d] : out.powers) {
    auto& pw = shifted[v];
    pw.push_back(Polynomial(1));
    const Polynomial base = Polynomial::variable(v) - Polynomial(1);
    for (int k = 1; k <= d; ++k) pw.push_back(pw.back() * base);
  }
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::monomial(t.monomial, t.coeff);
    for (const auto& [v, d] : out.powers) term *= shifted[v][d - t.monomial.exponent(v)];
    out.numerator += term;
  }
  return out;
}

}  // namespace kschubert
