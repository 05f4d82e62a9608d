#include "kschubert/io.hpp"

#include <sstream>
#include <stdexcept>

namespace kschubert {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list: " + s);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: " + item);
    }
    if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

Permutation parse_permutation(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty permutation");
  std::vector<int> vals;
  if (s.find(',') == std::string::npos && s.size() > 1) {
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation: " + s);
      vals.push_back(c - '0');
    }
  } else {
    vals = parse_int_list(s);
  }
  return Permutation(std::move(vals));
}

Json to_json(const Permutation& w, int n) {
  return Json(n > 0 ? w.one_line(std::max(n, w.size())) : w.one_line(w.size()));
}

Json to_json(const SetComposition& A) { return Json(A.parts()); }

Json to_json(const Polynomial& p) {
  Json alphabets = Json::object();
  for (Alphabet a : p.alphabets()) alphabets[a.name()] = p.max_index(a);
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json exps = Json::object();
    for (Alphabet a : p.alphabets()) {
      std::vector<int> e = t.monomial.exponents(a);
      if (!e.empty()) exps[a.name()] = e;
    }
    terms.push_back({{"coeff", t.coeff.get_str()}, {"exps", exps}});
  }
  return {{"alphabets", alphabets}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Term> terms;
  for (const Json& t : j.at("terms")) {
    Monomial m;
    for (const auto& [name, exps] : t.at("exps").items()) {
      const Alphabet a = Alphabet::parse(name);
      m = m * Monomial::from_exponents(a, exps.get<std::vector<int>>());
    }
    terms.push_back({m, Integer(t.at("coeff").get<std::string>())});
  }
  return Polynomial::from_terms(std::move(terms));
}

Json to_json(const BasisExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& [w, c] : e.coeffs) coeffs.push_back({{"w", to_json(w, e.N)}, {"c", c.get_str()}});
  return {{"N", e.N}, {"coeffs", coeffs}};
}

namespace {

Json positions_json(std::vector<Position> ps) {
  std::sort(ps.begin(), ps.end());
  Json out = Json::array();
  for (const auto& [i, j] : ps) out.push_back({i, j});
  return out;
}

}  // namespace

Json to_json(const RcGraph& R) {
  return {{"n", R.n}, {"w", to_json(R.permutation(), R.n)}, {"crossings", positions_json(R.crossings)}};
}

Json to_json(const MarkedRcGraph& R) {
  Json j = to_json(R.base);
  j["marks"] = positions_json(R.marks);
  j["side"] = R.side == Side::right ? "right" : "left";
  return j;
}

Json to_json(const DoubleRcGraph& D) {
  return {{"n", D.n},
          {"u", to_json(D.u, D.n)},
          {"v", to_json(D.v, D.n)},
          {"crossings", positions_json(D.positions())}};
}

Json to_json(const MarkedChain& c, int n) {
  Json covers = Json::array();
  for (const ChainCover& cv : c.covers) covers.push_back({{"t", {cv.a, cv.b}}, {"marked", cv.marked}});
  return {{"start", to_json(c.start, n)}, {"covers", covers}};
}

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::grothendieck: return "G";
    case Family::schubert: return "S";
    case Family::h: return "H";
  }
  return "?";
}

}  // namespace

Json to_json(const SubstitutionExpansion& e) {
  Json alphabets = Json::array();
  for (Alphabet a : e.alphabets) alphabets.push_back(a.name());
  Json terms = Json::array();
  for (const auto& [key, c] : e.terms) {
    Json perms = Json::array();
    for (std::size_t i = 0; i < key.perms.size(); ++i) perms.push_back(to_json(key.perms[i], e.ranks.at(i)));
    terms.push_back({{"power", key.power}, {"perms", perms}, {"c", c.get_str()}});
  }
  Json j = {{"family", family_name(e.family)}};
  if (e.power_alphabet) j["power_variable"] = Variable{*e.power_alphabet, 1}.name();
  j["alphabets"] = alphabets;
  j["ranks"] = e.ranks;
  j["terms"] = terms;
  return j;
}

std::string to_text(const BasisExpansion& e) {
  if (e.coeffs.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : e.coeffs) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Integer a = abs(c);
    if (a != 1) s += a.get_str() + "*";
    s += "G" + w.to_string(e.N);
  }
  return s;
}

std::string to_text(const MarkedChain& c, int n) {
  std::string s = c.start.to_string(n);
  Permutation cur = c.start;
  for (const ChainCover& cv : c.covers) {
    cur = cur * Permutation::transposition(cv.a, cv.b);
    const std::string label = "(" + std::to_string(cv.a) + "," + std::to_string(cv.b) + ")";
    s += " -" + (cv.marked ? "[" + label + "]" : label) + "-> " + cur.to_string(n);
  }
  return s;
}

std::string to_text(const SubstitutionExpansion& e) {
  if (e.terms.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : e.terms) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Integer a = abs(c);
    std::string body;
    if (key.power > 0) {
      body = Variable{*e.power_alphabet, 1}.name();
      if (key.power > 1) body += "^" + std::to_string(key.power);
    }
    for (std::size_t i = 0; i < key.perms.size(); ++i) {
      if (!body.empty()) body += "*";
      body += std::string(family_name(e.family)) + key.perms[i].to_string(e.ranks.at(i)) + "(" + e.alphabets.at(i).name() +
              ")";
    }
    if (a != 1 || body.empty()) s += a.get_str() + (body.empty() ? "" : "*");
    s += body;
  }
  return s;
}

}  // namespace kschubert
