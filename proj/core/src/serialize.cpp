#include "a2/serialize.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace a2 {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string term(const Rational& c, int e, bool first) {
  std::string out;
  Rational a = abs(c);
  bool neg = c < 0;
  if (first) out += neg ? "-" : "";
  else out += neg ? " - " : " + ";
  std::string power = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
  if (e == 0) out += to_string(a);
  else if (a == 1) out += power;
  else out += to_string(a) + "*" + power;
  return out;
}

}  // namespace

std::string q_lift(const Braiding& br, const Cyclotomic& c) {
  const int N = br.N();
  const unsigned L = br.order();
  if (c.is_zero()) return "0";
  if (L != static_cast<unsigned>(N) || (c.order() != 1 && L % c.order() != 0)) return c.to_string("z");
  // zeta = q^k with k q_exp = 1 mod N.
  long k = 1;
  while ((k * br.q_exp()) % N != 1) ++k;
  const Cyclotomic e = c.embed(L);
  std::vector<Rational> poly(N);
  for (std::size_t i = 0; i < e.coeffs().size(); ++i) poly[(k * static_cast<long>(i)) % N] += e.coeffs()[i];
  // Canonical form in the generator q, padded to length N.
  std::vector<Rational> v = Cyclotomic(L, poly).coeffs();
  v.resize(N);
  if (is_prime(N)) {
    // 1 + q + ... + q^{N-1} = 0: shift all coefficients by the candidate that
    // leaves the most zeros, then the smallest absolute sum.
    auto score = [&](const Rational& t) {
      int zeros = 0;
      Rational l1 = 0;
      for (const auto& x : v) {
        zeros += x == t;
        l1 += abs(x - t);
      }
      return std::make_pair(-zeros, l1);
    };
    Rational best = 0;
    auto best_score = score(best);
    for (const auto& x : v)
      if (auto s = score(x); s < best_score) {
        best = x;
        best_score = s;
      }
    for (auto& x : v) x -= best;
  }
  std::string out;
  for (int i = N - 1; i >= 0; --i)
    if (v[i] != 0) out += term(v[i], i, out.empty());
  return out.empty() ? "0" : out;
}

namespace {

class ScalarParser {
public:
  ScalarParser(const Braiding& br, std::string_view text) : br_(br), text_(text) {}

  Cyclotomic parse() {
    Cyclotomic v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("cannot parse scalar '" + std::string(text_) + "': " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Cyclotomic expr() {
    Cyclotomic v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }
  Cyclotomic term() {
    Cyclotomic v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) {
        Cyclotomic d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else return v;
    }
  }
  Cyclotomic unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Cyclotomic power() {
    Cyclotomic base = atom();
    if (accept('^')) {
      bool neg = accept('-');
      long e = integer();
      if (neg) {
        if (base.is_zero()) fail("zero to a negative power");
        e = -e;
      }
      return base.pow(e);
    }
    return base;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }
  Cyclotomic atom() {
    skip();
    if (accept('(')) {
      Cyclotomic v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Cyclotomic(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    for (const auto& [name, value] : symbols())
      if (text_.substr(pos_, name.size()) == name) {
        pos_ += name.size();
        return value;
      }
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
  }
  std::vector<std::pair<std::string, Cyclotomic>> symbols() const {
    // Longest names first so "q12" is not read as "q" followed by "12".
    return {{"q12", br_.q12()}, {"q21", br_.q21()}, {"q", br_.q()}, {"z", br_.zeta(1)}};
  }

  const Braiding& br_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_scalar(const Braiding& br, std::string_view text) { return ScalarParser(br, text).parse(); }

std::vector<Cyclotomic> parse_scalar_list(const Braiding& br, std::string_view text, std::size_t count) {
  std::vector<Cyclotomic> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_scalar(br, text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != count)
    throw Error("expected " + std::to_string(count) + " comma-separated values, got " + std::to_string(out.size()));
  return out;
}

json to_json(const Cyclotomic& c) {
  if (c.is_rational()) return {{"order", 1}, {"coeffs", json::array({to_string(c.rational_part())})}};
  json coeffs = json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(to_string(x));
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) throw Error("malformed scalar JSON");
  unsigned order = j.at("order").get<unsigned>();
  if (order == 0) throw Error("scalar order must be positive");
  std::vector<Rational> coeffs;
  for (const auto& x : j.at("coeffs")) coeffs.push_back(parse_rational(x.get<std::string>()));
  return Cyclotomic(order, coeffs);
}

json to_json(const Monomial& m) { return json::array({m.n2, m.n12, m.n1}); }

Monomial monomial_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error("malformed monomial JSON");
  Monomial m{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
  if (m.n2 < 0 || m.n12 < 0 || m.n1 < 0) throw Error("negative exponent in monomial JSON");
  return m;
}

json to_json(const Element& e) {
  json out = json::array();
  for (const auto& [m, c] : e) out.push_back({{"monomial", to_json(m)}, {"coeff", to_json(c)}});
  return out;
}

Element element_from_json(const json& j) {
  Element out;
  for (const auto& t : j) out.add(monomial_from_json(t.at("monomial")), cyclotomic_from_json(t.at("coeff")));
  return out;
}

json to_json(const DeformationParams& l) {
  return {{"l1", to_json(l.l1)}, {"l2", to_json(l.l2)}, {"l12", to_json(l.l12)},
          {"l112", to_json(l.l112)}, {"l122", to_json(l.l122)}};
}

DeformationParams params_from_json(const json& j) {
  return {cyclotomic_from_json(j.at("l1")), cyclotomic_from_json(j.at("l2")), cyclotomic_from_json(j.at("l12")),
          cyclotomic_from_json(j.at("l112")), cyclotomic_from_json(j.at("l122"))};
}

json scalar_json(const Braiding& br, const Cyclotomic& c) {
  json out = to_json(c);
  out["q"] = q_lift(br, c);
  return out;
}

std::string monomial_key(const Monomial& m) {
  return std::to_string(m.n2) + "," + std::to_string(m.n12) + "," + std::to_string(m.n1);
}

json to_json(const Braiding& br, const CocycleTable& t) {
  json entries = json::array();
  const auto basis = pbw_basis(t.N);
  for (const auto& a : basis)
    for (const auto& b : basis)
      entries.push_back({{"a", to_json(a)}, {"b", to_json(b)}, {"value", scalar_json(br, t(a, b))}});
  return {{"N", t.N},           {"case", to_string(t.kind)}, {"order", br.order()},
          {"q_exp", br.q_exp()}, {"q12_exp", br.q12_exp()},   {"lambda", to_json(t.params)},
          {"entries", entries}};
}

CocycleTable table_from_json(const json& j) {
  CocycleTable t;
  t.N = j.at("N").get<int>();
  if (t.N < 1) throw Error("table JSON: bad N");
  t.kind = parse_case(j.at("case").get<std::string>());
  t.params = params_from_json(j.at("lambda"));
  t.values = Bifunctional(t.N);
  for (const auto& e : j.at("entries")) {
    Monomial a = monomial_from_json(e.at("a")), b = monomial_from_json(e.at("b"));
    if (!a.below(t.N) || !b.below(t.N)) throw Error("table JSON: monomial out of range");
    t.values.set(a, b, cyclotomic_from_json(e.at("value")));
  }
  return t;
}

json to_json(const Braiding& br, const SectionMap& g) {
  json values = json::array();
  for (const auto& b : pbw_basis(g.N)) {
    json terms = json::array();
    for (const auto& [m, c] : g(b)) terms.push_back({{"monomial", to_json(m)}, {"coeff", scalar_json(br, c)}});
    values.push_back({{"b", to_json(b)}, {"gamma", terms}});
  }
  return {{"N", g.N}, {"case", to_string(g.kind)}, {"lambda", to_json(g.params)}, {"verified", g.verified},
          {"values", values}};
}

json to_json(const Braiding& br, const Functional& f) {
  json out = json::array();
  for (const auto& b : pbw_basis(f.N()))
    if (!f(b).is_zero()) out.push_back({{"monomial", to_json(b)}, {"value", scalar_json(br, f(b))}});
  return out;
}

json to_json(const Braiding& br, const HochschildCocycle& h) {
  static const char* names[5] = {"e1", "e2", "e12", "e112", "e122"};
  json e = json::object();
  for (std::size_t i = 0; i < 5; ++i) e[names[i]] = scalar_json(br, h.e[i]);
  json beta = json::array();
  for (std::size_t i = 0; i < 8; ++i)
    beta.push_back({{"monomial", to_json(invariant_monomials()[i])}, {"coeff", scalar_json(br, h.beta[i])}});
  return {{"e", e}, {"beta", beta}};
}

json to_json(const Braiding& br, const PurityVerdict& v) {
  json out = {{"verdict", to_string(v.tag)}};
  if (v.condition) out["condition"] = std::string(1, v.condition);
  out["verified"] = v.verified;
  if (v.witness) {
    json alpha = json::array();
    for (std::size_t i = 0; i < 8; ++i)
      alpha.push_back(
          {{"monomial", to_json(invariant_monomials()[i])}, {"coeff", scalar_json(br, v.witness->alpha[i])}});
    out["witness"] = {{"alpha", alpha}, {"eta", to_json(br, v.witness->eta)}};
  }
  return out;
}

std::string to_csv(const Braiding& br, const Bifunctional& t) {
  std::ostringstream os;
  os << "a,b,value\n";
  const auto basis = pbw_basis(t.N());
  for (const auto& a : basis)
    for (const auto& b : basis)
      os << '"' << monomial_key(a) << "\",\"" << monomial_key(b) << "\",\"" << q_lift(br, t(a, b)) << "\"\n";
  return os.str();
}

std::string to_markdown(const Braiding& br, const Bifunctional& t) {
  std::ostringstream os;
  const auto basis = pbw_basis(t.N());
  os << "| a \\ b |";
  for (const auto& b : basis) os << ' ' << to_string(b) << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < basis.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& a : basis) {
    os << "| " << to_string(a) << " |";
    for (const auto& b : basis) os << ' ' << q_lift(br, t(a, b)) << " |";
    os << '\n';
  }
  return os.str();
}

}  // namespace a2
