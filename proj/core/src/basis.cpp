#include "a2/basis.hpp"

#include <sstream>

#include "a2/cyclotomic.hpp"

namespace a2 {

Weight weight_of(const Word& w) {
  Weight out;
  for (Letter l : w) {
    if (l != Letter::x2) ++out.ones;
    if (l != Letter::x1) ++out.twos;
  }
  return out;
}

int degree_of(const Word& w) {
  Weight wt = weight_of(w);
  return wt.ones + wt.twos;
}

Word word_of(const Monomial& m) {
  Word w;
  w.reserve(m.n2 + m.n12 + m.n1);
  w.insert(w.end(), m.n2, Letter::x2);
  w.insert(w.end(), m.n12, Letter::x12);
  w.insert(w.end(), m.n1, Letter::x1);
  return w;
}

Word parse_word(const std::string& digits) {
  Word w;
  for (char c : digits) {
    if (c == '1') {
      w.push_back(Letter::x1);
    } else if (c == '2') {
      w.push_back(Letter::x2);
    } else if (c != ' ' && c != ',') {
      throw Error("bad letter '" + std::string(1, c) + "' in word \"" + digits + "\"");
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += l == Letter::x1 ? "x1" : l == Letter::x2 ? "x2" : "x12";
  }
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  auto part = [&](const char* name, int e) {
    if (e == 0) return;
    if (!first) os << ' ';
    first = false;
    os << name;
    if (e > 1) os << '^' << e;
  };
  part("x2", m.n2);
  part("x12", m.n12);
  part("x1", m.n1);
  return os.str();
}

Monomial parse_monomial(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos)
        throw Error("");
      if (v < 0) throw Error("");
      parts.push_back(v);
    } catch (const std::exception&) {
      throw Error("malformed monomial \"" + text + "\" (expected n2,n12,n1)");
    }
  }
  if (parts.size() != 3) throw Error("malformed monomial \"" + text + "\" (expected n2,n12,n1)");
  return {parts[0], parts[1], parts[2]};
}

std::vector<Monomial> pbw_basis(int bound) {
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(bound) * bound * bound);
  for (int a = 0; a < bound; ++a)
    for (int b = 0; b < bound; ++b)
      for (int c = 0; c < bound; ++c) out.push_back({a, b, c});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

FreeElement free_mul(const FreeElement& a, const FreeElement& b) {
  FreeElement out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) out.add(concat(u, v), cu * cv);
  return out;
}

}  // namespace a2
