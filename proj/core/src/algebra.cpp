#include "a2/algebra.hpp"

#include <algorithm>

#include "a2/qsymbols.hpp"

namespace a2 {

std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Free: return "free";
    case AlgebraKind::PreNichols: return "pre-nichols";
    case AlgebraKind::Nichols: return "nichols";
    case AlgebraKind::Cleft: return "cleft";
  }
  return "?";
}

Algebra::Algebra(std::shared_ptr<const Braiding> braiding, AlgebraKind kind,
                 DeformationParams lambda)
    : braiding_(std::move(braiding)), kind_(kind) {
  if (!braiding_) throw Error("algebra without braiding");
  if (kind_ == AlgebraKind::Cleft) {
    lambda_ = std::move(lambda);
    mu112_ = lambda_.l112;
    mu122_ = lambda_.l122;
    nu1_ = lambda_.l1;
    nu2_ = lambda_.l2;
    nu12_ = lambda_.l12;
  } else if (!lambda.is_zero()) {
    throw Error("deformation parameters are only meaningful for cleft objects");
  }
  power_rules_ = kind_ == AlgebraKind::Nichols || kind_ == AlgebraKind::Cleft;
  qq12_ = braiding_->zeta(braiding_->q_exp() + braiding_->q12_exp());
}

const Cyclotomic& Algebra::nu(Letter l) const {
  switch (l) {
    case Letter::x1: return nu1_;
    case Letter::x2: return nu2_;
    case Letter::x12: return nu12_;
  }
  return nu1_;
}

void Algebra::require_rules() const {
  if (kind_ == AlgebraKind::Free)
    throw Error("the free algebra has no PBW normal form; use words and free_mul");
}

Element Algebra::apply_letter(Letter l, const Element& e) const {
  Element out;
  for (const auto& [m, c] : e) out.add_scaled(left_mul(l, m), c);
  return out;
}

const Element& Algebra::left_mul(Letter l, const Monomial& m) const {
  require_rules();
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(l, m);
  if (auto it = letter_cache_.find(key); it != letter_cache_.end()) return it->second;

  const int N = braiding_->N();
  Element out;
  switch (l) {
    case Letter::x2:
      if (power_rules_ && m.n2 + 1 == N)
        out.add({0, m.n12, m.n1}, nu2_);
      else
        out.add({m.n2 + 1, m.n12, m.n1}, 1);
      break;
    case Letter::x12:
      if (m.n2 == 0) {
        if (power_rules_ && m.n12 + 1 == N)
          out.add({0, 0, m.n1}, nu12_);
        else
          out.add({0, m.n12 + 1, m.n1}, 1);
      } else {
        Monomial rest{m.n2 - 1, m.n12, m.n1};
        out = apply_letter(Letter::x2, left_mul(Letter::x12, rest)) * qq12_;
        out.add(rest, mu122_);
      }
      break;
    case Letter::x1:
      if (m.n2 > 0) {
        Monomial rest{m.n2 - 1, m.n12, m.n1};
        out = apply_letter(Letter::x2, left_mul(Letter::x1, rest)) * braiding_->q12();
        out += left_mul(Letter::x12, rest);
      } else if (m.n12 > 0) {
        Monomial rest{0, m.n12 - 1, m.n1};
        out = apply_letter(Letter::x12, left_mul(Letter::x1, rest)) * qq12_;
        out.add(rest, mu112_);
      } else if (power_rules_ && m.n1 + 1 == N) {
        out.add({0, 0, 0}, nu1_);
      } else {
        out.add({0, 0, m.n1 + 1}, 1);
      }
      break;
  }
  return letter_cache_.emplace(key, std::move(out)).first->second;
}

const Element& Algebra::mul(const Monomial& a, const Monomial& b) const {
  require_rules();
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(a, b);
  if (auto it = product_cache_.find(key); it != product_cache_.end()) return it->second;
  Element acc(b);
  Word w = word_of(a);
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = apply_letter(*it, acc);
  return product_cache_.emplace(key, std::move(acc)).first->second;
}

Element Algebra::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out.add_scaled(mul(ma, mb), ca * cb);
  return out;
}

Element Algebra::normal_form(const Word& w) const {
  require_rules();
  Element acc(Monomial{});
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = apply_letter(*it, acc);
  return acc;
}

Element Algebra::normal_form(const FreeElement& f) const {
  Element out;
  for (const auto& [w, c] : f) out.add_scaled(normal_form(w), c);
  return out;
}

Cyclotomic Algebra::eps0(const Element& a) const {
  require_rules();
  return a.coefficient(Monomial{});
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.algebra || !b.algebra) throw Error("element without algebra context");
  if (a.algebra != b.algebra) {
    const Algebra& x = *a.algebra;
    const Algebra& y = *b.algebra;
    bool same = x.kind() == y.kind() && x.params() == y.params() && x.N() == y.N() &&
                x.braiding().order() == y.braiding().order() &&
                x.braiding().q_exp() == y.braiding().q_exp() &&
                x.braiding().q12_exp() == y.braiding().q12_exp();
    if (!same)
      throw Error("cannot multiply elements of " + to_string(x.kind()) + " and " +
                  to_string(y.kind()) + " contexts");
  }
  return {a.algebra, a.algebra->mul(a.terms, b.terms)};
}

// ---------------------------------------------------------------------------
// Literal rewriting engine.

namespace {

bool pair_redex(Letter a, Letter b) {
  return (a == Letter::x1 && b == Letter::x2) || (a == Letter::x1 && b == Letter::x12) ||
         (a == Letter::x12 && b == Letter::x2);
}

bool power_redex(const Algebra& alg, const Word& w, std::size_t i) {
  if (!alg.power_rules()) return false;
  std::size_t N = static_cast<std::size_t>(alg.N());
  if (i + N > w.size()) return false;
  for (std::size_t k = 1; k < N; ++k)
    if (w[i + k] != w[i]) return false;
  return true;
}

bool redex_at(const Algebra& alg, const Word& w, std::size_t i) {
  if (alg.kind() == AlgebraKind::Free) return false;
  return (i + 1 < w.size() && pair_redex(w[i], w[i + 1])) || power_redex(alg, w, i);
}

Word splice(const Word& w, std::size_t pos, std::size_t len, std::initializer_list<Letter> mid) {
  Word out(w.begin(), w.begin() + pos);
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), w.begin() + pos + len, w.end());
  return out;
}

Monomial monomial_of_normal_word(const Word& w) {
  Monomial m;
  for (Letter l : w) {
    if (l == Letter::x2) ++m.n2;
    if (l == Letter::x12) ++m.n12;
    if (l == Letter::x1) ++m.n1;
  }
  return m;
}

}  // namespace

int leftmost_redex(const Algebra& alg, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (redex_at(alg, w, i)) return static_cast<int>(i);
  return -1;
}

std::vector<int> redex_positions(const Algebra& alg, const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (redex_at(alg, w, i)) out.push_back(static_cast<int>(i));
  return out;
}

LinComb<Word> rewrite_step(const Algebra& alg, const Word& w, int pos) {
  if (pos < 0 || static_cast<std::size_t>(pos) >= w.size() || !redex_at(alg, w, pos))
    throw Error("no rewriting rule applies at position " + std::to_string(pos));
  const Braiding& br = alg.braiding();
  std::size_t i = static_cast<std::size_t>(pos);
  LinComb<Word> out;
  if (power_redex(alg, w, i)) {
    out.add(splice(w, i, alg.N(), {}), alg.nu(w[i]));
    return out;
  }
  Cyclotomic qq12 = br.zeta(br.q_exp() + br.q12_exp());
  Letter a = w[i], b = w[i + 1];
  if (a == Letter::x1 && b == Letter::x2) {
    out.add(splice(w, i, 2, {Letter::x2, Letter::x1}), br.q12());
    out.add(splice(w, i, 2, {Letter::x12}), 1);
  } else if (a == Letter::x1) {
    out.add(splice(w, i, 2, {Letter::x12, Letter::x1}), qq12);
    out.add(splice(w, i, 2, {}), alg.mu112());
  } else {
    out.add(splice(w, i, 2, {Letter::x2, Letter::x12}), qq12);
    out.add(splice(w, i, 2, {}), alg.mu122());
  }
  return out;
}

Element rewrite_word(const Algebra& alg, const Word& w) {
  if (alg.kind() == AlgebraKind::Free)
    throw Error("the free algebra has no rewriting rules");
  Element result;
  LinComb<Word> pending(w);
  while (!pending.is_zero()) {
    auto [word, coeff] = *pending.begin();
    pending.add(word, -coeff);
    int pos = leftmost_redex(alg, word);
    if (pos < 0) {
      result.add(monomial_of_normal_word(word), coeff);
      continue;
    }
    pending.add_scaled(rewrite_step(alg, word, pos), coeff);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Closed formulas (quantum Serre relations hold).

namespace {

void require_generic(const Algebra& alg, const char* what) {
  if (alg.kind() == AlgebraKind::Free) throw Error(std::string(what) + ": free context");
  if (alg.params().serre_deformed())
    throw Error(std::string(what) + " requires lambda112 = lambda122 = 0");
}

// Reduces y^e with y^N = nu; returns false when the monomial vanishes.
bool reduce_power(const Algebra& alg, Letter l, int& e, Cyclotomic& coeff) {
  if (!alg.power_rules()) return true;
  int N = alg.N();
  if (e < N) return true;
  coeff *= alg.nu(l).pow(e / N);
  e %= N;
  return !coeff.is_zero();
}

}  // namespace

Cyclotomic commutation_coeff(const Braiding& b, int n1, int s, int m2) {
  const auto& binom = b.qbinom();
  Cyclotomic out = binom(n1, s) * binom(m2, s) * q_factorial(s, b.q());
  long e = static_cast<long>(m2) * n1 - static_cast<long>(s) * (s + 1) / 2;
  return out * b.zeta(b.q12_exp() * e);
}

Element commute_x1n_x2m(const Algebra& alg, int n1, int m2) {
  require_generic(alg, "commute_x1n_x2m");
  if (n1 < 0 || m2 < 0) throw Error("negative exponent");
  if (alg.power_rules() && (n1 >= alg.N() || m2 >= alg.N()))
    throw Error("commute_x1n_x2m: exponents must be below N");
  Element out;
  for (int s = 0; s <= std::min(n1, m2); ++s)
    out.add({m2 - s, s, n1 - s}, commutation_coeff(alg.braiding(), n1, s, m2));
  return out;
}

Element mul_closed_generic(const Algebra& alg, const Monomial& n, const Monomial& m) {
  require_generic(alg, "mul_closed_generic");
  if (!alg.admissible(n) || !alg.admissible(m))
    throw Error("mul_closed_generic: exponents must be below N");
  const Braiding& br = alg.braiding();
  long qq12_exp = br.q_exp() + br.q12_exp();
  Element out;
  for (int s = 0; s <= std::min(n.n1, m.n2); ++s) {
    long e = static_cast<long>(n.n12) * (m.n2 - s) + static_cast<long>(n.n1 - s) * m.n12;
    Cyclotomic coeff = commutation_coeff(br, n.n1, s, m.n2) * br.zeta(qq12_exp * e);
    int a = n.n2 + m.n2 - s, b = n.n12 + m.n12 + s, c = n.n1 + m.n1 - s;
    if (!reduce_power(alg, Letter::x2, a, coeff)) continue;
    if (!reduce_power(alg, Letter::x12, b, coeff)) continue;
    if (!reduce_power(alg, Letter::x1, c, coeff)) continue;
    out.add({a, b, c}, coeff);
  }
  return out;
}

Cyclotomic eps0_closed(const Algebra& alg, const Monomial& n, const Monomial& m) {
  require_generic(alg, "eps0_closed");
  if (!alg.power_rules()) throw Error("eps0_closed needs a Nichols or cleft context");
  const int N = alg.N();
  if (!n.below(N) || !m.below(N)) throw Error("eps0_closed: exponents must be below N");
  const Braiding& br = alg.braiding();
  const Cyclotomic& q = br.q();
  auto q12p = [&](long e) { return br.zeta(br.q12_exp() * e); };
  auto qq12p = [&](long e) { return br.zeta((br.q_exp() + br.q12_exp()) * e); };
  auto falling = [&](int top, int count) {  // (top)!/(top-count)!
    Cyclotomic out(1);
    for (int i = top - count + 1; i <= top; ++i) out *= q_int(i, q);
    return out;
  };
  const Cyclotomic& l1 = alg.nu(Letter::x1);
  const Cyclotomic& l2 = alg.nu(Letter::x2);
  const Cyclotomic& l12 = alg.nu(Letter::x12);
  auto zero_or_N = [N](int v) { return v == 0 || v == N; };
  auto N_or_2N = [N](int v) { return v == N || v == 2 * N; };

  int a = n.n2 + m.n2, b = n.n12 + m.n12, c = n.n1 + m.n1;
  if (zero_or_N(a) && zero_or_N(b) && zero_or_N(c)) {
    return q12p(static_cast<long>(n.n1) * m.n2) *
           qq12p(static_cast<long>(n.n12) * m.n2 + static_cast<long>(n.n1) * m.n12) *
           l2.pow(a / N) * l12.pow(b / N) * l1.pow(c / N);
  }
  if (n.n2 == 0 && m.n1 == 0 && n.n1 == m.n2 && n.n1 > 0 && N_or_2N(b + n.n1)) {
    long e = (static_cast<long>(n.n1) * n.n1 - n.n1) / 2;
    return q_factorial(n.n1, q) * q12p(e) * l12.pow((b + n.n1) / N);
  }
  if (m.n1 == 0 && 0 < n.n1 && n.n1 < m.n2 && a == N + n.n1 && N_or_2N(b + n.n1)) {
    long e = (2L * n.n1 * m.n2 - (static_cast<long>(n.n1) * n.n1 + n.n1)) / 2;
    return falling(m.n2, n.n1) * q12p(e) * qq12p(static_cast<long>(n.n12) * (m.n2 - n.n1)) * l2 *
           l12.pow((b + n.n1) / N);
  }
  if (n.n2 == 0 && 0 < m.n2 && m.n2 < n.n1 && c == N + m.n2 && N_or_2N(b + m.n2)) {
    long e = (2L * n.n1 * m.n2 - (static_cast<long>(m.n2) * m.n2 + m.n2)) / 2;
    return falling(n.n1, m.n2) * q12p(e) * qq12p(static_cast<long>(m.n12) * (n.n1 - m.n2)) *
           l12.pow((b + m.n2) / N) * l1;
  }
  if (a == c && a > N && (a + b == 2 * N || a + b == 3 * N)) {
    int s = a - N;
    long e = static_cast<long>(n.n12) * (m.n2 - s) + static_cast<long>(n.n1 - s) * m.n12;
    return commutation_coeff(br, n.n1, s, m.n2) * qq12p(e) * l2 * l12.pow((a + b - N) / N) * l1;
  }
  return Cyclotomic(0);
}

bool locally_confluent(const Algebra& alg, const Word& w) {
  Element target = rewrite_word(alg, w);
  for (int pos : redex_positions(alg, w)) {
    Element via;
    for (const auto& [v, c] : rewrite_step(alg, w, pos)) via.add_scaled(rewrite_word(alg, v), c);
    if (!(via == target)) return false;
  }
  return true;
}

void for_each_word(int max_len, const std::function<void(const Word&)>& f) {
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      f(w);
      if (len == max_len) continue;
      for (Letter l : {Letter::x2, Letter::x12, Letter::x1}) {
        Word v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
}

}  // namespace a2
