#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "a2/cyclotomic.hpp"

namespace a2 {

/// Finite-support linear combination over Cyclotomic scalars.
/// Zero coefficients are never stored, so equality is structural.
template <class Key>
class LinComb {
public:
  using key_type = Key;
  using map_type = std::map<Key, Cyclotomic>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  LinComb(const Key& key, Cyclotomic coeff = Cyclotomic(1)) { add(key, coeff); }  // NOLINT

  void add(const Key& key, const Cyclotomic& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Adds scale * other.
  void add_scaled(const LinComb& other, const Cyclotomic& scale) {
    if (scale.is_zero()) return;
    bool unit = scale.is_one();
    for (const auto& [k, c] : other.terms_) add(k, unit ? c : c * scale);
  }

  Cyclotomic coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Cyclotomic& scale) {
    if (scale.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= scale;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Cyclotomic& s) { return a *= s; }
  friend LinComb operator*(const Cyclotomic& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Applies a key-to-combination map linearly.
  template <class OutKey, class F>
  LinComb<OutKey> map_linear(F&& f) const {
    LinComb<OutKey> out;
    for (const auto& [k, c] : terms_) out.add_scaled(f(k), c);
    return out;
  }

private:
  map_type terms_;
};

template <class A, class B>
using Tensor = LinComb<std::pair<A, B>>;

template <class A, class B, class C>
using TripleTensor = LinComb<std::tuple<A, B, C>>;

}  // namespace a2
