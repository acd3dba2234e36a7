#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace pathcrystal {

// Exponent vector of a monomial in x_1..x_k.
struct Mono {
  std::vector<int> e;

  friend Mono operator+(Mono a, const Mono& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i) a.e[i] += b.e[i];
    return a;
  }
  friend auto operator<=>(const Mono&, const Mono&) = default;
};

// Monomial with a q-grade in front, for characters on the x_1...x_n = 1 slice.
struct GradedMono {
  int q = 0;
  Mono x;

  friend GradedMono operator+(GradedMono a, const GradedMono& b) {
    a.q += b.q;
    a.x = a.x + b.x;
    return a;
  }
  friend auto operator<=>(const GradedMono&, const GradedMono&) = default;
};

// Finitely supported exponential sum with exact integer coefficients; keys
// need ordering and addition.  Zero coefficients are never stored.
template <class Key>
struct LaurentTable {
  std::map<Key, long long> terms;

  static LaurentTable monomial(const Key& k, long long c = 1) {
    LaurentTable t;
    t.add(k, c);
    return t;
  }

  void add(const Key& k, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  long long coef(const Key& k) const {
    auto it = terms.find(k);
    return it == terms.end() ? 0 : it->second;
  }

  long long mass() const {
    long long m = 0;
    for (const auto& [k, c] : terms) m += c;
    return m;
  }

  friend LaurentTable operator+(LaurentTable a, const LaurentTable& b) {
    for (const auto& [k, c] : b.terms) a.add(k, c);
    return a;
  }

  friend LaurentTable operator*(const LaurentTable& a, const LaurentTable& b) {
    LaurentTable r;
    for (const auto& [ka, ca] : a.terms)
      for (const auto& [kb, cb] : b.terms) r.add(ka + kb, ca * cb);
    return r;
  }

  // k-th convolution power; the neutral key (exponent zero) is needed for k = 0.
  LaurentTable pow(int k, const Key& zero_key) const {
    LaurentTable r = monomial(zero_key);
    for (int t = 0; t < k; ++t) r = r * (*this);
    return r;
  }

  friend bool operator==(const LaurentTable&, const LaurentTable&) = default;
};

// Laurent polynomial in the single grading variable q.
struct QPoly {
  std::map<int, long long> c;

  static QPoly one() { return q_power(0); }
  static QPoly q_power(int e, long long coef = 1) {
    QPoly p;
    p.add(e, coef);
    return p;
  }

  void add(int e, long long v) {
    if (v == 0) return;
    auto [it, fresh] = c.emplace(e, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) c.erase(it);
    }
  }

  long long coef(int e) const {
    auto it = c.find(e);
    return it == c.end() ? 0 : it->second;
  }

  long long eval_at_one() const {
    long long s = 0;
    for (const auto& [e, v] : c) s += v;
    return s;
  }

  bool zero() const { return c.empty(); }
  int min_degree() const { return c.empty() ? 0 : c.begin()->first; }

  QPoly shifted(int by) const {
    QPoly r;
    for (const auto& [e, v] : c) r.c[e + by] = v;
    return r;
  }

  // q^e -> q^{top-e}; converts between the two standard Kostka gradings.
  QPoly mirrored(int top) const {
    QPoly r;
    for (const auto& [e, v] : c) r.c[top - e] = v;
    return r;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) {
    for (const auto& [e, v] : b.c) a.add(e, v);
    return a;
  }

  friend bool operator==(const QPoly&, const QPoly&) = default;

  // canonical ascending-degree text form, e.g. "1 + 2q + q^3"
  std::string str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c) {
      if (!first) os << " + ";
      first = false;
      if (e == 0) {
        os << v;
        continue;
      }
      if (v != 1) os << v;
      os << 'q';
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }
};

}  // namespace pathcrystal
