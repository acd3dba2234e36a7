#pragma once

#include <cassert>
#include <compare>
#include <numeric>
#include <vector>

#include "pathcrystal/common.hpp"

namespace pathcrystal {

// Weights of affine sl_n in the (Lambda_0..Lambda_{n-1}, delta) integer basis.
// The level is the coefficient sum (all coroot marks are 1), the classical
// projection just drops the delta coordinate.  Node indices are accepted
// modulo n throughout.
struct Weight {
  int n = 0;
  std::vector<int> lam;  // coefficient of Lambda_i
  int del = 0;           // coefficient of delta

  Weight() = default;
  Weight(int rank, std::vector<int> coeffs, int delta_coeff = 0)
      : n(rank), lam(std::move(coeffs)), del(delta_coeff) {
    assert(n >= 2 && static_cast<int>(lam.size()) == n);
  }

  static Weight zero(int n) { return Weight(n, std::vector<int>(n, 0), 0); }

  static Weight fundamental(int n, int i) {
    Weight w = zero(n);
    w.lam[imod(i, n)] = 1;
    return w;
  }

  static Weight delta(int n) { return Weight(n, std::vector<int>(n, 0), 1); }

  int level() const { return std::accumulate(lam.begin(), lam.end(), 0); }

  // Classical projection: forget delta.
  Weight cl() const { return Weight(n, lam, 0); }

  bool classically_equal(const Weight& o) const { return n == o.n && lam == o.lam; }

  bool dominant() const {
    for (int c : lam)
      if (c < 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    assert(n == o.n);
    for (int i = 0; i < n; ++i) lam[i] += o.lam[i];
    del += o.del;
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    assert(n == o.n);
    for (int i = 0; i < n; ++i) lam[i] -= o.lam[i];
    del -= o.del;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int c, Weight w) {
    for (int& v : w.lam) v *= c;
    w.del *= c;
    return w;
  }

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

// alpha_i = -Lambda_{i-1} + 2 Lambda_i - Lambda_{i+1} + [i==0] delta.
// The delta coefficient on alpha_0 is the unique choice keeping
// <delta, h_j> = 0 for the sl_n Cartan pairings.
inline Weight simple_root(int i, int n) {
  Weight w = Weight::zero(n);
  i = imod(i, n);
  w.lam[imod(i - 1, n)] -= 1;
  w.lam[i] += 2;
  w.lam[imod(i + 1, n)] -= 1;
  if (i == 0) w.del = 1;
  return w;
}

// <w, h_j>; a coordinate read since <Lambda_i, h_j> = delta_ij, <delta, h_j> = 0.
inline int pairing(const Weight& w, int j) { return w.lam[imod(j, w.n)]; }

// Simple reflection r_i w = w - <w, h_i> alpha_i.
inline Weight reflect(int i, const Weight& w) {
  return w - pairing(w, i) * simple_root(i, w.n);
}

// sigma: sum m_i Lambda_i -> sum m_i Lambda_{i-1}; order n, delta fixed.
inline Weight sigma_w(const Weight& w) {
  Weight r = w;
  for (int j = 0; j < w.n; ++j) r.lam[j] = w.lam[imod(j + 1, w.n)];
  return r;
}

inline Weight sigma_pow(Weight w, int t) {
  t = imod(t, w.n);
  for (int s = 0; s < t; ++s) w = sigma_w(w);
  return w;
}

// Lift of a classical weight with delta coefficient zero.
inline Weight af_lift(const Weight& classical) { return classical.cl(); }

// Reduced-word data for a Weyl group element; letters are node indices,
// letters.front() is applied last when folding over a weight.
struct WeylWord {
  std::vector<int> letters;

  friend auto operator<=>(const WeylWord&, const WeylWord&) = default;
};

inline Weight fold(const WeylWord& w, Weight mu) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    mu = reflect(*it, mu);
  return mu;
}

}  // namespace pathcrystal
