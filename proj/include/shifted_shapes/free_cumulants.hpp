#pragma once

#include <vector>

#include "shifted_shapes/numeric.hpp"
#include "shifted_shapes/profile.hpp"

namespace shs {

// Sequences are indexed by n: S[n], R[n] for 2 <= n <= order; entries 0 and 1 are unused and zero.
// Moment sequences of measures use M[k], 0 <= k <= order, with M[0] = 1.

// S_n = (n-1) * integral of z^(n-2) sigma(z), sigma = (omega - |z|) / 2, exact per segment.
std::vector<Rational> sigma_moments(const ZigzagProfile& omega, int order);
// Composite Simpson on the grid (the sampled profile must equal |z| at both grid ends).
std::vector<double> sigma_moments(const SampledProfile& omega, int order);

namespace detail {

template <class T>
T from_int(long v) {
  return T(v);
}

template <class T>
T inverse_factorial(int l) {
  T f = 1;
  for (int i = 2; i <= l; ++i) f *= from_int<T>(i);
  return T(1) / f;
}

// power[l][n] = sum over ordered compositions (k_1..k_l), k_i >= 2, sum k = n, of prod x[k_i].
template <class T>
std::vector<std::vector<T>> composition_powers(const std::vector<T>& x, int order) {
  std::vector<std::vector<T>> power(order / 2 + 1, std::vector<T>(order + 1, T(0)));
  for (int n = 2; n <= order; ++n) power[1][n] = x[n];
  for (int l = 2; l <= order / 2; ++l)
    for (int n = 2 * l; n <= order; ++n)
      for (int k = 2; k <= n - 2 * (l - 1); ++k) power[l][n] += x[k] * power[l - 1][n - k];
  return power;
}

}  // namespace detail

template <class T>
std::vector<T> r_from_s(const std::vector<T>& S) {
  const int order = static_cast<int>(S.size()) - 1;
  std::vector<T> R(order + 1, T(0));
  if (order < 2) return R;
  const auto power = detail::composition_powers(S, order);
  for (int n = 2; n <= order; ++n) {
    T coeff = 1;
    for (int l = 1; 2 * l <= n; ++l) {
      R[n] += detail::inverse_factorial<T>(l) * coeff * power[l][n];
      coeff *= detail::from_int<T>(1 - n);
    }
  }
  return R;
}

template <class T>
std::vector<T> s_from_r(const std::vector<T>& R) {
  const int order = static_cast<int>(R.size()) - 1;
  std::vector<T> S(order + 1, T(0));
  if (order < 2) return S;
  const auto power = detail::composition_powers(R, order);
  for (int n = 2; n <= order; ++n) {
    T coeff = 1;
    for (int l = 1; 2 * l <= n; ++l) {
      S[n] += detail::inverse_factorial<T>(l) * coeff * power[l][n];
      coeff *= detail::from_int<T>(n - 1 - (l - 1));
    }
  }
  return S;
}

// S'_n = (n-1) * integral of (z + delta)^(n-2) sigma(z).
template <class T>
std::vector<T> translate_moments(const std::vector<T>& S, const T& delta) {
  const int order = static_cast<int>(S.size()) - 1;
  std::vector<T> out(order + 1, T(0));
  for (int n = 2; n <= order; ++n) {
    // integral z^k sigma = S[k+2] / (k+1)
    T binom = 1;
    T total = 0;
    for (int k = 0; k <= n - 2; ++k) {
      T dp = 1;
      for (int e = 0; e < n - 2 - k; ++e) dp *= delta;
      total += binom * dp * S[k + 2] / detail::from_int<T>(k + 1);
      binom = binom * detail::from_int<T>(n - 2 - k) / detail::from_int<T>(k + 1);
    }
    out[n] = detail::from_int<T>(n - 1) * total;
  }
  return out;
}

// Classical free cumulants k_1..k_order from moments M_0..M_order via M(x) = C(x M(x)).
template <class T>
std::vector<T> free_cumulants_from_moments(const std::vector<T>& M) {
  const int order = static_cast<int>(M.size()) - 1;
  std::vector<T> k(order + 1, T(0));
  // pw[j] = coefficients of (x M(x))^j up to x^order.
  std::vector<T> xm(order + 1, T(0));
  for (int i = 1; i <= order; ++i) xm[i] = M[i - 1];
  std::vector<std::vector<T>> pw(order + 1, std::vector<T>(order + 1, T(0)));
  pw[0][0] = 1;
  for (int j = 1; j <= order; ++j)
    for (int a = 0; a <= order; ++a) {
      if (pw[j - 1][a] == T(0)) continue;
      for (int b = 1; a + b <= order; ++b) pw[j][a + b] += pw[j - 1][a] * xm[b];
    }
  for (int n = 1; n <= order; ++n) {
    T rest = 0;
    for (int j = 1; j < n; ++j) rest += k[j] * pw[j][n];
    k[n] = M[n] - rest;
  }
  return k;
}

template <class T>
std::vector<T> moments_from_free_cumulants(const std::vector<T>& k) {
  const int order = static_cast<int>(k.size()) - 1;
  std::vector<T> M(order + 1, T(0));
  M[0] = 1;
  for (int n = 1; n <= order; ++n) {
    // Coefficient of x^n in sum_j k_j (x M(x))^j, with M known below degree n.
    std::vector<T> xm(n + 1, T(0));
    for (int i = 1; i <= n; ++i) xm[i] = M[i - 1];
    std::vector<T> cur(n + 1, T(0));
    cur[0] = 1;
    T total = 0;
    for (int j = 1; j <= n; ++j) {
      std::vector<T> next(n + 1, T(0));
      for (int a = 0; a <= n; ++a) {
        if (cur[a] == T(0)) continue;
        for (int b = 1; a + b <= n; ++b) next[a + b] += cur[a] * xm[b];
      }
      cur = std::move(next);
      total += k[j] * cur[n];
    }
    M[n] = total;
  }
  return M;
}

}  // namespace shs
