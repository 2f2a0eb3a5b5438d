#pragma once

// Boundary points omega, the generating function Phi(u; omega), its Laurent
// coefficients, the links from the boundary and the embedding nu -> omega(nu).

#include "gtkit/detformula.hpp"
#include "gtkit/errors.hpp"
#include "gtkit/gt_core.hpp"
#include "gtkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

namespace gtkit {

using Complex = std::complex<double>;

/// (alpha^+, beta^+; alpha^-, beta^-; gamma^+, gamma^-) with finitely many
/// nonzero parameters; delta^± = gamma^± + sum(alpha^± + beta^±).
struct OmegaPoint {
  std::vector<Rat> alpha_plus, beta_plus, alpha_minus, beta_minus;
  Rat gamma_plus{0}, gamma_minus{0};

  Rat delta_plus() const { return gamma_plus + sum(alpha_plus) + sum(beta_plus); }
  Rat delta_minus() const { return gamma_minus + sum(alpha_minus) + sum(beta_minus); }

  void validate() const {
    for (const auto* v : {&alpha_plus, &beta_plus, &alpha_minus, &beta_minus})
      for (std::size_t k = 0; k < v->size(); ++k) {
        if ((*v)[k] < 0) throw std::invalid_argument("omega: negative parameter");
        if (k && (*v)[k - 1] < (*v)[k]) throw std::invalid_argument("omega: parameters must be nonincreasing");
      }
    if (gamma_plus < 0 || gamma_minus < 0) throw std::invalid_argument("omega: negative gamma");
    Rat b = (beta_plus.empty() ? Rat(0) : beta_plus[0]) + (beta_minus.empty() ? Rat(0) : beta_minus[0]);
    if (b > 1) throw std::invalid_argument("omega: beta^+_1 + beta^-_1 exceeds 1");
  }

  bool operator==(const OmegaPoint&) const = default;

 private:
  static Rat sum(const std::vector<Rat>& v) {
    Rat s(0);
    for (const auto& x : v) s += x;
    return s;
  }
};

/// A value produced either exactly or by quadrature; numeric values carry
/// the tolerance they were converged to.
struct MixedValue {
  std::optional<Rat> exact;
  double approx = 0;
  double tolerance = 0;

  static MixedValue of(Rat r) {
    double d = to_double(r);
    return {std::move(r), d, 0};
  }
  static MixedValue numeric(double d, double tol) { return {std::nullopt, d, tol}; }
  bool is_exact() const { return exact.has_value(); }
};

namespace detail {

inline void check_exact_omega(const OmegaPoint& w) {
  if (w.gamma_plus != 0 || w.gamma_minus != 0)
    throw ExactModeUnavailable("nonzero gamma: use numeric mode");
}

}  // namespace detail

/// Phi(u; omega) for rational u; requires gamma^± = 0.
inline Rat phi_eval(const OmegaPoint& w, const Rat& u) {
  detail::check_exact_omega(w);
  if (u == 0) throw PoleError("phi_eval: u = 0");
  Rat v(1), ui = 1 / u;
  for (const auto& b : w.beta_plus) v *= 1 + b * (u - 1);
  for (const auto& b : w.beta_minus) v *= 1 + b * (ui - 1);
  for (const auto& a : w.alpha_plus) {
    Rat d = 1 - a * (u - 1);
    if (d == 0) throw PoleError("phi_eval: pole 1 + 1/alpha^+");
    v /= d;
  }
  for (const auto& a : w.alpha_minus) {
    Rat d = 1 - a * (ui - 1);
    if (d == 0) throw PoleError("phi_eval: pole alpha^-/(1 + alpha^-)");
    v /= d;
  }
  return v;
}

/// Phi(u; omega) for complex u, any gamma.
inline Complex phi_eval(const OmegaPoint& w, Complex u) {
  if (u == Complex(0)) throw PoleError("phi_eval: u = 0");
  Complex ui = 1.0 / u;
  Complex v = std::exp(to_double(w.gamma_plus) * (u - 1.0) + to_double(w.gamma_minus) * (ui - 1.0));
  for (const auto& b : w.beta_plus) v *= 1.0 + to_double(b) * (u - 1.0);
  for (const auto& b : w.beta_minus) v *= 1.0 + to_double(b) * (ui - 1.0);
  for (const auto& a : w.alpha_plus) v /= 1.0 - to_double(a) * (u - 1.0);
  for (const auto& a : w.alpha_minus) v /= 1.0 - to_double(a) * (ui - 1.0);
  return v;
}

/// Laurent coefficients phi_n, n_min <= n <= n_max.
struct LaurentWindow {
  long n_min = 0, n_max = -1;
  bool exact = true;
  double tolerance = 0;
  std::size_t quadrature_points = 0;
  std::vector<Rat> exact_coeffs;
  std::vector<double> numeric_coeffs;

  bool contains(long n) const { return n >= n_min && n <= n_max; }
  Rat exact_at(long n) const {
    if (!exact) throw ExactModeUnavailable("window holds numeric coefficients");
    return contains(n) ? exact_coeffs[std::size_t(n - n_min)] : throw std::out_of_range("phi index outside window");
  }
  double at(long n) const {
    if (!contains(n)) throw std::out_of_range("phi index outside window");
    return exact ? to_double(exact_coeffs[std::size_t(n - n_min)]) : numeric_coeffs[std::size_t(n - n_min)];
  }
};

namespace detail {

// One side of Phi = G_+(u) G_-(1/u): G(v) = prod((1-b) + b v) / prod((1+a) - a v),
// written as poly(v) + sum_k A_k / (1 - r_k v) with r_k = a_k / (1 + a_k).
struct SideExpansion {
  Polynomial poly;
  std::vector<Rat> r, A;

  SideExpansion(const std::vector<Rat>& alpha, const std::vector<Rat>& beta) {
    Polynomial P = Polynomial::constant(1), D = Polynomial::constant(1);
    Rat scale(1);
    for (const auto& b : beta) P = P * Polynomial({1 - b, b});
    for (const auto& a : alpha) {
      if (a == 0) continue;
      Rat rk = a / (1 + a);
      if (std::find(r.begin(), r.end(), rk) != r.end())
        throw ExactModeUnavailable("repeated alpha values: use numeric mode");
      r.push_back(rk);
      scale /= 1 + a;
      D = D * Polynomial({Rat(1), -rk});
    }
    auto [Q, R] = P.divmod(D);
    poly = scale * Q;
    for (std::size_t k = 0; k < r.size(); ++k) {
      Rat v = 1 / r[k];
      Rat den(1);
      for (std::size_t l = 0; l < r.size(); ++l)
        if (l != k) den *= 1 - r[l] * v;
      A.push_back(scale * R(v) / den);
    }
  }

  Rat geometric(long j) const {
    Rat s(0);
    for (std::size_t k = 0; k < r.size(); ++k) s += A[k] * ipow(r[k], j);
    return s;
  }
  Rat coeff(long j) const { return j < 0 ? Rat(0) : poly.coeff(j) + geometric(j); }
};

template <typename T>
T pairwise_sum(const std::vector<T>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    T s{};
    for (std::size_t k = lo; k < hi; ++k) s += v[k];
    return s;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace detail

/// Exact coefficients via partial fractions; needs gamma^± = 0 and distinct
/// nonzero alpha values on each side.
inline LaurentWindow phi_coeffs_exact(const OmegaPoint& w, long n_min, long n_max) {
  detail::check_exact_omega(w);
  detail::SideExpansion plus(w.alpha_plus, w.beta_plus), minus(w.alpha_minus, w.beta_minus);
  LaurentWindow out;
  out.n_min = n_min;
  out.n_max = n_max;
  const long dp = plus.poly.degree(), dm = minus.poly.degree();
  for (long n = n_min; n <= n_max; ++n) {
    const long m0 = std::max(0L, -n);
    Rat s(0);
    for (long m = m0; m <= dp - n; ++m) s += plus.poly.coeff(n + m) * minus.coeff(m);
    for (long m = m0; m <= dm; ++m) s += plus.geometric(n + m) * minus.poly.coeff(m);
    for (std::size_t k = 0; k < plus.r.size(); ++k)
      for (std::size_t l = 0; l < minus.r.size(); ++l)
        s += plus.A[k] * minus.A[l] * ipow(plus.r[k], n + m0) * ipow(minus.r[l], m0) /
             (1 - plus.r[k] * minus.r[l]);
    out.exact_coeffs.push_back(s);
  }
  return out;
}

/// Uniform M-point quadrature of the contour integral over |u| = 1, M doubled
/// until successive coefficient vectors differ by less than tol.
inline LaurentWindow phi_coeffs_numeric(const OmegaPoint& w, long n_min, long n_max, double tol = 1e-10) {
  LaurentWindow out;
  out.n_min = n_min;
  out.n_max = n_max;
  out.exact = false;
  out.tolerance = tol;
  const std::size_t width = std::size_t(std::max(0L, n_max - n_min + 1));
  std::vector<double> prev;
  for (std::size_t M = 64; M <= (std::size_t(1) << 24); M *= 2) {
    std::vector<Complex> vals(M);
    for (std::size_t k = 0; k < M; ++k)
      vals[k] = phi_eval(w, std::polar(1.0, 2 * std::numbers::pi * double(k) / double(M)));
    std::vector<double> cur(width);
    std::vector<Complex> terms(M);
    for (std::size_t idx = 0; idx < width; ++idx) {
      const long n = n_min + long(idx);
      for (std::size_t k = 0; k < M; ++k)
        terms[k] = vals[k] * std::polar(1.0, -2 * std::numbers::pi * double((long(k) * n) % long(M)) / double(M));
      cur[idx] = detail::pairwise_sum(terms, 0, M).real() / double(M);
    }
    if (!prev.empty()) {
      double diff = 0;
      for (std::size_t idx = 0; idx < width; ++idx) diff = std::max(diff, std::abs(cur[idx] - prev[idx]));
      if (diff < tol) {
        out.numeric_coeffs = std::move(cur);
        out.quadrature_points = M;
        return out;
      }
    }
    prev = std::move(cur);
  }
  throw std::runtime_error("phi_coeffs_numeric: quadrature did not converge");
}

/// Exact when possible, numeric otherwise.
inline LaurentWindow phi_coeffs(const OmegaPoint& w, long n_min, long n_max, double tol = 1e-10) {
  try {
    return phi_coeffs_exact(w, n_min, n_max);
  } catch (const ExactModeUnavailable&) {
    return phi_coeffs_numeric(w, n_min, n_max, tol);
  }
}

/// det[phi_{nu_i - i + j}] using coefficients from the given window.
inline MixedValue phi_signature(const LaurentWindow& win, const Signature& nu) {
  const std::size_t n = nu.size();
  if (win.exact) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = win.exact_at(nu[i] - long(i) + long(j));
    return MixedValue::of(det(m));
  }
  Matrix<double> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = win.at(nu[i] - long(i) + long(j));
  return MixedValue::numeric(det(m), win.tolerance);
}

/// Index range of phi_n needed for phi_nu.
inline std::pair<long, long> phi_window_for(const Signature& nu) {
  if (nu.empty()) return {0, -1};
  return {nu.back() - long(nu.size()) + 1, nu.front() + long(nu.size()) - 1};
}

inline MixedValue phi_signature(const OmegaPoint& w, const Signature& nu, double tol = 1e-10) {
  auto [lo, hi] = phi_window_for(nu);
  return phi_signature(phi_coeffs(w, lo, hi, tol), nu);
}

/// Lambda^inf_K(omega, kappa) = Dim_K(kappa) phi_kappa(omega).
inline MixedValue link_infinity(const LaurentWindow& win, const Signature& kappa) {
  MixedValue v = phi_signature(win, kappa);
  Rat dim(dim_product(kappa));
  if (v.is_exact()) return MixedValue::of(*v.exact * dim);
  return MixedValue::numeric(v.approx * to_double(dim), v.tolerance * to_double(dim));
}

inline MixedValue link_infinity(const OmegaPoint& w, const Signature& kappa, double tol = 1e-10) {
  auto [lo, hi] = phi_window_for(kappa);
  return link_infinity(phi_coeffs(w, lo, hi, tol), kappa);
}

/// omega(nu): modified Frobenius coordinates of the positive and negative
/// diagrams of nu, divided by N. gamma^± come out zero.
inline OmegaPoint embed(const Signature& nu) {
  const long N = long(nu.size());
  if (N == 0) throw std::invalid_argument("embed: empty signature");
  std::vector<long> pos, neg;
  for (long v : nu.parts())
    if (v > 0) pos.push_back(v);
  for (auto it = nu.parts().rbegin(); it != nu.parts().rend(); ++it)
    if (*it < 0) neg.push_back(-*it);
  auto frob = [N](const std::vector<long>& lam, std::vector<Rat>& alpha, std::vector<Rat>& beta) {
    for (long i = 1; i <= long(lam.size()) && lam[std::size_t(i - 1)] - i >= 0; ++i)
      alpha.push_back(Rat(2 * (lam[std::size_t(i - 1)] - i) + 1, 2 * N));
    for (long i = 1;; ++i) {
      long col = 0;
      for (long v : lam)
        if (v >= i) ++col;
      if (col - i < 0) break;
      beta.push_back(Rat(2 * (col - i) + 1, 2 * N));
    }
    for (auto* v : {&alpha, &beta})
      for (auto& x : *v) x.canonicalize();
  };
  OmegaPoint w;
  frob(pos, w.alpha_plus, w.beta_plus);
  frob(neg, w.alpha_minus, w.beta_minus);
  return w;
}

/// R^{(N)}_{K,x,i}(u) = (N/(u-1) - x + 1/2)_{N-K-1} / (N/(u-1) + i - 1/2)_{N-K+1}
///                      * N (N-K) u / (u-1)^2.
inline Complex R_kernel(long N, long K, long x, long i, Complex u) {
  if (std::abs(u - 1.0) < 1e-300) throw PoleError("R_kernel: singular point u = 1");
  const Complex w = double(N) / (u - 1.0);
  Complex v = double(N) * double(N - K) * u / ((u - 1.0) * (u - 1.0));
  // factors paired to keep intermediate values bounded
  for (long k = 0; k < N - K - 1; ++k) v *= (w - double(x) + 0.5 + double(k)) / (w + double(i) - 0.5 + double(k));
  v /= (w + double(i) - 0.5 + double(N - K - 1)) * (w + double(i) - 0.5 + double(N - K));
  return v;
}

struct CircleQuadrature {
  double value = 0;
  std::size_t points = 0;
  double last_change = 0;
};

/// (1/2 pi i) * integral over |u| = 1 of Phi(u; omega(nu)) R(u) du/u with
/// M-point midpoint nodes (never hitting u = 1), M doubled until two
/// successive values differ by less than tol.
///
/// In z = -1/2 + N/(u-1) the circle separates the points c_j < -(N+1)/2, so
/// the integral equals minus the residue sum of the A_i(x) integrand over
/// those c_j. It equals A_i(x) whenever no c_j lies in [-(N+1)/2, x-N+K];
/// 2(x+K)+1 < N guarantees this for every nu. Under the weaker N > K+x+1
/// alone it can fail (e.g. nu with zero parts near the middle).
inline CircleQuadrature A_coeff_circle(const Signature& nu, long K, long i, long x, double tol = 1e-12) {
  const long N = long(nu.size());
  OmegaPoint w = embed(nu);
  double prev = NAN;
  for (std::size_t M = 64; M <= (std::size_t(1) << 22); M *= 2) {
    std::vector<Complex> terms(M);
    for (std::size_t k = 0; k < M; ++k) {
      Complex u = std::polar(1.0, 2 * std::numbers::pi * (double(k) + 0.5) / double(M));
      terms[k] = phi_eval(w, u) * R_kernel(N, K, x, i, u);
    }
    double cur = detail::pairwise_sum(terms, 0, M).real() / double(M);
    if (!std::isnan(prev) && std::abs(cur - prev) < tol) return {cur, M, std::abs(cur - prev)};
    prev = cur;
  }
  throw std::runtime_error("A_coeff_circle: quadrature did not converge");
}

/// |Lambda^N_K(nu, kappa) - Lambda^inf_K(omega(nu), kappa)|. Exact unless
/// numeric is requested.
inline MixedValue uat_gap(const Signature& nu, const Signature& kappa, bool numeric = false, double tol = 1e-10) {
  if (kappa.size() >= nu.size() || kappa.empty())
    throw std::invalid_argument("uat_gap needs 1 <= len(kappa) < len(nu)");
  DetContext ctx(kappa.size(), nu);
  Rat finite = Rat(dim_product(kappa)) * rel_dim_ratio(ctx, kappa);
  OmegaPoint w = embed(nu);
  auto [lo, hi] = phi_window_for(kappa);
  if (!numeric) {
    MixedValue lim = link_infinity(phi_coeffs_exact(w, lo, hi), kappa);
    return MixedValue::of(abs(finite - *lim.exact));
  }
  MixedValue lim = link_infinity(phi_coeffs_numeric(w, lo, hi, tol), kappa);
  return MixedValue::numeric(std::abs(to_double(finite) - lim.approx), lim.tolerance);
}

}  // namespace gtkit
