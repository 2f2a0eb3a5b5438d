#include "gtkit/boundary.hpp"
#include "gtkit/schur.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace gtkit;
using testing_support::random_rat;

namespace {

OmegaPoint beta_only() {
  OmegaPoint w;
  w.beta_plus = {rat(1, 2), rat(1, 3)};
  w.beta_minus = {rat(1, 4)};
  return w;
}

OmegaPoint mixed() {
  OmegaPoint w;
  w.alpha_plus = {rat(1, 10)};
  w.beta_plus = {rat(1, 3)};
  w.alpha_minus = {rat(1, 8), rat(1, 20)};
  w.beta_minus = {rat(1, 5)};
  return w;
}

// Truncated power series of one side of Phi in v, degree <= D.
std::vector<Rat> side_series(const std::vector<Rat>& alpha, const std::vector<Rat>& beta, long D) {
  std::vector<Rat> s(std::size_t(D + 1));
  s[0] = 1;
  auto mul = [&](const std::vector<Rat>& f) {
    std::vector<Rat> out(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < f.size() && a + b < s.size(); ++b) out[a + b] += s[a] * f[b];
    s = out;
  };
  for (const auto& b : beta) mul({1 - b, b});
  for (const auto& a : alpha) {
    std::vector<Rat> g(std::size_t(D + 1));
    Rat r = a / (1 + a);
    for (long k = 0; k <= D; ++k) g[std::size_t(k)] = ipow(r, k) / (1 + a);
    mul(g);
  }
  return s;
}

// phi_n from the two truncated side series.
Rat phi_series(const OmegaPoint& w, long n, long D) {
  auto p = side_series(w.alpha_plus, w.beta_plus, D);
  auto m = side_series(w.alpha_minus, w.beta_minus, D);
  Rat s(0);
  for (long k = std::max(0L, -n); k <= D && n + k <= D; ++k) s += p[std::size_t(n + k)] * m[std::size_t(k)];
  return s;
}

}  // namespace

TEST(PhiEval, Examples) {
  OmegaPoint w;
  w.alpha_plus = {rat(1, 2)};
  EXPECT_EQ(phi_eval(w, Rat(2)), 2);
  EXPECT_EQ(phi_eval(w, Rat(1)), 1);
  EXPECT_THROW(phi_eval(w, Rat(3)), PoleError);
  EXPECT_NEAR(std::abs(phi_eval(w, Complex(2, 0)) - 2.0), 0, 1e-15);
  auto win = phi_coeffs_exact(w, -2, 3);
  EXPECT_EQ(win.exact_at(0), rat(2, 3));
  EXPECT_EQ(win.exact_at(1), rat(2, 9));
  EXPECT_EQ(win.exact_at(-1), 0);
}

TEST(PhiEval, ComplexMatchesRational) {
  std::mt19937 rng(11);
  for (const auto& w : {beta_only(), mixed()})
    for (int t = 0; t < 20; ++t) {
      Rat u = random_rat(rng, 3, 5);
      if (u == 0) continue;
      Rat exact;
      try {
        exact = phi_eval(w, u);
      } catch (const PoleError&) {
        continue;
      }
      EXPECT_NEAR(phi_eval(w, Complex(to_double(u), 0)).real(), to_double(exact), 1e-12 * (1 + std::abs(to_double(exact))));
    }
}

TEST(PhiCoeffs, BetaOnlyIsLaurentPolynomial) {
  auto win = phi_coeffs_exact(beta_only(), -4, 5);
  for (long n = -4; n <= 5; ++n) EXPECT_EQ(win.exact_at(n), phi_series(beta_only(), n, 6)) << n;
  EXPECT_EQ(win.exact_at(-2), 0);
  EXPECT_EQ(win.exact_at(3), 0);
  Rat total(0);
  for (long n = -4; n <= 5; ++n) total += win.exact_at(n);
  EXPECT_EQ(total, 1);
}

TEST(PhiCoeffs, ExactMatchesSeriesAndQuadrature) {
  OmegaPoint w = mixed();
  auto ex = phi_coeffs_exact(w, -6, 6);
  auto nu = phi_coeffs_numeric(w, -6, 6, 1e-12);
  EXPECT_FALSE(nu.exact);
  for (long n = -6; n <= 6; ++n) {
    EXPECT_NEAR(to_double(ex.exact_at(n)), to_double(phi_series(w, n, 80)), 1e-14) << n;
    EXPECT_NEAR(nu.at(n), to_double(ex.exact_at(n)), 1e-11) << n;
    EXPECT_GE(ex.exact_at(n), 0);
  }
}

TEST(PhiCoeffs, GammaNeedsNumericMode) {
  OmegaPoint w;
  w.gamma_plus = rat(1, 2);
  EXPECT_THROW(phi_coeffs_exact(w, 0, 2), ExactModeUnavailable);
  auto win = phi_coeffs(w, -2, 4);
  EXPECT_FALSE(win.exact);
  // e^{g(u-1)}: Poisson weights.
  double fact = 1;
  for (long n = 0; n <= 4; ++n) {
    if (n) fact *= double(n);
    EXPECT_NEAR(win.at(n), std::exp(-0.5) * std::pow(0.5, double(n)) / fact, 1e-10);
  }
  EXPECT_NEAR(win.at(-1), 0, 1e-10);
}

TEST(PhiCoeffs, RepeatedAlphaFallsBack) {
  OmegaPoint w;
  w.alpha_plus = {rat(1, 3), rat(1, 3)};
  EXPECT_THROW(phi_coeffs_exact(w, 0, 2), ExactModeUnavailable);
  auto win = phi_coeffs(w, 0, 3);
  // (1/(1+a))^2 (k+1) r^k with r = 1/4.
  for (long k = 0; k <= 3; ++k) EXPECT_NEAR(win.at(k), 9.0 / 16 * double(k + 1) * std::pow(0.25, double(k)), 1e-10);
}

TEST(Embed, Example) {
  OmegaPoint w = embed({4, 2, 0, 0, -1, -1, -3});
  EXPECT_EQ(w.alpha_plus, (std::vector<Rat>{rat(1, 2), rat(1, 14)}));
  EXPECT_EQ(w.beta_plus, (std::vector<Rat>{rat(3, 14), rat(1, 14)}));
  EXPECT_EQ(w.alpha_minus, (std::vector<Rat>{rat(5, 14)}));
  EXPECT_EQ(w.beta_minus, (std::vector<Rat>{rat(5, 14)}));
  EXPECT_EQ(w.delta_plus(), rat(6, 7));
  EXPECT_EQ(w.delta_minus(), rat(5, 7));
  EXPECT_EQ(w.gamma_plus, 0);
  EXPECT_NO_THROW(w.validate());

  OmegaPoint r = embed({6, 0, 0, 0, 0, 0});
  EXPECT_EQ(r.alpha_plus, (std::vector<Rat>{rat(11, 12)}));
  EXPECT_EQ(r.beta_plus, (std::vector<Rat>{rat(1, 12)}));
}

TEST(Embed, DeltaIsWeightOverN) {
  for (std::size_t N = 1; N <= 4; ++N)
    for (const auto& nu : signatures_in_box(N, -3, 3)) {
      OmegaPoint w = embed(nu);
      long pos = 0, neg = 0;
      for (long v : nu.parts()) (v > 0 ? pos : neg) += std::abs(v);
      EXPECT_EQ(w.delta_plus(), rat(pos, long(N)));
      EXPECT_EQ(w.delta_minus(), rat(neg, long(N)));
      EXPECT_NO_THROW(w.validate());
    }
}

TEST(Embed, PhiEqualsHStar) {
  std::mt19937 rng(5);
  for (std::size_t N = 1; N <= 4; ++N)
    for (const auto& nu : signatures_in_box(N, -2, 3)) {
      OmegaPoint w = embed(nu);
      for (int t = 0; t < 4; ++t) {
        Rat z = random_rat(rng, 6, 7) + rat(1, 3);
        if (z == rat(-1, 2)) continue;
        Rat h;
        try {
          h = H_star(z, nu);
        } catch (const PoleError&) {
          continue;
        }
        Rat u = 1 + Rat(long(N)) / (z + rat(1, 2));
        EXPECT_EQ(phi_eval(w, u), h) << nu.to_string() << " z=" << z;
      }
    }
}

TEST(LinkInfinity, RowSumsToOne) {
  OmegaPoint w = beta_only();
  auto win = phi_coeffs_exact(w, -8, 8);
  for (std::size_t K = 1; K <= 3; ++K) {
    Rat total(0);
    for (const auto& kappa : signatures_in_box(K, -2, 3)) {
      auto v = link_infinity(win, kappa);
      ASSERT_TRUE(v.is_exact());
      EXPECT_GE(*v.exact, 0);
      total += *v.exact;
    }
    EXPECT_EQ(total, 1) << K;
  }
  OmegaPoint m = mixed();
  auto mwin = phi_coeffs_exact(m, -30, 30);
  for (std::size_t K = 1; K <= 2; ++K) {
    double total = 0;
    for (const auto& kappa : signatures_in_box(K, -12, 12)) total += link_infinity(mwin, kappa).approx;
    EXPECT_NEAR(total, 1.0, 1e-9) << K;
  }
}

TEST(LinkInfinity, MinorsNonnegative) {
  for (const auto& w : {beta_only(), mixed(), embed({3, 1, 0, -2})})
    for (std::size_t N = 1; N <= 3; ++N) {
      auto win = phi_coeffs_exact(w, -8, 8);
      for (const auto& nu : signatures_in_box(N, -3, 3)) EXPECT_GE(*phi_signature(win, nu).exact, 0);
    }
}

TEST(LinkInfinity, CompatibleWithFiniteLinks) {
  OmegaPoint w = beta_only();
  auto win = phi_coeffs_exact(w, -10, 10);
  for (std::size_t N = 2; N <= 4; ++N)
    for (std::size_t K = 1; K < N; ++K)
      for (const auto& kappa : signatures_in_box(K, -1, 2)) {
        Rat lhs(0);
        for (const auto& nu : signatures_in_box(N, -1, 2)) {
          Rat top = *link_infinity(win, nu).exact;
          if (top == 0) continue;
          lhs += top * Rat(dim_product(kappa)) * rel_dim_ratio(DetContext(K, nu), kappa);
        }
        EXPECT_EQ(lhs, *link_infinity(win, kappa).exact) << N << " " << kappa.to_string();
      }
}

TEST(LinkInfinity, ProductExpansion) {
  OmegaPoint w = beta_only();
  auto win = phi_coeffs_exact(w, -10, 10);
  std::mt19937 rng(3);
  for (int t = 0; t < 5; ++t) {
    Rat u1 = random_rat(rng, 4, 3), u2 = random_rat(rng, 4, 3);
    if (u1 == 0 || u2 == 0 || u1 == u2) continue;
    Rat sum(0);
    for (const auto& nu : signatures_in_box(2, -3, 4)) sum += *phi_signature(win, nu).exact * schur(nu, {u1, u2});
    EXPECT_EQ(sum, phi_eval(w, u1) * phi_eval(w, u2));
  }
  OmegaPoint m = mixed();
  auto mwin = phi_coeffs_exact(m, -40, 40);
  Rat u1 = rat(6, 5), u2 = rat(4, 5);
  Rat sum(0);
  for (const auto& nu : signatures_in_box(2, -20, 20)) sum += *phi_signature(mwin, nu).exact * schur(nu, {u1, u2});
  EXPECT_NEAR(to_double(sum), to_double(phi_eval(m, u1) * phi_eval(m, u2)), 1e-9);
}

TEST(RKernel, SingularPointAndLimit) {
  EXPECT_THROW(R_kernel(10, 2, 0, 1, Complex(1, 0)), PoleError);
  const Complex u(0, 1);
  for (long x : {-1L, 0L, 2L})
    for (long i : {1L, 2L}) {
      double prev = INFINITY;
      for (long N : {20L, 40L, 80L, 160L, 320L, 640L}) {
        double gap = std::abs(R_kernel(N, 2, x, i, u) - std::pow(u, double(-(x + i))));
        EXPECT_LT(gap, prev) << N;
        prev = gap;
      }
      EXPECT_LT(prev, 0.05);
    }
}

namespace {

// Minus the residues of the A_i(x) integrand at the points c_j < -(N+1)/2,
// i.e. at the images of the poles inside the unit circle.
Rat inner_residues(const Signature& nu, std::size_t K, std::size_t i, long x) {
  const long N = long(nu.size());
  Rat s(0);
  for (long j = 1; j <= N; ++j) {
    long c = nu[std::size_t(j - 1)] - j;
    if (2 * c >= -(N + 1)) continue;
    Rat den(1);
    for (long r = 1; r <= N; ++r)
      if (r != j) den *= c - (nu[std::size_t(r - 1)] - r);
    Rat p(1);
    for (long r = 1; r <= N; ++r)
      if (r < long(i) || r > N - long(K) + long(i)) p *= c + r;
    s += pochhammer(Rat(c - x + 1), N - long(K) - 1) * p / den;
  }
  return -Rat(N - long(K)) * s;
}

}  // namespace

TEST(RKernel, CircleIntegralGivesA) {
  for (const Signature& nu : {Signature{5, 3, 3, 2, 1, 0, 0, 0, -1, -1, -2, -4},
                              Signature{9, 7, 7, 4, 2, 2, 1, -3, -3, -5, -6, -8}}) {
    const std::size_t K = 2;
    const long N = long(nu.size());
    DetContext ctx(K, nu);
    for (std::size_t i = 1; i <= K; ++i)
      for (long x = -6; N > long(K) + x + 1; ++x) {
        auto q = A_coeff_circle(nu, long(K), long(i), x);
        EXPECT_NEAR(q.value, to_double(inner_residues(nu, K, i, x)), 1e-8) << "i=" << i << " x=" << x;
        if (2 * (x + long(K)) + 1 < N) {
          EXPECT_NEAR(q.value, to_double(A_coeff(ctx, i, x)), 1e-8) << "i=" << i << " x=" << x;
        }
      }
  }
}

TEST(RKernel, CircleIntegralBeyondGuaranteedRange) {
  // c_6 = -6 sits in [-(N+1)/2, x-N+K] for x = 5, so the circle misses it.
  const Signature nu{5, 3, 3, 2, 1, 0, 0, 0, -1, -1, -2, -4};
  EXPECT_EQ(A_coeff(DetContext(2, nu), 1, 5), 0);
  EXPECT_GT(std::abs(A_coeff_circle(nu, 2, 1, 5).value), 1.0);
}

TEST(UatGap, ExactAndNumericAgree) {
  for (long N : {4L, 8L}) {
    std::vector<long> parts(std::size_t(N), 0);
    parts[0] = N / 2;
    parts[std::size_t(N - 1)] = -1;
    Signature nu(parts);
    for (const auto& kappa : {Signature{0}, Signature{1}, Signature{1, 0}}) {
      auto ex = uat_gap(nu, kappa);
      auto nm = uat_gap(nu, kappa, true, 1e-12);
      ASSERT_TRUE(ex.is_exact());
      EXPECT_FALSE(nm.is_exact());
      EXPECT_NEAR(ex.approx, nm.approx, 1e-10);
    }
  }
  EXPECT_THROW(uat_gap({1, 0}, {1, 0}), std::invalid_argument);
}

TEST(Boundary, SmallExamples) {
  OmegaPoint zero;
  EXPECT_EQ(phi_eval(zero, rat(3, 7)), 1);
  auto zw = phi_coeffs_exact(zero, -3, 3);
  for (long n = -3; n <= 3; ++n) EXPECT_EQ(zw.exact_at(n), n == 0 ? 1 : 0);
  EXPECT_EQ(*link_infinity(zero, {0, 0, 0}).exact, 1);
  EXPECT_EQ(*link_infinity(zero, {1, 0}).exact, 0);

  OmegaPoint b;
  b.beta_plus = {rat(2, 5)};
  auto bw = phi_coeffs_exact(b, -2, 3);
  EXPECT_EQ(bw.exact_at(0), rat(3, 5));
  EXPECT_EQ(bw.exact_at(1), rat(2, 5));
  // coefficients of s_nu in (1-b+b u1)(1-b+b u2)
  EXPECT_EQ(*phi_signature(b, {1, 0}).exact, rat(6, 25));
  EXPECT_EQ(*phi_signature(b, {1, 1}).exact, rat(4, 25));
  EXPECT_EQ(*phi_signature(b, {2, 0}).exact, 0);

  OmegaPoint a;
  a.alpha_plus = {rat(1, 2)};
  EXPECT_EQ(*link_infinity(a, {1}).exact, rat(2, 9));

  EXPECT_TRUE(embed({0, 0, 0}) == OmegaPoint{});
  EXPECT_EQ(*uat_gap({0, 0, 0, 0}, {0}).exact, 0);
  double prev = INFINITY;
  for (long N : {4L, 8L, 16L, 32L}) {
    std::vector<long> parts(std::size_t(N), 0);
    parts[0] = 1;
    double g = uat_gap(Signature(parts), {1}).approx;
    EXPECT_LT(g, prev);
    prev = g;
  }
  EXPECT_NEAR(std::abs(R_kernel(100000, 1, 0, 1, Complex(-1, 0)) - Complex(-1, 0)), 0, 1e-3);
}
