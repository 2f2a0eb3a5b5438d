#pragma once

// Verification sweeps, convergence experiments and benchmarks shared by the
// command-line driver and the acceptance runner.

#include "gtkit/boundary.hpp"
#include "gtkit/detformula.hpp"
#include "gtkit/gt_core.hpp"
#include "gtkit/qdeform.hpp"
#include "gtkit/report.hpp"
#include "gtkit/schur.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

namespace gtkit {

struct VerifyOptions {
  std::optional<std::size_t> max_n;  // suite default when unset
  long part_bound = 2;
  std::vector<Rat> qs{Rat(1, 2), Rat(2, 3)};
  unsigned seed = 1;
  std::uint64_t budget = default_budget();
  double tolerance = 1e-10;

  std::size_t n_or(std::size_t def) const { return max_n.value_or(def); }
};

/// Accumulates cases for one named check and keeps the first counterexample.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { c_.name = std::move(name); }

  template <typename Describe>
  bool expect(bool ok, Describe&& describe) {
    ++c_.cases;
    if (!ok && c_.passed) {
      c_.passed = false;
      c_.counterexample = describe();
    }
    return ok;
  }
  Check done() const { return c_; }

 private:
  Check c_;
};

inline std::string sig_label(const Signature& s) { return "(" + s.to_string() + ")"; }

namespace detail {

inline std::string describe(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += std::string(k) + "=" + v;
  }
  return s;
}

inline std::string str(long v) { return std::to_string(v); }
inline std::string str(std::size_t v) { return std::to_string(v); }
inline std::string str(const Rat& v) { return to_string(v); }
inline std::string str(const Signature& v) { return sig_label(v); }

inline std::vector<Rat> random_values(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<Rat> c;
  for (std::size_t k = 0; k < n; ++k) c.push_back(rat(num(rng), den(rng)));
  return c;
}

}  // namespace detail

/// Determinantal ratio times Dim(nu) against trapezoid counting.
inline std::vector<Check> verify_q1_oracle(const VerifyOptions& o) {
  CheckBuilder c("rel_dim_ratio*dim_product = rel_dim_oracle");
  for (std::size_t N = 2; N <= o.n_or(5); ++N)
    for (const auto& nu : signatures_in_box(N, -o.part_bound, o.part_bound)) {
      BigInt dim = dim_product(nu);
      for (std::size_t K = 1; K < N; ++K) {
        DetContext ctx(K, nu);
        for (const auto& kappa : signatures_in_box(K, nu.back(), nu.front())) {
          Rat lhs = rel_dim_ratio(ctx, kappa) * Rat(dim);
          Rat rhs(rel_dim_oracle(kappa, nu, o.budget));
          c.expect(lhs == rhs, [&] {
            return detail::describe({{"nu", detail::str(nu)}, {"kappa", detail::str(kappa)},
                                     {"det", detail::str(lhs)}, {"oracle", detail::str(rhs)}});
          });
        }
      }
    }
  return {c.done()};
}

/// Expansion coefficients against A_i(x), and the biorthogonality relation.
inline std::vector<Check> verify_bo_equivalence(const VerifyOptions& o) {
  CheckBuilder coeff("bo_coefficient = A_coeff");
  const std::size_t max_n = o.n_or(5);
  for (std::size_t N = 2; N <= max_n; ++N)
    for (const auto& nu : signatures_in_box(N, -o.part_bound, o.part_bound))
      for (std::size_t K = 1; K < N; ++K) {
        DetContext ctx(K, nu);
        for (std::size_t i = 1; i <= K; ++i) {
          BoExpansion ex(ctx, i);
          for (long x = nu.back() - long(N) - 2; x <= nu.front() + 2; ++x)
            coeff.expect(ex.coefficient(x + long(i)) == A_coeff(ctx, i, x), [&] {
              return detail::describe({{"nu", detail::str(nu)}, {"K", detail::str(K)}, {"i", detail::str(i)},
                                       {"x", detail::str(x)}});
            });
        }
      }
  CheckBuilder bio("biorthogonality = delta(i,p)");
  for (std::size_t N = 2; N <= max_n; ++N)
    for (std::size_t K = 1; K < N && K <= 4; ++K)
      for (long i = 1; i <= long(K); ++i)
        for (long p = 1; p <= long(K); ++p)
          for (long x : {-3L, 0L, 4L})
            bio.expect(biorthogonality_transform(K, N, i, p, x) == (i == p ? 1 : 0), [&] {
              return detail::describe({{"N", detail::str(N)}, {"K", detail::str(K)}, {"i", detail::str(i)},
                                       {"p", detail::str(p)}, {"x", detail::str(x)}});
            });
  return {coeff.done(), bio.done()};
}

/// Arbitrary q-specializations q^T against the combinatorial skew Schur sum.
inline std::vector<Check> verify_general_T(const VerifyOptions& o) {
  CheckBuilder c("general_q_ratio = skew_schur_combinatorial / q_dim");
  for (const auto& qv : o.qs) {
    QParam q(qv);
    for (std::size_t N = 2; N <= o.n_or(4); ++N)
      for (const auto& nu : signatures_in_box(N, -o.part_bound, o.part_bound)) {
        Rat denom = q_dim(nu, q);
        for (std::size_t K = 1; K < N; ++K) {
          QDetContext ctx(K, nu, q);
          for (const auto& t : TSpec::all(N, K)) {
            ValueList qt;
            for (long v : t.T()) qt.push_back(q.pow(v));
            for (const auto& kappa : signatures_in_box(K, nu.back(), nu.front()))
              c.expect(general_q_ratio(ctx, t, kappa) == skew_schur_combinatorial(nu, kappa, qt, o.budget) / denom, [&] {
                std::string ts;
                for (long v : t.T()) ts += (ts.empty() ? "" : ",") + std::to_string(v);
                return detail::describe({{"q", detail::str(qv)}, {"nu", detail::str(nu)},
                                         {"kappa", detail::str(kappa)}, {"T", "{" + ts + "}"}});
              });
          }
        }
      }
  }
  return {c.done()};
}

/// q-determinantal ratio against q-weighted trapezoid sums; the initial
/// T = {0..N-K-1} projection reproduces the q-link.
inline std::vector<Check> verify_q_oracle(const VerifyOptions& o) {
  CheckBuilder ratio("q_rel_dim_ratio = q_rel_dim_oracle / q_dim");
  CheckBuilder reduce("general_q_projection(T initial) = q_link_row");
  for (const auto& qv : o.qs) {
    QParam q(qv);
    for (std::size_t N = 2; N <= o.n_or(4); ++N)
      for (const auto& nu : signatures_in_box(N, -o.part_bound, o.part_bound)) {
        Rat denom = q_dim(nu, q);
        for (std::size_t K = 1; K < N; ++K) {
          QDetContext ctx(K, nu, q);
          for (const auto& kappa : signatures_in_box(K, nu.back(), nu.front()))
            ratio.expect(q_rel_dim_ratio(ctx, kappa) == q_rel_dim_oracle(kappa, nu, q, o.budget) / denom, [&] {
              return detail::describe(
                  {{"q", detail::str(qv)}, {"nu", detail::str(nu)}, {"kappa", detail::str(kappa)}});
            });
          reduce.expect(general_q_projection(ctx, TSpec::initial(N, K)).entries == q_link_row(nu, K, q).entries, [&] {
            return detail::describe({{"q", detail::str(qv)}, {"nu", detail::str(nu)}, {"K", detail::str(K)}});
          });
        }
      }
  }
  return {ratio.done(), reduce.done()};
}

/// |qA_i(x) - (-1)^{N-K} A_i(x)| at q = 1 - 10^{-k}, k = 1, 2, 3: the gap
/// shrinks by a factor in [5, 20] per step.
inline std::vector<Check> verify_q_to_1(const VerifyOptions&) {
  CheckBuilder c("q->1 first-order shrink factor in [5,20]");
  struct Case {
    std::size_t K;
    Signature nu;
  };
  for (const auto& cs : {Case{1, {2, 1, 0}}, Case{2, {2, 1, 1, 0}}})
    for (std::size_t i = 1; i <= cs.K; ++i)
      for (long x = cs.nu.back() - long(cs.nu.size()); x < cs.nu.front(); ++x) {
        std::vector<Rat> gaps;
        Rat scale(1);
        for (long k = 1; k <= 3; ++k) {
          scale /= 10;
          QDetContext ctx(cs.K, cs.nu, QParam(1 - scale));
          auto r = q_to_1_check(ctx, i, x);
          gaps.push_back(abs(r.at_q - r.target));
        }
        auto where = [&] {
          return detail::describe({{"nu", detail::str(cs.nu)}, {"K", detail::str(cs.K)}, {"i", detail::str(i)},
                                   {"x", detail::str(x)}});
        };
        if (gaps[0] == 0) {
          c.expect(gaps[1] == 0 && gaps[2] == 0, where);
          continue;
        }
        for (int k = 0; k < 2; ++k) {
          bool ok = gaps[std::size_t(k + 1)] != 0;
          if (ok) {
            Rat ratio = gaps[std::size_t(k)] / gaps[std::size_t(k + 1)];
            ok = ratio >= 5 && ratio <= 20;
          }
          c.expect(ok, where);
        }
      }
  return {c.done()};
}

/// Link rows are stochastic and compose: Lambda^N_K = Lambda^N_M Lambda^M_K.
inline std::vector<Check> verify_coherence(const VerifyOptions& o) {
  CheckBuilder stoch("link rows sum to 1 and are nonnegative");
  CheckBuilder comp("Lambda^N_K = Lambda^N_M o Lambda^M_K");
  CheckBuilder qstoch("q-link rows sum to 1 and are nonnegative");
  CheckBuilder qcomp("q-links compose");
  const long lo = -o.part_bound, hi = o.part_bound;
  for (std::size_t N = 2; N <= o.n_or(5); ++N)
    for (const auto& nu : signatures_in_box(N, lo, hi))
      for (std::size_t K = 1; K < N; ++K) {
        LinkRow direct = link_row(nu, K);
        auto where = [&] { return detail::describe({{"nu", detail::str(nu)}, {"K", detail::str(K)}}); };
        stoch.expect(direct.total() == 1 && direct.nonnegative(), where);
        for (std::size_t M = K + 1; M < N; ++M) {
          LinkRow composed = compose_links(link_row(nu, M), [&](const Signature& mu) { return link_row(mu, K); });
          comp.expect(composed.entries == direct.entries, [&] {
            return detail::describe({{"nu", detail::str(nu)}, {"K", detail::str(K)}, {"M", detail::str(M)}});
          });
        }
      }
  for (const auto& qv : o.qs) {
    QParam q(qv);
    for (std::size_t N = 2; N <= std::min<std::size_t>(o.n_or(5), 4); ++N)
      for (const auto& nu : signatures_in_box(N, lo, hi))
        for (std::size_t K = 1; K < N; ++K) {
          LinkRow direct = q_link_row(nu, K, q);
          qstoch.expect(direct.total() == 1 && direct.nonnegative(), [&] {
            return detail::describe({{"q", detail::str(qv)}, {"nu", detail::str(nu)}, {"K", detail::str(K)}});
          });
          for (std::size_t M = K + 1; M < N; ++M) {
            LinkRow composed =
                compose_links(q_link_row(nu, M, q), [&](const Signature& mu) { return q_link_row(mu, K, q); });
            qcomp.expect(composed.entries == direct.entries, [&] {
              return detail::describe({{"q", detail::str(qv)}, {"nu", detail::str(nu)}, {"K", detail::str(K)},
                                       {"M", detail::str(M)}});
            });
          }
        }
  }
  return {stoch.done(), comp.done(), qstoch.done(), qcomp.done()};
}

/// Boundary sequences exercised by the q-Toeplitz suite: 0, (1,1,...), (0,2,2,...).
inline std::vector<BoundarySeq> qtoeplitz_sequences() {
  return {BoundarySeq::parse(";0"), BoundarySeq::parse(";1"), BoundarySeq::parse("0;2")};
}

inline std::vector<Check> verify_qtoeplitz(const VerifyOptions& o) {
  CheckBuilder three("three-term relation for qA at K=infinity");
  CheckBuilder rec("B recurrence");
  CheckBuilder round("coefficient extraction roundtrip");
  CheckBuilder gen("generating identity");
  CheckBuilder solve("qtoeplitz_solve = recurrence (x,i <= 6)");
  std::mt19937 rng(o.seed);
  for (const auto& qv : o.qs) {
    QParam q(qv);
    for (const auto& n : qtoeplitz_sequences()) {
      auto where = [&](long x, long i) {
        return detail::describe({{"q", detail::str(qv)}, {"n", n.to_string()}, {"x", detail::str(x)},
                                 {"i", detail::str(i)}});
      };
      for (std::size_t K = 2; K <= 4; ++K)
        for (long i = 2; i <= long(K); ++i)
          for (long x = -3; x <= 6; ++x)
            three.expect(qA_infinity(x, K, std::size_t(i - 1), n, q) * q.pow(i) ==
                             qA_infinity(x - 1, K, std::size_t(i), n, q) * q.pow(1 - x) +
                                 qA_infinity(x, K, std::size_t(i), n, q) * (q.pow(i) - q.pow(-x)),
                         [&] { return where(x, i); });
      for (long x = 2; x <= 6; ++x)
        for (long i = 1; i <= 5; ++i)
          rec.expect(B_entry(x, i + 1, n, q) ==
                         B_entry(x - 1, i, n, q) + (q.pow(1 - i) - q.pow(1 - x)) * B_entry(x, i, n, q),
                     [&] { return where(x, i); });
      auto g = b_generating_check(n, q);
      gen.expect(g.ok, [&] { return detail::describe({{"q", detail::str(qv)}, {"n", n.to_string()}}) + " " + g.witness; });
    }
    for (int trial = 0; trial < 5; ++trial) {
      auto c = detail::random_values(rng, 6);
      for (long l = 0; l <= 7; ++l) {
        Rat expect = l < 6 ? c[std::size_t(l)] : Rat(0);
        round.expect(coeff_extract(c, l, q) == expect,
                     [&] { return detail::describe({{"q", detail::str(qv)}, {"l", detail::str(l)}}); });
      }
      auto table = qtoeplitz_recurrence(c, 6, 6, q);
      for (long x = 1; x <= 6; ++x)
        for (long i = 1; i <= 6; ++i)
          solve.expect(qtoeplitz_solve(c, x, i, q) == table[std::size_t(x)][std::size_t(i)], [&] {
            return detail::describe({{"q", detail::str(qv)}, {"x", detail::str(x)}, {"i", detail::str(i)}});
          });
    }
  }
  return {three.done(), rec.done(), round.done(), gen.done(), solve.done()};
}

/// nu(N) for a named family: "zero" or "linear-row:a" = (floor(aN), 0, ..., 0).
inline Signature family_signature(const std::string& family, std::size_t N) {
  if (N == 0) throw std::invalid_argument("family: N must be positive");
  std::vector<long> parts(N, 0);
  if (family == "zero") return Signature(parts);
  const std::string prefix = "linear-row:";
  if (family.rfind(prefix, 0) == 0) {
    Rat a = parse_rat(family.substr(prefix.size()));
    if (a < 0) throw std::invalid_argument("family: linear-row needs a >= 0");
    Rat an = a * long(N);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), an.get_num_mpz_t(), an.get_den_mpz_t());
    parts[0] = fl.get_si();
    return Signature(parts);
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

struct UatRow {
  std::size_t N;
  Signature nu;
  MixedValue gap;
};

inline std::vector<UatRow> uat_experiment(const Signature& kappa, const std::string& family,
                                          const std::vector<std::size_t>& ns, bool numeric, double tol) {
  std::vector<UatRow> rows;
  for (std::size_t N : ns) {
    Signature nu = family_signature(family, N);
    rows.push_back({N, nu, uat_gap(nu, kappa, numeric, tol)});
  }
  return rows;
}

/// Circle quadrature of Phi(u; omega(nu)) R(u) du/u against A_i(x).
struct CircleSpot {
  Signature nu;
  long K, i, x;
  Rat exact;
  CircleQuadrature quad;
};

inline CircleSpot circle_spot_check(double tol = 1e-12) {
  CircleSpot s{{5, 3, 3, 2, 1, 0, 0, 0, -1, -1, -2, -4}, 2, 1, 0, Rat(0), {}};
  s.exact = A_coeff(DetContext(std::size_t(s.K), s.nu), std::size_t(s.i), s.x);
  s.quad = A_coeff_circle(s.nu, s.K, s.i, s.x, tol);
  return s;
}

inline std::vector<Check> verify_boundary(const VerifyOptions& o) {
  CheckBuilder norm("sum of phi_n = 1 (exact mode)");
  CheckBuilder link("Lambda^inf_K row sums to 1 (truncated, 1e-9)");
  CheckBuilder minors("phi_nu >= 0 (N <= 3)");
  CheckBuilder compat("Lambda^inf_N Lambda^N_K = Lambda^inf_K (N <= 4)");
  CheckBuilder product("Phi(u1)Phi(u2) = sum phi_nu s_nu(u1,u2) (1e-9)");
  CheckBuilder circle("circle quadrature = A_coeff (N=12, K=2, 1e-8)");
  CheckBuilder embedding("Phi(1 + N/(z+1/2); omega(nu)) = H*(z; nu)");

  OmegaPoint poly;  // Laurent polynomial: finite support
  poly.beta_plus = {Rat(1, 2), Rat(1, 3)};
  poly.beta_minus = {Rat(1, 4)};
  OmegaPoint mix;
  mix.alpha_plus = {Rat(1, 10)};
  mix.beta_plus = {Rat(1, 3)};
  mix.alpha_minus = {Rat(1, 8), Rat(1, 20)};
  mix.beta_minus = {Rat(1, 5)};
  const std::vector<OmegaPoint> samples{poly, mix, embed({3, 1, 0, -2}), embed({4, 2, 0, 0, -1, -1, -3})};

  auto pw = phi_coeffs_exact(poly, -10, 10);
  Rat total(0);
  for (long n = -10; n <= 10; ++n) total += pw.exact_at(n);
  norm.expect(total == 1, [&] { return "sum=" + to_string(total); });

  for (std::size_t K = 1; K <= 2; ++K) {
    Rat exact_total(0);
    for (const auto& kappa : signatures_in_box(K, -2, 3)) exact_total += *link_infinity(pw, kappa).exact;
    link.expect(exact_total == 1, [&] { return "polynomial omega K=" + std::to_string(K); });
    auto mw = phi_coeffs_exact(mix, -30, 30);
    double t = 0;
    for (const auto& kappa : signatures_in_box(K, -12, 12)) t += link_infinity(mw, kappa).approx;
    link.expect(std::abs(t - 1) < 1e-9, [&] { return "mixed omega K=" + std::to_string(K); });
  }

  for (std::size_t si = 0; si < samples.size(); ++si) {
    auto w = phi_coeffs_exact(samples[si], -8, 8);
    for (std::size_t N = 1; N <= 3; ++N)
      for (const auto& nu : signatures_in_box(N, -3, 3))
        minors.expect(*phi_signature(w, nu).exact >= 0,
                      [&] { return "sample " + std::to_string(si) + " nu=" + sig_label(nu); });
  }

  for (std::size_t N = 2; N <= 4; ++N)
    for (std::size_t K = 1; K < N; ++K)
      for (const auto& kappa : signatures_in_box(K, -1, 2)) {
        Rat lhs(0);
        for (const auto& nu : signatures_in_box(N, -1, 2)) {
          Rat top = *link_infinity(pw, nu).exact;
          if (top != 0) lhs += top * Rat(dim_product(kappa)) * rel_dim_ratio(DetContext(K, nu), kappa);
        }
        Rat rhs = *link_infinity(pw, kappa).exact;
        compat.expect(abs(lhs - rhs) < Rat(1, 1000000000), [&] {
          return detail::describe({{"N", detail::str(N)}, {"kappa", detail::str(kappa)}});
        });
      }

  std::mt19937 rng(o.seed);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
  auto mw = phi_coeffs_exact(mix, -60, 60);
  for (int t = 0; t < 6; ++t) {
    Rat u1 = rat(num(rng), den(rng)), u2 = rat(num(rng), den(rng));
    if (u1 == 0 || u2 == 0 || u1 == u2) continue;
    Rat s(0);
    for (const auto& nu : signatures_in_box(2, -3, 4)) s += *phi_signature(pw, nu).exact * schur(nu, {u1, u2});
    product.expect(abs(s - phi_eval(poly, u1) * phi_eval(poly, u2)) < Rat(1, 1000000000),
                   [&] { return "polynomial omega u=" + to_string(u1) + "," + to_string(u2); });
  }
  for (auto [u1, u2] : {std::pair{Rat(6, 5), Rat(4, 5)}, std::pair{Rat(3, 2), Rat(7, 10)}}) {
    Rat s(0);
    for (const auto& nu : signatures_in_box(2, -25, 25)) s += *phi_signature(mw, nu).exact * schur(nu, {u1, u2});
    double gap = std::abs(to_double(s - phi_eval(mix, u1) * phi_eval(mix, u2)));
    product.expect(gap < 1e-9, [&] { return "mixed omega u=" + to_string(u1) + "," + to_string(u2); });
  }

  auto spot = circle_spot_check();
  circle.expect(std::abs(spot.quad.value - to_double(spot.exact)) < 1e-8, [&] {
    std::ostringstream os;
    os.precision(17);
    os << "quadrature=" << spot.quad.value << " exact=" << to_string(spot.exact);
    return os.str();
  });

  for (std::size_t N = 1; N <= 4; ++N)
    for (const auto& nu : signatures_in_box(N, -2, 2))
      for (Rat z : {Rat(1, 3), Rat(-17, 5), Rat(9, 2)}) {
        Rat h;
        try {
          h = H_star(z, nu);
        } catch (const PoleError&) {
          continue;
        }
        embedding.expect(phi_eval(embed(nu), 1 + Rat(long(N)) / (z + Rat(1, 2))) == h,
                         [&] { return sig_label(nu) + " z=" + to_string(z); });
      }
  return {norm.done(), link.done(), minors.done(), compat.done(), product.done(), circle.done(), embedding.done()};
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"q1-oracle", "q-oracle",  "general-T", "bo-equivalence",
                                              "q-to-1",    "coherence", "qtoeplitz", "boundary"};
  return names;
}

inline std::vector<Check> run_suite(const std::string& name, const VerifyOptions& o) {
  if (name == "q1-oracle") return verify_q1_oracle(o);
  if (name == "q-oracle") return verify_q_oracle(o);
  if (name == "general-T") return verify_general_T(o);
  if (name == "bo-equivalence") return verify_bo_equivalence(o);
  if (name == "q-to-1") return verify_q_to_1(o);
  if (name == "coherence") return verify_coherence(o);
  if (name == "qtoeplitz") return verify_qtoeplitz(o);
  if (name == "boundary") return verify_boundary(o);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

/// nu(N) = (5,4,3,2,1,0,...,0,-1,-2), shortened at the top when N < 7.
inline Signature bench_signature(std::size_t N) {
  if (N < 3) throw std::invalid_argument("bench: N must be at least 3");
  std::vector<long> parts(N, 0);
  for (std::size_t r = 0; r < std::min<std::size_t>(5, N - 2); ++r) parts[r] = long(5 - r);
  parts[N - 2] = -1;
  parts[N - 1] = -2;
  return Signature(parts);
}

struct BenchRow {
  std::size_t N;
  Signature nu;
  std::size_t support;
  Rat row_sum;
  double det_seconds;
  std::optional<double> enum_seconds;  // unset when the budget was exceeded
  bool enum_agrees = true;
};

inline BenchRow bench_one(std::size_t N, std::size_t K, std::uint64_t budget) {
  using clock = std::chrono::steady_clock;
  BenchRow b{N, bench_signature(N), 0, Rat(0), 0, std::nullopt, true};
  auto t0 = clock::now();
  LinkRow row = link_row(b.nu, K);
  b.det_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  b.support = row.entries.size();
  b.row_sum = row.total();
  t0 = clock::now();
  try {
    Rat dim(dim_product(b.nu));
    for (const auto& [kappa, v] : row.entries)
      if (Rat(dim_product(kappa)) * Rat(rel_dim_oracle(kappa, b.nu, budget)) / dim != v) b.enum_agrees = false;
    b.enum_seconds = std::chrono::duration<double>(clock::now() - t0).count();
  } catch (const BudgetExceeded&) {
  }
  return b;
}

}  // namespace gtkit
