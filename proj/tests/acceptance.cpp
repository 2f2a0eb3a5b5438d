// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "gtkit/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace gtkit;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_checks(const std::vector<Check>& checks) {
  Outcome o{true, ""};
  std::size_t cases = 0;
  for (const auto& c : checks) {
    cases += c.cases;
    if (!c.passed && o.ok) {
      o.ok = false;
      o.detail = c.name + " failed at " + c.counterexample + "; ";
    }
  }
  o.detail += std::to_string(cases) + " cases";
  return o;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome uat_criterion() {
  Outcome o{true, ""};
  for (const Signature& kappa : {Signature{0}, Signature{1}}) {
    auto rows = uat_experiment(kappa, "linear-row:1/2", {8, 16, 32}, true, 1e-10);
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += "kappa=" + sig_label(kappa) + " gaps";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      o.detail += " " + fmt(rows[k].gap.approx);
      if (k && !(rows[k].gap.approx < rows[k - 1].gap.approx)) o.ok = false;
      if (rows[k].gap.tolerance > 1e-10) o.ok = false;
    }
    if (!(rows.back().gap.approx < 0.1)) o.ok = false;
  }
  return o;
}

Outcome circle_criterion() {
  auto s = circle_spot_check(1e-12);
  double err = std::abs(s.quad.value - to_double(s.exact));
  bool ok = err < 1e-8 && s.quad.last_change < 1e-12;
  return {ok, "nu=" + sig_label(s.nu) + " i=" + std::to_string(s.i) + " x=" + std::to_string(s.x) + " exact=" +
                  to_string(s.exact) + " error=" + fmt(err) + " M=" + std::to_string(s.quad.points)};
}

Outcome bench_criterion() {
  BenchRow b = bench_one(20, 2, kDefaultBudget);
  bool ok = b.det_seconds < 10 && b.row_sum == 1 && !b.enum_seconds;
  return {ok, "nu=" + sig_label(b.nu) + " link_row " + fmt(b.det_seconds) + " s, support " +
                  std::to_string(b.support) + ", row sum " + to_string(b.row_sum) + ", enumeration " +
                  (b.enum_seconds ? "finished within budget" : "exceeded budget " + std::to_string(kDefaultBudget))};
}

}  // namespace

int main() {
  VerifyOptions five;
  five.max_n = 5;
  five.part_bound = 2;
  VerifyOptions four = five;
  four.max_n = 4;

  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double time_limit;  // seconds, 0 for none
  };
  const std::vector<Criterion> criteria{
      {1, "q=1 determinant vs trapezoid enumeration, N<=5, parts in [-2,2]",
       [&] { return from_checks(verify_q1_oracle(five)); }, 300},
      {2, "expansion coefficients = A_i(x) and biorthogonality, exact",
       [&] { return from_checks(verify_bo_equivalence(five)); }, 0},
      {3, "general q^T vs skew Schur oracle, N<=4, q in {1/2,2/3}",
       [&] { return from_checks(verify_general_T(four)); }, 600},
      {4, "q determinant vs q-weighted enumeration, N<=4, q in {1/2,2/3}",
       [&] { return from_checks(verify_q_oracle(four)); }, 0},
      {5, "q->1 first-order convergence, shrink factor in [5,20]", [&] { return from_checks(verify_q_to_1(five)); },
       0},
      {6, "uniform approximation gap decreasing over N=8,16,32 and < 0.1 at 32", uat_criterion, 0},
      {7, "unit-circle quadrature = A_i(x) within 1e-8 at N=12, K=2", circle_criterion, 0},
      {8, "q-Toeplitz relations, recurrence, roundtrip, generating identity, solver",
       [&] { return from_checks(verify_qtoeplitz(five)); }, 0},
      {9, "link rows stochastic and coherent (N<=5; q-links N<=4)",
       [&] { return from_checks(verify_coherence(five)); }, 0},
      {10, "N=20, K=2 link row < 10 s with sum 1; enumeration over budget", bench_criterion, 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      o.ok = false;
      o.detail += "; over time limit " + fmt(c.time_limit) + " s";
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << " [" << o.detail << "; " << fmt(secs)
              << " s]" << std::endl;
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " criteria" : "ALL CRITERIA PASSED") << std::endl;
  return failed ? 1 : 0;
}
