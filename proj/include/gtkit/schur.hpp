#pragma once

// Laurent-Schur and skew Schur values at explicit points. Three routes are
// provided (bialternant, pattern sum, Jacobi-Trudi) so they can police each
// other; schur() picks the cheapest one that applies.

#include "gtkit/errors.hpp"
#include "gtkit/gt_core.hpp"
#include "gtkit/linalg.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace gtkit {

using ValueList = std::vector<Rat>;

namespace detail {

inline void require_nonzero(const ValueList& vals) {
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] == 0)
      throw std::invalid_argument("evaluation point " + std::to_string(i + 1) + " is zero");
}

inline bool pairwise_distinct(const ValueList& vals) {
  std::set<Rat> seen(vals.begin(), vals.end());
  return seen.size() == vals.size();
}

}  // namespace detail

/// det[u_i^{nu_j+N-j}] / det[u_i^{N-j}].
inline Rat schur_bialternant(const Signature& nu, const ValueList& vals) {
  const std::size_t n = nu.size();
  if (vals.size() != n) throw DimensionError("schur_bialternant: need one value per part");
  detail::require_nonzero(vals);
  if (!detail::pairwise_distinct(vals))
    throw ContractViolation("schur_bialternant: repeated values; use schur_combinatorial");
  RatMatrix top(n, n), bottom(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      top(i, j) = ipow(vals[i], nu[j] + long(n - 1 - j));
      bottom(i, j) = ipow(vals[i], long(n - 1 - j));
    }
  return det(top) / det(bottom);
}

/// s_{nu/kappa}(u_1, ..., u_{N-K}) as a sum over trapezoids, where the step
/// from row K+m-1 to row K+m carries u_m^{|row_{K+m}| - |row_{K+m-1}|}.
inline Rat skew_schur_combinatorial(const Signature& nu, const Signature& kappa,
                                    const ValueList& vals,
                                    std::uint64_t budget = default_budget()) {
  if (kappa.size() > nu.size() || vals.size() != nu.size() - kappa.size())
    throw DimensionError("skew_schur_combinatorial: need N-K values");
  detail::require_nonzero(vals);
  if (kappa.size() == nu.size()) return kappa == nu ? Rat(1) : Rat(0);
  Rat total(0);
  for_each_trapezoid(
      kappa, nu,
      [&](const std::vector<std::vector<long>>& rows) {
        Rat w(1);
        long prev = 0;
        for (long x : rows[0]) prev += x;
        for (std::size_t m = 1; m < rows.size(); ++m) {
          long cur = 0;
          for (long x : rows[m]) cur += x;
          w *= ipow(vals[m - 1], cur - prev);
          prev = cur;
        }
        total += w;
      },
      budget);
  return total;
}

inline Rat schur_combinatorial(const Signature& nu, const ValueList& vals,
                               std::uint64_t budget = default_budget()) {
  return skew_schur_combinatorial(nu, Signature{}, vals, budget);
}

/// u^{|nu|-|kappa|} if kappa ≺ nu, otherwise 0.
inline Rat skew_schur_one_variable(const Signature& nu, const Signature& kappa, const Rat& u) {
  if (!interlaces(kappa, nu)) return Rat(0);
  return ipow(u, nu.weight() - kappa.weight());
}

/// det[h_{nu_i - kappa_j + j - i}(vals)] of size N, kappa padded by zeros.
/// Both signatures are first shifted by a common constant so that they are
/// nonnegative; the shift contributes (prod u)^c, which is divided out.
inline Rat skew_schur_jacobi_trudi(const Signature& nu, const Signature& kappa,
                                   const ValueList& vals) {
  if (kappa.size() > nu.size() || vals.size() != nu.size() - kappa.size())
    throw DimensionError("skew_schur_jacobi_trudi: need N-K values");
  detail::require_nonzero(vals);
  const std::size_t n = nu.size();
  if (n == 0) return Rat(1);
  long low = nu.back();
  if (!kappa.empty()) low = std::min(low, kappa.back());
  const long c = std::max(0L, -low);
  std::vector<long> a(nu.parts()), b(n, 0);
  for (auto& v : a) v += c;
  for (std::size_t j = 0; j < kappa.size(); ++j) b[j] = kappa[j] + c;
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = complete_sym(a[i] - b[j] + long(j) - long(i), vals);
  Rat prod(1);
  for (const auto& u : vals) prod *= u;
  return det(m) / ipow(prod, c);
}

/// s_nu(vals), using the bialternant when the points are distinct.
inline Rat schur(const Signature& nu, const ValueList& vals) {
  if (detail::pairwise_distinct(vals)) return schur_bialternant(nu, vals);
  return schur_combinatorial(nu, vals);
}

/// h_m(q^{j_1}, ..., q^{j_l}) = sum_k q^{j_k m} prod_{r != k} (1 - q^{j_r - j_k})^{-1}.
inline Rat h_at_q_powers(long m, const std::vector<long>& J, const QParam& q) {
  if (J.empty()) throw std::invalid_argument("h_at_q_powers: empty exponent list");
  for (std::size_t i = 1; i < J.size(); ++i)
    if (!(J[i - 1] < J[i]))
      throw std::invalid_argument("h_at_q_powers: exponents must be strictly increasing");
  if (m < 0) return Rat(0);
  Rat s(0);
  for (std::size_t k = 0; k < J.size(); ++k) {
    Rat term = q.pow(J[k] * m);
    for (std::size_t r = 0; r < J.size(); ++r)
      if (r != k) term /= Rat(1) - q.pow(J[r] - J[k]);
    s += term;
  }
  return s;
}

/// A particle position, or the virtual particle appended to a shorter row.
using Particle = std::optional<long>;
inline constexpr Particle kVirtual = std::nullopt;

/// xi_u(x, y) = u^{y-x} [x <= y] + u^y [x = virt].
inline Rat xi_kernel(const Rat& u, const Particle& x, long y) {
  if (!x) return ipow(u, y);
  return *x <= y ? ipow(u, y - *x) : Rat(0);
}

/// Particle row x_j = sig_j - j, optionally followed by the virtual particle.
inline std::vector<Particle> particles(const Signature& sig, bool append_virtual) {
  std::vector<Particle> out;
  for (std::size_t j = 0; j < sig.size(); ++j) out.emplace_back(sig[j] - long(j + 1));
  if (append_virtual) out.push_back(kVirtual);
  return out;
}

/// u^N det[xi_u(x^{N-1}_i, x^N_j)] with x^{N-1}_N = virt.
inline Rat skew_schur_one_variable_det(const Signature& nu, const Signature& mu, const Rat& u) {
  const std::size_t n = nu.size();
  if (mu.size() + 1 != n) throw DimensionError("one-variable determinant needs adjacent lengths");
  auto xs = particles(mu, true);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = xi_kernel(u, xs[i], nu[j] - long(j + 1));
  return ipow(u, long(n)) * det(m);
}

}  // namespace gtkit
