#pragma once

// Relative dimensions Dim_{K,N}(kappa, nu) / Dim_N(nu) as K x K determinants,
// evaluated through three independent routes, and the resulting link rows.

#include "gtkit/errors.hpp"
#include "gtkit/gt_core.hpp"
#include "gtkit/linalg.hpp"
#include "gtkit/residue.hpp"

#include <map>
#include <vector>

namespace gtkit {

/// The (K, N, nu) triple with the shifted coordinates c_j = nu_j - j and the
/// denominators prod_{r != j}(c_j - c_r) precomputed.
class DetContext {
 public:
  DetContext(std::size_t K, Signature nu) : K_(K), nu_(std::move(nu)) {
    const std::size_t n = nu_.size();
    if (!(K_ >= 1 && K_ < n))
      throw std::invalid_argument("need 1 <= K < N (K=" + std::to_string(K_) +
                                  ", N=" + std::to_string(n) + ")");
    for (std::size_t j = 0; j < n; ++j) c_.push_back(nu_[j] - long(j + 1));
    for (std::size_t j = 0; j < n; ++j) {
      Rat d(1);
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) d *= c_[j] - c_[r];
      denom_.push_back(d);
    }
  }

  std::size_t K() const { return K_; }
  std::size_t N() const { return nu_.size(); }
  const Signature& nu() const { return nu_; }
  /// c_j = nu_j - j, strictly decreasing.
  const std::vector<long>& points() const { return c_; }
  const Rat& denominator(std::size_t j) const { return denom_[j]; }

 private:
  std::size_t K_;
  Signature nu_;
  std::vector<long> c_;
  std::vector<Rat> denom_;
};

/// H*(z; nu) = prod_r (z + r) / (z + r - nu_r).
inline Rat H_star(const Rat& z, const Signature& nu) {
  Rat v(1);
  for (std::size_t r = 1; r <= nu.size(); ++r) {
    Rat den = z + long(r) - nu[r - 1];
    if (den == 0) throw PoleError("H_star: pole at r = " + std::to_string(r));
    v *= (z + long(r)) / den;
  }
  return v;
}

namespace detail {

// P_i(z) = prod_{r=1}^{i-1} (z + r) * prod_{r=N-K+i+1}^{N} (z + r).
inline Rat p_factor(long z, std::size_t i, std::size_t K, std::size_t N) {
  Rat p(1);
  for (long r = 1; r <= long(i) - 1; ++r) p *= z + r;
  for (long r = long(N - K + i) + 1; r <= long(N); ++r) p *= z + r;
  return p;
}

inline void check_row_index(std::size_t i, std::size_t K) {
  if (i < 1 || i > K)
    throw std::out_of_range("row index " + std::to_string(i) + " outside 1.." + std::to_string(K));
}

inline void check_kappa(const DetContext& ctx, const Signature& kappa) {
  if (kappa.size() != ctx.K())
    throw DimensionError("kappa has length " + std::to_string(kappa.size()) + ", expected " +
                         std::to_string(ctx.K()));
}

}  // namespace detail

/// A_i(x) = (N-K) sum_{j: c_j >= x} (c_j - x + 1)_{N-K-1} P_i(c_j) / prod_{r != j}(c_j - c_r).
inline Rat A_coeff(const DetContext& ctx, std::size_t i, long x) {
  detail::check_row_index(i, ctx.K());
  const std::size_t N = ctx.N(), K = ctx.K();
  const auto& c = ctx.points();
  Rat s(0);
  for (std::size_t j = 0; j < N && c[j] >= x; ++j)
    s += pochhammer(Rat(c[j] - x + 1), long(N - K - 1)) * detail::p_factor(c[j], i, K, N) /
         ctx.denominator(j);
  return Rat(long(N - K)) * s;
}

namespace detail {

template <typename Entry>
Rat kappa_det(const DetContext& ctx, const Signature& kappa, Entry entry) {
  check_kappa(ctx, kappa);
  const std::size_t K = ctx.K();
  RatMatrix m(K, K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j) m(i, j) = entry(i + 1, kappa[j] - long(j + 1));
  return det(m);
}

}  // namespace detail

/// det[A_i(kappa_j - j)] = Dim_{K,N}(kappa, nu) / Dim_N(nu).
inline Rat rel_dim_ratio(const DetContext& ctx, const Signature& kappa) {
  return detail::kappa_det(ctx, kappa, [&](std::size_t i, long x) { return A_coeff(ctx, i, x); });
}

/// psi_i(x | K) = sum_{j: c_j >= x} (c_j - x + 1)_{N-K-1} / (N-K-1)! [V^{-1}]_{ij}
/// over the nodes c_1 > ... > c_N; here 1 <= i <= N.
class PsiTable {
 public:
  explicit PsiTable(const DetContext& ctx) : ctx_(ctx) {
    std::vector<Rat> nodes;
    for (long c : ctx.points()) nodes.emplace_back(c);
    inv_ = vandermonde_inverse(Nodes(std::move(nodes)));
  }

  Rat operator()(std::size_t i, long x) const {
    const std::size_t N = ctx_.N(), K = ctx_.K();
    if (i < 1 || i > N) throw std::out_of_range("psi row index outside 1..N");
    const auto& c = ctx_.points();
    const Rat fact = Rat(factorial(long(N - K - 1)));
    Rat s(0);
    for (std::size_t j = 0; j < N && c[j] >= x; ++j)
      s += pochhammer(Rat(c[j] - x + 1), long(N - K - 1)) * inv_(i - 1, j);
    return s / fact;
  }

 private:
  const DetContext& ctx_;
  RatMatrix inv_;
};

inline Rat psi_coeff(const DetContext& ctx, std::size_t i, long x) { return PsiTable(ctx)(i, x); }

/// (N-1)! (N-2)! ... (N-K)! det[psi_i(kappa_j - j)].
inline Rat rel_dim_ratio_first(const DetContext& ctx, const Signature& kappa) {
  PsiTable psi(ctx);
  Rat pref(1);
  for (std::size_t m = ctx.N() - ctx.K(); m <= ctx.N() - 1; ++m) pref *= Rat(factorial(long(m)));
  return pref * detail::kappa_det(ctx, kappa, [&](std::size_t i, long x) { return psi(i, x); });
}

/// f_{L,m}(z) = prod_{l in L}(z - l) / prod_{l in L}(z - l - m) for an integer
/// interval L = [lo, hi].
inline Rat f_basis(long lo, long hi, long m, const Rat& z) {
  Rat v(1);
  for (long l = lo; l <= hi; ++l) {
    Rat den = z - (l + m);
    if (den == 0) throw PoleError("f_basis: pole at z = " + std::to_string(l + m));
    v *= (z - l) / den;
  }
  return v;
}

/// Expansion H*(z; nu) = sum_m (H* : f_{L,m}) f_{L,m}(z) for L = L(N, i) =
/// {-N+K-i, ..., -i}, found by solving an exact linear system on sample
/// points. Independent of the residue evaluation of A_i.
class BoExpansion {
 public:
  BoExpansion(const DetContext& ctx, std::size_t i) {
    detail::check_row_index(i, ctx.K());
    const long N = long(ctx.N()), K = long(ctx.K()), ii = long(i);
    lo_ = -N + K - ii;
    hi_ = -ii;
    const auto& c = ctx.points();
    const long cmax = c.front(), cmin = c.back();
    // any pole of f_{L,m} lies in [lo+m, hi+m]; wide enough to cover every
    // pole of H* with room to spare
    m_lo_ = std::min(0L, cmin - hi_ - 1);
    m_hi_ = std::max(0L, cmax - lo_ + 1);
    const std::size_t n = std::size_t(m_hi_ - m_lo_ + 1);
    for (std::size_t extra = n; ; extra += n) {
      const std::size_t rows = n + extra;
      RatMatrix M(rows, n);
      std::vector<Rat> b(rows);
      for (std::size_t k = 0; k < rows; ++k) {
        Rat z = Rat(long(k) + m_lo_ + lo_ - 2) + Rat(1, 2);
        b[k] = H_star(z, ctx.nu());
        for (long m = m_lo_; m <= m_hi_; ++m) M(k, std::size_t(m - m_lo_)) = f_basis(lo_, hi_, m, z);
      }
      if (auto y = solve_exact(M, b)) {
        coeffs_ = std::move(*y);
        break;
      }
      if (extra > 8 * n) throw ContractViolation("BoExpansion: sample system stays singular");
    }
  }

  /// (H* : f_{L,m}); zero outside the solved range.
  Rat coefficient(long m) const {
    if (m < m_lo_ || m > m_hi_) return Rat(0);
    return coeffs_[std::size_t(m - m_lo_)];
  }

 private:
  long lo_, hi_, m_lo_, m_hi_;
  std::vector<Rat> coeffs_;
};

/// (H*(., nu) : f_{L(N,i), x+i}); must coincide with A_i(x).
inline Rat bo_coefficient(const DetContext& ctx, std::size_t i, long x) {
  return BoExpansion(ctx, i).coefficient(x + long(i));
}

/// det[(H* : f_{L(N,j), kappa_i - i + j})]_{i,j=1}^K.
inline Rat rel_dim_ratio_bo(const DetContext& ctx, const Signature& kappa) {
  detail::check_kappa(ctx, kappa);
  const std::size_t K = ctx.K();
  std::vector<BoExpansion> ex;
  for (std::size_t j = 1; j <= K; ++j) ex.emplace_back(ctx, j);
  RatMatrix m(K, K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      m(i, j) = ex[j].coefficient(kappa[i] - long(i + 1) + long(j + 1));
  return det(m);
}

/// (N-K) times the sum of residues at poles >= x of
/// (z - x + 1)_{N-K-1} / (z + i - x - p)_{N-K+1}; equals [i == p].
inline Rat biorthogonality_transform(std::size_t K, std::size_t N, long i, long p, long x) {
  RationalFunction f;
  std::vector<Rat> zeros;
  for (long k = 1; k <= long(N - K) - 1; ++k) zeros.emplace_back(x - k);
  f.num = Polynomial::from_roots(zeros);
  for (long k = 0; k <= long(N - K); ++k) f.roots.emplace_back(x + p - i - k);
  f.scale = Rat(long(N - K));
  return residue_sum(f, [&](const Rat& z) { return z >= x; });
}

/// Finitely supported probability row kappa -> Lambda(nu, kappa) on level K.
struct LinkRow {
  std::size_t level = 0;
  std::map<Signature, Rat> entries;

  Rat total() const {
    Rat s(0);
    for (const auto& [k, v] : entries) s += v;
    return s;
  }
  bool nonnegative() const {
    for (const auto& [k, v] : entries)
      if (v < 0) return false;
    return true;
  }
  Rat at(const Signature& kappa) const {
    auto it = entries.find(kappa);
    return it == entries.end() ? Rat(0) : it->second;
  }
};

/// Lambda^N_K(nu, kappa) = Dim_K(kappa) * Dim_{K,N}(kappa, nu) / Dim_N(nu), over the
/// box nu_N <= kappa_K <= ... <= kappa_1 <= nu_1; zero entries are omitted.
inline LinkRow link_row(const Signature& nu, std::size_t K) {
  DetContext ctx(K, nu);
  std::map<std::pair<std::size_t, long>, Rat> cache;
  auto A = [&](std::size_t i, long x) -> const Rat& {
    auto key = std::make_pair(i, x);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, A_coeff(ctx, i, x)).first;
    return it->second;
  };
  LinkRow row;
  row.level = K;
  for (const auto& kappa : signatures_in_box(K, nu.back(), nu.front())) {
    Rat r = detail::kappa_det(ctx, kappa, A);
    if (r == 0) continue;
    row.entries.emplace(kappa, Rat(dim_product(kappa)) * r);
  }
  return row;
}

/// Sum over mu of upper(mu) * lower(mu), lower given per mu.
template <typename LowerRow>
LinkRow compose_links(const LinkRow& upper, LowerRow lower) {
  LinkRow out;
  bool first = true;
  for (const auto& [mu, w] : upper.entries) {
    LinkRow r = lower(mu);
    if (first) out.level = r.level, first = false;
    for (const auto& [k, v] : r.entries) out.entries[k] += w * v;
  }
  std::erase_if(out.entries, [](const auto& e) { return e.second == 0; });
  return out;
}

}  // namespace gtkit
