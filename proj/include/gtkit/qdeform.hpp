#pragma once

// q-weighted relative dimensions, arbitrary geometric q-specializations, the
// limits along stabilizing sequences and the q-Toeplitz calculus.
//
// Every q-Pochhammer ratio is cancelled at the level of exponents first:
// a factor (1 - z q^e) is stored as the root z = q^{-e} together with the
// constant -q^e, so residue sums never divide by a vanishing quantity.

#include "gtkit/detformula.hpp"
#include "gtkit/errors.hpp"
#include "gtkit/gt_core.hpp"
#include "gtkit/linalg.hpp"
#include "gtkit/residue.hpp"
#include "gtkit/schur.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace gtkit {

class QDetContext {
 public:
  QDetContext(std::size_t K, Signature nu, QParam q) : base_(K, std::move(nu)), q_(std::move(q)) {
    const auto& c = base_.points();
    for (long cj : c) Q_.push_back(q_.pow(cj));
    for (std::size_t j = 0; j < c.size(); ++j) {
      Rat d(1);
      for (std::size_t r = 0; r < c.size(); ++r)
        if (r != j) d *= Q_[j] - Q_[r];
      denom_.push_back(d);
    }
  }

  const DetContext& base() const { return base_; }
  std::size_t K() const { return base_.K(); }
  std::size_t N() const { return base_.N(); }
  const Signature& nu() const { return base_.nu(); }
  const QParam& q() const { return q_; }
  const std::vector<long>& points() const { return base_.points(); }
  /// q^{nu_j - j}
  const Rat& qpoint(std::size_t j) const { return Q_[j]; }
  const Rat& denominator(std::size_t j) const { return denom_[j]; }

 private:
  DetContext base_;
  QParam q_;
  std::vector<Rat> Q_;
  std::vector<Rat> denom_;
};

/// qA_i(x) = sum_{j: c_j >= x} (1 - q^{N-K}) (q^{c_j-x+1}; q)_{N-K-1}
///   prod_{r=1}^{i-1} (q^{c_j} - q^{-r}) prod_{r=N-K+i+1}^{N} (q^{c_j} - q^{-r})
///   / prod_{r != j} (q^{c_j} - q^{c_r}).
inline Rat qA_coeff(const QDetContext& ctx, std::size_t i, long x) {
  detail::check_row_index(i, ctx.K());
  const std::size_t N = ctx.N(), K = ctx.K();
  const QParam& q = ctx.q();
  const auto& c = ctx.points();
  Rat s(0);
  for (std::size_t j = 0; j < N && c[j] >= x; ++j) {
    const Rat& Qj = ctx.qpoint(j);
    Rat t = qpochhammer(q.pow(c[j] - x + 1), q.value(), long(N - K - 1));
    for (long r = 1; r <= long(i) - 1; ++r) t *= Qj - q.pow(-r);
    for (long r = long(N - K + i) + 1; r <= long(N); ++r) t *= Qj - q.pow(-r);
    s += t / ctx.denominator(j);
  }
  return (Rat(1) - q.pow(long(N - K))) * s;
}

/// (-1)^{K(N-K)} q^{(N-K)|kappa|} q^{-K(N-K)(N+2)/2} det[qA_i(kappa_j - j)]
/// = q-weighted count of trapezoids / q_dim(nu).
inline Rat q_rel_dim_ratio(const QDetContext& ctx, const Signature& kappa) {
  detail::check_kappa(ctx.base(), kappa);
  const long N = long(ctx.N()), K = long(ctx.K());
  const std::size_t k = ctx.K();
  RatMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = qA_coeff(ctx, i + 1, kappa[j] - long(j + 1));
  Rat d = det(m);
  if (d == 0) return d;
  const long sign = (K * (N - K)) % 2 ? -1 : 1;
  return Rat(sign) * ctx.q().pow((N - K) * kappa.weight() - K * (N - K) * (N + 2) / 2) * d;
}

/// The q-link row kappa -> qDim_K(kappa) * q_rel_dim_ratio(kappa).
inline LinkRow q_link_row(const Signature& nu, std::size_t K, const QParam& q) {
  QDetContext ctx(K, nu, q);
  LinkRow row;
  row.level = K;
  for (const auto& kappa : signatures_in_box(K, nu.back(), nu.front())) {
    Rat r = q_rel_dim_ratio(ctx, kappa);
    if (r == 0) continue;
    row.entries.emplace(kappa, q_dim(kappa, q) * r);
  }
  return row;
}

struct QToOne {
  Rat at_q;
  Rat target;
};

/// qA_i(x) at the context's q next to its q -> 1 limit (-1)^{N-K} A_i(x).
inline QToOne q_to_1_check(const QDetContext& ctx, std::size_t i, long x) {
  Rat target = A_coeff(ctx.base(), i, x);
  if ((ctx.N() - ctx.K()) % 2) target = -target;
  return {qA_coeff(ctx, i, x), target};
}

/// Strictly increasing subset T of {0, ..., N-1} with |T| = N - K, and the
/// derived S = F \ T and S' = sorted(N - S).
class TSpec {
 public:
  TSpec(std::size_t N, std::size_t K, std::vector<long> T) : T_(std::move(T)) {
    if (T_.size() != N - K) throw std::invalid_argument("TSpec: |T| must equal N-K");
    for (std::size_t k = 0; k < T_.size(); ++k) {
      if (T_[k] < 0 || T_[k] >= long(N)) throw std::invalid_argument("TSpec: element outside 0..N-1");
      if (k && T_[k - 1] >= T_[k]) throw std::invalid_argument("TSpec: T must be strictly increasing");
    }
    for (long s = 0; s < long(N); ++s)
      if (std::find(T_.begin(), T_.end(), s) == T_.end()) S_.push_back(s);
    for (auto it = S_.rbegin(); it != S_.rend(); ++it) Sp_.push_back(long(N) - *it);
  }
  /// T = {0, ..., N-K-1}
  static TSpec initial(std::size_t N, std::size_t K) {
    std::vector<long> t;
    for (long k = 0; k < long(N - K); ++k) t.push_back(k);
    return TSpec(N, K, std::move(t));
  }
  /// All subsets of size N-K, in lexicographic order.
  static std::vector<TSpec> all(std::size_t N, std::size_t K) {
    std::vector<TSpec> out;
    const std::size_t L = N - K;
    std::vector<long> t;
    for (long k = 0; k < long(L); ++k) t.push_back(k);
    while (true) {
      out.emplace_back(N, K, t);
      std::size_t p = L;
      while (p > 0 && t[p - 1] == long(N - L + p - 1)) --p;
      if (p == 0) break;
      ++t[p - 1];
      for (std::size_t r = p; r < L; ++r) t[r] = t[r - 1] + 1;
    }
    return out;
  }

  const std::vector<long>& T() const { return T_; }
  const std::vector<long>& S() const { return S_; }
  const std::vector<long>& S_prime() const { return Sp_; }

 private:
  std::vector<long> T_, S_, Sp_;
};

/// psi^J_i(x) = sum_j h_{c_j - x}(q^J) [V^{-1}]_{i, col(j)}, where V is built on
/// the nodes q^{c_N} > ... > q^{c_1} and col(j) is the position of q^{c_j}
/// in that list. Valid for any strictly increasing J, 1 <= i <= N.
class PsiT {
 public:
  PsiT(const QDetContext& ctx, std::vector<long> J) : ctx_(ctx), J_(std::move(J)) {
    std::vector<Rat> nodes;
    for (std::size_t j = ctx.N(); j-- > 0;) nodes.push_back(ctx.qpoint(j));
    inv_ = vandermonde_inverse(Nodes(std::move(nodes)));
  }

  Rat operator()(std::size_t i, long x) const {
    const std::size_t N = ctx_.N();
    if (i < 1 || i > N) throw std::out_of_range("psi_T row index outside 1..N");
    const auto& c = ctx_.points();
    Rat s(0);
    for (std::size_t j = 0; j < N && c[j] >= x; ++j)
      s += h_at_q_powers(c[j] - x, J_, ctx_.q()) * inv_(i - 1, N - 1 - j);
    return s;
  }

 private:
  const QDetContext& ctx_;
  std::vector<long> J_;
  RatMatrix inv_;
};

inline Rat psi_T(const QDetContext& ctx, const TSpec& t, std::size_t i, long x) {
  return PsiT(ctx, t.T())(i, x);
}

/// s_{nu/kappa}(q^T) / s_nu(1, q, ..., q^{N-1}) as
/// (-q^N)^{sum t} V(q^{-1}, ..., q^{-N}) / V(q^{t_1}, ...) det[psi^T_{s'_i}(kappa_j - j)].
inline Rat general_q_ratio(const QDetContext& ctx, const TSpec& t, const Signature& kappa) {
  detail::check_kappa(ctx.base(), kappa);
  const std::size_t K = ctx.K(), N = ctx.N();
  const QParam& q = ctx.q();
  PsiT psi(ctx, t.T());
  RatMatrix m(K, K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      m(i, j) = psi(std::size_t(t.S_prime()[i]), kappa[j] - long(j + 1));
  Rat d = det(m);
  if (d == 0) return d;
  long tsum = 0;
  std::vector<Rat> qt, qneg;
  for (long v : t.T()) {
    tsum += v;
    qt.push_back(q.pow(v));
  }
  for (long r = 1; r <= long(N); ++r) qneg.push_back(q.pow(-r));
  Rat pref = ipow(-q.pow(long(N)), tsum) * vandermonde_det(std::span<const Rat>(qneg)) /
             vandermonde_det(std::span<const Rat>(qt));
  return pref * d;
}

/// kappa -> s_kappa(q^S) s_{nu/kappa}(q^T) / s_nu(1, ..., q^{N-1}).
inline LinkRow general_q_projection(const QDetContext& ctx, const TSpec& t) {
  const QParam& q = ctx.q();
  ValueList qs;
  for (long s : t.S()) qs.push_back(q.pow(s));
  LinkRow row;
  row.level = ctx.K();
  for (const auto& kappa : signatures_in_box(ctx.K(), ctx.nu().back(), ctx.nu().front())) {
    Rat r = general_q_ratio(ctx, t, kappa);
    if (r == 0) continue;
    row.entries.emplace(kappa, schur_bialternant(kappa, qs) * r);
  }
  return row;
}

/// Nondecreasing, eventually constant integer sequence n_1 <= n_2 <= ...,
/// stored as a finite head and the tail value c (n_r = c for r > head length).
class BoundarySeq {
 public:
  BoundarySeq(std::vector<long> head, long tail) : head_(std::move(head)), c_(tail) {
    for (std::size_t k = 1; k < head_.size(); ++k)
      if (head_[k - 1] > head_[k]) throw std::invalid_argument("BoundarySeq: head must be nondecreasing");
    if (!head_.empty() && head_.back() > c_)
      throw std::invalid_argument("BoundarySeq: tail value below the last head entry");
  }

  /// "n1,n2,...;c"; the head may be empty (";c").
  static BoundarySeq parse(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("missing ';' before the tail value", text.size());
    std::vector<long> head;
    std::string_view h = text.substr(0, semi);
    if (h.find_first_not_of(" \t") != std::string_view::npos) {
      std::size_t pos = 0;
      while (true) {
        std::size_t end = h.find(',', pos);
        if (end == std::string_view::npos) end = h.size();
        head.push_back(parse_int(h.substr(pos, end - pos), pos));
        if (end == h.size()) break;
        pos = end + 1;
      }
    }
    long c = parse_int(text.substr(semi + 1), semi + 1);
    return BoundarySeq(std::move(head), c);
  }

  /// n_r for r >= 1.
  long operator[](std::size_t r) const { return r <= head_.size() ? head_[r - 1] : c_; }
  const std::vector<long>& head() const { return head_; }
  long tail() const { return c_; }
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < head_.size(); ++k) s += (k ? "," : "") + std::to_string(head_[k]);
    return s + ";" + std::to_string(c_);
  }

  /// The signature of length N whose last coordinates are n_1, n_2, ...:
  /// nu_{N+1-r} = n_r.
  Signature signature(std::size_t N) const {
    std::vector<long> p(N);
    for (std::size_t r = 1; r <= N; ++r) p[N - r] = (*this)[r];
    return Signature(std::move(p));
  }

 private:
  static long parse_int(std::string_view s, std::size_t offset) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + b, s.data() + e, v);
    if (b == e || ec != std::errc() || ptr != s.data() + e)
      throw ParseError("invalid integer in boundary sequence", offset + b);
    return v;
  }

  std::vector<long> head_;
  long c_;
};

namespace detail {

// prod (1 - z q^e) over num_exps divided by the same over den_exps.
inline RationalFunction q_factor_ratio(const std::vector<long>& num_exps, const std::vector<long>& den_exps,
                                       const QParam& q) {
  RationalFunction f;
  std::vector<Rat> zeros;
  for (long e : num_exps) {
    f.scale *= -q.pow(e);
    zeros.push_back(q.pow(-e));
  }
  for (long e : den_exps) {
    f.scale /= -q.pow(e);
    f.roots.push_back(q.pow(-e));
  }
  f.num = Polynomial::from_roots(zeros);
  return f;
}

// Exponents of (z q^a; q)_inf (z; q)_m / (z; q | n)_inf after cancelling the
// common infinite tail; appends to num/den.
inline void boundary_integrand(long a, long m, const BoundarySeq& n, std::vector<long>& num,
                               std::vector<long>& den) {
  for (long e = 0; e < m; ++e) num.push_back(e);
  const long r0 = long(n.head().size());
  for (long r = 0; r < r0; ++r) den.push_back(r + n[std::size_t(r + 1)]);
  const long b = r0 + n.tail();
  for (long e = a; e < b; ++e) num.push_back(e);
  for (long e = b; e < a; ++e) den.push_back(e);
}

// Contour around the points q^{-m}, m <= m_max (and 0), traversed so that the
// value is minus the plain residue sum: these contours enclose the
// accumulation point 0 of the poles of the infinite products, and the
// orientation is the one inherited from the unit-circle change of variables.
inline Rat q_contour(const RationalFunction& f, long m_max, const QParam& q) {
  const Rat edge = q.pow(-m_max);
  return -residue_sum(f, [&](const Rat& z) { return z <= edge; });
}

}  // namespace detail

/// qA_i(x | K, infinity, n) = q^{x+K} * contour over q^{-m}, m <= x+K, of
/// (z q^{x+K+1}; q)_inf (z; q)_{K-i} / (z; q | n)_inf.
inline Rat qA_infinity(long x, std::size_t K, std::size_t i, const BoundarySeq& n, const QParam& q) {
  detail::check_row_index(i, K);
  std::vector<long> num, den;
  detail::boundary_integrand(x + long(K) + 1, long(K - i), n, num, den);
  return q.pow(x + long(K)) * detail::q_contour(detail::q_factor_ratio(num, den, q), x + long(K), q);
}

/// B^n(x, i) = q^{(x-i+1)(x+i-2)/2} * contour over q^{-m}, m <= x-1, of
/// (z q^x; q)_inf (z; q)_{i-1} / (z; q | n)_inf.
inline Rat B_entry(long x, long i, const BoundarySeq& n, const QParam& q) {
  if (x < 1 || i < 1) throw std::out_of_range("B_entry needs x, i >= 1");
  std::vector<long> num, den;
  detail::boundary_integrand(x, i - 1, n, num, den);
  return q.pow((x - i + 1) * (x + i - 2) / 2) *
         detail::q_contour(detail::q_factor_ratio(num, den, q), x - 1, q);
}

/// B^n(x, i) through qA at level K: qA_{K+1-i}(x-K-1) q^{(x-i)(x+i-3)/2}.
inline Rat B_via_qA(long x, long i, std::size_t K, const BoundarySeq& n, const QParam& q) {
  return qA_infinity(x - long(K) - 1, K, std::size_t(long(K) + 1 - i), n, q) *
         q.pow((x - i) * (x + i - 3) / 2);
}

/// phi(z) = sum_l c_l prod_{i<l} (q^{-i} - z).
inline Polynomial q_newton_polynomial(const std::vector<Rat>& c, const QParam& q) {
  Polynomial phi, basis = Polynomial::constant(1);
  for (std::size_t l = 0; l < c.size(); ++l) {
    phi = phi + c[l] * basis;
    basis = basis * Polynomial({q.pow(-long(l)), Rat(-1)});
  }
  return phi;
}

/// c_l = q^{l(l+1)/2} * contour over q^{-m}, m = 0..l, of phi(z) / (z; q)_{l+1}.
inline Rat coeff_extract(const std::vector<Rat>& c, long ell, const QParam& q) {
  if (ell < 0) return Rat(0);
  std::vector<long> den;
  for (long e = 0; e <= ell; ++e) den.push_back(e);
  RationalFunction f = detail::q_factor_ratio({}, den, q);
  f.num = q_newton_polynomial(c, q);
  return q.pow(ell * (ell + 1) / 2) * detail::q_contour(f, ell, q);
}

struct GeneratingCheck {
  bool ok = true;
  std::string witness;
  Polynomial lhs, rhs;
};

/// Checks sum_l B(l+1, 1) prod_{i<l} (q^{-i} - z) = (z; q)_inf / (z; q | n)_inf
/// as an exact polynomial identity (the right side has degree c), and that
/// B(l+1, 1) vanishes for c < l <= c + extra.
inline GeneratingCheck b_generating_check(const BoundarySeq& n, const QParam& q, long extra = 3) {
  if (n[1] < 0) throw ContractViolation("b_generating_check needs n_1 >= 0");
  const long c = n.tail(), r0 = long(n.head().size());
  GeneratingCheck out;
  std::vector<long> num, den;
  for (long e = 0; e < r0 + c; ++e) num.push_back(e);
  for (long r = 0; r < r0; ++r) den.push_back(r + n[std::size_t(r + 1)]);
  RationalFunction f = detail::q_factor_ratio(num, den, q).reduced();
  if (!f.roots.empty()) throw ContractViolation("right-hand side is not a polynomial");
  out.rhs = f.scale * f.num;
  std::vector<Rat> coeffs;
  for (long l = 0; l <= c + extra; ++l) {
    Rat b = B_entry(l + 1, 1, n, q);
    if (l > c && b != 0 && out.ok) {
      out.ok = false;
      out.witness = "B(" + std::to_string(l + 1) + ",1) = " + to_string(b) + " should vanish";
    }
    coeffs.push_back(b);
  }
  out.lhs = q_newton_polynomial(coeffs, q);
  const long deg = std::max(out.lhs.degree(), out.rhs.degree());
  for (long k = 0; k <= deg && out.ok; ++k)
    if (out.lhs.coeff(k) != out.rhs.coeff(k)) {
      out.ok = false;
      out.witness = "coefficient of z^" + std::to_string(k) + ": " + to_string(out.lhs.coeff(k)) +
                    " vs " + to_string(out.rhs.coeff(k));
    }
  return out;
}

/// d(x, i) = q^{(x-i+1)(x+i-2)/2} * contour over q^{-m}, m = i-1..x-1, of
/// phi(z) (z; q)_{i-1} / (z; q)_x; zero when x <= 0 or i <= 0.
inline Rat qtoeplitz_solve(const std::vector<Rat>& c, long x, long i, const QParam& q) {
  if (x <= 0 || i <= 0) return Rat(0);
  std::vector<long> num, den;
  for (long e = x; e < i - 1; ++e) num.push_back(e);
  for (long e = i - 1; e < x; ++e) den.push_back(e);
  if (den.empty()) return Rat(0);
  RationalFunction f = detail::q_factor_ratio(num, den, q);
  f.num = f.num * q_newton_polynomial(c, q);
  return q.pow((x - i + 1) * (x + i - 2) / 2) * detail::q_contour(f, x - 1, q);
}

/// d(x, i) for 1 <= x <= xmax, 1 <= i <= imax from d(l+1, 1) = c_l and
/// d(x, i+1) = d(x-1, i) + (q^{1-i} - q^{1-x}) d(x, i); d = 0 off the grid.
/// Entry [x][i] uses 1-based indices (row and column 0 stay zero).
inline std::vector<std::vector<Rat>> qtoeplitz_recurrence(const std::vector<Rat>& c, long xmax, long imax,
                                                          const QParam& q) {
  std::vector<std::vector<Rat>> d(std::size_t(xmax + 1), std::vector<Rat>(std::size_t(imax + 1)));
  for (long x = 1; x <= xmax; ++x) d[std::size_t(x)][1] = std::size_t(x - 1) < c.size() ? c[std::size_t(x - 1)] : Rat(0);
  for (long i = 1; i < imax; ++i)
    for (long x = 1; x <= xmax; ++x)
      d[std::size_t(x)][std::size_t(i + 1)] =
          d[std::size_t(x - 1)][std::size_t(i)] + (q.pow(1 - i) - q.pow(1 - x)) * d[std::size_t(x)][std::size_t(i)];
  return d;
}

}  // namespace gtkit
