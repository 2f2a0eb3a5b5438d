#pragma once

// Signatures, interlacing and exhaustive Gelfand-Tsetlin enumeration.
// The enumeration routines are deliberately brute force: they are the
// reference every closed formula elsewhere in the library is checked against.

#include "gtkit/errors.hpp"
#include "gtkit/rational.hpp"

#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace gtkit {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Nonincreasing integer tuple; the empty signature has length 0.
class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<long> parts) : Signature(std::vector<long>(parts)) {}
  explicit Signature(std::vector<long> parts) : p_(std::move(parts)) {
    for (std::size_t i = 1; i < p_.size(); ++i)
      if (p_[i - 1] < p_[i])
        throw std::invalid_argument("signature parts must be nonincreasing (index " +
                                    std::to_string(i) + ")");
  }

  /// Parses "4,2,0,-1"; the empty string (or only blanks) is the empty signature.
  static Signature parse(std::string_view text) {
    std::vector<long> parts;
    std::size_t pos = 0;
    auto blank = [](char c) { return c == ' ' || c == '\t'; };
    std::size_t probe = 0;
    while (probe < text.size() && blank(text[probe])) ++probe;
    if (probe == text.size()) return {};
    while (true) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::size_t b = pos, e = end;
      while (b < e && blank(text[b])) ++b;
      while (e > b && blank(text[e - 1])) --e;
      if (b == e) throw ParseError("empty signature part", b);
      const char* first = text.data() + b;
      const char* last = text.data() + e;
      if (*first == '+') ++first;
      long v = 0;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last)
        throw ParseError("invalid integer '" + std::string(text.substr(b, e - b)) + "'", b);
      if (!parts.empty() && parts.back() < v)
        throw ParseError("signature parts must be nonincreasing", b);
      parts.push_back(v);
      if (end == text.size()) break;
      pos = end + 1;
    }
    return Signature(std::move(parts));
  }

  std::size_t size() const { return p_.size(); }
  bool empty() const { return p_.empty(); }
  /// 0-based access; part ν_i is (*this)[i-1].
  long operator[](std::size_t i) const { return p_.at(i); }
  const std::vector<long>& parts() const { return p_; }
  long front() const { return p_.at(0); }
  long back() const { return p_.at(p_.size() - 1); }

  long weight() const {
    long s = 0;
    for (long v : p_) s += v;
    return s;
  }

  Signature shifted(long c) const {
    std::vector<long> out(p_);
    for (auto& v : out) v += c;
    return Signature(std::move(out));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(p_[i]);
    }
    return s;
  }

  friend auto operator<=>(const Signature&, const Signature&) = default;
  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<long> p_;
};

/// mu ≺ nu: nu_1 >= mu_1 >= nu_2 >= ... >= mu_{N-1} >= nu_N. Any other
/// length combination is simply false.
inline bool interlaces(const Signature& mu, const Signature& nu) {
  if (mu.size() + 1 != nu.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (!(nu[i] >= mu[i] && mu[i] >= nu[i + 1])) return false;
  return true;
}

/// Rows kappa = nu^{(K)} ≺ ... ≺ nu^{(N)} = nu, stored bottom row first.
struct GTPattern {
  std::vector<Signature> rows;
  friend bool operator==(const GTPattern&, const GTPattern&) = default;
};

class QParam {
 public:
  explicit QParam(Rat q) : q_(std::move(q)) {
    if (!(q_ > 0 && q_ < 1)) throw std::invalid_argument("q must satisfy 0 < q < 1");
  }
  const Rat& value() const { return q_; }
  Rat pow(long e) const { return ipow(q_, e); }

 private:
  Rat q_;
};

constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Enumeration budget: GTKIT_BUDGET if set to a positive integer, else 10^7.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("GTKIT_BUDGET")) {
    std::uint64_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return kDefaultBudget;
}

namespace detail {

// Depth-first walk from kappa up to nu. Row m is chosen inside the box
// nu_{j+N-m} <= row_j <= nu_j, which guarantees every partial chain can be
// completed, so the walk never backtracks out of a dead end. Rows are varied
// odometer-style with the leftmost part most significant, which yields the
// lexicographic order on the concatenated rows.
class TrapezoidWalker {
 public:
  using Visit = std::function<void(const std::vector<std::vector<long>>&)>;

  TrapezoidWalker(const Signature& kappa, const Signature& nu, std::uint64_t budget)
      : nu_(nu.parts()), K_(kappa.size()), N_(nu.size()), budget_(budget) {
    rows_.resize(N_ >= K_ ? N_ - K_ + 1 : 0);
    if (!rows_.empty()) rows_[0] = kappa.parts();
  }

  void run(const Visit& visit) {
    if (K_ >= N_) return;
    if (!in_box(rows_[0], K_)) return;
    rows_.back() = nu_;
    descend(1, visit);
  }

 private:
  bool in_box(const std::vector<long>& row, std::size_t m) const {
    for (std::size_t j = 0; j < m; ++j)
      if (row[j] > nu_[j] || row[j] < nu_[j + N_ - m]) return false;
    return true;
  }

  void tick() {
    if (++nodes_ > budget_)
      throw BudgetExceeded("enumeration budget of " + std::to_string(budget_) +
                           " nodes exceeded");
  }

  void descend(std::size_t depth, const Visit& visit) {
    const std::size_t m = K_ + depth;
    if (m == N_) {
      if (!interlaces_raw(rows_[depth - 1], nu_)) return;
      tick();
      visit(rows_);
      return;
    }
    const auto& below = rows_[depth - 1];
    std::vector<long> lo(m), hi(m);
    for (std::size_t j = 0; j < m; ++j) {
      long upper = std::min(j == 0 ? std::numeric_limits<long>::max() : below[j - 1], nu_[j]);
      long lower = std::max(j < m - 1 ? below[j] : std::numeric_limits<long>::min(),
                            nu_[j + N_ - m]);
      lo[j] = lower;
      hi[j] = upper;
    }
    auto& row = rows_[depth];
    row = lo;
    while (true) {
      tick();
      descend(depth + 1, visit);
      std::size_t j = m;
      while (j > 0 && row[j - 1] == hi[j - 1]) {
        row[j - 1] = lo[j - 1];
        --j;
      }
      if (j == 0) break;
      ++row[j - 1];
    }
  }

  static bool interlaces_raw(const std::vector<long>& mu, const std::vector<long>& nu) {
    for (std::size_t i = 0; i < mu.size(); ++i)
      if (!(nu[i] >= mu[i] && mu[i] >= nu[i + 1])) return false;
    return true;
  }

  const std::vector<long>& nu_;
  std::size_t K_, N_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<long>> rows_;
};

}  // namespace detail

/// Calls visit(rows) for every trapezoid from kappa to nu; rows[0] is kappa,
/// rows.back() is nu. Empty when len(kappa) >= len(nu).
inline void for_each_trapezoid(const Signature& kappa, const Signature& nu,
                               const detail::TrapezoidWalker::Visit& visit,
                               std::uint64_t budget = default_budget()) {
  detail::TrapezoidWalker(kappa, nu, budget).run(visit);
}

inline std::vector<GTPattern> enumerate_trapezoids(const Signature& kappa, const Signature& nu,
                                                   std::uint64_t budget = default_budget()) {
  std::vector<GTPattern> out;
  for_each_trapezoid(
      kappa, nu,
      [&](const std::vector<std::vector<long>>& rows) {
        GTPattern p;
        p.rows.reserve(rows.size());
        for (const auto& r : rows) p.rows.emplace_back(r);
        out.push_back(std::move(p));
      },
      budget);
  return out;
}

/// Dim_N(nu) = prod_{i<j} (nu_i - nu_j + j - i)/(j - i).
inline BigInt dim_product(const Signature& nu) {
  BigInt num = 1, den = 1;
  const long n = static_cast<long>(nu.size());
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      num *= nu[std::size_t(i)] - nu[std::size_t(j)] + j - i;
      den *= j - i;
    }
  return num / den;
}

inline BigInt rel_dim_oracle(const Signature& kappa, const Signature& nu,
                             std::uint64_t budget = default_budget()) {
  BigInt count = 0;
  for_each_trapezoid(kappa, nu, [&](const auto&) { ++count; }, budget);
  return count;
}

inline BigInt dim_oracle(const Signature& nu, std::uint64_t budget = default_budget()) {
  return rel_dim_oracle(Signature{}, nu, budget);
}

/// Sum of |row| over the intermediate rows of a triangular pattern.
inline long volume(const GTPattern& p) {
  if (p.rows.empty() || !p.rows.front().empty())
    throw std::invalid_argument("volume: pattern must start from the empty signature");
  long v = 0;
  for (std::size_t m = 1; m + 1 < p.rows.size(); ++m) v += p.rows[m].weight();
  return v;
}

/// prod_{i<j} (q^{nu_i - i} - q^{nu_j - j}) / (q^{-i} - q^{-j}).
inline Rat q_dim(const Signature& nu, const QParam& q) {
  Rat r(1);
  const long n = static_cast<long>(nu.size());
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j)
      r *= (q.pow(nu[std::size_t(i - 1)] - i) - q.pow(nu[std::size_t(j - 1)] - j)) /
           (q.pow(-i) - q.pow(-j));
  return r;
}

/// Sum over triangular patterns of q^{volume}.
inline Rat q_dim_oracle(const Signature& nu, const QParam& q,
                        std::uint64_t budget = default_budget()) {
  Rat s(0);
  for_each_trapezoid(
      Signature{}, nu,
      [&](const std::vector<std::vector<long>>& rows) {
        long v = 0;
        for (std::size_t m = 1; m + 1 < rows.size(); ++m)
          for (long x : rows[m]) v += x;
        s += q.pow(v);
      },
      budget);
  return s;
}

/// q^{|kappa|} * sum over trapezoids of q^{sum of intermediate row weights}.
inline Rat q_rel_dim_oracle(const Signature& kappa, const Signature& nu, const QParam& q,
                            std::uint64_t budget = default_budget()) {
  Rat s(0);
  for_each_trapezoid(
      kappa, nu,
      [&](const std::vector<std::vector<long>>& rows) {
        long v = 0;
        for (std::size_t m = 1; m + 1 < rows.size(); ++m)
          for (long x : rows[m]) v += x;
        s += q.pow(v);
      },
      budget);
  return q.pow(kappa.weight()) * s;
}

/// Signatures of length K with hi >= kappa_1 >= ... >= kappa_K >= lo, in
/// lexicographic order.
inline std::vector<Signature> signatures_in_box(std::size_t K, long lo, long hi) {
  std::vector<Signature> out;
  if (hi < lo) return out;
  if (K == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<long> row(K, lo);
  while (true) {
    out.emplace_back(row);
    // next nonincreasing tuple in lexicographic order
    std::size_t j = K;
    while (j > 0) {
      long cap = (j == 1) ? hi : row[j - 2];
      if (row[j - 1] < cap) break;
      --j;
    }
    if (j == 0) break;
    ++row[j - 1];
    for (std::size_t t = j; t < K; ++t) row[t] = lo;
  }
  return out;
}

}  // namespace gtkit
