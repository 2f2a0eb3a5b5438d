#pragma once

// Exact rational scalars. Everything in gtkit that is not explicitly
// numeric is computed in this type.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gtkit {

/// Arbitrary-precision rational, always canonical (lowest terms,
/// positive denominator).
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(const BigInt& n) { return Rat(n); }

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on junk.
inline Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  BigInt n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rat& r) { return r.get_d(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// base^e for any integer e; base must be nonzero when e < 0.
inline Rat ipow(const Rat& base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw std::domain_error("ipow: zero to a negative power");
    return ipow(Rat(1) / base, -e);
  }
  Rat result(1), b(base);
  auto k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1u) result *= b;
    b *= b;
    k >>= 1u;
  }
  return result;
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// Rising factorial (y)_m = y(y+1)...(y+m-1), (y)_0 = 1.
inline Rat pochhammer(const Rat& y, long m) {
  if (m < 0) throw std::domain_error("pochhammer: negative length");
  Rat p(1);
  for (long k = 0; k < m; ++k) p *= y + k;
  return p;
}

/// q-Pochhammer (a;q)_m = (1-a)(1-aq)...(1-aq^{m-1}).
inline Rat qpochhammer(const Rat& a, const Rat& q, long m) {
  if (m < 0) throw std::domain_error("qpochhammer: negative length");
  Rat p(1), t(a);
  for (long k = 0; k < m; ++k) {
    p *= 1 - t;
    t *= q;
  }
  return p;
}

}  // namespace gtkit
