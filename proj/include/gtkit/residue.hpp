#pragma once

// Finite residue sums for rational functions with simple poles:
//   f(z) = scale * num(z) / prod_k (z - root_k).

#include "gtkit/errors.hpp"
#include "gtkit/linalg.hpp"

#include <functional>
#include <vector>

namespace gtkit {

struct RationalFunction {
  Rat scale{1};
  Polynomial num{Polynomial::constant(1)};
  std::vector<Rat> roots;

  /// Removes every root of the denominator that is also a root of num.
  RationalFunction reduced() const {
    RationalFunction out = *this;
    std::vector<Rat> kept;
    for (const auto& r : out.roots) {
      if (!out.num.is_zero() && out.num(r) == 0)
        out.num = out.num.deflate(r);
      else
        kept.push_back(r);
    }
    out.roots = std::move(kept);
    return out;
  }

  Rat operator()(const Rat& z) const {
    Rat den(1);
    for (const auto& r : roots) {
      if (z == r) throw PoleError("evaluation at pole z = " + to_string(r));
      den *= z - r;
    }
    return scale * num(z) / den;
  }
};

/// Sum of residues over the poles selected by inside(). Common factors are
/// cancelled first; a remaining repeated pole is reported as an error.
inline Rat residue_sum(const RationalFunction& f, const std::function<bool(const Rat&)>& inside) {
  RationalFunction g = f.reduced();
  if (g.num.is_zero()) return Rat(0);
  Rat total(0);
  for (std::size_t k = 0; k < g.roots.size(); ++k) {
    const Rat& rho = g.roots[k];
    if (!inside(rho)) continue;
    Rat den(1);
    for (std::size_t l = 0; l < g.roots.size(); ++l) {
      if (l == k) continue;
      if (g.roots[l] == rho) throw PoleError("residue_sum: pole of order > 1 at " + to_string(rho));
      den *= rho - g.roots[l];
    }
    total += g.num(rho) / den;
  }
  return g.scale * total;
}

}  // namespace gtkit
