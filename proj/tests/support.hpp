#pragma once

#include "gtkit/rational.hpp"

#include <random>
#include <vector>

namespace testing_support {

inline gtkit::Rat random_rat(std::mt19937& rng, long span = 5, long max_den = 4) {
  std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
  return gtkit::rat(num(rng), den(rng));
}

inline gtkit::Rat random_nonzero_rat(std::mt19937& rng, long span = 5, long max_den = 4) {
  gtkit::Rat r;
  do r = random_rat(rng, span, max_den);
  while (r == 0);
  return r;
}

}  // namespace testing_support
