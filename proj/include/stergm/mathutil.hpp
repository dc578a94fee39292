#pragma once

#include <cmath>

namespace stergm {

// Inverse logit with the branch chosen so exp() is never fed a positive
// argument; stays finite for any finite x.
inline double ilogit(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double logit(double p) { return std::log(p) - std::log1p(-p); }

}  // namespace stergm
