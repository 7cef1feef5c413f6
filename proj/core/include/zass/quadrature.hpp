#pragma once

#include <vector>

namespace zass {

struct GaussRule {
  std::vector<double> nodes;    // on [0, 1], ascending
  std::vector<double> weights;  // sum to 1
};

// n-point Gauss-Legendre rule mapped to [0, 1]. Nodes come from a fixed number
// of Newton iterations, so results are bit-reproducible.
GaussRule gauss_legendre01(int n);

}  // namespace zass
