// Parameter grid shared by several suites.
#pragma once

#include <vector>

#include "starlike/class_factory.hpp"

namespace grid {

inline std::vector<starlike::ClassParams> acceptance_params() {
  using starlike::cplx;
  std::vector<starlike::ClassParams> out;
  const std::vector<std::pair<int, int>> pairs = {{1, 1}, {0, 2}, {1, 2}, {0, 3},
                                                  {1, 3}, {2, 3}, {1, 4}};
  const std::vector<cplx> As = {1.0, 0.5, cplx(0.8, 0.3)};
  const std::vector<double> Bs = {0.0, -0.25, -0.5, -0.75, -0.9};
  for (auto [j, k] : pairs)
    for (auto A : As)
      for (double B : Bs)
        out.push_back(starlike::ClassParams::make(j, k, A, B));
  return out;
}

} // namespace grid
