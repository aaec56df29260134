// Copyright 2026 The Haco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HACO_TORUS_POINT_HPP_
#define HACO_TORUS_POINT_HPP_

#include <vector>

#include "haco/errors.hpp"

namespace haco {

// A point of the d-torus, stored as fractions of a full turn in [0, 1).
struct TorusPoint {
  int dim = 1;
  std::vector<double> angles;

  static TorusPoint of(std::vector<double> angles) {
    for (double a : angles) {
      require(a >= 0.0 && a < 1.0, errc::invalid_argument,
              "torus angles must lie in [0, 1)");
    }
    int dim = static_cast<int>(angles.size());
    require(dim >= 1, errc::invalid_argument, "torus point needs dim >= 1");
    return {dim, std::move(angles)};
  }
};

}  // namespace haco

#endif  // HACO_TORUS_POINT_HPP_
