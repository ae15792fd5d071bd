// Copyright 2026 The LSFF Diet Cost Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LSFF_TESTS_SUPPORT_PLANTED_REGRESSION_HPP
#define LSFF_TESTS_SUPPORT_PLANTED_REGRESSION_HPP

#include <random>
#include <string>
#include <vector>

namespace lsff::testing {

struct PlantedData {
  std::vector<double> y, x;
  std::vector<std::string> region, model;
  // intercept, x, x^2, region[B], region[C], model[SSFV], model[SUA]
  std::vector<double> truth = {1.0, 2.0, -0.5, 3.0, -1.0, 0.75, -1.5};
};

// y = 1 + 2x - 0.5x^2 + 3[B] - [C] + 0.75[SSFV] - 1.5[SUA] + N(0, sigma),
// x uniform on [0, 3], levels assigned round-robin with a random offset.
inline PlantedData planted(int n, double sigma, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, 3.0);
  std::normal_distribution<double> noise(0.0, sigma > 0 ? sigma : 1.0);
  const std::vector<std::string> regions = {"A", "B", "C"};
  const std::vector<std::string> models = {"CoNA", "SSFV", "SUA"};
  PlantedData d;
  const auto& b = d.truth;
  for (int i = 0; i < n; ++i) {
    const double x = ux(rng);
    const std::size_t r = static_cast<std::size_t>(i) % 3;
    const std::size_t m = (static_cast<std::size_t>(i) / 3 + rng() % 2) % 3;
    double y = b[0] + b[1] * x + b[2] * x * x;
    if (r > 0) y += b[2 + r];
    if (m > 0) y += b[4 + m];
    if (sigma > 0) y += noise(rng);
    d.x.push_back(x);
    d.y.push_back(y);
    d.region.push_back(regions[r]);
    d.model.push_back(models[m]);
  }
  return d;
}

}  // namespace lsff::testing

#endif  // LSFF_TESTS_SUPPORT_PLANTED_REGRESSION_HPP
