/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================
*/

#ifndef ORBITFLOW_STATS_HPP_
#define ORBITFLOW_STATS_HPP_

#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orbitflow {

inline double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of an empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

/// Unbiased sample standard deviation.
inline double sample_stddev(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("standard deviation needs >= 2 samples");
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

inline double standard_error(std::span<const double> xs) {
  return sample_stddev(xs) / std::sqrt(static_cast<double>(xs.size()));
}

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;  // value ~ prefactor * N^exponent
};

/// Ordinary least squares of log(value) against log(N).
inline PowerLawFit power_law_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("power_law_fit needs >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, v] : points) {
    if (!(n > 0.0) || !(v > 0.0))
      throw std::invalid_argument("power_law_fit needs positive abscissae and values");
    const double x = std::log(n), y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("power_law_fit needs distinct abscissae");
  const double slope = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / m;
  return {slope, std::exp(intercept)};
}

inline PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points) {
  return power_law_fit(std::span<const std::pair<double, double>>(points));
}

}  // namespace orbitflow

#endif  // ORBITFLOW_STATS_HPP_
