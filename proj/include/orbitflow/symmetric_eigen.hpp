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

#ifndef ORBITFLOW_SYMMETRIC_EIGEN_HPP_
#define ORBITFLOW_SYMMETRIC_EIGEN_HPP_

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "orbitflow/matrix.hpp"

namespace orbitflow {

/// Relative Frobenius asymmetry ||M - M^T||_F / ||M||_F (0 for the zero matrix).
inline double asymmetry(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("asymmetry: matrix is not square");
  double diff = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) diff += 2.0 * std::pow(m(i, j) - m(j, i), 2);
  const double norm = frobenius_norm(m);
  return norm == 0.0 ? 0.0 : std::sqrt(diff) / norm;
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
///
/// Sweeps until the off-diagonal Frobenius norm drops below tol * ||A||_F.
inline std::vector<double> symmetric_eigenvalues(Matrix a, double tol = 1e-14,
                                                 int max_sweeps = 100) {
  if (!a.is_square()) throw std::invalid_argument("symmetric_eigenvalues: matrix is not square");
  const std::size_t n = a.rows();
  const double scale = frobenius_norm(a);
  std::vector<double> eig(n);
  if (scale == 0.0) return eig;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < max_sweeps && off_norm() > tol * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

/// Largest |eigenvalue| of a symmetric matrix; rejects inputs with relative
/// Frobenius asymmetry above 1e-10.
inline double spectral_radius(const Matrix& v) {
  if (!v.is_square()) throw std::invalid_argument("spectral_radius: matrix is not square");
  if (asymmetry(v) > 1e-10) throw std::invalid_argument("spectral_radius: matrix is not symmetric");
  const auto eig = symmetric_eigenvalues(v);
  if (eig.empty()) return 0.0;
  return std::max(std::abs(eig.front()), std::abs(eig.back()));
}

}  // namespace orbitflow

#endif  // ORBITFLOW_SYMMETRIC_EIGEN_HPP_
