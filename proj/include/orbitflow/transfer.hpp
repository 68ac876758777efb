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

#ifndef ORBITFLOW_TRANSFER_HPP_
#define ORBITFLOW_TRANSFER_HPP_

#include <stdexcept>
#include <vector>

#include "orbitflow/field.hpp"
#include "orbitflow/incidence.hpp"
#include "orbitflow/matrix.hpp"
#include "orbitflow/symmetric_eigen.hpp"

namespace orbitflow {

/// N_k = -i sum_{p + q = k} P(k) [q (u_p . u_q)], summed over admissible pairs.
inline Vec3c nonlinear_term(const VelocityField& u, std::size_t k_index) {
  const auto& index = u.index();
  const Mode& k = index.mode(k_index);
  Vec3c acc{};
  for_each_triad(index, k, [&](std::size_t ip, std::size_t iq) {
    const Complex c = dot(u[ip], u[iq]);
    const Mode& q = index.mode(iq);
    acc[0] += c * static_cast<double>(q[0]);
    acc[1] += c * static_cast<double>(q[1]);
    acc[2] += c * static_cast<double>(q[2]);
  });
  const Vec3c projected = leray_project(k, acc);
  const Complex minus_i(0.0, -1.0);
  return minus_i * projected;
}

inline Vec3c nonlinear_term(const VelocityField& u, const Mode& k) {
  const auto i = u.index().find(k);
  if (!i) throw std::invalid_argument("nonlinear_term: " + to_string(k) + " is not in the lattice");
  return nonlinear_term(u, *i);
}

/// sum_k Re(conj(u_k) . N_k); zero for an exact Galerkin truncation.
inline double energy_transfer(const VelocityField& u) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Vec3c n = nonlinear_term(u, i);
    s += std::real(dot(conj(u[i]), n));
  }
  return s;
}

/// sum_k |k|^2 Re(conj(u_k) . N_k).
inline double enstrophy_production(const VelocityField& u) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Vec3c n = nonlinear_term(u, i);
    s += u.index().mode(i).norm2() * std::real(dot(conj(u[i]), n));
  }
  return s;
}

/// S(a, b) = (1/|orbit a|) sum_{k in a} sum_{p in b, q = k-p} |k|^2 Re(conj(u_k) . N_{k,p}).
///
/// Uses conj(u_k) . P(k) x = (P(k) conj(u_k)) . x, so each triad costs one
/// complex dot product and one projection per target mode.
inline Matrix raw_transfer(const VelocityField& u) {
  const auto& index = u.index();
  const std::size_t n_orb = index.orbit_count();
  Matrix s = Matrix::square(n_orb);
  std::vector<double> row(n_orb);
  for (std::size_t ik = 0; ik < index.mode_count(); ++ik) {
    if (norm2(u[ik]) == 0.0) continue;
    const Mode& k = index.mode(ik);
    const Vec3c w = static_cast<double>(k.norm2()) * leray_project(k, conj(u[ik]));
    std::fill(row.begin(), row.end(), 0.0);
    for_each_triad(index, k, [&](std::size_t ip, std::size_t iq) {
      const Mode& q = index.mode(iq);
      const Complex wq = w[0] * static_cast<double>(q[0]) + w[1] * static_cast<double>(q[1]) +
                         w[2] * static_cast<double>(q[2]);
      row[index.orbit_of(ip)] += std::imag(wq * dot(u[ip], u[iq]));
    });
    const std::size_t a = index.orbit_of(ik);
    const double inv_size = 1.0 / static_cast<double>(index.orbit(a).size());
    for (std::size_t b = 0; b < n_orb; ++b) s(a, b) += row[b] * inv_size;
  }
  return s;
}

struct TransferMatrices {
  Matrix s, a, v;
};

/// A = (S - S^T)/2, V = (S + S^T)/2.
inline TransferMatrices split_transfer(const Matrix& s) {
  if (!s.is_square()) throw std::invalid_argument("split_transfer: matrix is not square");
  const std::size_t n = s.rows();
  TransferMatrices out{s, Matrix::square(n), Matrix::square(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.a(i, j) = 0.5 * (s(i, j) - s(j, i));
      out.v(i, j) = 0.5 * (s(i, j) + s(j, i));
    }
  return out;
}

struct StretchDiagnostics {
  double rho_v = 0.0;
  double rho_abs_v = 0.0;
  double inf_norm_v = 0.0;
  double nu_c_star = 0.0;
};

inline StretchDiagnostics stretch_diagnostics(const Matrix& v, int n) {
  StretchDiagnostics d;
  d.rho_v = spectral_radius(v);
  d.rho_abs_v = spectral_radius(entrywise_abs(v));
  d.inf_norm_v = inf_norm(v);
  d.nu_c_star = d.rho_v / (static_cast<double>(n) * n);
  return d;
}

inline StretchDiagnostics stretch_diagnostics(const VelocityField& u) {
  return stretch_diagnostics(split_transfer(raw_transfer(u)).v, u.index().n());
}

}  // namespace orbitflow

#endif  // ORBITFLOW_TRANSFER_HPP_
