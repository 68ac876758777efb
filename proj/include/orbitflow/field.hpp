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

#ifndef ORBITFLOW_FIELD_HPP_
#define ORBITFLOW_FIELD_HPP_

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orbitflow/lattice.hpp"

namespace orbitflow {

using Complex = std::complex<double>;
using Vec3c = std::array<Complex, 3>;

inline Vec3c operator+(const Vec3c& a, const Vec3c& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3c operator-(const Vec3c& a, const Vec3c& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3c operator*(Complex s, const Vec3c& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline Vec3c operator*(double s, const Vec3c& a) { return {s * a[0], s * a[1], s * a[2]}; }

/// Bilinear (non-conjugating) dot product.
inline Complex dot(const Vec3c& a, const Vec3c& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Complex dot(const Mode& k, const Vec3c& v) {
  return static_cast<double>(k[0]) * v[0] + static_cast<double>(k[1]) * v[1] +
         static_cast<double>(k[2]) * v[2];
}
inline Vec3c conj(const Vec3c& v) { return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])}; }
inline double norm2(const Vec3c& v) { return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]); }

/// P(k) v = v - k (k.v) / |k|^2.
inline Vec3c leray_project(const Mode& k, const Vec3c& v) {
  if (k.is_zero()) throw std::invalid_argument("leray_project: k must be nonzero");
  const Complex c = dot(k, v) / static_cast<double>(k.norm2());
  return {v[0] - c * static_cast<double>(k[0]), v[1] - c * static_cast<double>(k[1]),
          v[2] - c * static_cast<double>(k[2])};
}

/// Fourier coefficients u_k on a lattice, one complex 3-vector per mode.
class VelocityField {
 public:
  explicit VelocityField(LatticePtr index)
      : index_(std::move(index)), coeffs_(index_->mode_count(), Vec3c{}) {}

  VelocityField(LatticePtr index, std::vector<Vec3c> coeffs)
      : index_(std::move(index)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != index_->mode_count())
      throw std::invalid_argument("VelocityField: coefficient count does not match the lattice");
  }

  const LatticeIndex& index() const { return *index_; }
  const LatticePtr& index_ptr() const { return index_; }

  std::size_t size() const { return coeffs_.size(); }
  Vec3c& operator[](std::size_t i) { return coeffs_[i]; }
  const Vec3c& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<Vec3c> coeffs() { return coeffs_; }
  std::span<const Vec3c> coeffs() const { return coeffs_; }

  /// Sets u_k and its mirror u_{-k} = conj(u_k).
  void set_pair(std::size_t i, const Vec3c& v) {
    coeffs_[i] = v;
    coeffs_[index_->negated(i)] = conj(v);
  }

  VelocityField& operator*=(double s) {
    for (auto& v : coeffs_) v = s * v;
    return *this;
  }

 private:
  LatticePtr index_;
  std::vector<Vec3c> coeffs_;
};

/// E = 1/2 sum |u_k|^2.
inline double energy(const VelocityField& u) {
  double e = 0.0;
  for (const auto& v : u.coeffs()) e += norm2(v);
  return 0.5 * e;
}

/// Z = 1/2 sum |k|^2 |u_k|^2.
inline double enstrophy(const VelocityField& u) {
  double z = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) z += u.index().mode(i).norm2() * norm2(u[i]);
  return 0.5 * z;
}

/// Z_a = (1 / 2|orbit a|) sum_{k in orbit a} |k|^2 |u_k|^2.
inline std::vector<double> orbit_enstrophy(const VelocityField& u) {
  const auto& index = u.index();
  std::vector<double> z(index.orbit_count(), 0.0);
  for (std::size_t a = 0; a < index.orbit_count(); ++a) {
    const auto& orbit = index.orbit(a);
    double s = 0.0;
    for (std::size_t i : orbit.members) s += norm2(u[i]);
    z[a] = 0.5 * orbit.shell_r * s / static_cast<double>(orbit.size());
  }
  return z;
}

/// Largest |u_{-k} - conj(u_k)| over the lattice.
inline double reality_defect(const VelocityField& u) {
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    worst = std::max(worst, std::sqrt(norm2(u[u.index().negated(i)] - conj(u[i]))));
  return worst;
}

/// Largest |k.u_k| / (|k| |u_k|) over modes with u_k != 0.
inline double divergence_defect(const VelocityField& u) {
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double mag = std::sqrt(norm2(u[i]));
    if (mag == 0.0) continue;
    const Mode& k = u.index().mode(i);
    worst = std::max(worst, std::abs(dot(k, u[i])) / (std::sqrt(double(k.norm2())) * mag));
  }
  return worst;
}

/// Field u' with u'_{gk} = g u_k, where g acts on vectors as on wavevectors.
inline VelocityField transform_field(const VelocityField& u, const GroupElement& g) {
  const auto& index = u.index();
  VelocityField out(u.index_ptr());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto j = index.find(g.apply(index.mode(i)));
    if (!j) throw std::logic_error("transform_field: lattice is not O_h invariant");
    const Vec3c& v = u[i];
    out[*j] = {static_cast<double>(g.signs[0]) * v[g.perm[0]],
               static_cast<double>(g.signs[1]) * v[g.perm[1]],
               static_cast<double>(g.signs[2]) * v[g.perm[2]]};
  }
  return out;
}

}  // namespace orbitflow

#endif  // ORBITFLOW_FIELD_HPP_
