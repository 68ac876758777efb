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

#ifndef ORBITFLOW_ENSEMBLE_HPP_
#define ORBITFLOW_ENSEMBLE_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "orbitflow/field.hpp"
#include "orbitflow/philox.hpp"

namespace orbitflow {

enum class EnsembleKind { isotropic, kolmogorov, sobolev };

/// What is pinned to one after projection.
enum class Normalization {
  energy,    ///< 1/2 sum |u_k|^2
  gradient,  ///< 1/2 sum |k|^2 |u_k|^2, the convention of the stretching statistics tables
};

inline std::string_view to_string(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::isotropic: return "isotropic";
    case EnsembleKind::kolmogorov: return "kolmogorov";
    case EnsembleKind::sobolev: return "sobolev";
  }
  return "?";
}

inline EnsembleKind parse_ensemble_kind(std::string_view s) {
  if (s == "isotropic") return EnsembleKind::isotropic;
  if (s == "kolmogorov") return EnsembleKind::kolmogorov;
  if (s == "sobolev") return EnsembleKind::sobolev;
  throw std::invalid_argument("unknown ensemble '" + std::string(s) + "'");
}

inline std::string_view to_string(Normalization n) {
  return n == Normalization::energy ? "energy" : "gradient";
}

inline Normalization parse_normalization(std::string_view s) {
  if (s == "energy") return Normalization::energy;
  if (s == "gradient") return Normalization::gradient;
  throw std::invalid_argument("unknown normalization '" + std::string(s) + "'");
}

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::isotropic;
  double s = 2.5;  // sobolev only
  double m = 1.0;  // sobolev only
  std::uint64_t seed = 0;
  Normalization normalization = Normalization::energy;

  void validate() const {
    if (kind == EnsembleKind::sobolev) {
      if (!(s > 1.5)) throw std::invalid_argument("sobolev ensemble requires s > 3/2");
      if (!(m > 0.0)) throw std::invalid_argument("sobolev ensemble requires M > 0");
    }
  }
};

namespace detail {

inline constexpr std::uint64_t kDegenerateOffset = 1ULL << 32;

inline Vec3c gaussian_vector(const KeyedStream& stream) {
  const auto a = stream.normal_pair(0);
  const auto b = stream.normal_pair(1);
  const auto c = stream.normal_pair(2);
  const double s = std::numbers::sqrt2 / 2.0;
  return {Complex(a[0], a[1]) * s, Complex(b[0], b[1]) * s, Complex(c[0], c[1]) * s};
}

/// Amplitude M|k|^{-s}, uniform phase, uniformly random real direction in k-perp.
inline Vec3c sobolev_vector(const KeyedStream& stream, const Mode& k, double s, double m) {
  const double phase = 2.0 * std::numbers::pi * stream.uniform_pair(0)[0];
  const auto a = stream.normal_pair(1);
  const auto b = stream.normal_pair(2);
  std::array<double, 3> t{a[0], a[1], b[0]};
  const double kt = (k[0] * t[0] + k[1] * t[1] + k[2] * t[2]) / k.norm2();
  for (int i = 0; i < 3; ++i) t[i] -= kt * k[i];
  const double len = std::sqrt(t[0] * t[0] + t[1] * t[1] + t[2] * t[2]);
  if (len == 0.0) return {};
  const Complex amp =
      std::polar(m * std::pow(static_cast<double>(k.norm2()), -0.5 * s) / len, phase);
  return {amp * t[0], amp * t[1], amp * t[2]};
}

}  // namespace detail

/// Draws one field of the ensemble. Deterministic in (spec.seed, sample_id);
/// each independent mode reads only its own keyed stream, so the result does
/// not depend on evaluation order.
inline VelocityField sample_field(const EnsembleSpec& spec, const LatticePtr& index,
                                  std::uint64_t sample_id) {
  spec.validate();
  for (std::uint64_t attempt = sample_id;; attempt += detail::kDegenerateOffset) {
    VelocityField u(index);
    for (std::size_t i = 0; i < index->mode_count(); ++i) {
      const Mode& k = index->mode(i);
      if (!LatticeIndex::is_independent(k)) continue;
      const KeyedStream stream(spec.seed, attempt, static_cast<std::uint32_t>(i));
      Vec3c v;
      switch (spec.kind) {
        case EnsembleKind::isotropic:
          v = leray_project(k, detail::gaussian_vector(stream));
          break;
        case EnsembleKind::kolmogorov:
          v = leray_project(k, std::pow(static_cast<double>(k.norm2()), -11.0 / 12.0) *
                                   detail::gaussian_vector(stream));
          break;
        case EnsembleKind::sobolev:
          v = detail::sobolev_vector(stream, k, spec.s, spec.m);
          break;
      }
      u.set_pair(i, v);
    }
    if (spec.kind == EnsembleKind::sobolev) return u;

    const double total = spec.normalization == Normalization::energy ? energy(u) : enstrophy(u);
    if (total > 0.0 && std::isfinite(total)) {
      u *= 1.0 / std::sqrt(total);
      return u;
    }
  }
}

}  // namespace orbitflow

#endif  // ORBITFLOW_ENSEMBLE_HPP_
