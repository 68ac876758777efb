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

#ifndef ORBITFLOW_INCIDENCE_HPP_
#define ORBITFLOW_INCIDENCE_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "orbitflow/lattice.hpp"
#include "orbitflow/matrix.hpp"

namespace orbitflow {

/// Gamma(a, b): number of triads (k, p, q=k-p) with k in orbit a, p in orbit b.
using IncidenceMatrix = DenseMatrix<std::int64_t>;

/// Closed-form ordered triad count on the cube: prod_i (2N+1-|k_i|) - 2.
inline std::int64_t triad_count(const Mode& k, int n) {
  if (k.is_zero()) throw std::invalid_argument("triad_count: k must be nonzero");
  if (n < 1 || k.inf_norm() > n)
    throw std::invalid_argument("triad_count: " + to_string(k) + " is outside the cube of size " +
                                std::to_string(n));
  std::int64_t prod = 1;
  for (int i = 0; i < 3; ++i) prod *= 2 * n + 1 - detail::iabs(k[i]);
  return prod - 2;
}

/// Calls f(p_index, q_index) for every ordered pair p + q = k with p, q in the lattice.
template <class F>
void for_each_triad(const LatticeIndex& index, const Mode& k, F&& f) {
  const int n = index.n();
  int lo[3], hi[3];
  for (int i = 0; i < 3; ++i) {
    lo[i] = std::max(-n, k[i] - n);
    hi[i] = std::min(n, k[i] + n);
  }
  Mode p;
  for (p[0] = lo[0]; p[0] <= hi[0]; ++p[0])
    for (p[1] = lo[1]; p[1] <= hi[1]; ++p[1])
      for (p[2] = lo[2]; p[2] <= hi[2]; ++p[2]) {
        const auto ip = index.lookup(p);
        if (ip < 0) continue;
        const auto iq = index.lookup(k - p);
        if (iq < 0) continue;
        f(static_cast<std::size_t>(ip), static_cast<std::size_t>(iq));
      }
}

/// Exhaustive pair count over the lattice; valid for both truncations.
inline std::int64_t triad_count_bruteforce(const Mode& k, const LatticeIndex& index) {
  std::int64_t count = 0;
  for (const Mode& p : index.modes())
    if (index.contains(k - p)) ++count;
  return count;
}

/// Gamma via equivariance: fix one member k of each target orbit a, count
/// admissible sources per orbit b, then multiply by |orbit a|.
inline IncidenceMatrix gamma_matrix(const LatticeIndex& index) {
  const std::size_t n_orb = index.orbit_count();
  IncidenceMatrix gamma = IncidenceMatrix::square(n_orb);
  for (std::size_t a = 0; a < n_orb; ++a) {
    const Orbit& target = index.orbit(a);
    auto row = gamma.row(a);
    for_each_triad(index, target.rep,
                   [&](std::size_t ip, std::size_t) { ++row[index.orbit_of(ip)]; });
    for (auto& v : row) v *= static_cast<std::int64_t>(target.size());
  }
  return gamma;
}

/// Gamma by looping every target mode; reference for gamma_matrix.
inline IncidenceMatrix gamma_matrix_bruteforce(const LatticeIndex& index) {
  IncidenceMatrix gamma = IncidenceMatrix::square(index.orbit_count());
  for (std::size_t ik = 0; ik < index.mode_count(); ++ik) {
    const std::size_t a = index.orbit_of(ik);
    for (std::size_t ip = 0; ip < index.mode_count(); ++ip)
      if (index.contains(index.mode(ik) - index.mode(ip))) ++gamma(a, index.orbit_of(ip));
  }
  return gamma;
}

struct IncidenceResult {
  double value = 0.0;
  std::size_t argmax_orbit = 0;
};

/// S(N) = max_a sum_b sqrt(Gamma(a, b)).
inline IncidenceResult incidence_sum(const IncidenceMatrix& gamma) {
  IncidenceResult best;
  for (std::size_t a = 0; a < gamma.rows(); ++a) {
    CompensatedSum s;
    for (auto g : gamma.row(a)) s.add(std::sqrt(static_cast<double>(g)));
    if (s.value() > best.value) best = {s.value(), a};
  }
  return best;
}

/// I_w = max_a sum_b sqrt(Gamma(a, b)) / |k_b|.
inline IncidenceResult weighted_incidence(const IncidenceMatrix& gamma, const LatticeIndex& index) {
  if (gamma.rows() != index.orbit_count() || !gamma.is_square())
    throw std::invalid_argument("weighted_incidence: Gamma does not match the lattice index");
  IncidenceResult best;
  for (std::size_t a = 0; a < gamma.rows(); ++a) {
    CompensatedSum s;
    for (std::size_t b = 0; b < gamma.cols(); ++b)
      s.add(std::sqrt(static_cast<double>(gamma(a, b))) /
            std::sqrt(static_cast<double>(index.orbit(b).shell_r)));
    if (s.value() > best.value) best = {s.value(), a};
  }
  return best;
}

/// Number of ordered (a, b) in Z^2 with a^2 + b^2 = n, via r2(n) = 4 (d1(n) - d3(n)).
inline std::int64_t r2(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("r2: n must be nonnegative");
  if (n == 0) return 1;
  std::int64_t d1 = 0, d3 = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t e = n / d;
    for (std::int64_t div : {d, e}) {
      if (div % 4 == 1) ++d1;
      if (div % 4 == 3) ++d3;
      if (d == e) break;
    }
  }
  return 4 * (d1 - d3);
}

}  // namespace orbitflow

#endif  // ORBITFLOW_INCIDENCE_HPP_
