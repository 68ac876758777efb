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

#ifndef ORBITFLOW_LATTICE_HPP_
#define ORBITFLOW_LATTICE_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbitflow {

namespace detail {
constexpr int iabs(int v) { return v < 0 ? -v : v; }
}  // namespace detail

/// Integer wavevector on Z^3.
struct Mode {
  std::array<int, 3> k{0, 0, 0};

  constexpr int operator[](std::size_t i) const { return k[i]; }
  constexpr int& operator[](std::size_t i) { return k[i]; }

  constexpr int norm2() const { return k[0] * k[0] + k[1] * k[1] + k[2] * k[2]; }
  constexpr int inf_norm() const {
    return std::max({detail::iabs(k[0]), detail::iabs(k[1]), detail::iabs(k[2])});
  }
  constexpr bool is_zero() const { return k[0] == 0 && k[1] == 0 && k[2] == 0; }

  friend constexpr Mode operator+(Mode a, Mode b) {
    return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
  }
  friend constexpr Mode operator-(Mode a, Mode b) {
    return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
  }
  friend constexpr Mode operator-(Mode a) { return {{-a[0], -a[1], -a[2]}}; }
  friend constexpr auto operator<=>(const Mode&, const Mode&) = default;
};

inline std::string to_string(const Mode& m) {
  return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
         std::to_string(m[2]) + ")";
}

enum class Truncation { cube, sphere };

inline std::string_view to_string(Truncation t) {
  return t == Truncation::cube ? "cube" : "sphere";
}

inline Truncation parse_truncation(std::string_view s) {
  if (s == "cube") return Truncation::cube;
  if (s == "sphere") return Truncation::sphere;
  throw std::invalid_argument("unknown truncation '" + std::string(s) + "'");
}

/// Signed permutation of the coordinates: result_i = signs_i * k_{perm_i}.
struct GroupElement {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> signs{1, 1, 1};

  constexpr Mode apply(const Mode& m) const {
    return {{signs[0] * m[perm[0]], signs[1] * m[perm[1]], signs[2] * m[perm[2]]}};
  }

  /// (a * b).apply(k) == a.apply(b.apply(k))
  friend constexpr GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    GroupElement c;
    for (int i = 0; i < 3; ++i) {
      c.perm[i] = b.perm[a.perm[i]];
      c.signs[i] = a.signs[i] * b.signs[a.perm[i]];
    }
    return c;
  }

  constexpr GroupElement inverse() const {
    GroupElement g;
    for (int i = 0; i < 3; ++i) {
      g.perm[perm[i]] = i;
      g.signs[perm[i]] = signs[i];
    }
    return g;
  }

  friend constexpr bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline constexpr Mode apply_group(const GroupElement& g, const Mode& k) { return g.apply(k); }

/// The 48 elements of O_h, identity first.
inline const std::array<GroupElement, 48>& octahedral_group() {
  static const std::array<GroupElement, 48> group = [] {
    std::array<GroupElement, 48> out{};
    std::array<int, 3> perm{0, 1, 2};
    std::size_t n = 0;
    do {
      for (int mask = 0; mask < 8; ++mask) {
        GroupElement g;
        g.perm = perm;
        for (int i = 0; i < 3; ++i) g.signs[i] = (mask >> i) & 1 ? -1 : 1;
        out[n++] = g;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return group;
}

/// Canonical orbit representative: absolute values sorted descending.
inline constexpr Mode canonical_representative(const Mode& m) {
  std::array<int, 3> a{detail::iabs(m[0]), detail::iabs(m[1]), detail::iabs(m[2])};
  std::sort(a.begin(), a.end(), std::greater<>());
  return Mode{a};
}

struct Orbit {
  Mode rep;
  std::vector<std::size_t> members;  // indices into LatticeIndex::modes()
  int shell_r = 0;

  std::size_t size() const { return members.size(); }
};

/// Truncated lattice with its O_h orbit and shell decomposition.
///
/// Modes are stored in lexicographic order of (k1,k2,k3). Orbits are ordered by
/// shell radius, then by canonical representative. A dense (2N+1)^3 grid gives
/// O(1) lookup from wavevector to mode index.
class LatticeIndex {
 public:
  LatticeIndex(int n, Truncation truncation) : n_(n), truncation_(truncation) {
    if (n < 1) throw std::invalid_argument("truncation level N must be >= 1");
    const int side = 2 * n + 1;
    grid_.assign(static_cast<std::size_t>(side) * side * side, -1);

    for (int a = -n; a <= n; ++a)
      for (int b = -n; b <= n; ++b)
        for (int c = -n; c <= n; ++c) {
          Mode m{{a, b, c}};
          if (m.is_zero()) continue;
          if (truncation == Truncation::sphere && m.norm2() > n * n) continue;
          grid_[grid_offset(m)] = static_cast<std::int32_t>(modes_.size());
          modes_.push_back(m);
        }

    negated_.resize(modes_.size());
    for (std::size_t i = 0; i < modes_.size(); ++i) negated_[i] = *find(-modes_[i]);

    std::map<std::pair<int, Mode>, std::vector<std::size_t>> by_rep;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
      const Mode& m = modes_[i];
      by_rep[{m.norm2(), canonical_representative(m)}].push_back(i);
      shells_[m.norm2()].push_back(i);
    }
    orbit_of_.resize(modes_.size());
    position_in_orbit_.resize(modes_.size());
    for (auto& [key, members] : by_rep) {
      const std::size_t id = orbits_.size();
      for (std::size_t j = 0; j < members.size(); ++j) {
        orbit_of_[members[j]] = id;
        position_in_orbit_[members[j]] = j;
      }
      orbits_.push_back(Orbit{key.second, std::move(members), key.first});
    }
  }

  int n() const { return n_; }
  Truncation truncation() const { return truncation_; }

  const std::vector<Mode>& modes() const { return modes_; }
  const Mode& mode(std::size_t i) const { return modes_[i]; }
  std::size_t mode_count() const { return modes_.size(); }

  const std::vector<Orbit>& orbits() const { return orbits_; }
  const Orbit& orbit(std::size_t a) const { return orbits_[a]; }
  std::size_t orbit_count() const { return orbits_.size(); }
  std::size_t orbit_of(std::size_t mode_index) const { return orbit_of_[mode_index]; }
  std::size_t position_in_orbit(std::size_t mode_index) const {
    return position_in_orbit_[mode_index];
  }

  /// Shell radius |k|^2 -> mode indices.
  const std::map<int, std::vector<std::size_t>>& shells() const { return shells_; }
  std::size_t shell_count() const { return shells_.size(); }

  /// Index of -k.
  std::size_t negated(std::size_t i) const { return negated_[i]; }

  bool contains(const Mode& m) const { return lookup(m) >= 0; }

  std::optional<std::size_t> find(const Mode& m) const {
    const auto i = lookup(m);
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
  }

  /// Mode index or -1 when m is outside the truncation (or zero).
  std::int32_t lookup(const Mode& m) const {
    if (m.inf_norm() > n_) return -1;
    return grid_[grid_offset(m)];
  }

  /// Independent half of the lattice: first nonzero coordinate positive.
  static constexpr bool is_independent(const Mode& m) {
    return m[0] > 0 || (m[0] == 0 && (m[1] > 0 || (m[1] == 0 && m[2] > 0)));
  }

 private:
  std::size_t grid_offset(const Mode& m) const {
    const std::size_t side = 2 * static_cast<std::size_t>(n_) + 1;
    return (static_cast<std::size_t>(m[0] + n_) * side + static_cast<std::size_t>(m[1] + n_)) *
               side +
           static_cast<std::size_t>(m[2] + n_);
  }

  int n_;
  Truncation truncation_;
  std::vector<Mode> modes_;
  std::vector<std::int32_t> grid_;
  std::vector<std::size_t> negated_;
  std::vector<Orbit> orbits_;
  std::vector<std::size_t> orbit_of_;
  std::vector<std::size_t> position_in_orbit_;
  std::map<int, std::vector<std::size_t>> shells_;
};

using LatticePtr = std::shared_ptr<const LatticeIndex>;

inline LatticePtr enumerate_lattice(int n, Truncation truncation) {
  return std::make_shared<const LatticeIndex>(n, truncation);
}

/// Multiset of orbit sizes, in orbit order.
inline std::vector<std::size_t> orbit_sizes(const LatticeIndex& index) {
  std::vector<std::size_t> out;
  out.reserve(index.orbit_count());
  for (const auto& o : index.orbits()) out.push_back(o.size());
  return out;
}

/// Number of O_h orbits in shell r by Burnside: (1/48) sum_g |Fix(g) ∩ S_r|.
inline std::size_t burnside_orbit_count(const LatticeIndex& index, int r) {
  const auto it = index.shells().find(r);
  if (it == index.shells().end())
    throw std::invalid_argument("shell radius " + std::to_string(r) + " is not represented");
  std::size_t fixed = 0;
  for (const auto& g : octahedral_group())
    for (std::size_t i : it->second)
      if (g.apply(index.mode(i)) == index.mode(i)) ++fixed;
  if (fixed % 48 != 0) throw std::logic_error("Burnside fixed-point sum not divisible by 48");
  return fixed / 48;
}

inline std::size_t burnside_orbit_total(const LatticeIndex& index) {
  std::size_t total = 0;
  for (const auto& [r, members] : index.shells()) total += burnside_orbit_count(index, r);
  return total;
}

}  // namespace orbitflow

#endif  // ORBITFLOW_LATTICE_HPP_
