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

#ifndef ORBITFLOW_GALERKIN_HPP_
#define ORBITFLOW_GALERKIN_HPP_

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orbitflow/field.hpp"
#include "orbitflow/transfer.hpp"

namespace orbitflow {

enum class Integrator { rk4, etdrk4 };

inline std::string_view to_string(Integrator i) { return i == Integrator::rk4 ? "rk4" : "etdrk4"; }

inline Integrator parse_integrator(std::string_view s) {
  if (s == "rk4") return Integrator::rk4;
  if (s == "etdrk4") return Integrator::etdrk4;
  throw std::invalid_argument("unknown integrator '" + std::string(s) + "'");
}

struct EvolutionConfig {
  double nu = 0.05;
  double dt = 0.002;
  double t_end = 1.0;
  Integrator integrator = Integrator::etdrk4;
  int output_every = 50;
  bool nonlinear = true;  // false: pure dissipation, for verification runs

  void validate() const {
    if (!(nu >= 0.0)) throw std::invalid_argument("nu must be >= 0");
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
    if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be > 0");
    if (dt > t_end) throw std::invalid_argument("dt must not exceed t_end");
    if (output_every < 1) throw std::invalid_argument("output_every must be >= 1");
  }
};

struct DiagnosticsRecord {
  double t = 0.0;
  double energy = 0.0;
  double enstrophy = 0.0;
  double rho_v = 0.0;
  double inf_norm_v = 0.0;
  double nu_c_star = 0.0;
  double bkm_integral = 0.0;  // running trapezoidal integral of inf_norm_v
};

/// Thrown when the state stops being finite.
class BlowupError : public std::runtime_error {
 public:
  explicit BlowupError(double t)
      : std::runtime_error("non-finite state at t = " + std::to_string(t)), t_(t) {}
  double time() const { return t_; }

 private:
  double t_;
};

// ---------------------------------------------------------------------------
// Field arithmetic

/// y += a * x
inline void axpy(VelocityField& y, double a, const VelocityField& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = y[i] + a * x[i];
}

inline bool all_finite(const VelocityField& u) {
  for (const auto& v : u.coeffs())
    for (const auto& c : v)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

/// N_k(u) on every mode; evaluated on the independent half and mirrored.
inline VelocityField nonlinear_field(const VelocityField& u) {
  const auto& index = u.index();
  VelocityField out(u.index_ptr());
  for (std::size_t i = 0; i < index.mode_count(); ++i)
    if (LatticeIndex::is_independent(index.mode(i))) out.set_pair(i, nonlinear_term(u, i));
  return out;
}

/// du/dt = -nu |k|^2 u_k + N_k(u).
inline VelocityField rhs(const VelocityField& u, double nu, bool nonlinear = true) {
  VelocityField out = nonlinear ? nonlinear_field(u) : VelocityField(u.index_ptr());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = out[i] - (nu * u.index().mode(i).norm2()) * u[i];
  return out;
}

// ---------------------------------------------------------------------------
// phi functions: phi_j(z) = sum_m z^m / (m + j)!

namespace detail {
inline double phi_taylor(int j, double z) {
  double term = 1.0;
  for (int i = 2; i <= j; ++i) term /= i;
  double sum = term;
  for (int m = 1; m < 30; ++m) {
    term *= z / (m + j);
    sum += term;
  }
  return sum;
}
}  // namespace detail

inline double phi1(double z) {
  return std::abs(z) < 1.0 ? detail::phi_taylor(1, z) : std::expm1(z) / z;
}
inline double phi2(double z) {
  return std::abs(z) < 1.0 ? detail::phi_taylor(2, z) : (std::expm1(z) - z) / (z * z);
}
inline double phi3(double z) {
  return std::abs(z) < 1.0 ? detail::phi_taylor(3, z)
                           : (std::expm1(z) - z - 0.5 * z * z) / (z * z * z);
}

// ---------------------------------------------------------------------------
// Steppers

/// Any map u -> N(u) that preserves reality. The Galerkin term is the
/// default; tests substitute terms with known solutions.
using NonlinearOperator = std::function<VelocityField(const VelocityField&)>;

inline NonlinearOperator galerkin_operator(bool nonlinear) {
  if (nonlinear) return [](const VelocityField& v) { return nonlinear_field(v); };
  return [](const VelocityField& v) { return VelocityField(v.index_ptr()); };
}

inline VelocityField rhs(const VelocityField& u, double nu, const NonlinearOperator& op) {
  VelocityField out = op(u);
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = out[i] - (nu * u.index().mode(i).norm2()) * u[i];
  return out;
}

inline VelocityField step_rk4(const VelocityField& u, double nu, double dt,
                              const NonlinearOperator& op) {
  const VelocityField k1 = rhs(u, nu, op);
  VelocityField tmp = u;
  axpy(tmp, 0.5 * dt, k1);
  const VelocityField k2 = rhs(tmp, nu, op);
  tmp = u;
  axpy(tmp, 0.5 * dt, k2);
  const VelocityField k3 = rhs(tmp, nu, op);
  tmp = u;
  axpy(tmp, dt, k3);
  const VelocityField k4 = rhs(tmp, nu, op);
  VelocityField out = u;
  axpy(out, dt / 6.0, k1);
  axpy(out, dt / 3.0, k2);
  axpy(out, dt / 3.0, k3);
  axpy(out, dt / 6.0, k4);
  return out;
}

inline VelocityField step_rk4(const VelocityField& u, double nu, double dt, bool nonlinear = true) {
  return step_rk4(u, nu, dt, galerkin_operator(nonlinear));
}

inline VelocityField step_rk4(const VelocityField& u, const EvolutionConfig& config) {
  return step_rk4(u, config.nu, config.dt, config.nonlinear);
}

/// Per-shell ETDRK4 coefficients for L = -nu r, r = |k|^2.
struct EtdCoefficients {
  double e = 0.0;       // exp(z)
  double e_half = 0.0;  // exp(z/2)
  double q = 0.0;       // (h/2) phi1(z/2)
  double f1 = 0.0;      // h (phi1 - 3 phi2 + 4 phi3)
  double f2 = 0.0;      // h (phi2 - 2 phi3)
  double f3 = 0.0;      // h (4 phi3 - phi2)

  static EtdCoefficients make(double nu, int r, double h) {
    const double z = -nu * r * h;
    const double p1 = phi1(z), p2 = phi2(z), p3 = phi3(z);
    return {std::exp(z),           std::exp(0.5 * z),   0.5 * h * phi1(0.5 * z),
            h * (p1 - 3 * p2 + 4 * p3), h * (p2 - 2 * p3), h * (4 * p3 - p2)};
  }
};

/// Cox-Matthews ETDRK4 with the diagonal linear part integrated exactly.
inline VelocityField step_etdrk4(const VelocityField& u, double nu, double dt,
                                 const NonlinearOperator& nl) {
  const auto& index = u.index();
  const std::size_t n = u.size();
  std::map<int, EtdCoefficients> table;
  for (const auto& [r, members] : index.shells()) table.emplace(r, EtdCoefficients::make(nu, r, dt));
  std::vector<const EtdCoefficients*> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = &table.at(index.mode(i).norm2());

  const VelocityField n_u = nl(u);
  VelocityField a(u.index_ptr());
  for (std::size_t i = 0; i < n; ++i) a[i] = coef[i]->e_half * u[i] + coef[i]->q * n_u[i];
  const VelocityField na = nl(a);
  VelocityField b(u.index_ptr());
  for (std::size_t i = 0; i < n; ++i) b[i] = coef[i]->e_half * u[i] + coef[i]->q * na[i];
  const VelocityField nb = nl(b);
  VelocityField c(u.index_ptr());
  for (std::size_t i = 0; i < n; ++i)
    c[i] = coef[i]->e_half * a[i] + coef[i]->q * (2.0 * nb[i] - n_u[i]);
  const VelocityField nc = nl(c);

  VelocityField out(u.index_ptr());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& k = *coef[i];
    out[i] = k.e * u[i] + k.f1 * n_u[i] + (2.0 * k.f2) * (na[i] + nb[i]) + k.f3 * nc[i];
  }
  return out;
}

inline VelocityField step_etdrk4(const VelocityField& u, double nu, double dt,
                                 bool nonlinear = true) {
  return step_etdrk4(u, nu, dt, galerkin_operator(nonlinear));
}

inline VelocityField step_etdrk4(const VelocityField& u, const EvolutionConfig& config) {
  return step_etdrk4(u, config.nu, config.dt, config.nonlinear);
}

inline VelocityField step(const VelocityField& u, const EvolutionConfig& config) {
  return config.integrator == Integrator::rk4 ? step_rk4(u, config) : step_etdrk4(u, config);
}

// ---------------------------------------------------------------------------
// Evolution driver

inline DiagnosticsRecord diagnose(const VelocityField& u, double t) {
  const auto d = stretch_diagnostics(split_transfer(raw_transfer(u)).v, u.index().n());
  DiagnosticsRecord rec;
  rec.t = t;
  rec.energy = energy(u);
  rec.enstrophy = enstrophy(u);
  rec.rho_v = d.rho_v;
  rec.inf_norm_v = d.inf_norm_v;
  rec.nu_c_star = d.nu_c_star;
  return rec;
}

/// Thrown when a recorded state violates reality or incompressibility.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Advances u0 to t_end and returns the diagnostics series (first record at
/// t = 0, then every output_every steps, plus the final step). Each record
/// is optionally streamed through on_record as it is produced.
inline std::vector<DiagnosticsRecord> evolve(
    VelocityField u, const EvolutionConfig& config,
    const std::function<void(const DiagnosticsRecord&, const VelocityField&)>& on_record = {}) {
  config.validate();
  const long steps = std::lround(config.t_end / config.dt);
  std::vector<DiagnosticsRecord> out;

  auto record = [&](long step_index) {
    if (reality_defect(u) > 1e-10 || divergence_defect(u) > 1e-10)
      throw InvariantError("state left the constraint manifold at step " +
                           std::to_string(step_index));
    DiagnosticsRecord rec = diagnose(u, step_index * config.dt);
    if (!out.empty()) {
      const auto& prev = out.back();
      rec.bkm_integral = prev.bkm_integral + 0.5 * (rec.t - prev.t) * (rec.inf_norm_v + prev.inf_norm_v);
    }
    out.push_back(rec);
    if (on_record) on_record(rec, u);
  };

  record(0);
  for (long s = 1; s <= steps; ++s) {
    u = step(u, config);
    if (!all_finite(u)) throw BlowupError(s * config.dt);
    if (s % config.output_every == 0 || s == steps) record(s);
  }
  return out;
}

/// Analytic dZ/dt = -nu sum |k|^4 |u_k|^2 + sum |k|^2 Re(conj(u_k) . N_k).
inline double enstrophy_rate(const VelocityField& u, double nu, bool nonlinear = true) {
  double dissipation = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = u.index().mode(i).norm2();
    dissipation += r * r * norm2(u[i]);
  }
  return -nu * dissipation + (nonlinear ? enstrophy_production(u) : 0.0);
}

/// |finite-difference dZ/dt - enstrophy_rate|. dZ/dt uses the five-point
/// centered stencil on u(t + jh), j = -2..2, each reached by one RK4 step.
inline double enstrophy_identity_residual(const VelocityField& u, double nu, double h,
                                          bool nonlinear = true) {
  auto z = [&](double dt) { return enstrophy(step_rk4(u, nu, dt, nonlinear)); };
  const double fd = (z(-2 * h) - 8 * z(-h) + 8 * z(h) - z(2 * h)) / (12 * h);
  return std::abs(fd - enstrophy_rate(u, nu, nonlinear));
}

}  // namespace orbitflow

#endif  // ORBITFLOW_GALERKIN_HPP_
