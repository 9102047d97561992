#pragma once

// Shared numerical utilities: central finite differences, classical
// fixed-step RK4, the tolerance policy used by the verification suites, and
// a deterministic splitmix64 sampler that produces identical streams for
// identical seeds on every platform.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "degenspace/errors.hpp"

namespace degenspace {

struct Tolerances {
  double exact_rel = 1e-12;      // identities that hold to round-off
  double algebraic_rel = 1e-10;  // polynomial identities with cancellation
  double fd_abs = 1e-6;          // finite-difference comparisons
  double fd_step = 1e-5;         // central-difference step; keep step^2 well above machine epsilon
  double ode_abs = 1e-8;         // integrator agreement
};

// (f(x+h) - f(x-h)) / (2h) for scalar-valued f.
template <typename F>
double central_diff(F&& f, double x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("central_diff requires h > 0");
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Componentwise central difference for array-valued f.
template <std::size_t N, typename F>
std::array<double, N> central_diff(F&& f, double x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("central_diff requires h > 0");
  const std::array<double, N> plus = f(x + h);
  const std::array<double, N> minus = f(x - h);
  std::array<double, N> d;
  for (std::size_t i = 0; i < N; ++i) d[i] = (plus[i] - minus[i]) / (2.0 * h);
  return d;
}

// Classical 4th-order Runge-Kutta with a fixed step for the autonomous
// system y' = f(y). Returns the full trajectory including the initial point.
// Throws NonFiniteState if the state leaves the finite range (for example
// when integrating into a pole).
template <std::size_t N, typename F>
std::vector<std::pair<double, std::array<double, N>>> rk4(F&& f, std::array<double, N> y0,
                                                          double t0, double t1, int steps) {
  if (steps < 1) throw std::invalid_argument("rk4 requires steps >= 1");
  if (!(t1 > t0)) throw std::invalid_argument("rk4 requires t1 > t0");
  const double h = (t1 - t0) / steps;

  std::vector<std::pair<double, std::array<double, N>>> trajectory;
  trajectory.reserve(static_cast<std::size_t>(steps) + 1);
  trajectory.emplace_back(t0, y0);

  std::array<double, N> y = y0;
  std::array<double, N> stage;
  for (int i = 0; i < steps; ++i) {
    const std::array<double, N> k1 = f(y);
    for (std::size_t j = 0; j < N; ++j) stage[j] = y[j] + 0.5 * h * k1[j];
    const std::array<double, N> k2 = f(stage);
    for (std::size_t j = 0; j < N; ++j) stage[j] = y[j] + 0.5 * h * k2[j];
    const std::array<double, N> k3 = f(stage);
    for (std::size_t j = 0; j < N; ++j) stage[j] = y[j] + h * k3[j];
    const std::array<double, N> k4 = f(stage);
    for (std::size_t j = 0; j < N; ++j) {
      y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
      if (!std::isfinite(y[j])) {
        throw DomainError(ErrorCode::NonFiniteState, "state became non-finite during integration");
      }
    }
    trajectory.emplace_back(t0 + (i + 1) * h, y);
  }
  return trajectory;
}

// splitmix64: 64-bit state, one addition and two xor-shift-multiply mixes
// per draw. Chosen over the platform default engines so streams reproduce
// bit for bit everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // ±1 with equal probability.
  int sign() { return (next_u64() >> 40) & 1ULL ? 1 : -1; }

  // Magnitude in [lo_mag, hi_mag) with a random sign.
  double uniform_signed(double lo_mag, double hi_mag) {
    return sign() * uniform(lo_mag, hi_mag);
  }

 private:
  std::uint64_t state_;
};

}  // namespace degenspace
