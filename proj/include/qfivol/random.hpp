// Copyright 2026 The qfivol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reproducible random instances.
//
// CounterRng is SplitMix64 run in counter mode: the i-th output of stream
// (seed, stream) is mix64(key + (i + 1) * 0x9E3779B97F4A7C15), where key is
// itself mix64 of the seed and stream id. Outputs depend only on
// (seed, stream, i), never on the platform or on other streams, so per-trial
// streams can be evaluated in any order or in parallel.
//
// Standard normals come from a Box-Muller transform written out here rather
// than std::normal_distribution, whose algorithm is implementation defined.

#ifndef QFIVOL_RANDOM_HPP
#define QFIVOL_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include <Eigen/QR>

#include "qfivol/qig.hpp"
#include "qfivol/spectral.hpp"

namespace qfivol {

class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix64(mix64(seed) ^ (stream * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
  }

  /// Uniform on (0, 1), never exactly 0 or 1.
  double uniform() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  /// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1).
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  std::uint64_t counter() const { return counter_; }

  static constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline CMatrix random_complex_gaussian(Eigen::Index rows, Eigen::Index cols, CounterRng& rng) {
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  }
  return m;
}

/// rho = G G^dagger / Tr(G G^dagger) for complex Ginibre G, redrawn until
/// its smallest eigenvalue reaches `min_eig_floor`.
inline SpectralState random_faithful_state(int n, CounterRng& rng, double min_eig_floor = 1e-3) {
  if (n < 2) throw ParameterError("random_faithful_state: n must be >= 2");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const CMatrix g = random_complex_gaussian(n, n, rng);
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint());
    SpectralState state = spectral_decompose(rho, true);
    if (state.eigenvalues().minCoeff() >= min_eig_floor) return state;
  }
  throw ParameterError("random_faithful_state: 1000 consecutive rejections; floor " +
                       std::to_string(min_eig_floor) + " too high for n = " + std::to_string(n));
}

/// Rank-one state |psi><psi| for a uniformly random unit vector psi. The
/// decomposition is assembled directly (eigenvalues exactly 1, 0, ..., 0;
/// eigenvectors a unitary completion of psi) so the zero eigenvalues carry no
/// eigensolver noise.
inline SpectralState random_pure_state(int n, CounterRng& rng) {
  if (n < 2) throw ParameterError("random_pure_state: n must be >= 2");
  CMatrix m = random_complex_gaussian(n, n, rng);
  m.col(0).normalize();
  const Eigen::HouseholderQR<CMatrix> qr(m);
  CMatrix u = qr.householderQ();
  // Column 0 of Q is psi up to a phase; restore psi itself.
  const Complex phase = u.col(0).dot(m.col(0));
  u.col(0) *= phase / std::abs(phase);
  RVector ev = RVector::Zero(n);
  ev[0] = 1.0;
  return SpectralState(std::move(ev), std::move(u));
}

/// A_j = (X + X^dagger)/2 for i.i.d. standard complex Gaussian X.
inline ObservableSet random_observables(int n, int count, CounterRng& rng) {
  if (n < 2 || count < 1) throw ParameterError("random_observables: need n >= 2, N >= 1");
  std::vector<CMatrix> mats;
  mats.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const CMatrix x = random_complex_gaussian(n, n, rng);
    mats.push_back(0.5 * (x + x.adjoint()));
  }
  return ObservableSet(std::move(mats));
}

}  // namespace qfivol

#endif  // QFIVOL_RANDOM_HPP
