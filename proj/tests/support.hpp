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


// Shared fixtures for the unit tests: Pauli matrices, random unitaries and
// literal (unoptimized) reference formulas.

#ifndef QFIVOL_TESTS_SUPPORT_HPP
#define QFIVOL_TESTS_SUPPORT_HPP

#include <cmath>
#include <vector>

#include <Eigen/QR>

#include "qfivol/oracle.hpp"
#include "qfivol/random.hpp"
#include "qfivol/volumes.hpp"

namespace qfivol::testing {

inline CMatrix sigma_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline CMatrix sigma_y() {
  CMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

inline CMatrix sigma_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

inline SpectralState diag_state(std::vector<double> lambdas) {
  return SpectralState::diagonal(lambdas);
}

/// Haar-ish unitary from the QR factor of a complex Gaussian matrix.
inline CMatrix random_unitary(int n, CounterRng& rng) {
  const CMatrix g = random_complex_gaussian(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  return qr.householderQ();
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// f~ straight from its defining formula.
inline double tilde_literal(const MonotoneFunction& f, double x) {
  return 0.5 * ((x + 1.0) - (x - 1.0) * (x - 1.0) * f_at_zero(f) / eval_f(f, x));
}

/// prod (x_j + y_j)/2 - prod ((x_j + y_j)/2 - m_{f~}(x_j, y_j)), term by term.
inline double h_literal(const MonotoneFunction& f, const std::vector<double>& xs,
                        const std::vector<double>& ys) {
  double p = 1.0;
  double q = 1.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double a = 0.5 * (xs[j] + ys[j]);
    p *= a;
    q *= a - scalar_mean(f, xs[j], ys[j], true);
  }
  return p - q;
}

/// Laplace expansion along the first row.
inline double cofactor_det(const RMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  double acc = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    RMatrix minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index cc = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = m(i, j);
      }
    }
    acc += ((c % 2 == 0) ? 1.0 : -1.0) * m(0, c) * cofactor_det(minor);
  }
  return acc;
}

inline RMatrix random_real(int rows, int cols, CounterRng& rng) {
  RMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.normal();
  }
  return m;
}

}  // namespace qfivol::testing

#endif  // QFIVOL_TESTS_SUPPORT_HPP
