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

// Kubo-Ando means on scalars, and the superoperator m_f(L_rho, R_rho), which
// is diagonal in the eigenbasis of rho:
//
//     m_f(L, R)(X)_{kl} = m_f(lambda_k, lambda_l) X_{kl}.

#ifndef QFIVOL_MEANS_HPP
#define QFIVOL_MEANS_HPP

#include <algorithm>
#include <cmath>

#include "qfivol/omf.hpp"
#include "qfivol/spectral.hpp"

namespace qfivol {

/// m_f(x, y), or m_{f~}(x, y) when use_tilde, computed as M phi(m / M).
inline double scalar_mean(const MonotoneFunction& f, double x, double y, bool use_tilde = false) {
  if (x < 0.0 || y < 0.0 || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("scalar_mean: arguments must be finite and non-negative");
  }
  if (use_tilde) require_regular(f);
  if (x == y) return x;
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (lo == 0.0) {
    if (!use_tilde) {
      throw DomainError("regular mean requires strictly positive arguments");
    }
    return 0.0;  // f~(0) = 0
  }
  const double r = lo / hi;
  return hi * (use_tilde ? eval_tilde(f, r) : eval_f(f, r));
}

/// (x + y)/2 - m_{f~}(x, y) for regular f and x, y >= 0, through the
/// cancellation-free form (x - y)^2 f(0) / (2 m_f(x, y)).
inline double mean_gap(const MonotoneFunction& f, double x, double y) {
  require_regular(f, "mean_gap");
  if (x < 0.0 || y < 0.0) throw DomainError("mean_gap: negative argument");
  if (x == y) return 0.0;
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  const double f0 = f_at_zero(f);
  const double mf = hi * (lo == 0.0 ? f0 : eval_f(f, lo / hi));
  const double d = hi - lo;
  return d * d * f0 / (2.0 * mf);
}

/// m_f(L_rho, R_rho)(X) for X given in the eigenbasis of the state.
inline CMatrix mean_superop_apply(const MonotoneFunction& f, const SpectralState& state,
                                  const CMatrix& x, bool use_tilde = false) {
  detail::require_square(x, "mean_superop_apply");
  detail::require_same_dim(x.rows(), state.dim(), "mean_superop_apply");
  const Eigen::Index n = state.dim();
  CMatrix out(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index k = 0; k < n; ++k) {
      out(k, l) = scalar_mean(f, state.eigenvalue(k), state.eigenvalue(l), use_tilde) * x(k, l);
    }
  }
  return out;
}

/// m_f(L_rho, R_rho)^{-1}(Y) for Y given in the eigenbasis of a faithful state.
inline CMatrix mean_superop_solve(const MonotoneFunction& f, const SpectralState& state,
                                  const CMatrix& y) {
  if (!state.faithful()) {
    throw StateError("inverse mean superoperator requires faithful state");
  }
  detail::require_square(y, "mean_superop_solve");
  detail::require_same_dim(y.rows(), state.dim(), "mean_superop_solve");
  const Eigen::Index n = state.dim();
  CMatrix out(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index k = 0; k < n; ++k) {
      out(k, l) = y(k, l) / scalar_mean(f, state.eigenvalue(k), state.eigenvalue(l));
    }
  }
  return out;
}

}  // namespace qfivol

#endif  // QFIVOL_MEANS_HPP
