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

// Covariance, quantum Fisher information and metric adjusted skew
// information for self-adjoint observables. Matrices are passed in the
// computational basis; everything on the Fisher side is evaluated in the
// eigenbasis of rho, where the mean superoperators are diagonal.

#ifndef QFIVOL_QIG_HPP
#define QFIVOL_QIG_HPP

#include <cmath>
#include <vector>

#include "qfivol/means.hpp"
#include "qfivol/spectral.hpp"

namespace qfivol {

/// An ordered list A_1..A_N of n x n self-adjoint matrices.
class ObservableSet {
 public:
  ObservableSet() = default;
  explicit ObservableSet(std::vector<CMatrix> matrices, double hermitian_tol = 1e-10)
      : matrices_(std::move(matrices)) {
    if (matrices_.empty()) throw ParameterError("ObservableSet: need at least one observable");
    const Eigen::Index n = matrices_.front().rows();
    for (const auto& m : matrices_) {
      detail::require_square(m, "ObservableSet");
      detail::require_same_dim(m.rows(), n, "ObservableSet");
      if (detail::hermitian_defect(m) > hermitian_tol) {
        throw StateError("ObservableSet: observable is not self-adjoint");
      }
    }
  }

  Eigen::Index dim() const { return matrices_.empty() ? 0 : matrices_.front().rows(); }
  std::size_t count() const { return matrices_.size(); }
  const CMatrix& operator[](std::size_t j) const { return matrices_[j]; }
  const std::vector<CMatrix>& matrices() const { return matrices_; }

  auto begin() const { return matrices_.begin(); }
  auto end() const { return matrices_.end(); }

 private:
  std::vector<CMatrix> matrices_;
};

/// Eigenbasis coefficients of every centered observable of `obs`.
inline std::vector<EigenbasisObservable> eigenbasis_coefficients(const SpectralState& state,
                                                                 const ObservableSet& obs) {
  std::vector<EigenbasisObservable> out;
  out.reserve(obs.count());
  for (const auto& a : obs) out.push_back(eigenbasis_observable(state, a));
  return out;
}

/// A_0 = A - Tr(rho A) I.
inline CMatrix center(const SpectralState& state, const CMatrix& a) {
  detail::require_square(a, "center");
  detail::require_same_dim(a.rows(), state.dim(), "center");
  const double mean = detail::real_part_checked(state.expectation(a), 1e-10, "Tr(rho A)");
  return a - mean * CMatrix::Identity(a.rows(), a.cols());
}

/// Symmetrized covariance, evaluated as Re Tr(rho A_0 B_0).
inline double covariance(const SpectralState& state, const CMatrix& a, const CMatrix& b) {
  detail::require_same_dim(a.rows(), b.rows(), "covariance");
  const CMatrix a0 = center(state, a);
  const CMatrix b0 = center(state, b);
  const CMatrix rho = state.density();
  return (rho * a0 * b0).trace().real();
}

inline double variance(const SpectralState& state, const CMatrix& a) {
  return covariance(state, a, a);
}

/// i [rho, A].
inline CMatrix commutator_i(const SpectralState& state, const CMatrix& a) {
  detail::require_square(a, "commutator_i");
  detail::require_same_dim(a.rows(), state.dim(), "commutator_i");
  const CMatrix rho = state.density();
  return Complex(0.0, 1.0) * (rho * a - a * rho);
}

/// <X, Y>_{rho,f} = Tr(X m_f(L_rho, R_rho)^{-1}(Y)) for self-adjoint X, Y.
inline double qfi_inner(const MonotoneFunction& f, const SpectralState& state, const CMatrix& x,
                        const CMatrix& y) {
  require_regular(f, "qfi_inner");
  if (!state.faithful()) throw StateError("qfi_inner requires a faithful state");
  detail::require_same_dim(x.rows(), y.rows(), "qfi_inner");
  const CMatrix xh = state.to_eigenbasis(x);
  const CMatrix yh = mean_superop_solve(f, state, state.to_eigenbasis(y));
  Complex acc = 0.0;
  for (Eigen::Index l = 0; l < xh.cols(); ++l) {
    for (Eigen::Index k = 0; k < xh.rows(); ++k) acc += std::conj(xh(k, l)) * yh(k, l);
  }
  return detail::real_part_checked(acc, 1e-10, "qfi_inner");
}

/// Tr(m_{f~}(L_rho, R_rho)(A_0) B_0), in the eigenbasis.
inline double tilde_mean_pairing(const MonotoneFunction& f, const SpectralState& state,
                                 const CMatrix& a, const CMatrix& b) {
  const CMatrix ca = eigenbasis_observable(state, a).coeffs;
  const CMatrix cb = eigenbasis_observable(state, b).coeffs;
  const CMatrix ma = mean_superop_apply(f, state, ca, true);
  Complex acc = 0.0;
  for (Eigen::Index l = 0; l < ca.cols(); ++l) {
    for (Eigen::Index k = 0; k < ca.rows(); ++k) acc += ma(k, l) * cb(l, k);
  }
  return detail::real_part_checked(acc, 1e-10, "tilde_mean_pairing");
}

/// sum_{kl} w(lambda_k, lambda_l) Re{a_{kl} b_{lk}} over eigenbasis coefficients.
template <typename Weight>
double weighted_pairing(const SpectralState& state, const CMatrix& ca, const CMatrix& cb,
                        Weight&& weight) {
  double acc = 0.0;
  const Eigen::Index n = state.dim();
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double w = weight(state.eigenvalue(k), state.eigenvalue(l));
      if (w != 0.0) acc += w * (ca(k, l) * cb(l, k)).real();
    }
  }
  return acc;
}

/// Cov = 1/2 sum_{kl} (lambda_k + lambda_l) Re{a_kl b_lk}.
inline double covariance_spectral(const SpectralState& state, const CMatrix& a, const CMatrix& b) {
  const CMatrix ca = eigenbasis_observable(state, a).coeffs;
  const CMatrix cb = eigenbasis_observable(state, b).coeffs;
  return weighted_pairing(state, ca, cb, [](double x, double y) { return 0.5 * (x + y); });
}

/// (f(0)/2) <i[rho,A], i[rho,B]>_{rho,f} in the form that stays defined on
/// non-faithful states: sum_{kl} [(lambda_k+lambda_l)/2 - m_{f~}(lambda_k,lambda_l)] Re{a_kl b_lk}.
inline double extended_qfi_pairing(const MonotoneFunction& f, const SpectralState& state,
                                   const CMatrix& a, const CMatrix& b) {
  require_regular(f, "extended_qfi_pairing");
  const CMatrix ca = eigenbasis_observable(state, a).coeffs;
  const CMatrix cb = eigenbasis_observable(state, b).coeffs;
  return weighted_pairing(state, ca, cb, [&f](double x, double y) { return mean_gap(f, x, y); });
}

/// Metric adjusted skew information I^f_rho(A); defined on every state.
inline double skew_information(const MonotoneFunction& f, const SpectralState& state,
                               const CMatrix& a) {
  return extended_qfi_pairing(f, state, a, a);
}

/// I^f_rho(A) through the inverse mean superoperator; faithful states only.
inline double skew_information_qfi(const MonotoneFunction& f, const SpectralState& state,
                                   const CMatrix& a) {
  const CMatrix c = commutator_i(state, a);
  return 0.5 * f_at_zero(f) * qfi_inner(f, state, c, c);
}

/// |(f(0)/2) <i[rho,A], i[rho,B]>_{rho,f} - (Cov(A,B) - Tr(m_{f~}(L,R)(A_0) B_0))|.
/// Both sides are computed independently; the residual should be rounding noise.
inline double pairing_residual(const MonotoneFunction& f, const SpectralState& state,
                               const CMatrix& a, const CMatrix& b) {
  const double lhs =
      0.5 * f_at_zero(f) * qfi_inner(f, state, commutator_i(state, a), commutator_i(state, b));
  const double rhs = covariance(state, a, b) - tilde_mean_pairing(f, state, a, b);
  return std::abs(lhs - rhs);
}

}  // namespace qfivol

#endif  // QFIVOL_QIG_HPP
