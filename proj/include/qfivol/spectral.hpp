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

#ifndef QFIVOL_SPECTRAL_HPP
#define QFIVOL_SPECTRAL_HPP

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qfivol/types.hpp"

namespace qfivol {

struct SpectralOptions {
  double hermitian_tol = 1e-10;
  double trace_tol = 1e-10;
  /// Eigenvalues in [clamp_tol, 0) are set to zero; anything lower is an error.
  double clamp_tol = -1e-12;
  /// A state is faithful when its smallest eigenvalue exceeds this floor.
  double faithful_floor = 1e-12;
};

/// A density matrix held through its spectral decomposition
///   rho = U diag(lambda) U^dagger,
/// eigenvalues in descending order, columns of U the eigenvectors.
class SpectralState {
 public:
  SpectralState(RVector eigenvalues, CMatrix eigenvectors, double faithful_floor = 1e-12)
      : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)) {
    if (eigenvalues_.size() == 0 || eigenvectors_.rows() != eigenvalues_.size() ||
        eigenvectors_.cols() != eigenvalues_.size()) {
      throw ParameterError("SpectralState: inconsistent eigen-decomposition sizes");
    }
    faithful_ = eigenvalues_.minCoeff() > faithful_floor;
  }

  /// diag(lambdas) in the computational basis. Eigenvalues are stored in
  /// descending order; the eigenvector matrix is the matching permutation.
  static SpectralState diagonal(std::span<const double> lambdas, double faithful_floor = 1e-12) {
    const auto n = static_cast<Eigen::Index>(lambdas.size());
    std::vector<Eigen::Index> order(lambdas.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (lambdas[i] < 0.0) throw StateError("diagonal state: negative eigenvalue");
      order[i] = static_cast<Eigen::Index>(i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return lambdas[a] > lambdas[b]; });
    RVector ev(n);
    CMatrix u = CMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      ev[k] = lambdas[static_cast<std::size_t>(order[k])];
      u(order[k], k) = 1.0;
    }
    return SpectralState(std::move(ev), std::move(u), faithful_floor);
  }

  Eigen::Index dim() const { return eigenvalues_.size(); }
  const RVector& eigenvalues() const { return eigenvalues_; }
  double eigenvalue(Eigen::Index k) const { return eigenvalues_[k]; }
  const CMatrix& eigenvectors() const { return eigenvectors_; }
  bool faithful() const { return faithful_; }

  CMatrix density() const {
    return eigenvectors_ * eigenvalues_.cast<Complex>().asDiagonal() * eigenvectors_.adjoint();
  }

  /// U^dagger X U.
  CMatrix to_eigenbasis(const CMatrix& x) const {
    detail::require_same_dim(x.rows(), dim(), "to_eigenbasis");
    return eigenvectors_.adjoint() * x * eigenvectors_;
  }

  /// U X U^dagger.
  CMatrix from_eigenbasis(const CMatrix& x) const {
    detail::require_same_dim(x.rows(), dim(), "from_eigenbasis");
    return eigenvectors_ * x * eigenvectors_.adjoint();
  }

  /// Tr(rho A).
  Complex expectation(const CMatrix& a) const {
    const CMatrix coeffs = to_eigenbasis(a);
    Complex acc = 0.0;
    for (Eigen::Index k = 0; k < dim(); ++k) acc += eigenvalues_[k] * coeffs(k, k);
    return acc;
  }

 private:
  RVector eigenvalues_;
  CMatrix eigenvectors_;
  bool faithful_ = false;
};

/// Eigendecomposition of a Hermitian positive semidefinite matrix.
inline SpectralState spectral_decompose(const CMatrix& h, bool trace_one,
                                        const SpectralOptions& opt = {}) {
  detail::require_square(h, "spectral_decompose");
  const double defect = detail::hermitian_defect(h);
  if (defect > opt.hermitian_tol) {
    throw StateError("spectral_decompose: matrix is not Hermitian (defect " +
                     std::to_string(defect) + ")");
  }
  if (trace_one && std::abs(h.trace() - Complex(1.0)) > opt.trace_tol) {
    throw StateError("spectral_decompose: trace differs from one");
  }
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw StateError("spectral_decompose: eigen solver did not converge");
  }
  const Eigen::Index n = h.rows();
  RVector ev(n);
  CMatrix vecs(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index k = 0; k < n; ++k) {
    double lam = solver.eigenvalues()[n - 1 - k];
    if (lam < opt.clamp_tol) {
      throw StateError("spectral_decompose: not positive semidefinite (eigenvalue " +
                       std::to_string(lam) + ")");
    }
    ev[k] = std::max(lam, 0.0);
    vecs.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return SpectralState(std::move(ev), std::move(vecs), opt.faithful_floor);
}

/// Coefficients of a centered observable in the eigenbasis of a state:
///   coeffs(k, l) = phi_k^dagger (A - Tr(rho A) I) phi_l.
struct EigenbasisObservable {
  CMatrix coeffs;
  double trace_mean = 0.0;
};

inline EigenbasisObservable eigenbasis_observable(const SpectralState& state, const CMatrix& a) {
  detail::require_square(a, "eigenbasis_observable");
  detail::require_same_dim(a.rows(), state.dim(), "eigenbasis_observable");
  EigenbasisObservable out;
  out.coeffs = state.to_eigenbasis(a);
  Complex mean = 0.0;
  for (Eigen::Index k = 0; k < state.dim(); ++k) mean += state.eigenvalue(k) * out.coeffs(k, k);
  out.trace_mean = detail::real_part_checked(mean, 1e-10, "Tr(rho A)");
  out.coeffs.diagonal().array() -= out.trace_mean;
  return out;
}

}  // namespace qfivol

#endif  // QFIVOL_SPECTRAL_HPP
