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

// Gram matrices and volumes of a family of observables.
//
// Both Gram matrices have the form
//     G_{hj} = sum_{kl} w_{kl} Re{a^h_{kl} conj(a^j_{kl})},   w_{kl} >= 0,
// over the eigenbasis coefficients a^h of the centered observables, with
//     covariance side:  w_{kl} = (lambda_k + lambda_l)/2,
//     Fisher side:      w_{kl} = (lambda_k + lambda_l)/2 - m_{f~}(lambda_k, lambda_l).
// So G = M^T M for the real 2n^2 x N matrix M of weighted coefficients and
// det G = prod_i R_ii^2 from a QR factorization of M. Determinants are taken
// from that factorization rather than from G itself: a rank deficient family
// then gives a volume at rounding level of M, not at the square root of the
// rounding level of G.

#ifndef QFIVOL_VOLUMES_HPP
#define QFIVOL_VOLUMES_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "qfivol/qig.hpp"
#include "qfivol/random.hpp"

namespace qfivol {

inline constexpr std::size_t kMaxObservables = 8;

struct GramReport {
  Eigen::Index n = 0;
  std::size_t count = 0;
  RMatrix cov_gram;
  RMatrix qfi_gram;
  double cov_det = 0.0;
  double qfi_det = 0.0;
  double cov_vol = 0.0;
  double qfi_vol = 0.0;
  /// det cov_gram - det qfi_gram.
  double F = 0.0;
  RMatrix robertson;
  double robertson_det = 0.0;
  bool equality_flag = false;

  double scale() const { return std::max(1.0, std::abs(cov_det)); }
};

namespace detail {

template <typename Weight>
RMatrix weighted_factor(const SpectralState& state, std::span<const EigenbasisObservable> coeffs,
                        Weight&& weight) {
  const Eigen::Index n = state.dim();
  RMatrix m(2 * n * n, static_cast<Eigen::Index>(coeffs.size()));
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double s = std::sqrt(weight(state.eigenvalue(k), state.eigenvalue(l)));
      const Eigen::Index row = 2 * (l * n + k);
      for (std::size_t h = 0; h < coeffs.size(); ++h) {
        const Complex c = coeffs[h].coeffs(k, l);
        m(row, static_cast<Eigen::Index>(h)) = s * c.real();
        m(row + 1, static_cast<Eigen::Index>(h)) = s * c.imag();
      }
    }
  }
  return m;
}

/// |det(M^T M)|^{1/2} from the R factor of M.
inline double gram_volume(const RMatrix& factor) {
  const Eigen::Index cols = factor.cols();
  if (factor.rows() < cols) return 0.0;
  Eigen::HouseholderQR<RMatrix> qr(factor);
  double vol = 1.0;
  for (Eigen::Index i = 0; i < cols; ++i) vol *= std::abs(qr.matrixQR()(i, i));
  return vol;
}

inline RMatrix symmetrized(const RMatrix& g) { return 0.5 * (g + g.transpose()); }

}  // namespace detail

/// Real N x N antisymmetric matrix {-(i/2) Tr(rho [A_h, A_j])} and its
/// determinant; the determinant is exactly zero for odd N.
struct RobertsonBound {
  RMatrix matrix;
  double det = 0.0;
};

inline RobertsonBound robertson_bound(const SpectralState& state, const ObservableSet& obs) {
  detail::require_same_dim(obs.dim(), state.dim(), "robertson_bound");
  const auto count = static_cast<Eigen::Index>(obs.count());
  const CMatrix rho = state.density();
  RobertsonBound out;
  out.matrix = RMatrix::Zero(count, count);
  for (Eigen::Index h = 0; h < count; ++h) {
    for (Eigen::Index j = h + 1; j < count; ++j) {
      const CMatrix& a = obs[static_cast<std::size_t>(h)];
      const CMatrix& b = obs[static_cast<std::size_t>(j)];
      const Complex comm = (rho * a * b).trace() - (rho * b * a).trace();
      const double entry =
          detail::real_part_checked(Complex(0.0, -0.5) * comm, 1e-10, "robertson entry");
      out.matrix(h, j) = entry;
      out.matrix(j, h) = -entry;
    }
  }
  out.det = (count % 2 == 1) ? 0.0 : out.matrix.partialPivLu().determinant();
  return out;
}

/// True iff the centered observables, flattened to real vectors of length
/// 2n^2, have numerical rank below N.
inline bool check_equality_condition(const SpectralState& state, const ObservableSet& obs,
                                     double rel_threshold = 1e-13) {
  detail::require_same_dim(obs.dim(), state.dim(), "check_equality_condition");
  const Eigen::Index n = state.dim();
  const auto count = static_cast<Eigen::Index>(obs.count());
  RMatrix flat(2 * n * n, count);
  double raw_scale = 0.0;
  for (Eigen::Index h = 0; h < count; ++h) {
    raw_scale = std::max(raw_scale, obs[static_cast<std::size_t>(h)].norm());
    const CMatrix a0 = center(state, obs[static_cast<std::size_t>(h)]);
    for (Eigen::Index idx = 0; idx < n * n; ++idx) {
      flat(2 * idx, h) = a0(idx).real();
      flat(2 * idx + 1, h) = a0(idx).imag();
    }
  }
  Eigen::JacobiSVD<RMatrix> svd(flat);
  const RVector& sv = svd.singularValues();
  // Centering a multiple of I leaves rounding noise, so the threshold is
  // relative to the uncentered observables.
  const double smax = std::max(sv.size() > 0 ? sv[0] : 0.0, raw_scale);
  const double threshold = smax * static_cast<double>(2 * n * n) * rel_threshold;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > threshold) ++rank;
  }
  return rank < count;
}

/// Covariance and Fisher Gram matrices, volumes, the gap F(f) and the
/// Robertson matrix. The Fisher side uses the extended form, so the report
/// is defined on non-faithful states too.
inline GramReport build_gram_report(const MonotoneFunction& f, const SpectralState& state,
                                    const ObservableSet& obs) {
  require_regular(f, "build_gram_report");
  detail::require_same_dim(obs.dim(), state.dim(), "build_gram_report");
  if (obs.count() > kMaxObservables) {
    throw ParameterError("build_gram_report: at most 8 observables supported");
  }
  const auto coeffs = eigenbasis_coefficients(state, obs);
  const auto cov_weight = [](double x, double y) { return 0.5 * (x + y); };
  const auto qfi_weight = [&f](double x, double y) { return mean_gap(f, x, y); };

  GramReport r;
  r.n = state.dim();
  r.count = obs.count();
  const auto count = static_cast<Eigen::Index>(obs.count());
  r.cov_gram.resize(count, count);
  r.qfi_gram.resize(count, count);
  for (Eigen::Index h = 0; h < count; ++h) {
    for (Eigen::Index j = 0; j < count; ++j) {
      const CMatrix& ch = coeffs[static_cast<std::size_t>(h)].coeffs;
      const CMatrix& cj = coeffs[static_cast<std::size_t>(j)].coeffs;
      r.cov_gram(h, j) = weighted_pairing(state, ch, cj, cov_weight);
      r.qfi_gram(h, j) = weighted_pairing(state, ch, cj, qfi_weight);
    }
  }
  r.cov_gram = detail::symmetrized(r.cov_gram);
  r.qfi_gram = detail::symmetrized(r.qfi_gram);

  r.cov_vol = detail::gram_volume(detail::weighted_factor(state, coeffs, cov_weight));
  r.qfi_vol = detail::gram_volume(detail::weighted_factor(state, coeffs, qfi_weight));
  r.cov_det = r.cov_vol * r.cov_vol;
  r.qfi_det = r.qfi_vol * r.qfi_vol;
  r.F = r.cov_det - r.qfi_det;

  auto rb = robertson_bound(state, obs);
  r.robertson = std::move(rb.matrix);
  r.robertson_det = rb.det;
  r.equality_flag = check_equality_condition(state, obs);
  return r;
}

/// {(f(0)/2) <i[rho,A_h], i[rho,A_j]>_{rho,f}} through the inverse mean
/// superoperator; faithful states only.
inline RMatrix qfi_gram_direct(const MonotoneFunction& f, const SpectralState& state,
                               const ObservableSet& obs) {
  const auto count = static_cast<Eigen::Index>(obs.count());
  std::vector<CMatrix> comms;
  for (const auto& a : obs) comms.push_back(commutator_i(state, a));
  RMatrix g(count, count);
  const double half_f0 = 0.5 * f_at_zero(f);
  for (Eigen::Index h = 0; h < count; ++h) {
    for (Eigen::Index j = 0; j < count; ++j) {
      g(h, j) = half_f0 * qfi_inner(f, state, comms[static_cast<std::size_t>(h)],
                                    comms[static_cast<std::size_t>(j)]);
    }
  }
  return detail::symmetrized(g);
}

inline bool check_main_inequality(const GramReport& report, double tol = 1e-9) {
  return report.F >= -tol * report.scale();
}

/// det(H) <= prod_j H_jj for a positive semidefinite H.
inline bool hadamard_check(const RMatrix& h, double tol = 1e-10) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw ParameterError("hadamard_check: expected a non-empty square matrix");
  }
  const RMatrix sym = detail::symmetrized(h);
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) {
    throw StateError("hadamard_check: matrix is not positive semidefinite");
  }
  const double diag_prod = sym.diagonal().prod();
  return sym.partialPivLu().determinant() <= diag_prod + tol * std::max(1.0, std::abs(diag_prod));
}

struct Counterexample {
  SpectralState state;
  ObservableSet obs;
};

/// rho = diag(lambda) with n = N = 2m, and observables pairing up on the
/// 2 x 2 blocks (h, h+1), h odd: A_h carries i / -i off the diagonal, A_{h+1}
/// carries 1 / 1. For every regular f the product of skew informations then
/// falls strictly below the Robertson determinant.
inline Counterexample pauli_chain_counterexample(std::span<const double> lambdas) {
  const std::size_t n = lambdas.size();
  if (n < 2 || n % 2 != 0) {
    throw ParameterError("pauli_chain_counterexample: need an even number n = N >= 2 of eigenvalues");
  }
  if (n > kMaxObservables) {
    throw ParameterError("pauli_chain_counterexample: at most 8 observables supported");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lambdas[i] > 0.0)) throw ParameterError("pauli_chain_counterexample: eigenvalues must be positive");
    if (i > 0 && !(lambdas[i] > lambdas[i - 1])) {
      throw ParameterError("pauli_chain_counterexample: eigenvalues must be strictly increasing");
    }
    sum += lambdas[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ParameterError("pauli_chain_counterexample: eigenvalues must sum to one");
  }
  const auto dim = static_cast<Eigen::Index>(n);
  std::vector<CMatrix> mats;
  for (Eigen::Index h = 0; h < dim; h += 2) {
    CMatrix ay = CMatrix::Zero(dim, dim);
    ay(h, h + 1) = Complex(0.0, 1.0);
    ay(h + 1, h) = Complex(0.0, -1.0);
    CMatrix ax = CMatrix::Zero(dim, dim);
    ax(h, h + 1) = 1.0;
    ax(h + 1, h) = 1.0;
    mats.push_back(std::move(ay));
    mats.push_back(std::move(ax));
  }
  return {SpectralState::diagonal(lambdas), ObservableSet(std::move(mats))};
}

/// prod over odd h of (lambda_{h+1} - lambda_h)^2.
inline double pauli_chain_robertson_formula(std::span<const double> lambdas) {
  double out = 1.0;
  for (std::size_t h = 0; h + 1 < lambdas.size(); h += 2) {
    const double d = lambdas[h + 1] - lambdas[h];
    out *= d * d;
  }
  return out;
}

struct CommutingOptions {
  /// Replace the hollow basis by a seeded random invertible real combination.
  bool mix = false;
};

/// Distinct increasing eigenvalues lambda_k proportional to k + u_k/2, u_k uniform.
inline std::vector<double> spaced_eigenvalues(int n, CounterRng& rng) {
  std::vector<double> lambdas(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    lambdas[static_cast<std::size_t>(k)] = (k + 1) + 0.5 * rng.uniform();
    sum += lambdas[static_cast<std::size_t>(k)];
  }
  for (auto& l : lambdas) l /= sum;
  return lambdas;
}

/// rho = diag(lambda) with distinct eigenvalues and N linearly independent
/// real symmetric zero-diagonal observables taken from {E_kl + E_lk : k < l}
/// in lexicographic order. The Robertson matrix vanishes identically (every
/// Tr(rho A_h A_j) is real) while the commutators i[rho, A_j] stay linearly
/// independent.
inline Counterexample commuting_counterexample(int n, int count, std::uint64_t seed,
                                               CommutingOptions opt = {}) {
  if (n < 2 || count < 1) throw ParameterError("commuting_counterexample: need n >= 2, N >= 1");
  if (n * (n - 1) / 2 < count) {
    throw ParameterError("commuting_counterexample: need n(n-1)/2 >= N");
  }
  if (static_cast<std::size_t>(count) > kMaxObservables) {
    throw ParameterError("commuting_counterexample: at most 8 observables supported");
  }
  CounterRng rng(seed, 0xC0FFEEull);
  const auto lambdas = spaced_eigenvalues(n, rng);
  std::vector<CMatrix> basis;
  for (int k = 0; k < n && static_cast<int>(basis.size()) < count; ++k) {
    for (int l = k + 1; l < n && static_cast<int>(basis.size()) < count; ++l) {
      CMatrix e = CMatrix::Zero(n, n);
      e(k, l) = 1.0;
      e(l, k) = 1.0;
      basis.push_back(std::move(e));
    }
  }
  if (opt.mix) {
    RMatrix mix(count, count);
    do {
      for (int i = 0; i < count; ++i) {
        for (int j = 0; j < count; ++j) mix(i, j) = rng.normal();
      }
    } while (std::abs(mix.partialPivLu().determinant()) < 1e-3);
    std::vector<CMatrix> mixed;
    for (int i = 0; i < count; ++i) {
      CMatrix m = CMatrix::Zero(n, n);
      for (int j = 0; j < count; ++j) m += mix(i, j) * basis[static_cast<std::size_t>(j)];
      mixed.push_back(std::move(m));
    }
    basis = std::move(mixed);
  }
  return {SpectralState::diagonal(lambdas), ObservableSet(std::move(basis))};
}

}  // namespace qfivol

#endif  // QFIVOL_VOLUMES_HPP
