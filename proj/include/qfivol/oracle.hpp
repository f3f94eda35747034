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

// Brute-force evaluation of the volume gap
//
//     F(f) = det{Cov(A_h, A_j)} - det{(f(0)/2) <i[rho,A_h], i[rho,A_j]>}
//          = (1/N!) sum_{alpha, beta} H^f(lambda_alpha, lambda_beta) K_{alpha,beta},
//
// where alpha, beta range over all N-tuples of eigenvalue indices,
//
//     H^f(x, y) = prod_j (x_j + y_j)/2 - prod_j ((x_j + y_j)/2 - m_{f~}(x_j, y_j)),
//     K_{alpha,beta} = sum_{sigma in S_N} det B^{alpha_sigma, beta_sigma}
//                    = sum_{u in {0,1}^N} det D(u; alpha, beta)^2,
//     B^{alpha,beta}_{hj} = Re{a^h_{alpha_h beta_h} a^j_{beta_h alpha_h}},
//     D(u; alpha, beta)_{hj} = C^{u_j}(a^h_{alpha_j beta_j}),  C^0 = Re, C^1 = Im.
//
// Nothing here touches a Gram determinant, so agreement with
// build_gram_report is a genuine cross-check. The cost is
// n^{2N} N! 2^N determinant evaluations; keep instances small.

#ifndef QFIVOL_ORACLE_HPP
#define QFIVOL_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/LU>

#include "qfivol/means.hpp"
#include "qfivol/qig.hpp"

namespace qfivol {

/// An element of {0..n-1}^N (zero based).
struct MultiIndex {
  std::vector<int> entries;

  std::size_t size() const { return entries.size(); }
  int operator[](std::size_t j) const { return entries[j]; }

  /// Lexicographic successor, first entry slowest; false after the last one.
  bool advance(int n) {
    for (std::size_t j = entries.size(); j-- > 0;) {
      if (++entries[j] < n) return true;
      entries[j] = 0;
    }
    return false;
  }
};

/// An element u of {0,1}^N; bit j selects Re (0) or Im (1) in column j.
struct ReImSelector {
  std::vector<int> bits;

  bool advance() {
    for (std::size_t j = bits.size(); j-- > 0;) {
      if (++bits[j] < 2) return true;
      bits[j] = 0;
    }
    return false;
  }
};

inline double re_im(Complex z, int bit) { return bit == 0 ? z.real() : z.imag(); }

namespace detail {

/// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline std::vector<std::vector<int>> all_permutations(int count) {
  std::vector<int> p(static_cast<std::size_t>(count));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline double factorial(int k) {
  double out = 1.0;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace detail

/// sgn(sigma) by counting inversions.
inline int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// Determinant by the permutation expansion sum_sigma sgn(sigma) prod_i M_{i sigma(i)}.
inline double leibniz_determinant(const RMatrix& m) {
  const auto count = static_cast<int>(m.rows());
  if (m.cols() != m.rows()) throw ParameterError("leibniz_determinant: square matrix expected");
  if (count == 0) return 1.0;
  std::vector<int> p(static_cast<std::size_t>(count));
  std::iota(p.begin(), p.end(), 0);
  detail::CompensatedSum acc;
  do {
    double term = permutation_sign(p);
    for (int i = 0; i < count; ++i) term *= m(i, p[static_cast<std::size_t>(i)]);
    acc.add(term);
  } while (std::next_permutation(p.begin(), p.end()));
  return acc.value();
}

/// E(sigma)_{jk} = E_{sigma(j) k}.
inline RMatrix permute_rows(const RMatrix& e, std::span<const int> perm) {
  RMatrix out(e.rows(), e.cols());
  for (Eigen::Index j = 0; j < e.rows(); ++j) out.row(j) = e.row(perm[static_cast<std::size_t>(j)]);
  return out;
}

/// det(E(sigma)) == sgn(sigma) det(E) within `tol` relative.
inline bool row_permutation_sign_check(const RMatrix& e, std::span<const int> perm,
                                       double tol = 1e-12) {
  const double lhs = permute_rows(e, perm).partialPivLu().determinant();
  const double rhs = permutation_sign(perm) * e.partialPivLu().determinant();
  return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs));
}

namespace detail {

// Telescoped H: sum_j (prod_{i<j} Q_i) (P_j - Q_j) (prod_{i>j} P_i) with
// P = (x+y)/2, Q = P - m_{f~}; every term is non-negative.
inline double h_value_nonneg(const MonotoneFunction& f, std::span<const double> xs,
                             std::span<const double> ys) {
  const std::size_t count = xs.size();
  std::vector<double> p(count), q(count), m(count);
  for (std::size_t j = 0; j < count; ++j) {
    p[j] = 0.5 * (xs[j] + ys[j]);
    m[j] = scalar_mean(f, xs[j], ys[j], true);
    q[j] = mean_gap(f, xs[j], ys[j]);
  }
  double total = 0.0;
  double left = 1.0;
  for (std::size_t j = 0; j < count; ++j) {
    double right = 1.0;
    for (std::size_t i = j + 1; i < count; ++i) right *= p[i];
    total += left * m[j] * right;
    left *= q[j];
  }
  return total;
}

}  // namespace detail

/// H^f(x, y) for tuples of strictly positive reals.
inline double H_value(const MonotoneFunction& f, std::span<const double> xs,
                      std::span<const double> ys) {
  require_regular(f, "H_value");
  if (xs.size() != ys.size() || xs.empty()) {
    throw ParameterError("H_value: tuples must be non-empty and of equal length");
  }
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (!(xs[j] > 0.0) || !(ys[j] > 0.0)) throw DomainError("H_value: entries must be positive");
  }
  return detail::h_value_nonneg(f, xs, ys);
}

inline RMatrix D_matrix(const ReImSelector& u, const MultiIndex& alpha, const MultiIndex& beta,
                        std::span<const EigenbasisObservable> coeffs) {
  const auto count = static_cast<Eigen::Index>(coeffs.size());
  if (u.bits.size() != coeffs.size() || alpha.size() != coeffs.size() ||
      beta.size() != coeffs.size()) {
    throw ParameterError("D_matrix: selector and index lengths must equal N");
  }
  RMatrix d(count, count);
  for (Eigen::Index h = 0; h < count; ++h) {
    const CMatrix& a = coeffs[static_cast<std::size_t>(h)].coeffs;
    for (Eigen::Index j = 0; j < count; ++j) {
      const auto js = static_cast<std::size_t>(j);
      d(h, j) = re_im(a(alpha[js], beta[js]), u.bits[js]);
    }
  }
  return d;
}

inline double D_determinant(const ReImSelector& u, const MultiIndex& alpha,
                            const MultiIndex& beta, std::span<const EigenbasisObservable> coeffs) {
  return D_matrix(u, alpha, beta, coeffs).partialPivLu().determinant();
}

/// K_{alpha,beta} through both routes.
struct KValue {
  double permutation_route = 0.0;
  double square_route = 0.0;
};

/// sum_u det(D(u; alpha, beta))^2.
inline double K_square_route(const MultiIndex& alpha, const MultiIndex& beta,
                             std::span<const EigenbasisObservable> coeffs) {
  ReImSelector u{std::vector<int>(coeffs.size(), 0)};
  detail::CompensatedSum acc;
  do {
    const double d = D_determinant(u, alpha, beta, coeffs);
    acc.add(d * d);
  } while (u.advance());
  return acc.value();
}

/// sum_sigma det B^{alpha_sigma, beta_sigma}, each determinant by permutation expansion.
inline double K_permutation_route(const MultiIndex& alpha, const MultiIndex& beta,
                                  std::span<const EigenbasisObservable> coeffs,
                                  std::span<const std::vector<int>> perms) {
  const auto count = static_cast<Eigen::Index>(coeffs.size());
  detail::CompensatedSum acc;
  RMatrix b(count, count);
  for (const auto& sigma : perms) {
    for (Eigen::Index h = 0; h < count; ++h) {
      const int s = sigma[static_cast<std::size_t>(h)];
      const int ah = alpha[static_cast<std::size_t>(s)];
      const int bh = beta[static_cast<std::size_t>(s)];
      const Complex left = coeffs[static_cast<std::size_t>(h)].coeffs(ah, bh);
      for (Eigen::Index j = 0; j < count; ++j) {
        b(h, j) = (left * coeffs[static_cast<std::size_t>(j)].coeffs(bh, ah)).real();
      }
    }
    acc.add(leibniz_determinant(b));
  }
  return acc.value();
}

inline KValue K_value(const MultiIndex& alpha, const MultiIndex& beta,
                      std::span<const EigenbasisObservable> coeffs) {
  const auto perms = detail::all_permutations(static_cast<int>(coeffs.size()));
  return {K_permutation_route(alpha, beta, coeffs, perms), K_square_route(alpha, beta, coeffs)};
}

struct OracleBudget {
  int max_n = 3;
  int max_count = 3;
  /// Lifts the n / N caps; the term count must still fit `max_terms`.
  bool override_caps = false;
  double max_terms = 1e7;
  /// Evaluate K by both routes and track their disagreement.
  bool cross_check_k = true;
};

struct OracleResult {
  double F = 0.0;
  /// max over (alpha, beta) of |K_perm - K_sq| / max(1, |K_sq|).
  double max_k_route_gap = 0.0;
  double min_k = 0.0;
  double terms = 0.0;
};

/// n^{2N} N! 2^N.
inline double oracle_term_count(int n, int count) {
  return std::pow(static_cast<double>(n), 2.0 * count) * detail::factorial(count) *
         std::pow(2.0, count);
}

inline OracleResult F_bruteforce(const MonotoneFunction& f, const SpectralState& state,
                                 const ObservableSet& obs, const OracleBudget& budget = {}) {
  require_regular(f, "F_bruteforce");
  detail::require_same_dim(obs.dim(), state.dim(), "F_bruteforce");
  const int n = static_cast<int>(state.dim());
  const int count = static_cast<int>(obs.count());
  const double terms = oracle_term_count(n, count);
  const bool caps_ok = budget.override_caps || (n <= budget.max_n && count <= budget.max_count);
  if (!caps_ok || terms > budget.max_terms) {
    throw BudgetError("F_bruteforce: n = " + std::to_string(n) + ", N = " + std::to_string(count) +
                      " needs " + std::to_string(terms) + " determinant terms (caps n <= " +
                      std::to_string(budget.max_n) + ", N <= " + std::to_string(budget.max_count) +
                      ", max_terms " + std::to_string(budget.max_terms) + ")");
  }
  const auto coeffs = eigenbasis_coefficients(state, obs);
  const auto perms = detail::all_permutations(count);

  OracleResult out;
  out.terms = terms;
  out.min_k = std::numeric_limits<double>::infinity();
  detail::CompensatedSum acc;
  std::vector<double> xs(static_cast<std::size_t>(count)), ys(static_cast<std::size_t>(count));
  MultiIndex alpha{std::vector<int>(static_cast<std::size_t>(count), 0)};
  do {
    MultiIndex beta{std::vector<int>(static_cast<std::size_t>(count), 0)};
    do {
      const double k = K_square_route(alpha, beta, coeffs);
      if (budget.cross_check_k) {
        const double kp = K_permutation_route(alpha, beta, coeffs, perms);
        out.max_k_route_gap =
            std::max(out.max_k_route_gap, std::abs(kp - k) / std::max(1.0, std::abs(k)));
      }
      out.min_k = std::min(out.min_k, k);
      if (k != 0.0) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
          xs[j] = state.eigenvalue(alpha[j]);
          ys[j] = state.eigenvalue(beta[j]);
        }
        acc.add(detail::h_value_nonneg(f, xs, ys) * k);
      }
    } while (beta.advance(n));
  } while (alpha.advance(n));
  out.F = acc.value() / detail::factorial(count);
  return out;
}

struct RankWitness {
  ReImSelector u;
  MultiIndex alpha;
  MultiIndex beta;
  double det = 0.0;
};

/// First (alpha, beta, u) in enumeration order with |det D(u; alpha, beta)| > tol.
inline std::optional<RankWitness> find_rank_witness(const SpectralState& state,
                                                    const ObservableSet& obs, double tol = 1e-12) {
  const int n = static_cast<int>(state.dim());
  const auto count = obs.count();
  const auto coeffs = eigenbasis_coefficients(state, obs);
  MultiIndex alpha{std::vector<int>(count, 0)};
  do {
    MultiIndex beta{std::vector<int>(count, 0)};
    do {
      ReImSelector u{std::vector<int>(count, 0)};
      do {
        const double d = D_determinant(u, alpha, beta, coeffs);
        if (std::abs(d) > tol) return RankWitness{u, alpha, beta, d};
      } while (u.advance());
    } while (beta.advance(n));
  } while (alpha.advance(n));
  return std::nullopt;
}

/// prod_j sum_k Q_{jk} == sum_{u in X^N} prod_j Q_{j u(j)} for an N x n table.
inline bool product_sum_exchange_check(const RMatrix& table, double tol = 1e-12) {
  const auto rows = static_cast<std::size_t>(table.rows());
  const int width = static_cast<int>(table.cols());
  if (rows == 0 || width == 0) throw ParameterError("product_sum_exchange_check: empty table");
  double lhs = 1.0;
  for (Eigen::Index j = 0; j < table.rows(); ++j) lhs *= table.row(j).sum();
  detail::CompensatedSum rhs;
  MultiIndex u{std::vector<int>(rows, 0)};
  do {
    double prod = 1.0;
    for (std::size_t j = 0; j < rows; ++j) prod *= table(static_cast<Eigen::Index>(j), u[j]);
    rhs.add(prod);
  } while (u.advance(width));
  return std::abs(lhs - rhs.value()) <= tol * std::max(1.0, std::abs(lhs));
}

/// prod_j sum_{k,l} Q^j_{kl} == sum_{alpha,beta} prod_j Q^j_{alpha_j beta_j}.
inline bool double_product_sum_exchange_check(std::span<const RMatrix> tables,
                                              double tol = 1e-12) {
  if (tables.empty()) throw ParameterError("double_product_sum_exchange_check: no tables");
  const int width = static_cast<int>(tables.front().rows());
  double lhs = 1.0;
  for (const auto& t : tables) {
    if (t.rows() != width || t.cols() != width) {
      throw ParameterError("double_product_sum_exchange_check: tables must be square and equal size");
    }
    lhs *= t.sum();
  }
  detail::CompensatedSum rhs;
  MultiIndex alpha{std::vector<int>(tables.size(), 0)};
  do {
    MultiIndex beta{std::vector<int>(tables.size(), 0)};
    do {
      double prod = 1.0;
      for (std::size_t j = 0; j < tables.size(); ++j) prod *= tables[j](alpha[j], beta[j]);
      rhs.add(prod);
    } while (beta.advance(width));
  } while (alpha.advance(width));
  return std::abs(lhs - rhs.value()) <= tol * std::max(1.0, std::abs(lhs));
}

}  // namespace qfivol

#endif  // QFIVOL_ORACLE_HPP
