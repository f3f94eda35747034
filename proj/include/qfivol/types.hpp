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

#ifndef QFIVOL_TYPES_HPP
#define QFIVOL_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qfivol {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed parameters: beta out of range, inconsistent sizes, bad tokens.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Input matrix or state violating a structural precondition
/// (non-Hermitian, not PSD, not faithful).
class StateError : public Error {
 public:
  using Error::Error;
};

/// Enumeration size over the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ParameterError(std::string(what) + ": expected a non-empty square matrix");
  }
}

inline void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw ParameterError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

/// Largest absolute entry of m - m^dagger.
inline double hermitian_defect(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Drops an imaginary residue up to `tol`; larger residue is an upstream
/// self-adjointness violation.
inline double real_part_checked(Complex z, double tol, const char* what) {
  if (std::abs(z.imag()) > tol * std::max(1.0, std::abs(z.real()))) {
    throw StateError(std::string(what) + ": imaginary residue " + std::to_string(z.imag()) +
                     " on a nominally real quantity");
  }
  return z.real();
}

}  // namespace detail

}  // namespace qfivol

#endif  // QFIVOL_TYPES_HPP
