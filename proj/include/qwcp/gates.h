// Copyright 2026 The QWCP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWCP_GATES_H
#define QWCP_GATES_H

#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qwcp {

using Amplitude = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kUnitarityTolerance = 1e-12;

/// Max-norm of U^dagger U - I; infinity for non-square input.
double unitarity_error(const Matrix &m);
bool is_unitary(const Matrix &m, double tol = kUnitarityTolerance);
bool is_hermitian(const Matrix &m, double tol = kUnitarityTolerance);
/// Throws PreconditionError mentioning `what` if m is not unitary.
void require_unitary(const Matrix &m, std::string_view what);

/// Exact element-wise equality including shape.
bool same_matrix(const Matrix &a, const Matrix &b);

/// Named single-qubit gates: X, Y, Z, H, S, T, I. Returns an empty matrix
/// for unknown names.
Matrix named_gate(std::string_view name);

/// Permutation matrix swapping basis states a and b of a dim-dimensional space.
Matrix swap_matrix(int dim, int a, int b);

/// Kronecker product a (x) b.
Matrix kron(const Matrix &a, const Matrix &b);

}  // namespace qwcp

#endif
