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

#include "qwcp/gates.h"

#include <cmath>
#include <limits>

#include "qwcp/errors.h"

namespace qwcp {

double unitarity_error(const Matrix &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        return std::numeric_limits<double>::infinity();
    }
    Matrix residual = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
    return residual.cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix &m, double tol) {
    return unitarity_error(m) <= tol;
}

bool is_hermitian(const Matrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void require_unitary(const Matrix &m, std::string_view what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw PreconditionError(std::string(what) + " must be a non-empty square matrix");
    }
    double err = unitarity_error(m);
    if (!(err <= kUnitarityTolerance)) {
        throw PreconditionError(std::string(what) + " is not unitary (max |U'U - I| = " + std::to_string(err) + ")");
    }
}

bool same_matrix(const Matrix &a, const Matrix &b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || (a.array() == b.array()).all());
}

Matrix named_gate(std::string_view name) {
    using namespace std::complex_literals;
    const double r = 1.0 / std::sqrt(2.0);
    Matrix m(2, 2);
    if (name == "I") {
        m << 1, 0, 0, 1;
    } else if (name == "X") {
        m << 0, 1, 1, 0;
    } else if (name == "Y") {
        m << 0, -1i, 1i, 0;
    } else if (name == "Z") {
        m << 1, 0, 0, -1;
    } else if (name == "H") {
        m << r, r, r, -r;
    } else if (name == "S") {
        m << 1, 0, 0, 1i;
    } else if (name == "T") {
        m << 1, 0, 0, std::polar(1.0, M_PI / 4);
    } else {
        return {};
    }
    return m;
}

Matrix swap_matrix(int dim, int a, int b) {
    Matrix m = Matrix::Identity(dim, dim);
    if (a != b) {
        m(a, a) = 0;
        m(b, b) = 0;
        m(a, b) = 1;
        m(b, a) = 1;
    }
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace qwcp
