// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace qsearch {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps an angle onto (-pi, pi].
double wrap_phase(double angle) noexcept;

/// max_ij |(U^dag U - 1)_ij|
double unitarity_defect(const ComplexMatrix &u);

/// Square complex matrix validated as unitary on construction.
class UnitaryMatrix {
  public:
    /// Throws PreconditionViolation when max |U^dag U - 1| exceeds tolerance
    /// or any entry is non-finite.
    explicit UnitaryMatrix(ComplexMatrix m, double tolerance);
    explicit UnitaryMatrix(ComplexMatrix m);

    static UnitaryMatrix identity(Eigen::Index n);
    static UnitaryMatrix diagonal_phases(const std::vector<double> &phases);

    [[nodiscard]] Eigen::Index dim() const noexcept { return m_.rows(); }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] UnitaryMatrix adjoint() const;

    friend UnitaryMatrix operator*(const UnitaryMatrix &a, const UnitaryMatrix &b);

  private:
    struct Unchecked {};
    UnitaryMatrix(Unchecked, ComplexMatrix m) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

struct EigenDecomposition {
    std::vector<double> eigenphases; // ascending, each in (-pi, pi]
    ComplexMatrix eigenvectors;      // column k pairs with eigenphases[k]

    [[nodiscard]] Eigen::Index dim() const noexcept { return eigenvectors.rows(); }
    /// V diag(e^{i theta}) V^dag
    [[nodiscard]] ComplexMatrix reconstruct() const;
};

/// Haar-distributed unitary from a seeded complex Gaussian matrix.
UnitaryMatrix random_unitary(Eigen::Index n, std::uint64_t seed);

/// Haar-distributed real orthogonal matrix, seeded.
Eigen::MatrixXd random_orthogonal(Eigen::Index n, std::uint64_t seed);

/// Eigenphases in ascending order with an orthonormal eigenbasis. Degenerate
/// clusters (separation below the cluster tolerance) are re-orthonormalized.
EigenDecomposition eig_unitary(const UnitaryMatrix &u);

ComplexVector apply(const UnitaryMatrix &u, const ComplexVector &v);

/// U^z by repeated squaring.
UnitaryMatrix unitary_power(const UnitaryMatrix &u, std::uint64_t z);

/// Largest |a_i - b_i|.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

} // namespace qsearch
