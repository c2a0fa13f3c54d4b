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
#include "qsearch/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "qsearch/error.hpp"
#include "qsearch/random.hpp"
#include "qsearch/tolerances.hpp"

namespace qsearch {

double wrap_phase(double angle) noexcept {
    double r = std::remainder(angle, kTwoPi); // [-pi, pi]
    if (r <= -kPi) {
        r += kTwoPi;
    }
    return r;
}

double unitarity_defect(const ComplexMatrix &u) {
    if (u.rows() != u.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    const ComplexMatrix d = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
            "max_abs_diff: shape mismatch");
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tolerance) : m_(std::move(m)) {
    require(m_.rows() >= 1 && m_.rows() == m_.cols(), ErrorKind::InvalidDimension,
            "unitary matrix must be square and non-empty");
    require(m_.allFinite(), ErrorKind::PreconditionViolation, "matrix has non-finite entries");
    const double defect = unitarity_defect(m_);
    require(defect < tolerance, ErrorKind::PreconditionViolation,
            "matrix is not unitary (defect " + std::to_string(defect) + ")");
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : UnitaryMatrix(std::move(m), kTol.unitarity) {}

UnitaryMatrix UnitaryMatrix::identity(Eigen::Index n) {
    require(n >= 1, ErrorKind::InvalidDimension, "identity: n must be >= 1");
    return UnitaryMatrix(Unchecked{}, ComplexMatrix::Identity(n, n));
}

UnitaryMatrix UnitaryMatrix::diagonal_phases(const std::vector<double> &phases) {
    require(!phases.empty(), ErrorKind::InvalidDimension, "diagonal_phases: empty");
    const auto n = static_cast<Eigen::Index>(phases.size());
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = std::polar(1.0, phases[static_cast<std::size_t>(i)]);
    }
    return UnitaryMatrix(Unchecked{}, std::move(m));
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(Unchecked{}, m_.adjoint()); }

UnitaryMatrix operator*(const UnitaryMatrix &a, const UnitaryMatrix &b) {
    require(a.dim() == b.dim(), ErrorKind::DimensionMismatch, "unitary product: dimensions");
    return UnitaryMatrix(UnitaryMatrix::Unchecked{}, a.m_ * b.m_);
}

ComplexMatrix EigenDecomposition::reconstruct() const {
    ComplexVector d(static_cast<Eigen::Index>(eigenphases.size()));
    for (std::size_t k = 0; k < eigenphases.size(); ++k) {
        d[static_cast<Eigen::Index>(k)] = std::polar(1.0, eigenphases[k]);
    }
    return eigenvectors * d.asDiagonal() * eigenvectors.adjoint();
}

UnitaryMatrix random_unitary(Eigen::Index n, std::uint64_t seed) {
    require(n >= 1, ErrorKind::InvalidDimension, "random_unitary: n must be >= 1");
    CounterRng rng(seed, 0x756e6974617279ULL);
    ComplexMatrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix &r = qr.matrixQR();
    // Fix the phase freedom of QR so the distribution is Haar.
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        q.col(j) *= mag > 0.0 ? rjj / mag : Complex(1.0);
    }
    return UnitaryMatrix(std::move(q));
}

Eigen::MatrixXd random_orthogonal(Eigen::Index n, std::uint64_t seed) {
    require(n >= 1, ErrorKind::InvalidDimension, "random_orthogonal: n must be >= 1");
    CounterRng rng(seed, 0x6f7274686fULL);
    Eigen::MatrixXd g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            g(i, j) = rng.normal();
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd &r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) {
        if (r(j, j) < 0.0) {
            q.col(j) *= -1.0;
        }
    }
    return q;
}

namespace {

// Modified Gram-Schmidt, two passes.
void orthonormalize_columns(ComplexMatrix &v, Eigen::Index first, Eigen::Index last) {
    for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = first; j < last; ++j) {
            for (Eigen::Index i = first; i < j; ++i) {
                const Complex c = v.col(i).dot(v.col(j));
                v.col(j) -= c * v.col(i);
            }
            v.col(j).normalize();
        }
    }
}

} // namespace

EigenDecomposition eig_unitary(const UnitaryMatrix &u) {
    const Eigen::Index n = u.dim();
    require(unitarity_defect(u.matrix()) < kTol.unitarity_loose, ErrorKind::PreconditionViolation,
            "eig_unitary: input is not unitary");

    // U is normal, so its Schur form is diagonal up to rounding and the Schur
    // vectors are an orthonormal eigenbasis.
    Eigen::ComplexSchur<ComplexMatrix> schur(u.matrix(), true);
    require(schur.info() == Eigen::Success, ErrorKind::PreconditionViolation,
            "eig_unitary: Schur decomposition failed");
    const ComplexMatrix &t = schur.matrixT();
    const ComplexMatrix &q = schur.matrixU();

    std::vector<double> phases(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex ev = t(k, k);
        require(std::abs(std::abs(ev) - 1.0) < kTol.reconstruction,
                ErrorKind::PreconditionViolation, "eig_unitary: eigenvalue off the unit circle");
        double ph = std::arg(ev);
        // Phases within the cluster tolerance of the cut belong to +pi.
        if (ph <= -kPi + kTol.degenerate_cluster) {
            ph = std::min(ph + kTwoPi, kPi);
        }
        phases[static_cast<std::size_t>(k)] = ph;
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return phases[static_cast<std::size_t>(a)] < phases[static_cast<std::size_t>(b)];
    });

    EigenDecomposition out;
    out.eigenphases.resize(static_cast<std::size_t>(n));
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        out.eigenphases[static_cast<std::size_t>(k)] = phases[static_cast<std::size_t>(src)];
        out.eigenvectors.col(k) = q.col(src).normalized();
    }

    Eigen::Index start = 0;
    for (Eigen::Index k = 1; k <= n; ++k) {
        const bool split =
            k == n || out.eigenphases[static_cast<std::size_t>(k)] -
                              out.eigenphases[static_cast<std::size_t>(k - 1)] >=
                          kTol.degenerate_cluster;
        if (split) {
            if (k - start > 1) {
                orthonormalize_columns(out.eigenvectors, start, k);
            }
            start = k;
        }
    }
    return out;
}

ComplexVector apply(const UnitaryMatrix &u, const ComplexVector &v) {
    require(u.dim() == v.size(), ErrorKind::DimensionMismatch,
            "apply: operator is " + std::to_string(u.dim()) + "-dimensional, vector has " +
                std::to_string(v.size()) + " entries");
    return u.matrix() * v;
}

UnitaryMatrix unitary_power(const UnitaryMatrix &u, std::uint64_t z) {
    UnitaryMatrix result = UnitaryMatrix::identity(u.dim());
    UnitaryMatrix base = u;
    while (z > 0) {
        if (z & 1U) {
            result = result * base;
        }
        z >>= 1U;
        if (z > 0) {
            base = base * base;
        }
    }
    return result;
}

} // namespace qsearch
