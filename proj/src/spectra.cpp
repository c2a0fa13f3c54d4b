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
#include "qsearch/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qsearch/error.hpp"
#include "qsearch/tolerances.hpp"

namespace qsearch {

namespace {

// cot(theta/2), exact zero at |theta| = pi.
double half_cot(double theta) {
    if (std::abs(theta) == kPi) {
        return 0.0;
    }
    return std::cos(theta / 2) / std::sin(theta / 2);
}

} // namespace

void DiffusionSpec::validate() const {
    require(dim >= 1, ErrorKind::InvalidDimension, "diffusion spec: dimension must be >= 1");
    require(eigenphases.size() == dim, ErrorKind::InvalidSpectrum,
            "diffusion spec: expected " + std::to_string(dim) + " eigenphases, got " +
                std::to_string(eigenphases.size()));
    require(source_index < dim, ErrorKind::InvalidSpectrum,
            "diffusion spec: source index out of range");
    require(eigenbasis.rows() == static_cast<Eigen::Index>(dim) &&
                eigenbasis.cols() == static_cast<Eigen::Index>(dim),
            ErrorKind::InvalidSpectrum, "diffusion spec: eigenbasis shape mismatch");
    require(eigenbasis.allFinite(), ErrorKind::InvalidSpectrum,
            "diffusion spec: eigenbasis has non-finite entries");
    require(unitarity_defect(eigenbasis) < kTol.unitarity, ErrorKind::InvalidSpectrum,
            "diffusion spec: eigenbasis is not unitary");
    require(eigenphases[source_index] == 0.0, ErrorKind::InvalidSpectrum,
            "diffusion spec: source eigenphase must be 0");
    require(dim == 1 || theta_min > 0.0, ErrorKind::InvalidSpectrum,
            "diffusion spec: theta_min must be positive");
    for (std::size_t l = 0; l < dim; ++l) {
        const double th = eigenphases[l];
        require(std::isfinite(th) && th > -kPi && th <= kPi, ErrorKind::InvalidSpectrum,
                "diffusion spec: eigenphase outside (-pi, pi]");
        if (l == source_index) {
            continue;
        }
        require(th != 0.0, ErrorKind::InvalidSpectrum,
                "diffusion spec: source eigenstate must be non-degenerate");
        require(std::abs(th) >= theta_min, ErrorKind::InvalidSpectrum,
                "diffusion spec: eigenphase " + std::to_string(th) + " below theta_min " +
                    std::to_string(theta_min));
    }
}

std::vector<double> DiffusionSpec::target_weights(std::size_t t) const {
    require(t < dim, ErrorKind::InvalidParameters, "target index out of range");
    std::vector<double> w(dim);
    for (std::size_t l = 0; l < dim; ++l) {
        w[l] = std::norm(eigenbasis(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(l)));
    }
    return w;
}

double moments(const DiffusionSpec &spec, std::size_t t, int p) {
    require(p == 1 || p == 2, ErrorKind::InvalidParameters, "moments: p must be 1 or 2");
    const std::vector<double> w = spec.target_weights(t);
    double acc = 0.0;
    for (std::size_t l = 0; l < spec.dim; ++l) {
        if (l == spec.source_index) {
            continue;
        }
        require(spec.eigenphases[l] != 0.0, ErrorKind::DegenerateSpectrum,
                "moments: non-source eigenphase equals zero");
        const double c = half_cot(spec.eigenphases[l]);
        acc += w[l] * (p == 1 ? c : c * c);
    }
    return acc;
}

DiffusionSpec build_grover_spec(std::size_t n, std::size_t s) {
    require(n >= 2, ErrorKind::InvalidDimension, "grover spec: N must be >= 2");
    require(s < n, ErrorKind::InvalidParameters, "grover spec: source index out of range");
    const auto ni = static_cast<Eigen::Index>(n);
    const auto si = static_cast<Eigen::Index>(s);

    // Householder reflection taking e_s to the uniform vector; its columns
    // complete the uniform state to an orthonormal real basis.
    Eigen::VectorXd u = Eigen::VectorXd::Constant(ni, 1.0 / std::sqrt(static_cast<double>(n)));
    Eigen::VectorXd v = -u;
    v[si] += 1.0;
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(ni, ni);
    const double vv = v.squaredNorm();
    if (vv > 0.0) {
        h -= (2.0 / vv) * v * v.transpose();
    }
    h.col(si) = u;

    DiffusionSpec spec;
    spec.dim = n;
    spec.source_index = s;
    spec.eigenphases.assign(n, kPi);
    spec.eigenphases[s] = 0.0;
    spec.eigenbasis = h.cast<Complex>();
    spec.theta_min = kPi;
    spec.seed = 0;
    spec.validate();
    return spec;
}

DiffusionSpec build_symmetric_spec(std::size_t n, const std::vector<double> &pair_phases,
                                   std::uint64_t seed) {
    require(n >= 2, ErrorKind::InvalidDimension, "symmetric spec: N must be >= 2");
    const std::size_t pairs = (n - 1) / 2;
    const bool leftover = (n - 1) % 2 == 1;
    require(pairs == 0 || !pair_phases.empty(), ErrorKind::InvalidSpectrum,
            "symmetric spec: pair phases required");
    for (double th : pair_phases) {
        require(std::isfinite(th) && th > 0.0 && th <= kPi, ErrorKind::InvalidSpectrum,
                "symmetric spec: pair phases must lie in (0, pi]");
    }

    const Eigen::MatrixXd q = random_orthogonal(static_cast<Eigen::Index>(n), seed);
    DiffusionSpec spec;
    spec.dim = n;
    spec.source_index = 0;
    spec.seed = seed;
    spec.eigenphases.assign(n, 0.0);
    spec.eigenbasis = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    spec.eigenbasis.col(0) = q.col(0).cast<Complex>();

    const double r = 1.0 / std::sqrt(2.0);
    double theta_min = leftover ? kPi : std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < pairs; ++k) {
        const double th = pair_phases[k % pair_phases.size()];
        const auto a = static_cast<Eigen::Index>(1 + 2 * k);
        const ComplexVector u = q.col(a).cast<Complex>();
        const ComplexVector v = q.col(a + 1).cast<Complex>();
        spec.eigenbasis.col(a) = r * (u + Complex(0, 1) * v);
        spec.eigenbasis.col(a + 1) = r * (u - Complex(0, 1) * v);
        spec.eigenphases[static_cast<std::size_t>(a)] = th;
        // A pair at pi collapses onto one eigenvalue; keep it in (-pi, pi].
        spec.eigenphases[static_cast<std::size_t>(a) + 1] = th == kPi ? kPi : -th;
        theta_min = std::min(theta_min, th);
    }
    if (leftover) {
        spec.eigenbasis.col(static_cast<Eigen::Index>(n - 1)) =
            q.col(static_cast<Eigen::Index>(n - 1)).cast<Complex>();
        spec.eigenphases[n - 1] = kPi;
    }
    spec.theta_min = theta_min;
    spec.validate();
    return spec;
}

UnitaryMatrix assemble_diffusion(const DiffusionSpec &spec) {
    spec.validate();
    ComplexVector d(static_cast<Eigen::Index>(spec.dim));
    for (std::size_t l = 0; l < spec.dim; ++l) {
        d[static_cast<Eigen::Index>(l)] = std::polar(1.0, spec.eigenphases[l]);
    }
    ComplexMatrix m = spec.eigenbasis * d.asDiagonal() * spec.eigenbasis.adjoint();
    return UnitaryMatrix(std::move(m), kTol.unitarity_loose);
}

double pair_phase_for_b(double big_b) {
    require(std::isfinite(big_b) && big_b >= 1.0, ErrorKind::InvalidParameters,
            "pair_phase_for_b: B must be >= 1");
    if (big_b == 1.0) {
        return kPi;
    }
    return 2.0 * std::atan(1.0 / std::sqrt(big_b * big_b - 1.0));
}

SearchInstance make_instance(const DiffusionSpec &spec, std::size_t t, double lambda1_tolerance) {
    spec.validate();
    require(t < spec.dim, ErrorKind::InvalidParameters, "target index out of range");
    const Complex ts = spec.eigenbasis(static_cast<Eigen::Index>(t),
                                       static_cast<Eigen::Index>(spec.source_index));
    const double alpha = std::abs(ts);
    require(alpha > 0.0 && alpha < 1.0, ErrorKind::InvalidParameters,
            "instance: overlap alpha must lie in (0, 1), got " + std::to_string(alpha));

    SearchInstance inst;
    inst.spec = spec;
    inst.target = t;
    inst.alpha = alpha;
    inst.lambda1 = moments(spec, t, 1);
    inst.lambda2 = moments(spec, t, 2);
    inst.big_b = std::sqrt(1.0 + inst.lambda2);
    require(std::abs(inst.lambda1) <= lambda1_tolerance, ErrorKind::AssumptionViolation,
            "instance: |Lambda_1| = " + std::to_string(std::abs(inst.lambda1)) +
                " exceeds tolerance");
    inst.source = spec.eigenbasis.col(static_cast<Eigen::Index>(spec.source_index)) *
                  (std::conj(ts) / alpha);
    return inst;
}

SearchInstance make_instance(const DiffusionSpec &spec, std::size_t t) {
    return make_instance(spec, t, kTol.lambda1);
}

SearchInstance find_instance(const InstanceQuery &query) {
    for (std::size_t i = 0; i < query.max_seeds; ++i) {
        const std::uint64_t seed = query.seed + i;
        const DiffusionSpec spec = build_symmetric_spec(query.dim, query.pair_phases, seed);
        for (std::size_t t = 0; t < spec.dim; ++t) {
            const double alpha = std::abs(spec.eigenbasis(static_cast<Eigen::Index>(t), 0));
            const double ratio = alpha / spec.theta_min;
            if (ratio < query.min_alpha_ratio || ratio > query.max_alpha_ratio || alpha == 0.0) {
                continue;
            }
            const double b = std::sqrt(1.0 + moments(spec, t, 2));
            if (b < query.min_b || b > query.max_b) {
                continue;
            }
            return make_instance(spec, t);
        }
    }
    fail(ErrorKind::InvalidParameters, "find_instance: no instance matched the query");
}

} // namespace qsearch
