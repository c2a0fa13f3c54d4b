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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qsearch/numerics.hpp"

namespace qsearch {

/// A diffusion operator D_s given by its eigenphases and eigenbasis. Column
/// `source_index` of the eigenbasis is the source state, with phase 0.
struct DiffusionSpec {
    std::size_t dim = 0;
    std::size_t source_index = 0;
    std::vector<double> eigenphases;
    ComplexMatrix eigenbasis;
    double theta_min = 0.0;
    std::uint64_t seed = 0;

    /// Throws InvalidSpectrum unless exactly one phase is zero (the source),
    /// every other phase satisfies |theta| >= theta_min > 0, and the
    /// eigenbasis is unitary.
    void validate() const;

    /// |<l|t>|^2 for every eigenvector l.
    [[nodiscard]] std::vector<double> target_weights(std::size_t t) const;
};

/// sum_{l != s} |<l|t>|^2 cot^p(theta_l / 2)
double moments(const DiffusionSpec &spec, std::size_t t, int p);

/// D_s = 2|s><s| - 1 with |s> the uniform superposition, stored at column s.
DiffusionSpec build_grover_spec(std::size_t n, std::size_t s = 0);

/// Eigenphases in +/- pairs with pair eigenvectors (u +/- i v)/sqrt(2) built
/// from a seeded real orthogonal matrix, so every pair carries equal weight
/// on every basis state and Lambda_1 vanishes for all targets. Pair k gets
/// pair_phases[k mod size]; an odd leftover eigenvector sits at theta = pi.
/// The source is column 0.
DiffusionSpec build_symmetric_spec(std::size_t n, const std::vector<double> &pair_phases,
                                   std::uint64_t seed);

/// V diag(e^{i theta}) V^dag
UnitaryMatrix assemble_diffusion(const DiffusionSpec &spec);

/// Pair phase theta with cot^2(theta/2) = B^2 - 1, i.e. the equal-phase
/// symmetric spectrum whose B is (up to alpha^2) the requested value.
double pair_phase_for_b(double big_b);

struct SearchInstance {
    DiffusionSpec spec;
    std::size_t target = 0;
    double alpha = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double big_b = 1.0;
    /// Source column with its global phase chosen so that <t|s> is real and
    /// non-negative.
    ComplexVector source;

    [[nodiscard]] double theta_min() const noexcept { return spec.theta_min; }
    [[nodiscard]] std::size_t dim() const noexcept { return spec.dim; }
};

/// Derives alpha, Lambda_1, Lambda_2 and B for target t. Throws
/// InvalidParameters for alpha outside (0, 1) and AssumptionViolation when
/// |Lambda_1| exceeds lambda1_tolerance.
SearchInstance make_instance(const DiffusionSpec &spec, std::size_t t,
                             double lambda1_tolerance);
SearchInstance make_instance(const DiffusionSpec &spec, std::size_t t);

/// Deterministic scan over seeds and targets of symmetric specs for the first
/// instance satisfying the overlap and B windows.
struct InstanceQuery {
    std::size_t dim = 16;
    std::vector<double> pair_phases;
    std::uint64_t seed = 1;
    double min_alpha_ratio = 0.0;       // alpha / theta_min lower bound
    double max_alpha_ratio = 1.0 / 20;  // alpha / theta_min upper bound
    double min_b = 1.0;
    double max_b = 1e300;
    std::size_t max_seeds = 20000;
};

/// Throws InvalidParameters when no instance is found within max_seeds.
SearchInstance find_instance(const InstanceQuery &query);

} // namespace qsearch
