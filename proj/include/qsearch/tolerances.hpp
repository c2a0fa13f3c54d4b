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

namespace qsearch {

/// Numerical thresholds shared by the whole library. Tests reference these
/// rather than restating literals.
struct Tolerances {
    double unitarity = 1e-10;        // max |U^dag U - 1| for a constructed unitary
    double unitarity_loose = 1e-9;   // composed operators (S, P, R, A)
    double reconstruction = 1e-8;    // max |U - V diag V^dag|
    double orthonormality = 1e-10;
    double degenerate_cluster = 1e-8; // eigenphase separation that counts as degenerate
    double norm_preservation = 1e-12;
    double lambda1 = 1e-10;          // |Lambda_1| accepted for symmetric constructions
    double pole = 1e-12;             // secular residual refuses |lambda - theta| below this
    double bisection = 1e-12;
    double cross_check = 1e-8;       // diagonalization vs secular root
    double secular_residual = 1e-6;
    std::size_t dense_cap = std::size_t{1} << 22; // joint-space amplitudes
    std::size_t dense_matrix_cap = std::size_t{1} << 14; // materialized operators
};

inline constexpr Tolerances kTol{};

} // namespace qsearch
