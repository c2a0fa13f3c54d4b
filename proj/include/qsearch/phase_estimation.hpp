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
#include <vector>

#include "qsearch/ledger.hpp"
#include "qsearch/numerics.hpp"
#include "qsearch/register.hpp"

namespace qsearch {

/// Default window margin delta = 2 pi / 128.
inline constexpr double kDefaultDelta = kTwoPi / 128.0;

/// Workspace output of phase estimation for eigenphase lambda.
struct PhiState {
    double lambda = 0.0;
    unsigned mu = 0;
    std::vector<Complex> amplitudes; // <k|phi_lambda>, k = 0 .. 2^mu - 1

    [[nodiscard]] double probability(const SubspaceMask &mask) const;
};

/// H^{(x) mu} on the workspace.
StateVector apply_walsh_hadamard(StateVector state);

/// |m>|z> -> (S^z |m>)|z>, realized as controlled S^{2^j} per workspace
/// qubit j. Charges 2^mu controlled-S per call.
StateVector apply_controlled_powers(StateVector state, const UnitaryMatrix &s,
                                    QueryLedger *ledger = nullptr);

/// F^dag |z> = 2^{-mu/2} sum_k exp(-2 pi i k z / 2^mu) |k> on the workspace.
StateVector apply_inverse_qft(StateVector state);
/// F, the inverse of apply_inverse_qft.
StateVector apply_qft(StateVector state);

/// P = (1 (x) F^dag)(c_z S^z)(1 (x) W) on main_state (x) |0'>.
StateVector phase_estimate(const ComplexVector &main_state, const UnitaryMatrix &s,
                           unsigned mu, QueryLedger *ledger = nullptr);

/// <k|phi_lambda> = 2^{-mu} sum_z exp(i z (lambda - 2 pi k / 2^mu)), summed in
/// closed form; on-grid phases give an exact unit amplitude.
PhiState phi_amplitudes(double lambda, unsigned mu);

/// round(2^mu lambda / 2 pi) mod 2^mu, ties away from zero.
std::size_t k_nearest(double lambda, unsigned mu);

/// The 2c+1 workspace states (k_lambda - c .. k_lambda + c) mod 2^mu.
SubspaceMask y_mask(double lambda, unsigned mu, std::size_t c);

/// Mass of phi_lambda inside y_mask(lambda, mu, c).
double y_probability(double lambda, unsigned mu, std::size_t c);

/// k_hat = round(2^mu (1 - delta) theta_min / 2 pi)
std::size_t x_half_width(double theta_min, double delta, unsigned mu);

/// Modular window -k_hat .. k_hat around zero. Throws InvalidParameters
/// unless 0 < delta < 1/2 and the window leaves part of the register out.
SubspaceMask x_mask(double theta_min, double delta, unsigned mu);

/// Per-eigenstate phase estimation on a workspace fiber of 2^mu entries
/// spaced `stride` apart: with the mainspace fixed in an eigenstate of
/// eigenphase lambda, c_z S^z reduces to the diagonal e^{i lambda z}.
namespace spectral {

void phase_estimation(Complex *work, std::size_t length, std::size_t stride, double lambda);
void phase_estimation_adjoint(Complex *work, std::size_t length, std::size_t stride,
                              double lambda);

} // namespace spectral

} // namespace qsearch
