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

#include <cstdint>

#include "qsearch/ledger.hpp"
#include "qsearch/numerics.hpp"
#include "qsearch/spectra.hpp"

namespace qsearch {

/// S = D_s I_t together with its eigendecomposition, computed once.
struct SearchOperator {
    UnitaryMatrix op;
    EigenDecomposition eig;
};

/// S = assemble_diffusion(spec) * I_t
UnitaryMatrix build_search_operator(const SearchInstance &inst);
SearchOperator diagonalize_search_operator(const SearchInstance &inst);

/// sum_l |<l|t>|^2 cot((lambda - theta_l)/2). Throws Pole within the pole
/// tolerance of an eigenphase carrying target weight.
double secular_residual(const SearchInstance &inst, double lambda);

/// Largest |secular_residual| over the eigenphases of S whose eigenvector
/// overlaps the target (|<t|lambda>|^2 > 1e-12). Eigenvectors orthogonal to
/// t are shared with D_s and sit exactly on poles.
double max_secular_residual(const SearchInstance &inst, const SearchOperator &s);

/// The two eigenstates of S with eigenphase inside (-theta_min, theta_min).
struct RelevantPair {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    std::size_t index_plus = 0;  // column in the eigendecomposition of S
    std::size_t index_minus = 0;
    ComplexVector vec_plus;      // gauge: <t|lambda> real and positive
    ComplexVector vec_minus;
    double eta = 0.0;            // cot(2 eta) = Lambda_1 / (2 alpha B)
    double predicted_plus = 0.0; // +(2 alpha / B) tan(eta)
    double predicted_minus = 0.0;
    double secular_plus = 0.0;   // bisection roots of the secular equation
    double secular_minus = 0.0;
};

/// Diagonalizes S and cross-checks both relevant eigenphases against
/// bisection on the secular residual. Throws AssumptionViolation when the
/// window does not hold exactly two eigenphases (message carries the count)
/// or when the two routes disagree beyond the cross-check tolerance.
RelevantPair find_relevant_pair(const SearchInstance &inst);
RelevantPair find_relevant_pair(const SearchInstance &inst, const SearchOperator &s);

/// -i/sqrt(2) [e^{i lambda+/2}|lambda+> - e^{i lambda-/2}|lambda->]
ComplexVector reconstruct_source(const RelevantPair &pair);

struct WState {
    ComplexVector state;
    std::uint64_t q_m = 0;
};

/// round(pi B / (4 alpha) - 1/2), ties away from zero.
std::uint64_t w_iteration_count(const SearchInstance &inst);

/// S^{q_m}|s> by q_m sequential applications, each charged to the ledger.
WState evolve_to_w(const SearchInstance &inst, const SearchOperator &s,
                   QueryLedger *ledger = nullptr);
WState evolve_to_w(const SearchInstance &inst, QueryLedger *ledger = nullptr);

} // namespace qsearch
