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
#include <string>
#include <vector>

#include "qsearch/ledger.hpp"
#include "qsearch/selective_inversion.hpp"

namespace qsearch {

struct InstanceSummary {
    std::string id;
    std::size_t dim = 0;
    std::size_t target = 0;
    double alpha = 0.0;
    double big_b = 1.0;
    double theta_min = 0.0;
};

InstanceSummary summarize(const SearchInstance &inst, std::string id = {});

struct PipelineResult {
    InstanceSummary instance;
    /// |<t, 0', 0|psi>|^2: target reached with ancillas back in |0'>|0>.
    double success_probability = 0.0;
    /// Probability that measuring the mainspace alone yields t.
    double main_success_probability = 0.0;
    /// Weight outside the ancilla-zero branch.
    double leakage = 0.0;
    QueryLedger ledger;
    QueryLedger w_stage_ledger;
    double w_overlap = 0.0; // |<t|w>|
    /// Worst-case inversion error; NaN for schedule rounds, which run
    /// without knowledge of the relevant pair.
    double epsilon_used = 0.0;
    std::uint64_t q_m = 0;
    std::uint64_t iterations_qaa = 0;
    InversionScheme scheme;
    bool exact_inversion = false;
    std::vector<double> main_distribution;
};

/// round(pi / (4 asin(1/B)) - 1/2)
std::uint64_t qaa_iteration_count(double big_b);

/// Iterates R (I_t (x) 1) on |w>|0'>|0> exactly qaa_iteration_count(B) times.
PipelineResult run_qaa_w_to_t(const SearchInstance &inst, const PhaseInversion &r,
                              const WState &w);

/// w-stage followed by amplitude amplification with the approximate inversion.
PipelineResult run_full(const SearchInstance &inst, const InversionScheme &scheme);
PipelineResult run_full(const SearchInstance &inst, const SearchOperator &s,
                        const InversionScheme &scheme);
/// Same flow with the exact I_{lambda+-}.
PipelineResult run_full_exact(const SearchInstance &inst);

/// Ledger run_full would produce, without simulating.
QueryLedger planned_ledger(const SearchInstance &inst, const InversionScheme &scheme);

struct BaselineResult {
    std::size_t trials = 0;
    std::uint64_t q_m = 0;
    double p_target = 0.0; // |<t|w>|^2
    double mean_repetitions = 0.0;
    double stderr_repetitions = 0.0;
    double mean_queries = 0.0;
};

/// Repeat (prepare w, measure) until the target shows up; seeded.
BaselineResult classical_baseline(const SearchInstance &inst, std::size_t trials,
                                  std::uint64_t seed);

struct ScheduleOptions {
    double initial_guess = 1.0 / 1024.0;
    SchemeKind kind = SchemeKind::Boosted;
    int mu_offset = 16;
    int b = 7;
    double delta = kDefaultDelta;
    /// 0 selects ceil(10 |ln initial_guess| / delta).
    std::size_t max_rounds = 0;
    std::uint64_t seed = 1;
};

struct ScheduleResult {
    bool success = false;
    std::size_t rounds_used = 0;
    std::vector<double> theta_guesses;
    std::vector<std::size_t> outcomes;
    PipelineResult final;
    QueryLedger total_ledger;
};

/// Runs run_full with a guessed gap, measures the mainspace, verifies the
/// outcome with one oracle query and shrinks the guess by (1 - delta/10) on
/// failure. Never reads inst.theta_min(). Exhausting max_rounds returns
/// success = false.
ScheduleResult run_schedule(const SearchInstance &inst, const ScheduleOptions &options);

struct ComplexityRow {
    InstanceSummary instance;
    std::string scheme;
    unsigned mu = 0;
    unsigned nu = 0;
    std::uint64_t q_m = 0;
    std::uint64_t n_qaa = 0;
    std::uint64_t oracle_queries = 0;
    std::uint64_t controlled_s = 0;
    double baseline_queries = 0.0; // q_m / |<t|w>|^2
    double success = 0.0;
    double epsilon = 0.0;
    double baseline_ratio = 0.0;   // baseline_queries / oracle_queries
    double classical_constant = 0.0;     // oracle_queries / (B^3 / alpha) of baseline
    double postprocessed_constant = 0.0; // oracle_queries / (B/alpha + B ln B / theta_min)
};

struct ComplexityReport {
    std::vector<ComplexityRow> rows;
    double slope_q_m_vs_alpha = 0.0;          // log q_m against log alpha
    double slope_controlled_s_vs_blnb = 0.0;  // log controlled_s against log(B ln B)
    double slope_ratio_vs_b = 0.0;            // log baseline_ratio against log B
};

/// Least-squares slope of log y against log x.
double fit_log_slope(const std::vector<double> &x, const std::vector<double> &y);

/// Throws InvalidParameters with fewer than three results.
ComplexityReport complexity_report(const std::vector<PipelineResult> &results);

} // namespace qsearch
