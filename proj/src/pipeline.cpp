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
#include "qsearch/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qsearch/error.hpp"
#include "qsearch/random.hpp"

namespace qsearch {

namespace {

constexpr std::size_t kMaxBaselineRepetitions = 100'000'000;

std::size_t sample(const std::vector<double> &dist, CounterRng &rng) {
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist[i];
        if (u < acc) {
            return i;
        }
    }
    // Rounding left a sliver of mass; give it to the last non-empty outcome.
    for (std::size_t i = dist.size(); i-- > 0;) {
        if (dist[i] > 0.0) {
            return i;
        }
    }
    return 0;
}

void apply_oracle(StateVector &state, std::size_t t) {
    const std::size_t block = state.layout().ancilla_dim();
    auto &amps = state.amplitudes();
    for (std::size_t j = 0; j < block; ++j) {
        amps[static_cast<Eigen::Index>(t * block + j)] *= -1.0;
    }
}

PipelineResult run_approximate(const SearchInstance &inst, const SearchOperator &s,
                               const InversionScheme &scheme, const RelevantPair *pair) {
    QueryLedger w_ledger;
    const WState w = evolve_to_w(inst, s, &w_ledger);
    const ApproximateInversion r(s, scheme);
    PipelineResult res = run_qaa_w_to_t(inst, r, w);
    res.w_stage_ledger = w_ledger;
    res.ledger = w_ledger + res.ledger;
    res.scheme = scheme;
    res.epsilon_used = pair != nullptr ? measure_epsilon(r, *pair, inst.big_b).epsilon_max
                                       : std::numeric_limits<double>::quiet_NaN();
    return res;
}

} // namespace

InstanceSummary summarize(const SearchInstance &inst, std::string id) {
    InstanceSummary out;
    out.id = id.empty() ? "N" + std::to_string(inst.dim()) + "-t" + std::to_string(inst.target) +
                              "-seed" + std::to_string(inst.spec.seed)
                        : std::move(id);
    out.dim = inst.dim();
    out.target = inst.target;
    out.alpha = inst.alpha;
    out.big_b = inst.big_b;
    out.theta_min = inst.theta_min();
    return out;
}

std::uint64_t qaa_iteration_count(double big_b) {
    require(std::isfinite(big_b) && big_b >= 1.0, ErrorKind::InvalidParameters,
            "qaa iteration count: B must be >= 1");
    const double n = kPi / (4.0 * std::asin(1.0 / big_b)) - 0.5;
    return n <= 0.0 ? 0 : static_cast<std::uint64_t>(std::round(n));
}

PipelineResult run_qaa_w_to_t(const SearchInstance &inst, const PhaseInversion &r,
                              const WState &w) {
    const RegisterLayout &layout = r.layout();
    require(layout.main_dim == inst.dim(), ErrorKind::DimensionMismatch,
            "qaa: inversion layout does not match the instance");
    StateVector state =
        StateVector::with_ancillas_zero(w.state, layout.workspace_qubits, layout.vote_qubits);

    PipelineResult res;
    res.instance = summarize(inst);
    res.q_m = w.q_m;
    res.w_overlap = std::abs(w.state[static_cast<Eigen::Index>(inst.target)]);
    res.iterations_qaa = qaa_iteration_count(inst.big_b);
    for (std::uint64_t i = 0; i < res.iterations_qaa; ++i) {
        apply_oracle(state, inst.target);
        res.ledger.charge_oracle();
        r.apply(state, &res.ledger);
    }
    const ComplexVector zero_branch = state.ancilla_zero_branch();
    res.success_probability = std::norm(zero_branch[static_cast<Eigen::Index>(inst.target)]);
    res.main_distribution = state.main_marginal();
    res.main_success_probability = res.main_distribution[inst.target];
    res.leakage = std::max(0.0, 1.0 - zero_branch.squaredNorm());
    return res;
}

PipelineResult run_full(const SearchInstance &inst, const InversionScheme &scheme) {
    return run_full(inst, diagonalize_search_operator(inst), scheme);
}

PipelineResult run_full(const SearchInstance &inst, const SearchOperator &s,
                        const InversionScheme &scheme) {
    const RelevantPair pair = find_relevant_pair(inst, s);
    return run_approximate(inst, s, scheme, &pair);
}

PipelineResult run_full_exact(const SearchInstance &inst) {
    const SearchOperator s = diagonalize_search_operator(inst);
    const RelevantPair pair = find_relevant_pair(inst, s);
    QueryLedger w_ledger;
    const WState w = evolve_to_w(inst, s, &w_ledger);
    const ExactPairInversion r(pair, RegisterLayout{inst.dim(), 0, 0});
    PipelineResult res = run_qaa_w_to_t(inst, r, w);
    res.w_stage_ledger = w_ledger;
    res.ledger = w_ledger + res.ledger;
    res.exact_inversion = true;
    res.epsilon_used = 0.0;
    return res;
}

QueryLedger planned_ledger(const SearchInstance &inst, const InversionScheme &scheme) {
    QueryLedger l;
    l.charge_s(w_iteration_count(inst));
    const std::uint64_t n = qaa_iteration_count(inst.big_b);
    l.charge_oracle(n);
    l.charge_controlled_s(n * scheme.controlled_s_per_application());
    if (scheme.kind == SchemeKind::Boosted) {
        l.i_zero_prime += n * 2 * std::uint64_t{scheme.nu};
        l.hadamards_vote += n * 4 * std::uint64_t{scheme.nu};
    }
    return l;
}

BaselineResult classical_baseline(const SearchInstance &inst, std::size_t trials,
                                  std::uint64_t seed) {
    require(trials >= 100, ErrorKind::InvalidParameters, "baseline: need at least 100 trials");
    const WState w = evolve_to_w(inst);
    std::vector<double> dist(inst.dim());
    for (std::size_t i = 0; i < inst.dim(); ++i) {
        dist[i] = std::norm(w.state[static_cast<Eigen::Index>(i)]);
    }
    BaselineResult out;
    out.trials = trials;
    out.q_m = w.q_m;
    out.p_target = dist[inst.target];
    require(out.p_target > 0.0, ErrorKind::AssumptionViolation,
            "baseline: w-state has no weight on the target");

    const CounterRng root(seed, 0x62617365ULL);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        CounterRng rng = root.split(i);
        std::size_t reps = 0;
        do {
            ++reps;
            require(reps <= kMaxBaselineRepetitions, ErrorKind::ResourceCap,
                    "baseline: repetition cap reached");
        } while (sample(dist, rng) != inst.target);
        const auto r = static_cast<double>(reps);
        sum += r;
        sum_sq += r * r;
    }
    const auto n = static_cast<double>(trials);
    out.mean_repetitions = sum / n;
    const double var = std::max(0.0, (sum_sq - n * out.mean_repetitions * out.mean_repetitions) / (n - 1));
    out.stderr_repetitions = std::sqrt(var / n);
    out.mean_queries = out.mean_repetitions * static_cast<double>(out.q_m);
    return out;
}

ScheduleResult run_schedule(const SearchInstance &inst, const ScheduleOptions &options) {
    require(options.initial_guess > 0.0 && options.initial_guess <= kPi,
            ErrorKind::InvalidParameters, "schedule: initial guess must lie in (0, pi]");
    require(options.delta > 0.0 && options.delta < 0.5, ErrorKind::InvalidParameters,
            "schedule: delta must lie in (0, 1/2)");
    const std::size_t max_rounds =
        options.max_rounds != 0
            ? options.max_rounds
            : static_cast<std::size_t>(
                  std::ceil(10.0 * std::abs(std::log(options.initial_guess)) / options.delta));

    const SearchOperator s = diagonalize_search_operator(inst);
    const CounterRng root(options.seed, 0x7363686564ULL);
    ScheduleResult out;
    double guess = options.initial_guess;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        const InversionScheme scheme =
            options.kind == SchemeKind::Boosted
                ? boosted_scheme(inst.big_b, guess, options.mu_offset, options.delta)
                : basic_scheme(inst.big_b, guess, options.b, options.delta);
        PipelineResult res = run_approximate(inst, s, scheme, nullptr);

        CounterRng rng = root.split(round);
        const std::size_t outcome = sample(res.main_distribution, rng);
        res.ledger.charge_oracle(); // verification
        out.total_ledger += res.ledger;
        out.theta_guesses.push_back(guess);
        out.outcomes.push_back(outcome);
        out.rounds_used = round + 1;
        out.final = std::move(res);
        if (outcome == inst.target) {
            out.success = true;
            break;
        }
        guess *= 1.0 - options.delta / 10.0;
    }
    return out;
}

double fit_log_slope(const std::vector<double> &x, const std::vector<double> &y) {
    require(x.size() == y.size(), ErrorKind::DimensionMismatch, "fit: length mismatch");
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0.0 && y[i] > 0.0 && std::isfinite(x[i]) && std::isfinite(y[i])) {
            lx.push_back(std::log(x[i]));
            ly.push_back(std::log(y[i]));
        }
    }
    if (lx.size() < 2) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const auto n = static_cast<double>(lx.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    return sxx > 0.0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

ComplexityReport complexity_report(const std::vector<PipelineResult> &results) {
    require(results.size() >= 3, ErrorKind::InvalidParameters,
            "complexity report: need at least three results");
    ComplexityReport rep;
    std::vector<double> alpha, qm, blnb, cs, b, ratio;
    for (const PipelineResult &res : results) {
        ComplexityRow row;
        row.instance = res.instance;
        row.scheme = res.exact_inversion ? "exact" : std::string(to_string(res.scheme.kind));
        row.mu = res.exact_inversion ? 0 : res.scheme.mu;
        row.nu = res.exact_inversion ? 0 : res.scheme.nu;
        row.q_m = res.q_m;
        row.n_qaa = res.iterations_qaa;
        row.oracle_queries = res.ledger.oracle_queries;
        row.controlled_s = res.ledger.controlled_s;
        const double p = res.w_overlap * res.w_overlap;
        row.baseline_queries = p > 0.0 ? static_cast<double>(res.q_m) / p
                                       : std::numeric_limits<double>::infinity();
        row.success = res.success_probability;
        row.epsilon = res.epsilon_used;
        const auto oq = static_cast<double>(row.oracle_queries);
        row.baseline_ratio = oq > 0.0 ? row.baseline_queries / oq
                                      : std::numeric_limits<double>::quiet_NaN();
        const double bb = res.instance.big_b;
        const double a = res.instance.alpha;
        row.classical_constant = row.baseline_queries / (bb * bb * bb / a);
        row.postprocessed_constant = oq / (bb / a + bb * std::log(bb) / res.instance.theta_min);
        rep.rows.push_back(row);

        alpha.push_back(a);
        qm.push_back(static_cast<double>(row.q_m));
        blnb.push_back(bb * std::log(bb));
        cs.push_back(static_cast<double>(row.controlled_s));
        b.push_back(bb);
        ratio.push_back(row.baseline_ratio);
    }
    rep.slope_q_m_vs_alpha = fit_log_slope(alpha, qm);
    rep.slope_controlled_s_vs_blnb = fit_log_slope(blnb, cs);
    rep.slope_ratio_vs_b = fit_log_slope(b, ratio);
    return rep;
}

} // namespace qsearch
