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
#include <doctest.h>

#include <cmath>

#include "qsearch/error.hpp"
#include "qsearch/pipeline.hpp"

using namespace qsearch;

namespace {

// Frozen: success loss per (n_qaa * epsilon), measured <= 0.03 on the
// reference instance over basic mu in [7, 12] and boosted nu in [2, 8].
constexpr double kDegradationConstant = 1.0;

SearchInstance reference_instance() {
    InstanceQuery q;
    q.dim = 16;
    q.pair_phases = {0.68};
    q.max_alpha_ratio = 0.02;
    q.min_b = 2.0;
    q.max_b = 4.0;
    return find_instance(q);
}

InversionScheme desk_boosted(const SearchInstance &inst) {
    return boosted_scheme(inst.big_b, inst.theta_min(), 8);
}

} // namespace

TEST_CASE("qaa_iteration_count") {
    CHECK(qaa_iteration_count(1.0) == 0);
    CHECK(qaa_iteration_count(2.0) == 1);
    CHECK(qaa_iteration_count(3.0) == 2); // pi / (4 asin(1/3)) - 1/2 = 1.81
    CHECK(qaa_iteration_count(10.0) == 7);
}

TEST_CASE("Grover N = 64: six queries, no postprocessing, success >= 0.99") {
    const SearchInstance inst = make_instance(build_grover_spec(64), 9);
    for (const PipelineResult &r : {run_full_exact(inst), run_full(inst, desk_boosted(inst))}) {
        CHECK(r.q_m == 6);
        CHECK(r.iterations_qaa == 0);
        CHECK(r.ledger.oracle_queries == 6);
        CHECK(r.ledger.controlled_s == 0);
        CHECK(r.success_probability >= 0.99);
        CHECK(r.success_probability == doctest::Approx(std::pow(std::sin(13 * std::asin(0.125)), 2)).epsilon(1e-10));
        CHECK(r.w_overlap == doctest::Approx(std::sin(13 * std::asin(0.125))).epsilon(1e-10));
    }
}

TEST_CASE("exact inversion sets the ceiling") {
    const SearchInstance inst = reference_instance();
    const PipelineResult ex = run_full_exact(inst);
    const double r = inst.alpha / inst.theta_min();
    CHECK(ex.exact_inversion);
    CHECK(ex.leakage < 1e-12);
    // Ideal rotation from overlap 1/B in n_qaa steps of 2 asin(1/B).
    const double n = static_cast<double>(ex.iterations_qaa);
    const double from_b = std::pow(std::sin((2 * n + 1) * std::asin(1.0 / inst.big_b)), 2);
    CHECK(ex.success_probability >= from_b - 4.0 * r * r - 1.0 / static_cast<double>(ex.q_m));
    CHECK(ex.success_probability >= 0.95);
}

TEST_CASE("property: approximation never beats the ceiling and loses at most c n_qaa epsilon") {
    const SearchInstance inst = reference_instance();
    const SearchOperator s = diagonalize_search_operator(inst);
    const double ceiling = run_full_exact(inst).success_probability;
    std::vector<InversionScheme> schemes;
    for (unsigned mu = 7; mu <= 12; ++mu) {
        InversionScheme sc = basic_scheme(inst.big_b, inst.theta_min());
        sc.mu = mu;
        schemes.push_back(sc);
    }
    for (unsigned nu : {2u, 4u, 6u}) {
        InversionScheme sc = desk_boosted(inst);
        sc.nu = nu;
        schemes.push_back(sc);
    }
    for (const InversionScheme &sc : schemes) {
        const PipelineResult r = run_full(inst, s, sc);
        CHECK(r.success_probability <= ceiling + 1e-12);
        CHECK(ceiling - r.success_probability <=
              kDegradationConstant * static_cast<double>(r.iterations_qaa) * r.epsilon_used);
        CHECK(r.success_probability + r.leakage <= 1.0 + 1e-12);
        CHECK(r.main_success_probability >= r.success_probability - 1e-12);
    }
}

TEST_CASE("boosted end-to-end: success, ledger composition, zero controlled w-stage") {
    const SearchInstance inst = reference_instance();
    const InversionScheme sc = desk_boosted(inst);
    const PipelineResult r = run_full(inst, sc);
    CHECK(r.success_probability >= 0.9);
    CHECK(r.w_stage_ledger.controlled_s == 0);
    CHECK(r.w_stage_ledger.oracle_queries == r.q_m);
    const std::uint64_t n = r.iterations_qaa;
    CHECK(n == qaa_iteration_count(inst.big_b));
    CHECK(r.ledger.controlled_s == n * sc.controlled_s_per_application());
    QueryLedger expected = r.w_stage_ledger;
    for (std::uint64_t i = 0; i < n; ++i) {
        expected.charge_oracle();
        expected.charge_controlled_s(sc.controlled_s_per_application());
        expected.i_zero_prime += 2 * sc.nu;
        expected.hadamards_vote += 4 * sc.nu;
    }
    CHECK(r.ledger == expected);
    CHECK(planned_ledger(inst, sc) == r.ledger);
    const double tally = static_cast<double>(n * (1 + sc.nu)) * std::ldexp(1.0, static_cast<int>(sc.mu) + 1);
    CHECK(static_cast<double>(r.ledger.controlled_s) <= 2.0 * tally);
}

TEST_CASE("gap guess below |lambda+-| leaves R near identity and the w-state unamplified") {
    const SearchInstance inst = reference_instance();
    const RelevantPair pair = find_relevant_pair(inst);
    InversionScheme sc;
    sc.kind = SchemeKind::Boosted;
    sc.theta_min = pair.lambda_plus / 2;
    sc.mu = 12;
    sc.nu = 2;
    const PipelineResult r = run_full(inst, sc);
    CHECK(std::abs(r.success_probability - r.w_overlap * r.w_overlap) < 0.05);
    CHECK(r.success_probability < 0.5);
}

TEST_CASE("classical baseline: Grover, geometric oracle, B^2 trend, determinism") {
    const BaselineResult g = classical_baseline(make_instance(build_grover_spec(64), 3), 1000, 1);
    CHECK(g.mean_repetitions == doctest::Approx(1.0).epsilon(0.02));

    const SearchInstance inst = reference_instance();
    const BaselineResult b = classical_baseline(inst, 1000, 11);
    const double expected = 1.0 / b.p_target;
    CHECK(std::abs(b.mean_repetitions - expected) <= 3.0 * b.stderr_repetitions);
    CHECK(std::abs(b.mean_repetitions / (inst.big_b * inst.big_b) - 1.0) <= 0.25);
    CHECK(b.mean_queries == doctest::Approx(b.mean_repetitions * static_cast<double>(b.q_m)));
    const BaselineResult again = classical_baseline(inst, 1000, 11);
    CHECK(again.mean_repetitions == b.mean_repetitions);
    CHECK_THROWS_AS(classical_baseline(inst, 99, 1), Error);
}

TEST_CASE("schedule: immediate success, determinism, exhaustion") {
    const SearchInstance inst = reference_instance();
    ScheduleOptions opt;
    opt.mu_offset = 8;
    opt.initial_guess = inst.theta_min() * 0.9;
    opt.seed = 3;
    const ScheduleResult first = run_schedule(inst, opt);
    const ScheduleResult again = run_schedule(inst, opt);
    CHECK(first.rounds_used == again.rounds_used);
    CHECK(first.outcomes == again.outcomes);
    CHECK(first.theta_guesses == again.theta_guesses);
    CHECK(first.success);
    CHECK(first.final.success_probability >= 0.9);
    CHECK(std::isnan(first.final.epsilon_used));

    opt.initial_guess = find_relevant_pair(inst).lambda_plus / 2;
    opt.mu_offset = 2;
    opt.max_rounds = 3;
    const ScheduleResult tiny = run_schedule(inst, opt);
    CHECK(tiny.rounds_used <= 3);
    for (std::size_t i = 1; i < tiny.theta_guesses.size(); ++i) {
        CHECK(tiny.theta_guesses[i] == doctest::Approx(tiny.theta_guesses[i - 1] * (1 - kDefaultDelta / 10)));
        CHECK(tiny.theta_guesses[i] < tiny.theta_guesses[i - 1]);
    }
    QueryLedger sum;
    for (std::size_t i = 0; i < tiny.rounds_used; ++i) {
        sum += planned_ledger(inst, boosted_scheme(inst.big_b, tiny.theta_guesses[i], 2));
        sum.charge_oracle();
    }
    CHECK(sum == tiny.total_ledger);
    CHECK_THROWS_AS(run_schedule(inst, ScheduleOptions{.initial_guess = 4.0}), Error);
}

TEST_CASE("schedule: default round budget") {
    const SearchInstance inst = make_instance(build_grover_spec(4), 0);
    ScheduleOptions opt;
    opt.initial_guess = 0.5;
    opt.mu_offset = 4;
    const ScheduleResult r = run_schedule(inst, opt);
    CHECK(r.success);
    CHECK(r.rounds_used <= static_cast<std::size_t>(std::ceil(10 * std::log(2.0) / kDefaultDelta)));
}

TEST_CASE("fit_log_slope recovers power laws") {
    CHECK(fit_log_slope({1, 2, 4, 8}, {3, 12, 48, 192}) == doctest::Approx(2.0));
    CHECK(fit_log_slope({1, 10, 100}, {5, 0.5, 0.05}) == doctest::Approx(-1.0));
    CHECK(std::isnan(fit_log_slope({1}, {1})));
}

TEST_CASE("complexity report: halving alpha doubles the w-stage") {
    std::vector<PipelineResult> results;
    for (std::size_t n : {16u, 64u, 256u}) {
        results.push_back(run_full_exact(make_instance(build_grover_spec(n), 1)));
    }
    const ComplexityReport rep = complexity_report(results);
    REQUIRE(rep.rows.size() == 3);
    for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
        const double ratio = static_cast<double>(rep.rows[i + 1].q_m) / static_cast<double>(rep.rows[i].q_m);
        CHECK(ratio == doctest::Approx(2.0).epsilon(0.15));
    }
    CHECK(rep.slope_q_m_vs_alpha == doctest::Approx(-1.0).epsilon(0.15));
    for (const ComplexityRow &row : rep.rows) {
        CHECK(row.oracle_queries == row.q_m);
        CHECK(row.baseline_queries == doctest::Approx(static_cast<double>(row.q_m) / std::pow(row.success, 1.0)).epsilon(0.02));
    }
    results.pop_back();
    CHECK_THROWS_AS(complexity_report(results), Error);
}

TEST_CASE("summary id and fields") {
    const SearchInstance inst = reference_instance();
    const InstanceSummary s = summarize(inst);
    CHECK(s.id == "N16-t" + std::to_string(inst.target) + "-seed" + std::to_string(inst.spec.seed));
    CHECK(s.alpha == inst.alpha);
    CHECK(s.big_b == inst.big_b);
    CHECK(summarize(inst, "custom").id == "custom");
}
