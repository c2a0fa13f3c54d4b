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
#include <string>

#include "qsearch/error.hpp"
#include "qsearch/search_core.hpp"

using namespace qsearch;

namespace {

// Frozen calibration constants, measured once over corpus() with margin.
constexpr double kLambdaConstant = 0.02;        // |lambda+ - 2 alpha/B| <= c alpha (alpha/theta_min)
constexpr double kReconstructionConstant = 1.5; // |reconstructed - s| <= c0 alpha/theta_min
constexpr double kProjectionConstant = 1.0;     // 1 - |P s| <= c1 (alpha/theta_min)^2

std::vector<SearchInstance> corpus() {
    std::vector<SearchInstance> out;
    for (double ph : {0.5, 1.0, 1.5}) {
        for (std::size_t n : {12u, 17u, 24u}) {
            for (std::uint64_t seed = 1; seed <= 6; ++seed) {
                const DiffusionSpec spec = build_symmetric_spec(n, {ph, ph * 1.3, std::min(ph * 2.1, 3.0)}, seed);
                for (std::size_t t = 0; t < n; ++t) {
                    const SearchInstance inst = make_instance(spec, t);
                    if (inst.alpha / inst.theta_min() <= 0.02) {
                        out.push_back(inst);
                    }
                }
            }
        }
    }
    return out;
}

SearchInstance reference_instance() {
    InstanceQuery q;
    q.dim = 16;
    q.pair_phases = {0.68};
    q.max_alpha_ratio = 0.02;
    q.min_b = 2.0;
    q.max_b = 4.0;
    return find_instance(q);
}

} // namespace

TEST_CASE("Grover N = 4: |<t|S^q|s>| follows sin((2q + 1) asin(alpha))") {
    const SearchInstance inst = make_instance(build_grover_spec(4), 2);
    const UnitaryMatrix s = build_search_operator(inst);
    CHECK(unitarity_defect(s.matrix()) < 1e-10);
    ComplexVector v = inst.source;
    for (int q = 0; q <= 6; ++q) {
        const double expected = std::abs(std::sin((2 * q + 1) * std::asin(0.5)));
        CHECK(std::abs(std::abs(v[2]) - expected) < 1e-12);
        v = qsearch::apply(s, v);
    }
}

TEST_CASE("I_t negates column t and nothing else") {
    const SearchInstance inst = make_instance(build_symmetric_spec(8, {1.0}, 2), 3);
    const ComplexMatrix d = assemble_diffusion(inst.spec).matrix();
    const ComplexMatrix s = build_search_operator(inst).matrix();
    for (Eigen::Index c = 0; c < 8; ++c) {
        const double sign = c == 3 ? -1.0 : 1.0;
        CHECK((s.col(c) - sign * d.col(c)).norm() < 1e-15);
    }
}

TEST_CASE("secular residual vanishes at every target-overlapping eigenphase") {
    for (const SearchInstance &inst : corpus()) {
        const SearchOperator s = diagonalize_search_operator(inst);
        CHECK(max_secular_residual(inst, s) < 1e-6);
    }
}

TEST_CASE("secular residual is odd for symmetric specs") {
    const SearchInstance inst = reference_instance();
    for (double lam : {0.001, 0.05, 0.3, 0.9, 2.0, 3.0}) {
        CHECK(std::abs(secular_residual(inst, -lam) + secular_residual(inst, lam)) < 1e-10);
    }
}

TEST_CASE("secular residual refuses poles") {
    const SearchInstance inst = reference_instance();
    try {
        (void)secular_residual(inst, 0.68);
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Pole);
    }
}

TEST_CASE("bracket scan: one root between adjacent weighted poles") {
    const SearchInstance inst = reference_instance();
    const std::vector<double> w = inst.spec.target_weights(inst.target);
    std::vector<double> poles;
    for (std::size_t l = 0; l < w.size(); ++l) {
        if (w[l] > 1e-12) {
            poles.push_back(inst.spec.eigenphases[l]);
        }
    }
    std::sort(poles.begin(), poles.end());
    poles.erase(std::unique(poles.begin(), poles.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                poles.end());
    REQUIRE(poles.size() >= 3);
    const SearchOperator s = diagonalize_search_operator(inst);
    for (std::size_t i = 0; i + 1 < poles.size(); ++i) {
        int roots = 0;
        double prev = secular_residual(inst, poles[i] + 1e-4);
        double root_at = 0.0;
        for (double x = poles[i] + 2e-4; x < poles[i + 1] - 0.5e-4; x += 1e-4) {
            const double cur = secular_residual(inst, x);
            if ((prev > 0.0) != (cur > 0.0)) {
                ++roots;
                root_at = x;
            }
            prev = cur;
        }
        CHECK(roots == 1);
        bool matched = false;
        for (double lam : s.eig.eigenphases) {
            matched = matched || std::abs(lam - root_at) < 2e-4;
        }
        CHECK(matched);
    }
}

TEST_CASE("Grover N = 64: relevant pair, prediction, q_m and success") {
    const SearchInstance inst = make_instance(build_grover_spec(64), 5);
    CHECK(inst.alpha == doctest::Approx(0.125));
    const RelevantPair p = find_relevant_pair(inst);
    const double exact = 2.0 * std::asin(0.125);
    CHECK(std::abs(p.lambda_plus - exact) < 1e-10);
    CHECK(std::abs(p.lambda_minus + exact) < 1e-10);
    CHECK(p.lambda_plus == doctest::Approx(0.2506556623).epsilon(1e-9));
    CHECK(p.predicted_plus == doctest::Approx(0.25));
    CHECK(std::abs(p.lambda_plus - p.predicted_plus) < std::pow(0.125, 3));
    CHECK(std::abs(p.secular_plus - p.lambda_plus) < 1e-8);
    CHECK((reconstruct_source(p) - inst.source).norm() < 1e-9);

    QueryLedger ledger;
    const WState w = evolve_to_w(inst, &ledger);
    CHECK(w.q_m == 6);
    CHECK(ledger.ds_applications == 6);
    CHECK(ledger.oracle_queries == 6);
    CHECK(ledger.controlled_s == 0);
    const double success = std::norm(w.state[5]);
    CHECK(success == doctest::Approx(std::pow(std::sin(13 * std::asin(0.125)), 2)).epsilon(1e-10));
    CHECK(success >= 0.99);
}

TEST_CASE("property: relevant pair over the corpus") {
    const std::vector<SearchInstance> all = corpus();
    REQUIRE(all.size() >= 50);
    for (const SearchInstance &inst : all) {
        const RelevantPair p = find_relevant_pair(inst);
        const double r = inst.alpha / inst.theta_min();
        CHECK(std::abs(p.lambda_plus) < inst.theta_min());
        CHECK(std::abs(p.lambda_minus) < inst.theta_min());
        CHECK(std::abs(p.lambda_plus + p.lambda_minus) < 1e-9);
        CHECK(std::abs(p.vec_plus.dot(p.vec_minus)) < 1e-9);
        CHECK(p.eta == doctest::Approx(kPi / 4).epsilon(1e-9));
        CHECK(std::abs(p.lambda_plus - 2 * inst.alpha / inst.big_b) <= kLambdaConstant * inst.alpha * r);
        const Complex tp = p.vec_plus[static_cast<Eigen::Index>(inst.target)];
        CHECK(tp.real() > 0.0);
        CHECK(std::abs(tp.imag()) < 1e-12);

        CHECK((reconstruct_source(p) - inst.source).norm() <= kReconstructionConstant * r);
        const double proj = std::hypot(std::abs(p.vec_plus.dot(inst.source)),
                                       std::abs(p.vec_minus.dot(inst.source)));
        CHECK(proj >= 1.0 - kProjectionConstant * r * r);
    }
}

TEST_CASE("reconstruction error at alpha/theta_min <= 0.02 is below 0.1") {
    const SearchInstance inst = reference_instance();
    CHECK((reconstruct_source(find_relevant_pair(inst)) - inst.source).norm() <= 0.1);
}

TEST_CASE("component outside the relevant span is conserved under S") {
    const SearchInstance inst = reference_instance();
    const SearchOperator s = diagonalize_search_operator(inst);
    const RelevantPair p = find_relevant_pair(inst, s);
    const double recon = (reconstruct_source(p) - inst.source).norm();
    auto outside = [&](const ComplexVector &v) {
        const ComplexVector in = p.vec_plus * p.vec_plus.dot(v) + p.vec_minus * p.vec_minus.dot(v);
        return (v - in).norm();
    };
    ComplexVector v = inst.source;
    const double initial = outside(v);
    CHECK(initial <= recon + 1e-12);
    for (int q = 0; q < 30; ++q) {
        v = qsearch::apply(s.op, v);
        CHECK(std::abs(outside(v) - initial) < 1e-10);
    }
}

TEST_CASE("w-state overlap is 1/B within 3% and orthogonal to |->") {
    int checked = 0;
    for (const SearchInstance &inst : corpus()) {
        if (inst.big_b < 2.0 || inst.big_b > 4.0) {
            continue;
        }
        const SearchOperator s = diagonalize_search_operator(inst);
        const RelevantPair p = find_relevant_pair(inst, s);
        QueryLedger ledger;
        const WState w = evolve_to_w(inst, s, &ledger);
        CHECK(w.q_m == w_iteration_count(inst));
        CHECK(ledger.ds_applications == w.q_m);
        const double overlap = std::abs(w.state[static_cast<Eigen::Index>(inst.target)]);
        CHECK(std::abs(overlap * inst.big_b - 1.0) <= 0.03);
        const ComplexVector minus = (p.vec_plus - p.vec_minus) / std::sqrt(2.0);
        CHECK(std::abs(minus.dot(w.state)) <= 0.03);
        const ComplexVector plus = (p.vec_plus + p.vec_minus) / std::sqrt(2.0);
        CHECK(std::abs(plus.dot(w.state)) >= 0.97);
        ++checked;
    }
    CHECK(checked >= 5);
}

TEST_CASE("w_iteration_count rounds pi B / (4 alpha) - 1/2") {
    SearchInstance inst = make_instance(build_grover_spec(64), 0);
    CHECK(w_iteration_count(inst) == 6);
    inst.big_b = 1.0;
    inst.alpha = kPi / (4.0 * 7.0); // pi B/(4 alpha) - 1/2 = 6.5 exactly in reals
    const double arg = kPi * inst.big_b / (4.0 * inst.alpha) - 0.5;
    CHECK(w_iteration_count(inst) == static_cast<std::uint64_t>(std::round(arg)));
}

TEST_CASE("find_relevant_pair: alpha too large for theta_min") {
    const SearchInstance inst = make_instance(build_symmetric_spec(4, {0.3}, 1), 0);
    REQUIRE(inst.alpha >= inst.theta_min() / 5);
    try {
        (void)find_relevant_pair(inst);
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::AssumptionViolation);
    }
}

TEST_CASE("find_relevant_pair reports the eigenphase count when it is not two") {
    const SearchInstance inst = reference_instance();
    SearchOperator s = diagonalize_search_operator(inst);
    for (double &lam : s.eig.eigenphases) {
        lam *= 1e-3;
    }
    try {
        (void)find_relevant_pair(inst, s);
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::AssumptionViolation);
        CHECK(std::string(e.what()).find(std::to_string(inst.dim())) != std::string::npos);
    }
}
