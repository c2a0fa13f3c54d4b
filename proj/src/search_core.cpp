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
#include "qsearch/search_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qsearch/error.hpp"
#include "qsearch/tolerances.hpp"

namespace qsearch {

namespace {

double residual_unchecked(const std::vector<double> &w, const std::vector<double> &theta,
                          double lambda) {
    double acc = 0.0;
    for (std::size_t l = 0; l < w.size(); ++l) {
        if (w[l] == 0.0) {
            continue;
        }
        const double x = (lambda - theta[l]) / 2;
        acc += w[l] * std::cos(x) / std::sin(x);
    }
    return acc;
}

// Distance from 0 to the nearest weighted pole of the residual going up
// (sign = +1) or down (sign = -1), measured along the circle.
double pole_distance(const SearchInstance &inst, const std::vector<double> &w, int sign) {
    double best = kTwoPi;
    for (std::size_t l = 0; l < w.size(); ++l) {
        if (l == inst.spec.source_index || w[l] <= 1e-14) {
            continue;
        }
        double d = std::fmod(sign * inst.spec.eigenphases[l], kTwoPi);
        if (d <= 0.0) {
            d += kTwoPi;
        }
        best = std::min(best, d);
    }
    return best;
}

// The residual decreases strictly between consecutive poles, from +inf to
// -inf, so plain bisection on the sign converges to the unique root.
double bisect(const std::vector<double> &w, const std::vector<double> &theta, double lo,
              double hi) {
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (residual_unchecked(w, theta, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-3 * kTol.bisection) {
            break;
        }
    }
    return 0.5 * (lo + hi);
}

ComplexVector gauge_to_target(ComplexVector v, std::size_t t) {
    const Complex vt = v[static_cast<Eigen::Index>(t)];
    const double mag = std::abs(vt);
    if (mag > 0.0) {
        v *= std::conj(vt) / mag;
    }
    return v;
}

} // namespace

UnitaryMatrix build_search_operator(const SearchInstance &inst) {
    ComplexMatrix m = assemble_diffusion(inst.spec).matrix();
    m.col(static_cast<Eigen::Index>(inst.target)) *= -1.0;
    return UnitaryMatrix(std::move(m), kTol.unitarity_loose);
}

SearchOperator diagonalize_search_operator(const SearchInstance &inst) {
    UnitaryMatrix s = build_search_operator(inst);
    EigenDecomposition eig = eig_unitary(s);
    return {std::move(s), std::move(eig)};
}

double secular_residual(const SearchInstance &inst, double lambda) {
    const std::vector<double> w = inst.spec.target_weights(inst.target);
    for (std::size_t l = 0; l < w.size(); ++l) {
        if (w[l] > 0.0 && std::abs(wrap_phase(lambda - inst.spec.eigenphases[l])) < kTol.pole) {
            fail(ErrorKind::Pole, "secular residual evaluated at a pole, eigenphase " +
                                      std::to_string(inst.spec.eigenphases[l]));
        }
    }
    return residual_unchecked(w, inst.spec.eigenphases, lambda);
}

double max_secular_residual(const SearchInstance &inst, const SearchOperator &s) {
    double worst = 0.0;
    const auto t = static_cast<Eigen::Index>(inst.target);
    for (std::size_t k = 0; k < s.eig.eigenphases.size(); ++k) {
        if (std::norm(s.eig.eigenvectors(t, static_cast<Eigen::Index>(k))) <= 1e-12) {
            continue;
        }
        worst = std::max(worst, std::abs(secular_residual(inst, s.eig.eigenphases[k])));
    }
    return worst;
}

RelevantPair find_relevant_pair(const SearchInstance &inst) {
    return find_relevant_pair(inst, diagonalize_search_operator(inst));
}

RelevantPair find_relevant_pair(const SearchInstance &inst, const SearchOperator &s) {
    const double theta_min = inst.theta_min();
    require(inst.alpha < theta_min / 5, ErrorKind::AssumptionViolation,
            "relevant pair: alpha must be below theta_min / 5");

    std::vector<std::size_t> inside;
    for (std::size_t k = 0; k < s.eig.eigenphases.size(); ++k) {
        if (std::abs(s.eig.eigenphases[k]) < theta_min - kTol.degenerate_cluster) {
            inside.push_back(k);
        }
    }
    require(inside.size() == 2, ErrorKind::AssumptionViolation,
            "expected 2 eigenphases of S inside (-theta_min, theta_min), found " +
                std::to_string(inside.size()));
    // Ascending order puts the negative one first.
    const std::size_t km = inside[0];
    const std::size_t kp = inside[1];
    require(s.eig.eigenphases[km] < 0.0 && s.eig.eigenphases[kp] > 0.0,
            ErrorKind::AssumptionViolation, "relevant eigenphases do not straddle zero");

    RelevantPair pair;
    pair.index_plus = kp;
    pair.index_minus = km;
    pair.lambda_plus = s.eig.eigenphases[kp];
    pair.lambda_minus = s.eig.eigenphases[km];
    pair.vec_plus = gauge_to_target(s.eig.eigenvectors.col(static_cast<Eigen::Index>(kp)),
                                    inst.target);
    pair.vec_minus = gauge_to_target(s.eig.eigenvectors.col(static_cast<Eigen::Index>(km)),
                                     inst.target);

    const double scale = 2.0 * inst.alpha / inst.big_b;
    pair.eta = 0.5 * std::atan2(2.0 * inst.alpha * inst.big_b, inst.lambda1);
    pair.predicted_plus = scale * std::tan(pair.eta);
    pair.predicted_minus = -scale / std::tan(pair.eta);

    const std::vector<double> w = inst.spec.target_weights(inst.target);
    const double up = pole_distance(inst, w, +1);
    const double down = pole_distance(inst, w, -1);
    pair.secular_plus = bisect(w, inst.spec.eigenphases, 0.0, up);
    pair.secular_minus = bisect(w, inst.spec.eigenphases, -down, 0.0);

    const double dev = std::max(std::abs(pair.secular_plus - pair.lambda_plus),
                                std::abs(pair.secular_minus - pair.lambda_minus));
    require(dev <= kTol.cross_check, ErrorKind::AssumptionViolation,
            "diagonalization and secular root disagree by " + std::to_string(dev));
    return pair;
}

ComplexVector reconstruct_source(const RelevantPair &pair) {
    const Complex pre(0.0, -1.0 / std::sqrt(2.0));
    return pre * (std::polar(1.0, pair.lambda_plus / 2) * pair.vec_plus -
                  std::polar(1.0, pair.lambda_minus / 2) * pair.vec_minus);
}

std::uint64_t w_iteration_count(const SearchInstance &inst) {
    const double q = kPi * inst.big_b / (4.0 * inst.alpha) - 0.5;
    return q <= 0.0 ? 0 : static_cast<std::uint64_t>(std::round(q));
}

WState evolve_to_w(const SearchInstance &inst, const SearchOperator &s, QueryLedger *ledger) {
    WState out;
    out.q_m = w_iteration_count(inst);
    out.state = inst.source;
    for (std::uint64_t q = 0; q < out.q_m; ++q) {
        out.state = s.op.matrix() * out.state;
    }
    if (ledger != nullptr) {
        ledger->charge_s(out.q_m);
    }
    return out;
}

WState evolve_to_w(const SearchInstance &inst, QueryLedger *ledger) {
    const SearchOperator s{build_search_operator(inst), {}};
    return evolve_to_w(inst, s, ledger);
}

} // namespace qsearch
