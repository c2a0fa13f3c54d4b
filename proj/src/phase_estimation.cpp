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
#include "qsearch/phase_estimation.hpp"

#include <cmath>
#include <string>

#include "qsearch/error.hpp"

namespace qsearch {

namespace {

using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Calls f(base, stride) once per workspace fiber of the joint state.
template <typename F>
void for_each_workspace_fiber(const RegisterLayout &layout, F &&f) {
    const std::size_t stride = layout.vote_dim();
    const std::size_t block = layout.ancilla_dim();
    for (std::size_t m = 0; m < layout.main_dim; ++m) {
        for (std::size_t v = 0; v < stride; ++v) {
            f(m * block + v, stride);
        }
    }
}

void require_workspace(const StateVector &state) {
    require(state.layout().workspace_qubits >= 1, ErrorKind::InvalidParameters,
            "workspace register required");
}

} // namespace

double PhiState::probability(const SubspaceMask &mask) const {
    require(mask.register_dim == amplitudes.size(), ErrorKind::DimensionMismatch,
            "phi probability: mask does not match the workspace");
    double p = 0.0;
    for (std::size_t k : mask.members) {
        p += std::norm(amplitudes[k]);
    }
    return p;
}

StateVector apply_walsh_hadamard(StateVector state) {
    require_workspace(state);
    const std::size_t len = state.layout().workspace_dim();
    Complex *data = state.amplitudes().data();
    for_each_workspace_fiber(state.layout(), [&](std::size_t base, std::size_t stride) {
        kernels::walsh_hadamard(data + base, len, stride);
    });
    return state;
}

StateVector apply_controlled_powers(StateVector state, const UnitaryMatrix &s,
                                    QueryLedger *ledger) {
    require_workspace(state);
    const RegisterLayout layout = state.layout();
    require(static_cast<std::size_t>(s.dim()) == layout.main_dim, ErrorKind::DimensionMismatch,
            "controlled powers: operator and mainspace dimensions differ");
    const auto n = static_cast<Eigen::Index>(layout.main_dim);
    const auto cols = static_cast<Eigen::Index>(layout.ancilla_dim());
    Eigen::Map<RowMajor> amps(state.amplitudes().data(), n, cols);

    ComplexMatrix power = s.matrix(); // S^{2^j}
    for (unsigned j = 0; j < layout.workspace_qubits; ++j) {
        const RowMajor moved = power * amps;
        for (Eigen::Index a = 0; a < cols; ++a) {
            const std::size_t work = static_cast<std::size_t>(a) / layout.vote_dim();
            if ((work >> j) & 1U) {
                amps.col(a) = moved.col(a);
            }
        }
        if (j + 1 < layout.workspace_qubits) {
            power = power * power;
        }
    }
    if (ledger != nullptr) {
        ledger->charge_controlled_s(layout.workspace_dim());
    }
    return state;
}

StateVector apply_inverse_qft(StateVector state) {
    require_workspace(state);
    const std::size_t len = state.layout().workspace_dim();
    Complex *data = state.amplitudes().data();
    for_each_workspace_fiber(state.layout(), [&](std::size_t base, std::size_t stride) {
        kernels::dft(data + base, len, stride, -1);
    });
    return state;
}

StateVector apply_qft(StateVector state) {
    require_workspace(state);
    const std::size_t len = state.layout().workspace_dim();
    Complex *data = state.amplitudes().data();
    for_each_workspace_fiber(state.layout(), [&](std::size_t base, std::size_t stride) {
        kernels::dft(data + base, len, stride, +1);
    });
    return state;
}

StateVector phase_estimate(const ComplexVector &main_state, const UnitaryMatrix &s, unsigned mu,
                           QueryLedger *ledger) {
    require(mu >= 1, ErrorKind::InvalidParameters, "phase estimation: mu must be >= 1");
    StateVector state = StateVector::with_ancillas_zero(main_state, mu, 0);
    state = apply_walsh_hadamard(std::move(state));
    state = apply_controlled_powers(std::move(state), s, ledger);
    return apply_inverse_qft(std::move(state));
}

PhiState phi_amplitudes(double lambda, unsigned mu) {
    require(mu >= 1 && mu < 40, ErrorKind::InvalidParameters, "phi amplitudes: mu out of range");
    const std::size_t m = std::size_t{1} << mu;
    const double md = static_cast<double>(m);
    PhiState phi;
    phi.lambda = lambda;
    phi.mu = mu;
    phi.amplitudes.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double x = wrap_phase(lambda - kTwoPi * static_cast<double>(k) / md);
        if (x == 0.0) {
            phi.amplitudes[k] = 1.0;
            continue;
        }
        // 2^-mu sum_{z<M} e^{izx} = e^{i(M-1)x/2} sin(Mx/2) / (M sin(x/2))
        const double mag = std::sin(md * x / 2) / (md * std::sin(x / 2));
        phi.amplitudes[k] = std::polar(mag, (md - 1.0) * x / 2);
    }
    return phi;
}

std::size_t k_nearest(double lambda, unsigned mu) {
    const auto m = static_cast<std::int64_t>(std::int64_t{1} << mu);
    const auto k = static_cast<std::int64_t>(
        std::round(static_cast<double>(m) * lambda / kTwoPi));
    return static_cast<std::size_t>(((k % m) + m) % m);
}

SubspaceMask y_mask(double lambda, unsigned mu, std::size_t c) {
    const std::size_t m = std::size_t{1} << mu;
    require(2 * c + 1 <= m, ErrorKind::InvalidParameters,
            "y_mask: window 2c+1 = " + std::to_string(2 * c + 1) + " exceeds the register");
    const std::size_t k = k_nearest(lambda, mu);
    std::vector<std::size_t> members;
    members.reserve(2 * c + 1);
    for (std::size_t j = 0; j <= 2 * c; ++j) {
        members.push_back((k + m - c + j) % m);
    }
    return {Register::Workspace, m, std::move(members)};
}

double y_probability(double lambda, unsigned mu, std::size_t c) {
    return phi_amplitudes(lambda, mu).probability(y_mask(lambda, mu, c));
}

std::size_t x_half_width(double theta_min, double delta, unsigned mu) {
    const double m = static_cast<double>(std::size_t{1} << mu);
    return static_cast<std::size_t>(std::round(m * (1.0 - delta) * theta_min / kTwoPi));
}

SubspaceMask x_mask(double theta_min, double delta, unsigned mu) {
    require(delta > 0.0 && delta < 0.5, ErrorKind::InvalidParameters,
            "x_mask: delta must lie in (0, 1/2)");
    require(theta_min > 0.0 && theta_min <= kPi, ErrorKind::InvalidParameters,
            "x_mask: theta_min must lie in (0, pi]");
    const std::size_t m = std::size_t{1} << mu;
    const std::size_t khat = x_half_width(theta_min, delta, mu);
    require(2 * khat + 1 < m, ErrorKind::InvalidParameters,
            "x_mask: window covers the whole workspace");
    std::vector<std::size_t> members;
    members.reserve(2 * khat + 1);
    for (std::size_t k = 0; k <= khat; ++k) {
        members.push_back(k);
    }
    for (std::size_t k = m - khat; k < m; ++k) {
        members.push_back(k);
    }
    return {Register::Workspace, m, std::move(members)};
}

namespace spectral {

void phase_estimation(Complex *work, std::size_t length, std::size_t stride, double lambda) {
    kernels::walsh_hadamard(work, length, stride);
    for (std::size_t z = 1; z < length; ++z) {
        work[z * stride] *= std::polar(1.0, lambda * static_cast<double>(z));
    }
    kernels::dft(work, length, stride, -1);
}

void phase_estimation_adjoint(Complex *work, std::size_t length, std::size_t stride,
                              double lambda) {
    kernels::dft(work, length, stride, +1);
    for (std::size_t z = 1; z < length; ++z) {
        work[z * stride] *= std::polar(1.0, -lambda * static_cast<double>(z));
    }
    kernels::walsh_hadamard(work, length, stride);
}

} // namespace spectral

} // namespace qsearch
