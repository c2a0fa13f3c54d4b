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
#include "qsearch/selective_inversion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qsearch/error.hpp"
#include "qsearch/tolerances.hpp"

namespace qsearch {

namespace {

using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

std::size_t register_value(const RegisterLayout &layout, Register reg, std::size_t idx) {
    switch (reg) {
    case Register::Main: return idx / layout.ancilla_dim();
    case Register::Workspace: return (idx / layout.vote_dim()) % layout.workspace_dim();
    case Register::Vote: return idx % layout.vote_dim();
    }
    return 0;
}

std::size_t register_size(const RegisterLayout &layout, Register reg) {
    switch (reg) {
    case Register::Main: return layout.main_dim;
    case Register::Workspace: return layout.workspace_dim();
    case Register::Vote: return layout.vote_dim();
    }
    return 0;
}

void require_dense_cap(std::size_t dim) {
    require(dim <= kTol.dense_matrix_cap, ErrorKind::ResourceCap,
            "dense materialization of dimension " + std::to_string(dim) +
                " exceeds cap; use the matrix-free applier");
}

} // namespace

std::string_view to_string(SchemeKind kind) noexcept {
    return kind == SchemeKind::Basic ? "basic" : "boosted";
}

RegisterLayout InversionScheme::layout(std::size_t main_dim) const {
    return {main_dim, mu, kind == SchemeKind::Boosted ? nu : 0U};
}

SubspaceMask InversionScheme::x() const { return x_mask(theta_min, delta, mu); }

std::uint64_t InversionScheme::controlled_s_per_application() const {
    const std::uint64_t p = std::uint64_t{1} << (mu + 1);
    return kind == SchemeKind::Basic ? p : p * (1 + 2 * std::uint64_t{nu});
}

void InversionScheme::validate() const {
    require(mu >= 1 && mu <= 30, ErrorKind::InvalidParameters,
            "scheme: mu must lie in [1, 30], got " + std::to_string(mu));
    if (kind == SchemeKind::Boosted) {
        require(nu >= 2 && nu % 2 == 0 && nu <= 20, ErrorKind::InvalidParameters,
                "scheme: boosted nu must be even and in [2, 20], got " + std::to_string(nu));
    } else {
        require(nu == 0, ErrorKind::InvalidParameters, "scheme: basic scheme takes no vote qubits");
    }
    (void)x();
}

unsigned vote_qubits_for(double big_b) {
    require(std::isfinite(big_b) && big_b >= 1.0, ErrorKind::InvalidParameters,
            "vote qubits: B must be >= 1");
    auto nu = static_cast<unsigned>(std::ceil(5.0 * std::log(big_b)));
    nu += nu % 2;
    return std::max(nu, 2U);
}

InversionScheme basic_scheme(double big_b, double theta_min, int b, double delta) {
    require(big_b >= 1.0 && theta_min > 0.0, ErrorKind::InvalidParameters,
            "basic scheme: need B >= 1 and theta_min > 0");
    const int mu = static_cast<int>(std::ceil(2.0 * std::log2(big_b) - std::log2(theta_min))) + b;
    require(mu >= 1, ErrorKind::InvalidParameters, "basic scheme: sizing gave mu < 1");
    InversionScheme s;
    s.kind = SchemeKind::Basic;
    s.mu = static_cast<unsigned>(mu);
    s.delta = delta;
    s.b = b;
    s.theta_min = theta_min;
    s.validate();
    return s;
}

InversionScheme boosted_scheme(double big_b, double theta_min, int mu_offset, double delta) {
    require(big_b >= 1.0 && theta_min > 0.0, ErrorKind::InvalidParameters,
            "boosted scheme: need B >= 1 and theta_min > 0");
    const int mu = static_cast<int>(std::ceil(-std::log2(theta_min))) + mu_offset;
    require(mu >= 1, ErrorKind::InvalidParameters, "boosted scheme: sizing gave mu < 1");
    InversionScheme s;
    s.kind = SchemeKind::Boosted;
    s.mu = static_cast<unsigned>(mu);
    s.nu = vote_qubits_for(big_b);
    s.delta = delta;
    s.mu_offset = mu_offset;
    s.theta_min = theta_min;
    s.validate();
    return s;
}

UnitaryMatrix build_iz(const SubspaceMask &mask, const RegisterLayout &layout) {
    require(mask.register_dim == register_size(layout, mask.reg), ErrorKind::DimensionMismatch,
            "build_iz: mask does not match the register");
    require_dense_cap(layout.size());
    std::vector<double> phases(layout.size(), 0.0);
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (mask.contains(register_value(layout, mask.reg, i))) {
            phases[i] = kPi;
        }
    }
    ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(layout.size()),
                                          static_cast<Eigen::Index>(layout.size()));
    for (std::size_t i = 0; i < layout.size(); ++i) {
        d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = phases[i] == 0.0 ? 1.0 : -1.0;
    }
    return UnitaryMatrix(std::move(d));
}

void apply_iz(StateVector &state, const SubspaceMask &mask) {
    const RegisterLayout &layout = state.layout();
    require(mask.register_dim == register_size(layout, mask.reg), ErrorKind::DimensionMismatch,
            "apply_iz: mask does not match the register");
    const std::vector<char> ind = mask.indicator();
    auto &amps = state.amplitudes();
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (ind[register_value(layout, mask.reg, i)] != 0) {
            amps[static_cast<Eigen::Index>(i)] = -amps[static_cast<Eigen::Index>(i)];
        }
    }
}

SubspaceMask w_mask(unsigned nu) {
    require(nu >= 2 && nu % 2 == 0 && nu < 31, ErrorKind::InvalidParameters,
            "w_mask: nu must be even and >= 2");
    const std::size_t dim = std::size_t{1} << nu;
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < dim; ++v) {
        const auto zeros = nu - static_cast<unsigned>(std::popcount(v));
        if (2 * zeros < nu) {
            members.push_back(v);
        }
    }
    return {Register::Vote, dim, std::move(members)};
}

ExactPairInversion::ExactPairInversion(const RelevantPair &pair, RegisterLayout layout)
    : plus_(pair.vec_plus), minus_(pair.vec_minus), layout_(layout) {
    require(static_cast<std::size_t>(plus_.size()) == layout_.main_dim,
            ErrorKind::DimensionMismatch, "exact inversion: layout does not match the pair");
}

void ExactPairInversion::apply(StateVector &state, QueryLedger * /*ledger*/) const {
    require(state.layout() == layout_, ErrorKind::DimensionMismatch,
            "exact inversion: state layout mismatch");
    const auto n = static_cast<Eigen::Index>(layout_.main_dim);
    const auto cols = static_cast<Eigen::Index>(layout_.ancilla_dim());
    Eigen::Map<RowMajor> amps(state.amplitudes().data(), n, cols);
    const Eigen::RowVectorXcd cp = plus_.adjoint() * amps;
    const Eigen::RowVectorXcd cm = minus_.adjoint() * amps;
    amps -= 2.0 * (plus_ * cp + minus_ * cm);
}

ApproximateInversion::ApproximateInversion(const SearchOperator &s, InversionScheme scheme)
    : eig_(s.eig), scheme_(scheme), layout_(scheme.layout(static_cast<std::size_t>(s.op.dim()))) {
    scheme_.validate();
    require(eig_.dim() == s.op.dim(), ErrorKind::PreconditionViolation,
            "approximate inversion: search operator has no eigendecomposition");
    layout_.check_cap(kTol.dense_cap);
    x_indicator_ = scheme_.x().indicator();
    if (scheme_.kind == SchemeKind::Boosted) {
        w_indicator_ = w_mask(scheme_.nu).indicator();
    }
}

template <typename BlockFn>
void ApproximateInversion::for_each_block(StateVector &state, BlockFn &&fn) const {
    require(state.layout() == layout_, ErrorKind::DimensionMismatch,
            "approximate inversion: state layout mismatch");
    const auto n = static_cast<Eigen::Index>(layout_.main_dim);
    const auto cols = static_cast<Eigen::Index>(layout_.ancilla_dim());
    Eigen::Map<RowMajor> amps(state.amplitudes().data(), n, cols);
    RowMajor eigen_coords = eig_.eigenvectors.adjoint() * amps;
    for (Eigen::Index k = 0; k < n; ++k) {
        fn(static_cast<std::size_t>(k),
           std::span<Complex>(eigen_coords.row(k).data(), static_cast<std::size_t>(cols)));
    }
    amps.noalias() = eig_.eigenvectors * eigen_coords;
}

void ApproximateInversion::apply(StateVector &state, QueryLedger *ledger) const {
    for_each_block(state, [this](std::size_t k, std::span<Complex> f) { apply_block(k, f); });
    if (ledger != nullptr) {
        ledger->charge_controlled_s(scheme_.controlled_s_per_application());
        if (scheme_.kind == SchemeKind::Boosted) {
            ledger->i_zero_prime += 2 * std::uint64_t{scheme_.nu};
            ledger->hadamards_vote += 4 * std::uint64_t{scheme_.nu};
        }
    }
}

void ApproximateInversion::apply_c(StateVector &state) const {
    for_each_block(state, [this](std::size_t k, std::span<Complex> f) {
        apply_c_block(eig_.eigenphases[k], f);
    });
}

void ApproximateInversion::apply_c_adjoint(StateVector &state) const {
    for_each_block(state, [this](std::size_t k, std::span<Complex> f) {
        apply_c_adjoint_block(eig_.eigenphases[k], f);
    });
}

void ApproximateInversion::apply_block(std::size_t k, std::span<Complex> fiber) const {
    require(k < eig_.eigenphases.size(), ErrorKind::InvalidParameters, "block index out of range");
    require(fiber.size() == layout_.ancilla_dim(), ErrorKind::DimensionMismatch,
            "block fiber length mismatch");
    const double lambda = eig_.eigenphases[k];
    apply_c_block(lambda, fiber);
    const std::size_t vdim = layout_.vote_dim();
    if (scheme_.kind == SchemeKind::Basic) {
        kernels::phase_flip(fiber.data(), layout_.workspace_dim(), vdim, x_indicator_);
    } else {
        for (std::size_t w = 0; w < layout_.workspace_dim(); ++w) {
            kernels::phase_flip(fiber.data() + w * vdim, vdim, 1, w_indicator_);
        }
    }
    apply_c_adjoint_block(lambda, fiber);
}

void ApproximateInversion::apply_c_block(double lambda, std::span<Complex> fiber) const {
    const std::size_t mdim = layout_.workspace_dim();
    const std::size_t vdim = layout_.vote_dim();
    for (std::size_t v = 0; v < vdim; ++v) {
        spectral::phase_estimation(fiber.data() + v, mdim, vdim, lambda);
    }
    if (layout_.vote_qubits == 0) {
        return;
    }
    const std::vector<Complex> phi = phi_amplitudes(lambda, layout_.workspace_qubits).amplitudes;
    for (unsigned j = 0; j < layout_.vote_qubits; ++j) {
        for (std::size_t w = 0; w < mdim; ++w) {
            kernels::hadamard(fiber.subspan(w * vdim, vdim), j);
        }
        for (std::size_t v = 0; v < vdim; ++v) {
            if ((v >> j) & 1U) {
                reflect_aa(phi, fiber.data() + v, vdim, false);
            }
        }
        for (std::size_t w = 0; w < mdim; ++w) {
            kernels::hadamard(fiber.subspan(w * vdim, vdim), j);
        }
    }
}

void ApproximateInversion::apply_c_adjoint_block(double lambda, std::span<Complex> fiber) const {
    const std::size_t mdim = layout_.workspace_dim();
    const std::size_t vdim = layout_.vote_dim();
    if (layout_.vote_qubits > 0) {
        const std::vector<Complex> phi =
            phi_amplitudes(lambda, layout_.workspace_qubits).amplitudes;
        for (unsigned j = layout_.vote_qubits; j-- > 0;) {
            for (std::size_t w = 0; w < mdim; ++w) {
                kernels::hadamard(fiber.subspan(w * vdim, vdim), j);
            }
            for (std::size_t v = 0; v < vdim; ++v) {
                if ((v >> j) & 1U) {
                    reflect_aa(phi, fiber.data() + v, vdim, true);
                }
            }
            for (std::size_t w = 0; w < mdim; ++w) {
                kernels::hadamard(fiber.subspan(w * vdim, vdim), j);
            }
        }
    }
    for (std::size_t v = 0; v < vdim; ++v) {
        spectral::phase_estimation_adjoint(fiber.data() + v, mdim, vdim, lambda);
    }
}

// On the block of eigenphase lambda, P (1 (x) I_0') P^dag is the reflection
// 1 - 2 |phi_lambda><phi_lambda|, so A = -I_phi I_X needs no transforms.
void ApproximateInversion::reflect_aa(const std::vector<Complex> &phi, Complex *work,
                                      std::size_t stride, bool adjoint) const {
    const std::size_t mdim = layout_.workspace_dim();
    if (!adjoint) {
        kernels::phase_flip(work, mdim, stride, x_indicator_);
    }
    Complex overlap = 0.0;
    for (std::size_t z = 0; z < mdim; ++z) {
        overlap += std::conj(phi[z]) * work[z * stride];
    }
    for (std::size_t z = 0; z < mdim; ++z) {
        work[z * stride] = 2.0 * overlap * phi[z] - work[z * stride];
    }
    if (adjoint) {
        kernels::phase_flip(work, mdim, stride, x_indicator_);
    }
}

void ApproximateInversion::apply_aa_block(double lambda, Complex *work, std::size_t stride) const {
    reflect_aa(phi_amplitudes(lambda, layout_.workspace_qubits).amplitudes, work, stride, false);
}

void ApproximateInversion::apply_aa_adjoint_block(double lambda, Complex *work,
                                                  std::size_t stride) const {
    reflect_aa(phi_amplitudes(lambda, layout_.workspace_qubits).amplitudes, work, stride, true);
}

ApproximateInversion build_r_basic(const SearchOperator &s, const InversionScheme &scheme) {
    require(scheme.kind == SchemeKind::Basic, ErrorKind::InvalidParameters,
            "build_r_basic: scheme is not basic");
    return {s, scheme};
}

ApproximateInversion build_r_boosted(const SearchOperator &s, const InversionScheme &scheme) {
    require(scheme.kind == SchemeKind::Boosted, ErrorKind::InvalidParameters,
            "build_r_boosted: scheme is not boosted");
    return {s, scheme};
}

UnitaryMatrix build_p_dense(const UnitaryMatrix &s, unsigned mu) {
    require(mu >= 1, ErrorKind::InvalidParameters, "build_p_dense: mu must be >= 1");
    const auto n = s.dim();
    const auto m = static_cast<Eigen::Index>(std::size_t{1} << mu);
    require_dense_cap(static_cast<std::size_t>(n * m));
    const double r = 1.0 / std::sqrt(static_cast<double>(m));

    ComplexMatrix h(m, m);
    ComplexMatrix fdag(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
        for (Eigen::Index z = 0; z < m; ++z) {
            h(k, z) = (std::popcount(static_cast<std::uint64_t>(k & z)) % 2 == 0) ? r : -r;
            fdag(k, z) = std::polar(r, -kTwoPi * static_cast<double>((k * z) % m) /
                                           static_cast<double>(m));
        }
    }
    // sum_z S^z (x) |z><z|, main-major ordering.
    ComplexMatrix cz = ComplexMatrix::Zero(n * m, n * m);
    ComplexMatrix power = ComplexMatrix::Identity(n, n);
    for (Eigen::Index z = 0; z < m; ++z) {
        for (Eigen::Index a = 0; a < n; ++a) {
            for (Eigen::Index b = 0; b < n; ++b) {
                cz(a * m + z, b * m + z) = power(a, b);
            }
        }
        power = s.matrix() * power;
    }
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    ComplexMatrix p = kron(id, fdag) * cz * kron(id, h);
    return UnitaryMatrix(std::move(p), kTol.unitarity_loose);
}

UnitaryMatrix build_aa_operator(const UnitaryMatrix &s, const InversionScheme &scheme) {
    const UnitaryMatrix p = build_p_dense(s, scheme.mu);
    const auto n = s.dim();
    const auto m = static_cast<Eigen::Index>(std::size_t{1} << scheme.mu);
    const std::vector<char> x = scheme.x().indicator();
    ComplexVector i0(n * m);
    ComplexVector ix(n * m);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index z = 0; z < m; ++z) {
            i0[a * m + z] = z == 0 ? -1.0 : 1.0;
            ix[a * m + z] = x[static_cast<std::size_t>(z)] != 0 ? -1.0 : 1.0;
        }
    }
    ComplexMatrix iphi = p.matrix() * i0.asDiagonal() * p.matrix().adjoint();
    ComplexMatrix a = -(iphi * ix.asDiagonal());
    return UnitaryMatrix(std::move(a), kTol.unitarity_loose);
}

StateVector prepare_vote_qubits(const StateVector &post_p, const UnitaryMatrix &aa, unsigned nu,
                                QueryLedger *ledger) {
    const RegisterLayout in = post_p.layout();
    require(in.vote_qubits == 0, ErrorKind::InvalidParameters,
            "prepare_vote_qubits: state already carries vote qubits");
    require(nu >= 1 && nu <= 20, ErrorKind::InvalidParameters,
            "prepare_vote_qubits: nu out of range");
    const std::size_t base_dim = in.main_dim * in.workspace_dim();
    require(static_cast<std::size_t>(aa.dim()) == base_dim, ErrorKind::DimensionMismatch,
            "prepare_vote_qubits: A does not act on main (x) workspace");

    const RegisterLayout out{in.main_dim, in.workspace_qubits, nu};
    out.check_cap(kTol.dense_cap);
    const std::size_t vdim = out.vote_dim();
    ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(out.size()));
    for (std::size_t i = 0; i < base_dim; ++i) {
        amps[static_cast<Eigen::Index>(i * vdim)] = post_p.amplitudes()[static_cast<Eigen::Index>(i)];
    }
    // Rows index main (x) workspace, columns the vote register.
    Eigen::Map<RowMajor> grid(amps.data(), static_cast<Eigen::Index>(base_dim),
                              static_cast<Eigen::Index>(vdim));
    for (unsigned j = 0; j < nu; ++j) {
        for (std::size_t i = 0; i < base_dim; ++i) {
            kernels::hadamard(std::span<Complex>(amps.data() + i * vdim, vdim), j);
        }
        for (std::size_t v = 0; v < vdim; ++v) {
            if ((v >> j) & 1U) {
                const ComplexVector col = grid.col(static_cast<Eigen::Index>(v));
                grid.col(static_cast<Eigen::Index>(v)) = aa.matrix() * col;
            }
        }
        for (std::size_t i = 0; i < base_dim; ++i) {
            kernels::hadamard(std::span<Complex>(amps.data() + i * vdim, vdim), j);
        }
    }
    if (ledger != nullptr) {
        ledger->charge_controlled_s(std::uint64_t{nu} * (std::uint64_t{1} << (in.workspace_qubits + 1)));
        ledger->i_zero_prime += nu;
        ledger->hadamards_vote += 2 * std::uint64_t{nu};
    }
    return {out, std::move(amps)};
}

UnitaryMatrix build_r_dense(const UnitaryMatrix &s, const InversionScheme &scheme) {
    scheme.validate();
    const RegisterLayout layout = scheme.layout(static_cast<std::size_t>(s.dim()));
    require_dense_cap(layout.size());
    const auto dim = static_cast<Eigen::Index>(layout.size());
    const auto base = static_cast<Eigen::Index>(layout.main_dim * layout.workspace_dim());
    const auto vdim = static_cast<Eigen::Index>(layout.vote_dim());

    const UnitaryMatrix p = build_p_dense(s, scheme.mu);
    ComplexMatrix c = kron(p.matrix(), ComplexMatrix::Identity(vdim, vdim));
    ComplexMatrix iz;
    if (scheme.kind == SchemeKind::Basic) {
        iz = build_iz(scheme.x(), layout).matrix();
    } else {
        const UnitaryMatrix aa = build_aa_operator(s, scheme);
        const double r = 1.0 / std::sqrt(2.0);
        for (unsigned j = 0; j < scheme.nu; ++j) {
            // H on vote qubit j, then A controlled by it.
            ComplexMatrix hv = ComplexMatrix::Zero(vdim, vdim);
            for (Eigen::Index v = 0; v < vdim; ++v) {
                const Eigen::Index flip = v ^ (Eigen::Index{1} << j);
                hv(v, v) = ((v >> j) & 1) ? -r : r;
                hv(flip, v) = r;
            }
            const ComplexMatrix h = kron(ComplexMatrix::Identity(base, base), hv);
            ComplexMatrix ca = ComplexMatrix::Zero(dim, dim);
            for (Eigen::Index v = 0; v < vdim; ++v) {
                const bool on = (v >> j) & 1;
                for (Eigen::Index a = 0; a < base; ++a) {
                    if (!on) {
                        ca(a * vdim + v, a * vdim + v) = 1.0;
                        continue;
                    }
                    for (Eigen::Index b = 0; b < base; ++b) {
                        ca(a * vdim + v, b * vdim + v) = aa.matrix()(a, b);
                    }
                }
            }
            c = h * ca * h * c;
        }
        iz = build_iz(w_mask(scheme.nu), layout).matrix();
    }
    ComplexMatrix r = c.adjoint() * iz * c;
    return UnitaryMatrix(std::move(r), kTol.unitarity_loose);
}

double predicted_epsilon_bound(const InversionScheme &scheme, double big_b) {
    if (scheme.kind == SchemeKind::Basic) {
        return std::sqrt(1.0 / (std::ldexp(1.0, static_cast<int>(scheme.mu) - 6) * scheme.theta_min));
    }
    return 1.0 / big_b;
}

EpsilonReport measure_epsilon(const ApproximateInversion &r, const RelevantPair &pair,
                              double big_b) {
    const std::size_t cols = r.layout().ancilla_dim();
    EpsilonReport rep;
    rep.predicted_bound = predicted_epsilon_bound(r.scheme(), big_b);
    std::vector<Complex> fiber(cols);
    for (std::size_t k = 0; k < r.eig().eigenphases.size(); ++k) {
        std::fill(fiber.begin(), fiber.end(), Complex(0.0));
        fiber[0] = 1.0;
        r.apply_block(k, fiber);
        EigenError e;
        e.eigenphase = r.eig().eigenphases[k];
        e.relevant = k == pair.index_plus || k == pair.index_minus;
        fiber[0] -= e.relevant ? -1.0 : 1.0;
        double acc = 0.0;
        for (const Complex &c : fiber) {
            acc += std::norm(c);
        }
        e.error = std::sqrt(acc);
        rep.epsilon_max = std::max(rep.epsilon_max, e.error);
        rep.per_eigenstate.push_back(e);
    }
    return rep;
}

std::vector<KickbackEntry> analyze_kickback(const ApproximateInversion &r) {
    const std::size_t mdim = r.layout().workspace_dim();
    const std::vector<char> x = r.scheme().x().indicator();
    std::vector<KickbackEntry> out;
    for (double lambda : r.eig().eigenphases) {
        std::vector<Complex> phi(mdim, Complex(0.0));
        phi[0] = 1.0;
        spectral::phase_estimation(phi.data(), mdim, 1, lambda);

        KickbackEntry e;
        e.eigenphase = lambda;
        std::vector<Complex> in_x(mdim, Complex(0.0));
        std::vector<Complex> out_x(mdim, Complex(0.0));
        double px = 0.0;
        for (std::size_t k = 0; k < mdim; ++k) {
            (x[k] != 0 ? in_x : out_x)[k] = phi[k];
            if (x[k] != 0) {
                px += std::norm(phi[k]);
            }
        }
        e.prob_x = std::min(1.0, px);
        e.beta = std::asin(std::sqrt(e.prob_x));

        auto normalize = [](std::vector<Complex> &v) {
            double n = 0.0;
            for (const Complex &c : v) {
                n += std::norm(c);
            }
            n = std::sqrt(n);
            if (n > 1e-14) {
                for (Complex &c : v) {
                    c /= n;
                }
            }
            return n > 1e-14;
        };
        auto inner = [](const std::vector<Complex> &a, const std::vector<Complex> &b) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                acc += std::conj(a[i]) * b[i];
            }
            return acc;
        };
        const bool has_in = normalize(in_x);
        const bool has_out = normalize(out_x);
        if (has_in && has_out) {
            std::vector<Complex> a_in = in_x;
            std::vector<Complex> a_out = out_x;
            r.apply_aa_block(lambda, a_in.data(), 1);
            r.apply_aa_block(lambda, a_out.data(), 1);
            Eigen::Matrix2cd block;
            block << inner(in_x, a_in), inner(in_x, a_out), inner(out_x, a_in), inner(out_x, a_out);
            const Eigen::Vector2cd ev = block.eigenvalues();
            e.omega = 0.25 * (std::abs(std::arg(ev[0])) + std::abs(std::arg(ev[1])));
        } else {
            std::vector<Complex> a_phi = phi;
            r.apply_aa_block(lambda, a_phi.data(), 1);
            e.omega = 0.5 * std::abs(std::arg(inner(phi, a_phi)));
        }
        out.push_back(e);
    }
    return out;
}

} // namespace qsearch
