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
#include "qsearch/register.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsearch/error.hpp"

namespace qsearch {

void RegisterLayout::check_cap(std::size_t cap) const {
    require(main_dim >= 1, ErrorKind::InvalidDimension, "register layout: empty mainspace");
    require(workspace_qubits + vote_qubits < 48, ErrorKind::ResourceCap,
            "register layout: ancilla register too large");
    require(size() <= cap, ErrorKind::ResourceCap,
            "joint space of " + std::to_string(size()) + " amplitudes exceeds cap " +
                std::to_string(cap));
}

std::string_view to_string(Register r) noexcept {
    switch (r) {
    case Register::Main: return "main";
    case Register::Workspace: return "workspace";
    case Register::Vote: return "vote";
    }
    return "unknown";
}

SubspaceMask::SubspaceMask(Register r, std::size_t dim, std::vector<std::size_t> indices)
    : reg(r), register_dim(dim), members(std::move(indices)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    require(members.empty() || members.back() < register_dim, ErrorKind::InvalidParameters,
            "subspace mask index out of range");
}

bool SubspaceMask::contains(std::size_t k) const noexcept {
    return std::binary_search(members.begin(), members.end(), k);
}

SubspaceMask SubspaceMask::complement() const {
    std::vector<std::size_t> rest;
    rest.reserve(register_dim - members.size());
    for (std::size_t k = 0; k < register_dim; ++k) {
        if (!contains(k)) {
            rest.push_back(k);
        }
    }
    return {reg, register_dim, std::move(rest)};
}

std::vector<char> SubspaceMask::indicator() const {
    std::vector<char> out(register_dim, 0);
    for (std::size_t k : members) {
        out[k] = 1;
    }
    return out;
}

StateVector::StateVector(RegisterLayout layout, ComplexVector amplitudes)
    : layout_(layout), amps_(std::move(amplitudes)) {
    require(static_cast<std::size_t>(amps_.size()) == layout_.size(),
            ErrorKind::DimensionMismatch,
            "state vector has " + std::to_string(amps_.size()) + " amplitudes, layout needs " +
                std::to_string(layout_.size()));
}

StateVector StateVector::basis(RegisterLayout layout, std::size_t main, std::size_t work,
                               std::size_t vote) {
    require(main < layout.main_dim && work < layout.workspace_dim() && vote < layout.vote_dim(),
            ErrorKind::InvalidParameters, "basis state index out of range");
    ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(layout.size()));
    amps[static_cast<Eigen::Index>(layout.index(main, work, vote))] = 1.0;
    return {layout, std::move(amps)};
}

StateVector StateVector::with_ancillas_zero(const ComplexVector &main_state, unsigned mu,
                                            unsigned nu) {
    require(main_state.size() >= 1, ErrorKind::InvalidDimension, "empty main state");
    RegisterLayout layout{static_cast<std::size_t>(main_state.size()), mu, nu};
    ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(layout.size()));
    for (std::size_t m = 0; m < layout.main_dim; ++m) {
        amps[static_cast<Eigen::Index>(layout.index(m, 0, 0))] =
            main_state[static_cast<Eigen::Index>(m)];
    }
    return {layout, std::move(amps)};
}

ComplexVector StateVector::ancilla_zero_branch() const {
    ComplexVector out(static_cast<Eigen::Index>(layout_.main_dim));
    for (std::size_t m = 0; m < layout_.main_dim; ++m) {
        out[static_cast<Eigen::Index>(m)] = amps_[static_cast<Eigen::Index>(layout_.index(m, 0, 0))];
    }
    return out;
}

std::vector<double> StateVector::main_marginal() const {
    std::vector<double> out(layout_.main_dim, 0.0);
    const std::size_t block = layout_.ancilla_dim();
    for (std::size_t m = 0; m < layout_.main_dim; ++m) {
        double acc = 0.0;
        for (std::size_t j = 0; j < block; ++j) {
            acc += std::norm(amps_[static_cast<Eigen::Index>(m * block + j)]);
        }
        out[m] = acc;
    }
    return out;
}

namespace kernels {

namespace {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

void hadamard(std::span<Complex> amps, unsigned bit) {
    require(is_power_of_two(amps.size()), ErrorKind::InvalidDimension,
            "hadamard: register length must be a power of two");
    const std::size_t step = std::size_t{1} << bit;
    require(step < amps.size(), ErrorKind::InvalidParameters, "hadamard: bit out of range");
    const double h = 1.0 / std::sqrt(2.0);
    for (std::size_t base = 0; base < amps.size(); base += 2 * step) {
        for (std::size_t j = base; j < base + step; ++j) {
            const Complex a = amps[j];
            const Complex b = amps[j + step];
            amps[j] = h * (a + b);
            amps[j + step] = h * (a - b);
        }
    }
}

void walsh_hadamard(Complex *data, std::size_t length, std::size_t stride) {
    require(is_power_of_two(length), ErrorKind::InvalidDimension,
            "walsh_hadamard: length must be a power of two");
    for (std::size_t h = 1; h < length; h <<= 1U) {
        for (std::size_t base = 0; base < length; base += 2 * h) {
            for (std::size_t j = base; j < base + h; ++j) {
                Complex &a = data[j * stride];
                Complex &b = data[(j + h) * stride];
                const Complex x = a;
                a = x + b;
                b = x - b;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(length));
    for (std::size_t j = 0; j < length; ++j) {
        data[j * stride] *= scale;
    }
}

void dft(Complex *data, std::size_t length, std::size_t stride, int sign) {
    require(is_power_of_two(length), ErrorKind::InvalidDimension,
            "dft: length must be a power of two");
    require(sign == 1 || sign == -1, ErrorKind::InvalidParameters, "dft: sign must be +-1");
    if (length == 1) {
        return;
    }
    // Bit-reversal permutation, then iterative Cooley-Tukey.
    for (std::size_t i = 1, j = 0; i < length; ++i) {
        std::size_t bit = length >> 1U;
        for (; j & bit; bit >>= 1U) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(data[i * stride], data[j * stride]);
        }
    }
    for (std::size_t len = 2; len <= length; len <<= 1U) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        const std::size_t half = len / 2;
        for (std::size_t k = 0; k < half; ++k) {
            // Direct evaluation keeps twiddle error from accumulating.
            const Complex w = std::polar(1.0, ang * static_cast<double>(k));
            for (std::size_t base = 0; base < length; base += len) {
                Complex &a = data[(base + k) * stride];
                Complex &b = data[(base + k + half) * stride];
                const Complex t = w * b;
                b = a - t;
                a += t;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(length));
    for (std::size_t j = 0; j < length; ++j) {
        data[j * stride] *= scale;
    }
}

void phase_flip(Complex *data, std::size_t length, std::size_t stride,
                const std::vector<char> &indicator) {
    require(indicator.size() == length, ErrorKind::DimensionMismatch,
            "phase_flip: indicator length mismatch");
    for (std::size_t j = 0; j < length; ++j) {
        if (indicator[j] != 0) {
            data[j * stride] = -data[j * stride];
        }
    }
}

} // namespace kernels

} // namespace qsearch
