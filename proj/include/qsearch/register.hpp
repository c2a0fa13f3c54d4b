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
#include <span>
#include <string_view>
#include <vector>

#include "qsearch/numerics.hpp"

namespace qsearch {

/// mainspace (N) x workspace (mu qubits) x vote register (nu qubits).
///
/// joint index = ((main * 2^mu) + work) * 2^nu + vote
struct RegisterLayout {
    std::size_t main_dim = 1;
    unsigned workspace_qubits = 0;
    unsigned vote_qubits = 0;

    [[nodiscard]] std::size_t workspace_dim() const noexcept {
        return std::size_t{1} << workspace_qubits;
    }
    [[nodiscard]] std::size_t vote_dim() const noexcept {
        return std::size_t{1} << vote_qubits;
    }
    /// Amplitudes per mainspace basis state.
    [[nodiscard]] std::size_t ancilla_dim() const noexcept {
        return workspace_dim() * vote_dim();
    }
    [[nodiscard]] std::size_t size() const noexcept { return main_dim * ancilla_dim(); }
    [[nodiscard]] std::size_t index(std::size_t main, std::size_t work,
                                    std::size_t vote) const noexcept {
        return ((main << workspace_qubits) + work) * vote_dim() + vote;
    }

    /// Throws ResourceCap if size() exceeds cap.
    void check_cap(std::size_t cap) const;

    friend bool operator==(const RegisterLayout &, const RegisterLayout &) = default;
};

enum class Register { Main, Workspace, Vote };

std::string_view to_string(Register r) noexcept;

/// A set of basis states of one register; its complement is implied.
struct SubspaceMask {
    Register reg = Register::Workspace;
    std::size_t register_dim = 0;
    std::vector<std::size_t> members; // sorted, unique

    SubspaceMask() = default;
    SubspaceMask(Register r, std::size_t dim, std::vector<std::size_t> indices);

    [[nodiscard]] bool contains(std::size_t k) const noexcept;
    [[nodiscard]] SubspaceMask complement() const;
    /// Dense 0/1 indicator of length register_dim.
    [[nodiscard]] std::vector<char> indicator() const;
};

/// Normalized amplitudes over a RegisterLayout.
class StateVector {
  public:
    StateVector() = default;
    StateVector(RegisterLayout layout, ComplexVector amplitudes);

    /// |main> |0'> |0...0>
    static StateVector basis(RegisterLayout layout, std::size_t main, std::size_t work = 0,
                             std::size_t vote = 0);
    /// main_state (x) |0'> |0...0>
    static StateVector with_ancillas_zero(const ComplexVector &main_state, unsigned mu,
                                          unsigned nu);

    [[nodiscard]] const RegisterLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] const ComplexVector &amplitudes() const noexcept { return amps_; }
    [[nodiscard]] ComplexVector &amplitudes() noexcept { return amps_; }
    [[nodiscard]] std::span<Complex> span() noexcept { return {amps_.data(), size()}; }
    [[nodiscard]] std::span<const Complex> span() const noexcept {
        return {amps_.data(), size()};
    }
    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(amps_.size());
    }
    [[nodiscard]] double norm() const { return amps_.norm(); }

    /// Amplitudes of the branch where workspace and vote registers are all zero.
    [[nodiscard]] ComplexVector ancilla_zero_branch() const;
    /// Probability of each mainspace outcome, ancillas marginalized.
    [[nodiscard]] std::vector<double> main_marginal() const;

  private:
    RegisterLayout layout_;
    ComplexVector amps_;
};

namespace kernels {

/// Hadamard on bit position `bit` of a flat register of 2^k amplitudes.
void hadamard(std::span<Complex> amps, unsigned bit);

/// In-place radix-2 DFT of 2^k entries spaced `stride` apart:
/// out_k = 2^{-k/2} sum_z exp(sign * 2 pi i k z / 2^k) in_z.
void dft(Complex *data, std::size_t length, std::size_t stride, int sign);

/// Fast Walsh-Hadamard transform (normalized) over `length` strided entries.
void walsh_hadamard(Complex *data, std::size_t length, std::size_t stride);

/// Multiply entries by -1 where the indicator is set.
void phase_flip(Complex *data, std::size_t length, std::size_t stride,
                const std::vector<char> &indicator);

} // namespace kernels

} // namespace qsearch
