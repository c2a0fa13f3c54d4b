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

#include "qsearch/ledger.hpp"
#include "qsearch/phase_estimation.hpp"
#include "qsearch/register.hpp"
#include "qsearch/search_core.hpp"

namespace qsearch {

enum class SchemeKind { Basic, Boosted };

std::string_view to_string(SchemeKind kind) noexcept;

/// Parameters of the approximate inversion R = C^dag (1 (x) I_Z) C.
///
/// basic:   C = P, Z = X.
/// boosted: C = (nu kickback stages) P, Z = W on the vote register.
struct InversionScheme {
    SchemeKind kind = SchemeKind::Basic;
    unsigned mu = 0;
    double delta = kDefaultDelta;
    unsigned nu = 0;
    int b = 7;
    int mu_offset = 16;
    /// Spectral gap assumed when drawing the X window. Normally the
    /// instance's theta_min; a guess when the gap is unknown.
    double theta_min = 0.0;

    [[nodiscard]] RegisterLayout layout(std::size_t main_dim) const;
    [[nodiscard]] SubspaceMask x() const;
    /// Controlled-S charged per application of R: 2^{mu+1} for the basic
    /// scheme, 2^{mu+1} (1 + 2 nu) for the boosted one.
    [[nodiscard]] std::uint64_t controlled_s_per_application() const;
    void validate() const;
};

/// mu = ceil(2 log2 B - log2 theta_min) + b
InversionScheme basic_scheme(double big_b, double theta_min, int b = 7,
                             double delta = kDefaultDelta);
/// mu = ceil(-log2 theta_min) + mu_offset, nu = vote_qubits_for(B)
InversionScheme boosted_scheme(double big_b, double theta_min, int mu_offset = 16,
                               double delta = kDefaultDelta);
/// ceil(5 ln B) rounded up to even, at least 2.
unsigned vote_qubits_for(double big_b);

/// Dense +/-1 diagonal on the full layout: -1 where the mask's register is
/// in a member state.
UnitaryMatrix build_iz(const SubspaceMask &mask, const RegisterLayout &layout);
void apply_iz(StateVector &state, const SubspaceMask &mask);

/// Vote states with strictly fewer than nu/2 zeros (all-ones included).
/// Throws InvalidParameters for odd nu or nu < 2.
SubspaceMask w_mask(unsigned nu);

/// Anything that acts as a selective inversion on the joint space.
class PhaseInversion {
  public:
    virtual ~PhaseInversion() = default;
    [[nodiscard]] virtual const RegisterLayout &layout() const = 0;
    virtual void apply(StateVector &state, QueryLedger *ledger) const = 0;
};

/// I_{lambda+-} (x) 1 built from the exact eigenvectors; the ceiling any
/// approximation can reach.
class ExactPairInversion final : public PhaseInversion {
  public:
    ExactPairInversion(const RelevantPair &pair, RegisterLayout layout);
    [[nodiscard]] const RegisterLayout &layout() const override { return layout_; }
    void apply(StateVector &state, QueryLedger *ledger) const override;

  private:
    ComplexVector plus_;
    ComplexVector minus_;
    RegisterLayout layout_;
};

/// Matrix-free R. The joint state is rotated into the eigenbasis of S, where
/// every stage of C is block diagonal, each block is processed on its own
/// workspace (x) vote fiber, and the state is rotated back.
class ApproximateInversion final : public PhaseInversion {
  public:
    ApproximateInversion(const SearchOperator &s, InversionScheme scheme);

    [[nodiscard]] const RegisterLayout &layout() const override { return layout_; }
    [[nodiscard]] const InversionScheme &scheme() const noexcept { return scheme_; }
    [[nodiscard]] const EigenDecomposition &eig() const noexcept { return eig_; }

    void apply(StateVector &state, QueryLedger *ledger) const override;
    void apply_c(StateVector &state) const;
    void apply_c_adjoint(StateVector &state) const;

    /// R, C or C^dag restricted to eigenstate `k` of S: `fiber` holds the
    /// workspace (x) vote amplitudes of that block.
    void apply_block(std::size_t k, std::span<Complex> fiber) const;
    void apply_c_block(double lambda, std::span<Complex> fiber) const;
    void apply_c_adjoint_block(double lambda, std::span<Complex> fiber) const;

    /// A(phi_lambda, X) = -I_phi I_X on one workspace fiber (and its adjoint).
    void apply_aa_block(double lambda, Complex *work, std::size_t stride) const;
    void apply_aa_adjoint_block(double lambda, Complex *work, std::size_t stride) const;

  private:
    template <typename BlockFn> void for_each_block(StateVector &state, BlockFn &&fn) const;
    void reflect_aa(const std::vector<Complex> &phi, Complex *work, std::size_t stride,
                    bool adjoint) const;

    EigenDecomposition eig_;
    InversionScheme scheme_;
    RegisterLayout layout_;
    std::vector<char> x_indicator_;
    std::vector<char> w_indicator_;
};

ApproximateInversion build_r_basic(const SearchOperator &s, const InversionScheme &scheme);
ApproximateInversion build_r_boosted(const SearchOperator &s, const InversionScheme &scheme);

/// Dense P on main (x) workspace from explicit powers of S.
UnitaryMatrix build_p_dense(const UnitaryMatrix &s, unsigned mu);

/// A = -[P (1 (x) I_0') P^dag] (1 (x) I_X), dense on main (x) workspace.
UnitaryMatrix build_aa_operator(const UnitaryMatrix &s, const InversionScheme &scheme);

/// Appends nu vote qubits in |0> to a post-P state on main (x) workspace and,
/// for each vote qubit, applies H, controlled-A and H. Charges nu 2^{mu+1}
/// controlled-S.
StateVector prepare_vote_qubits(const StateVector &post_p, const UnitaryMatrix &aa,
                                unsigned nu, QueryLedger *ledger = nullptr);

/// R materialized from dense stage matrices. Throws ResourceCap past the
/// dense matrix cap.
UnitaryMatrix build_r_dense(const UnitaryMatrix &s, const InversionScheme &scheme);

struct EigenError {
    double eigenphase = 0.0;
    bool relevant = false; // member of the lambda+- pair, target sign -1
    double error = 0.0;    // |R|lambda,0> - s_lambda |lambda,0>|
};

struct EpsilonReport {
    std::vector<EigenError> per_eigenstate;
    double epsilon_max = 0.0;
    double predicted_bound = 0.0;
    [[nodiscard]] bool within_bound() const noexcept { return epsilon_max <= predicted_bound; }
};

/// Basic bound sqrt(1 / (2^{mu-6} theta_min)); boosted target 1/B.
double predicted_epsilon_bound(const InversionScheme &scheme, double big_b);

EpsilonReport measure_epsilon(const ApproximateInversion &r, const RelevantPair &pair,
                              double big_b);

struct KickbackEntry {
    double eigenphase = 0.0;
    double prob_x = 0.0; // sum_{k in X} |<k|phi_lambda>|^2
    double omega = 0.0;  // from the eigenvalues e^{+-2 i omega} of A on its invariant plane
    double beta = 0.0;   // asin sqrt(prob_x)
};

/// omega per eigenstate of S, measured by diagonalizing A restricted to
/// span{Pi_X phi, Pi_X^perp phi}.
std::vector<KickbackEntry> analyze_kickback(const ApproximateInversion &r);

} // namespace qsearch
