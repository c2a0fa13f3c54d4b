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

#include "oracles.hpp"
#include "qsearch/error.hpp"
#include "qsearch/random.hpp"
#include "qsearch/register.hpp"

using namespace qsearch;

namespace {

std::vector<Complex> random_amps(std::size_t n, std::uint64_t seed) {
    CounterRng rng(seed);
    std::vector<Complex> v(n);
    for (auto &x : v) {
        x = Complex(rng.normal(), rng.normal());
    }
    return v;
}

} // namespace

TEST_CASE("RegisterLayout index convention") {
    const RegisterLayout l{3, 2, 1};
    CHECK(l.workspace_dim() == 4);
    CHECK(l.vote_dim() == 2);
    CHECK(l.size() == 24);
    CHECK(l.index(0, 0, 0) == 0);
    CHECK(l.index(0, 0, 1) == 1);
    CHECK(l.index(0, 1, 0) == 2);
    CHECK(l.index(1, 0, 0) == 8);
    CHECK(l.index(2, 3, 1) == 23);
}

TEST_CASE("RegisterLayout cap") {
    const RegisterLayout l{16, 10, 4};
    CHECK_NOTHROW(l.check_cap(std::size_t{1} << 22));
    try {
        l.check_cap(std::size_t{1} << 17);
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::ResourceCap);
    }
}

TEST_CASE("SubspaceMask: sorted members, complement partitions the register") {
    const SubspaceMask m(Register::Workspace, 8, {5, 1, 1, 7});
    CHECK(m.members == std::vector<std::size_t>{1, 5, 7});
    const SubspaceMask c = m.complement();
    CHECK(c.members == std::vector<std::size_t>{0, 2, 3, 4, 6});
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(m.contains(k) != c.contains(k));
    }
    CHECK_THROWS_AS(SubspaceMask(Register::Vote, 4, {4}), Error);
}

TEST_CASE("StateVector factories and marginals") {
    const StateVector b = StateVector::basis({2, 2, 1}, 1, 3, 1);
    CHECK(b.amplitudes()[static_cast<Eigen::Index>(b.layout().index(1, 3, 1))] == Complex(1.0));
    CHECK(b.norm() == doctest::Approx(1.0));

    ComplexVector main(3);
    main << 0.6, Complex(0.0, 0.8), 0.0;
    const StateVector s = StateVector::with_ancillas_zero(main, 2, 2);
    CHECK((s.ancilla_zero_branch() - main).norm() < 1e-15);
    const std::vector<double> p = s.main_marginal();
    CHECK(p[0] == doctest::Approx(0.36));
    CHECK(p[1] == doctest::Approx(0.64));
    CHECK(p[2] == doctest::Approx(0.0));
    const RegisterLayout bad{2, 1, 0};
    CHECK_THROWS_AS(StateVector(bad, ComplexVector::Zero(3)), Error);
}

TEST_CASE("kernels::hadamard is an involution and matches the 2x2 matrix") {
    std::vector<Complex> v = random_amps(8, 1);
    const std::vector<Complex> orig = v;
    kernels::hadamard(v, 1);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(v[0] - r * (orig[0] + orig[2])) < 1e-15);
    CHECK(std::abs(v[2] - r * (orig[0] - orig[2])) < 1e-15);
    kernels::hadamard(v, 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(std::abs(v[i] - orig[i]) < 1e-12);
    }
}

TEST_CASE("kernels::dft matches the dense DFT matrix, both signs, strided") {
    for (unsigned mu = 1; mu <= 8; ++mu) {
        const std::size_t m = std::size_t{1} << mu;
        for (int sign : {-1, 1}) {
            std::vector<Complex> data = random_amps(2 * m, mu + 10);
            oracle::Vector in(static_cast<Eigen::Index>(m));
            for (std::size_t i = 0; i < m; ++i) {
                in[static_cast<Eigen::Index>(i)] = data[2 * i];
            }
            const oracle::Vector expected = oracle::dft_matrix(mu, sign) * in;
            kernels::dft(data.data(), m, 2, sign);
            double err = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                err = std::max(err, std::abs(data[2 * i] - expected[static_cast<Eigen::Index>(i)]));
            }
            CHECK(err < 1e-10);
        }
    }
}

TEST_CASE("kernels::walsh_hadamard matches the Kronecker power") {
    const unsigned mu = 5;
    const std::size_t m = std::size_t{1} << mu;
    std::vector<Complex> data = random_amps(m, 3);
    oracle::Vector in(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        in[static_cast<Eigen::Index>(i)] = data[i];
    }
    const oracle::Vector expected = oracle::hadamard_power(mu) * in;
    kernels::walsh_hadamard(data.data(), m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        CHECK(std::abs(data[i] - expected[static_cast<Eigen::Index>(i)]) < 1e-12);
    }
}

TEST_CASE("kernels reject non power-of-two lengths") {
    std::vector<Complex> v(6);
    CHECK_THROWS_AS(kernels::dft(v.data(), 6, 1, 1), Error);
    CHECK_THROWS_AS(kernels::walsh_hadamard(v.data(), 6, 1), Error);
}
