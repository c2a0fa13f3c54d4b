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

#include <cstdint>

namespace qsearch {

/// Counts of the expensive primitives a run consumed. Each application of
/// S = D_s I_t, controlled or not, costs one diffusion and one oracle query.
struct QueryLedger {
    std::uint64_t ds_applications = 0;
    std::uint64_t oracle_queries = 0;
    std::uint64_t controlled_s = 0;
    std::uint64_t i_zero_prime = 0;
    std::uint64_t hadamards_vote = 0;

    void charge_s(std::uint64_t n = 1) noexcept {
        ds_applications += n;
        oracle_queries += n;
    }
    void charge_controlled_s(std::uint64_t n) noexcept {
        controlled_s += n;
        ds_applications += n;
        oracle_queries += n;
    }
    void charge_oracle(std::uint64_t n = 1) noexcept { oracle_queries += n; }

    QueryLedger &operator+=(const QueryLedger &o) noexcept {
        ds_applications += o.ds_applications;
        oracle_queries += o.oracle_queries;
        controlled_s += o.controlled_s;
        i_zero_prime += o.i_zero_prime;
        hadamards_vote += o.hadamards_vote;
        return *this;
    }
    friend QueryLedger operator+(QueryLedger a, const QueryLedger &b) noexcept {
        a += b;
        return a;
    }
    friend bool operator==(const QueryLedger &, const QueryLedger &) = default;
};

} // namespace qsearch
