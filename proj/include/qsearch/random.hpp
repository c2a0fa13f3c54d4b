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

/// Counter-based generator: the n-th draw of stream (seed, key) is a pure
/// function of (seed, key, n). Streams are split by key so independent trials
/// stay reproducible regardless of evaluation order.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t key = 0) noexcept;

    [[nodiscard]] CounterRng split(std::uint64_t key) const noexcept;

    std::uint64_t next_u64() noexcept;
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;
    /// Standard normal via Box-Muller; consumes two draws per call.
    double normal() noexcept;

    [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_; }

  private:
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

} // namespace qsearch
