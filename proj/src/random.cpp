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
#include "qsearch/random.hpp"

#include <cmath>
#include <numbers>

namespace qsearch {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t key) noexcept
    : stream_(splitmix64(splitmix64(seed) ^ splitmix64(key + 0x632be59bd9b4e019ULL))) {}

CounterRng CounterRng::split(std::uint64_t key) const noexcept {
    return CounterRng(stream_, key);
}

std::uint64_t CounterRng::next_u64() noexcept {
    // Two rounds over (stream, counter) decorrelate neighbouring counters.
    const std::uint64_t c = counter_++;
    return splitmix64(stream_ ^ splitmix64(c));
}

double CounterRng::uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::normal() noexcept {
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace qsearch
