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
#include <string>
#include <vector>

#include "qsearch/phase_estimation.hpp"
#include "qsearch/report.hpp"
#include "qsearch/selective_inversion.hpp"
#include "qsearch/spectra.hpp"

namespace qsearch {

/// Everything a command needs; JSON keys equal the field names and the
/// command-line flags are the same names with dashes.
struct RunConfig {
    std::string command;
    std::string preset = "symmetric"; // symmetric | grover
    std::string spec;                 // path to a spec document; overrides preset
    std::size_t n = 16;
    std::vector<double> pairs;        // pair phases; empty selects from b_target or pi/3
    double b_target = 0.0;
    long long target = -1;            // -1: first target in the alpha window
    std::uint64_t seed = 1;
    double max_alpha_ratio = 1.0 / 20;
    std::string scheme = "boosted";   // basic | boosted | exact
    unsigned mu = 0;                  // 0: auto-size
    unsigned nu = 0;                  // 0: auto-size
    double delta = kDefaultDelta;
    int b = 7;
    int mu_offset = 16;
    double theta_min = 0.0;           // 0: the instance's gap; schedule: initial guess
    std::vector<unsigned> mu_sweep;
    std::vector<unsigned> nu_sweep;
    std::vector<double> b_list{2.0, 3.0, 4.0};
    std::size_t trials = 1000;
    std::size_t max_rounds = 0;
    std::size_t dense_cap = std::size_t{1} << 22;
    std::string out;
    std::string format = "json";

    /// Throws InvalidConfig on any inconsistent field.
    void validate() const;
};

Json to_json(const RunConfig &config);
/// Overlays the keys present in doc onto base. Unknown keys are rejected.
RunConfig merge_config(RunConfig base, const Json &doc);

/// Pair phases the config resolves to.
std::vector<double> resolved_pairs(const RunConfig &config);
DiffusionSpec spec_from_config(const RunConfig &config);
SearchInstance instance_from_config(const RunConfig &config);
/// Scheme for the instance; mu/nu of zero are auto-sized, theta_min of zero
/// takes the instance's gap.
InversionScheme scheme_from_config(const RunConfig &config, const SearchInstance &inst);

} // namespace qsearch
