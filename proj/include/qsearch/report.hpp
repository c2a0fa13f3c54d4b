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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsearch/ledger.hpp"
#include "qsearch/pipeline.hpp"
#include "qsearch/selective_inversion.hpp"
#include "qsearch/spectra.hpp"

namespace qsearch {

using Json = nlohmann::ordered_json;

/// {N, s, t, eigenphases, eigenbasis, theta_min, seed}; the eigenbasis is
/// row-major [re, im] pairs. Doubles are written in shortest round-trip form,
/// so reading back is bit-exact.
Json spec_to_json(const DiffusionSpec &spec, std::optional<std::size_t> target = std::nullopt);
/// Throws InvalidConfig on malformed documents and InvalidSpectrum when the
/// decoded spec fails validation.
DiffusionSpec spec_from_json(const Json &doc);
std::optional<std::size_t> target_from_json(const Json &doc);

Json to_json(const QueryLedger &ledger);
Json to_json(const InstanceSummary &summary);
Json to_json(const InversionScheme &scheme);
Json to_json(const RelevantPair &pair);
Json to_json(const EpsilonReport &report);
Json to_json(const std::vector<KickbackEntry> &entries);
Json to_json(const PipelineResult &result);
Json to_json(const BaselineResult &result);
Json to_json(const ScheduleResult &result);
Json to_json(const ComplexityReport &report);

/// Fixed complexity-table header.
std::string csv_header();
std::string csv_row(const PipelineResult &result);
std::string csv_table(const std::vector<PipelineResult> &results);

/// %.17g, with "nan" / "inf" spelled out.
std::string format_number(double x);

} // namespace qsearch
