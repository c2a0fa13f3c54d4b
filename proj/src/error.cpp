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
#include "qsearch/error.hpp"

namespace qsearch {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::DegenerateSpectrum: return "degenerate-spectrum";
    case ErrorKind::InvalidSpectrum: return "invalid-spectrum";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::AssumptionViolation: return "assumption-violation";
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::ResourceCap: return "resource-cap";
    case ErrorKind::ScheduleFailure: return "schedule-failure";
    case ErrorKind::InvalidConfig: return "invalid-config";
    }
    return "unknown";
}

} // namespace qsearch
