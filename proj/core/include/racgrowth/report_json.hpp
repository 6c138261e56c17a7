// Copyright 2026 The racgrowth Authors
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

#ifndef RACGROWTH_REPORT_JSON_HPP_
#define RACGROWTH_REPORT_JSON_HPP_

#include <nlohmann/json.hpp>

#include "racgrowth/analysis.hpp"

namespace racgrowth {

inline constexpr int kReportSchemaVersion = 1;

// Enclosure endpoints are decimal strings rounded outward; coefficients are
// decimal integer strings.
nlohmann::json report_to_json(const GrowthReport& report);

// Validates against the schema and rebuilds the report. Certificates keep
// only the fields present in the JSON. Throws ParseError naming the
// offending JSON pointer.
GrowthReport report_from_json(const nlohmann::json& j);

}  // namespace racgrowth

#endif  // RACGROWTH_REPORT_JSON_HPP_
