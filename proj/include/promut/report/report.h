// Copyright 2026 The Promut Authors
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

#ifndef PROMUT_REPORT_REPORT_H_
#define PROMUT_REPORT_REPORT_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "promut/coverage/coverage.h"
#include "promut/engine/solve.h"
#include "promut/mutation/operators.h"
#include "promut/runner/runner.h"

namespace promut {

inline constexpr std::string_view kSchemaVersion = "1.0.0";

enum class Format { kTable, kJson };

struct RenderedReport {
  Format format = Format::kTable;
  std::string body;
  std::string schema_version{kSchemaVersion};
};

// "93.70%", or "undefined".
std::string FormatPercent(std::optional<double> ratio);

// Per-operator rows in catalogue order, a totals row and the score line.
RenderedReport RenderOperatorMatrix(const CampaignReport& report);

// Everything that does not depend on timing or on the number of workers.
// `matrix` adds every test verdict per mutant.
nlohmann::json CampaignJson(const CampaignReport& report, bool matrix = false);
std::array<Tally, kOperatorCount> PerOperatorFromJson(const nlohmann::json& j);

nlohmann::json CoverageJson(const CoverageReport& report);
std::string CoverageTable(const CoverageReport& report);

nlohmann::json ComparisonJson(const ComparisonRow& row);
std::string ComparisonTable(const std::string& name, const ComparisonRow& row);

nlohmann::json SiteJson(const MutationSite& site);

// {port, pred, arity, clause, path, step, invocation, goal}; pred, arity,
// clause and path are null for goals outside the program.
nlohmann::json TraceEventJson(const TraceEvent& event);

// Pretty JSON with a trailing newline.
std::string Dump(const nlohmann::json& j);

}  // namespace promut

#endif  // PROMUT_REPORT_REPORT_H_
