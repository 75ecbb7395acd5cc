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

#include "promut/report/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace promut {
namespace {

using nlohmann::json;

json Ratio(std::optional<double> r) {
  if (!r) return nullptr;
  return *r;
}

json Percent(std::optional<double> r) {
  if (!r) return nullptr;
  return std::round(*r * 10000.0) / 100.0;
}

json PathJson(const TermPath& path) { return path.steps(); }

json CountJson(const CoverageCount& c) {
  return {{"covered", c.covered}, {"total", c.total}, {"pct", Percent(c.Ratio())}};
}

json TallyJson(const Tally& t) {
  return {{"alive", t.alive}, {"dead", t.dead}, {"timeout", t.timeout}};
}

std::string Pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string FormatPercent(std::optional<double> ratio) {
  if (!ratio) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", *ratio * 100.0);
  return buf;
}

RenderedReport RenderOperatorMatrix(const CampaignReport& report) {
  RenderedReport out;
  std::string& s = out.body;
  s += Pad("operator", 20) + Pad("alive/dead", 12) + "timeouts\n";
  for (const OperatorInfo& info : Operators()) {
    const Tally& t = report.per_operator[static_cast<std::size_t>(info.id)];
    s += Pad(std::string(info.label), 20) +
         Pad(std::to_string(t.alive) + "/" + std::to_string(t.dead), 12) +
         "(timeouts: " + std::to_string(t.timeout) + ")\n";
  }
  const Tally& t = report.totals;
  s += Pad("total", 20) +
       Pad(std::to_string(t.alive) + "/" + std::to_string(t.dead), 12) +
       "(timeouts: " + std::to_string(t.timeout) + ")\n";
  s += "mutation score: " + FormatPercent(report.mutation_score) + "\n";
  return out;
}

json SiteJson(const MutationSite& site) {
  json j = {{"id", site.id},
            {"operator", Info(site.op).name},
            {"predicate", site.pred.ToString()}};
  if (site.predicate_level()) {
    j["clause"] = nullptr;
    j["path"] = nullptr;
  } else {
    j["clause"] = site.clause;
    j["path"] = PathJson(site.path);
  }
  return j;
}

json CampaignJson(const CampaignReport& report, bool matrix) {
  json per = json::array();
  for (const OperatorInfo& info : Operators()) {
    json row = TallyJson(report.per_operator[static_cast<std::size_t>(info.id)]);
    row["operator"] = info.name;
    row["label"] = info.label;
    row["class"] = info.sensible ? "sensible" : "foolish";
    per.push_back(std::move(row));
  }
  json ops = json::array();
  for (OperatorId op : report.config.ops) ops.push_back(Info(op).name);
  json baseline_tests = json::array();
  for (const TestOutcome& o : report.baseline.outcomes) {
    baseline_tests.push_back({{"suite", o.suite},
                              {"name", o.name},
                              {"verdict", VerdictName(o.verdict)},
                              {"steps", o.steps_used}});
  }
  json mutants = json::array();
  for (const MutantResult& m : report.mutants) {
    json j = SiteJson(m.site);
    j["status"] = StatusName(m.status);
    j["first_killing_test"] =
        m.first_killing_test ? json(*m.first_killing_test) : json(nullptr);
    // Whichever limit fired first decides the count on a timeout, and the
    // wall limit depends on load.
    j["steps_used"] = m.status == MutantStatus::kTimeout ? json(nullptr)
                                                         : json(m.steps_used);
    if (matrix) {
      json verdicts = json::array();
      for (Verdict v : m.verdicts) verdicts.push_back(VerdictName(v));
      j["verdicts"] = std::move(verdicts);
    }
    mutants.push_back(std::move(j));
  }
  return {
      {"schema_version", kSchemaVersion},
      {"config",
       {{"ops", ops},
        {"timeout_constant_ms", report.config.timeout_constant.count()},
        {"step_budget", report.config.step_budget},
        {"step_allowance", report.config.step_allowance},
        {"fail_fast", report.config.fail_fast}}},
      {"baseline",
       {{"tests", baseline_tests}, {"total_steps", report.baseline.total_steps}}},
      {"step_limit", report.step_limit},
      {"per_operator", per},
      {"totals", TallyJson(report.totals)},
      {"mutation_score", Ratio(report.mutation_score)},
      {"mutation_score_text", FormatPercent(report.mutation_score)},
      {"mutants", mutants},
  };
}

std::array<Tally, kOperatorCount> PerOperatorFromJson(const json& j) {
  std::array<Tally, kOperatorCount> out{};
  for (const json& row : j.at("per_operator")) {
    const auto op = OperatorFromName(row.at("operator").get<std::string>());
    if (!op) throw UnknownOperator(row.at("operator").get<std::string>());
    Tally& t = out[static_cast<std::size_t>(*op)];
    t.alive = row.at("alive").get<std::uint64_t>();
    t.dead = row.at("dead").get<std::uint64_t>();
    t.timeout = row.at("timeout").get<std::uint64_t>();
  }
  return out;
}

json CoverageJson(const CoverageReport& report) {
  json gaps = json::array();
  for (const CoverageGap& g : report.uncovered) {
    gaps.push_back({{"predicate", g.pred.ToString()},
                    {"clause", g.clause},
                    {"path", PathJson(g.path)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"subgoal", CountJson(report.subgoal)},
          {"clause", CountJson(report.clause)},
          {"predicate", CountJson(report.predicate)},
          {"uncovered", gaps}};
}

std::string CoverageTable(const CoverageReport& report) {
  std::string s;
  auto line = [&s](const char* name, const CoverageCount& c) {
    s += Pad(name, 12) +
         Pad(std::to_string(c.covered) + "/" + std::to_string(c.total), 10) +
         FormatPercent(c.Ratio()) + "\n";
  };
  line("sub-goal", report.subgoal);
  line("clause", report.clause);
  line("predicate", report.predicate);
  for (const CoverageGap& g : report.uncovered) {
    s += "uncovered " + g.pred.ToString() + " clause " +
         std::to_string(g.clause) + " path " + g.path.ToString() + "\n";
  }
  return s;
}

json ComparisonJson(const ComparisonRow& row) {
  return {{"loc", row.lines_of_code},
          {"predicates", row.predicates},
          {"clauses", row.clauses},
          {"clause_coverage", Percent(row.clause_coverage)},
          {"predicate_coverage", Percent(row.predicate_coverage)},
          {"subgoal_coverage", Percent(row.subgoal_coverage)},
          {"mutation_coverage", Percent(row.mutation_coverage)}};
}

std::string ComparisonTable(const std::string& name, const ComparisonRow& row) {
  std::string s =
      "file | LoC | predicates | clauses | clause cov. | predicate cov. | "
      "sub-goal cov. | mutation cov.\n";
  s += name + " | " + std::to_string(row.lines_of_code) + " | " +
       std::to_string(row.predicates) + " | " + std::to_string(row.clauses) +
       " | " + FormatPercent(row.clause_coverage) + " | " +
       FormatPercent(row.predicate_coverage) + " | " +
       FormatPercent(row.subgoal_coverage) + " | " +
       FormatPercent(row.mutation_coverage) + "\n";
  return s;
}

json TraceEventJson(const TraceEvent& e) {
  json j = {{"port", PortName(e.port)},
            {"step", e.step},
            {"invocation", e.invocation},
            {"goal", e.goal}};
  if (e.subject) {
    j["pred"] = e.subject->pred.name;
    j["arity"] = e.subject->pred.arity;
    j["clause"] = e.subject->clause;
    j["path"] = PathJson(e.subject->path);
  } else {
    j["pred"] = nullptr;
    j["arity"] = nullptr;
    j["clause"] = nullptr;
    j["path"] = nullptr;
  }
  return j;
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace promut
