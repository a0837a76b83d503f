// Copyright 2026 The BeliefRisk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "beliefrisk/cli/commands.h"
#include "beliefrisk/cli/config.h"
#include "beliefrisk/cli/csv.h"
#include "beliefrisk/cli/risk_report.h"
#include "beliefrisk/cli/set_function_file.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "support/test_support.h"

namespace beliefrisk::cli {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using Json = nlohmann::json;

namespace fs = std::filesystem;

// A fresh directory per test.
fs::path Scratch() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  fs::path dir = fs::path(::testing::TempDir()) / "beliefrisk_cli" /
                 (std::string(info->test_suite_name()) + "." + info->name());
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path Put(const fs::path& dir, const std::string& name,
             const std::string& contents) {
  EXPECT_TRUE(WriteFile(dir / name, contents).ok());
  return dir / name;
}

constexpr char kAgesCsv[] = "age\n18\n16\n19\n22\n24\n24\n";
constexpr char kAgesConfig[] = R"({
  "input": "ages.csv",
  "scheme": {"age": {"intervals": [[15, 19], [20, 25]]}}
})";

RunConfig AgeConfig(const fs::path& dir) {
  Put(dir, "ages.csv", kAgesCsv);
  return *LoadRunConfig(Put(dir, "config.json", kAgesConfig));
}

// --- CSV -------------------------------------------------------------------

TEST(CsvTest, ParsesQuotedFieldsAndCrlf) {
  auto doc = ParseCsv("a,b\r\n\"x,1\",\"say \"\"hi\"\"\"\r\n2,\"\"\r\n");
  ASSERT_TRUE(doc.ok()) << doc.status();
  EXPECT_THAT(doc->header, ElementsAre("a", "b"));
  ASSERT_EQ(doc->rows.size(), 2u);
  EXPECT_THAT(doc->rows[0], ElementsAre("x,1", "say \"hi\""));
  EXPECT_THAT(doc->rows[1], ElementsAre("2", ""));
}

TEST(CsvTest, MissingFinalNewlineIsAccepted) {
  auto doc = ParseCsv("a\n1");
  ASSERT_TRUE(doc.ok());
  EXPECT_THAT(doc->rows[0], ElementsAre("1"));
}

TEST(CsvTest, ErrorsCarryLineAndColumn) {
  EXPECT_THAT(std::string(ParseCsv("a,b\n1,2\n3\n").status().message()),
              HasSubstr("line 3, column 1"));
  EXPECT_THAT(std::string(ParseCsv("a,b\n1,\"x\"y\n").status().message()),
              HasSubstr("line 2, column 6"));
  EXPECT_THAT(std::string(ParseCsv("a\n\"open\n").status().message()),
              HasSubstr("unterminated"));
  EXPECT_THAT(std::string(ParseCsv("a,,c\n1,2,3\n").status().message()),
              HasSubstr("line 1, column 2"));
  EXPECT_FALSE(ParseCsv("").ok());
  EXPECT_FALSE(ParseCsv("a,b\n").ok());
}

TEST(CsvTest, WriteQuotesOnlyWhenNeeded) {
  CsvDocument doc{{"age", "note"}, {{"[15,19]", "plain"}, {"7", " pad"}}};
  const std::string text = WriteCsv(doc);
  EXPECT_EQ(text, "age,note\n\"[15,19]\",plain\n7,\" pad\"\n");
  auto back = ParseCsv(text);
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back->rows, doc.rows);
}

TEST(CsvTest, IntegerColumnsAreDetectedPerColumn) {
  auto table = TableFromCsv(*ParseCsv("n,s,m\n1,a,2\n-3,b,x\n"));
  ASSERT_TRUE(table.ok());
  EXPECT_EQ(std::get<std::int64_t>(table->at(1, 0)), -3);
  EXPECT_EQ(std::get<std::string>(table->at(0, 1)), "a");
  // One non-integer cell makes the whole column categorical.
  EXPECT_EQ(std::get<std::string>(table->at(0, 2)), "2");
}

// --- Config ----------------------------------------------------------------

TEST(ConfigTest, ParsesAllGeneralizerKindsAndDefaults) {
  auto config = ParseRunConfig(R"({
    "input": "t.csv", "output": "/abs/out.json",
    "scheme": {"age": {"intervals": [[0, 9], [10, 19]]},
               "zip": {"groups": {"n": ["n1", "n2"], "s": ["s1"]}},
               "sex": "identity"},
    "seed": 11})",
                               "/base");
  ASSERT_TRUE(config.ok()) << config.status();
  EXPECT_EQ(config->input, fs::path("/base/t.csv"));
  EXPECT_EQ(config->output, fs::path("/abs/out.json"));
  EXPECT_EQ(config->seed, 11u);
  EXPECT_EQ(config->measures.size(), 3u);
  EXPECT_TRUE(config->attribute_subsets.empty());
  EXPECT_EQ(config->scheme.For("zip")->kind(),
            AttributeGeneralizer::Kind::kGroups);
  EXPECT_EQ(config->scheme.For("sex")->kind(),
            AttributeGeneralizer::Kind::kIdentity);
}

TEST(ConfigTest, RejectsBadDocuments) {
  const char* bad[] = {
      R"({"scheme": {"a": "identity"}})",
      R"({"input": "t.csv", "scheme": {}})",
      R"({"input": "t.csv", "scheme": {"a": {}}})",
      R"({"input": "t.csv", "scheme": {"a": {"intervals": []}}})",
      R"({"input": "t.csv", "scheme": {"a": {"intervals": [[5, 1]]}}})",
      R"({"input": "t.csv", "scheme": {"a": {"intervals": [[0, 5], [5, 9]]}}})",
      R"({"input": "t.csv", "scheme": {"a": {"groups": {"g": []}}}})",
      R"({"input": "t.csv", "scheme": {"a": "hash"}})",
      R"({"input": "t.csv", "scheme": {"a": "identity"}, "measures": ["x"]})",
      R"({"input": "t.csv", "scheme": {"a": "identity"}, "extra": 1})",
      R"({"input": "t.csv", "scheme": {"a": "identity"},
          "attribute_subsets": [[]]})",
      "not json",
  };
  for (const char* text : bad) {
    EXPECT_FALSE(ParseRunConfig(text, "/").ok()) << text;
  }
}

TEST(ConfigTest, EmptySchemeEntryNamesTheAttribute) {
  auto config = ParseRunConfig(
      R"({"input": "t.csv", "scheme": {"age": {"intervals": []}}})", "/");
  EXPECT_THAT(std::string(config.status().message()),
              HasSubstr("config.scheme.age.intervals"));
}

TEST(ConfigTest, ResolvesSubsetsAgainstTheTable) {
  Table table = *TableFromCsv(*ParseCsv("a,b\n1,2\n"));
  RunConfig config = *ParseRunConfig(
      R"({"input": "t.csv", "scheme": {"a": "identity", "b": "identity"}})",
      "/");
  auto subsets = ResolveSubsets(config, table);
  ASSERT_TRUE(subsets.ok());
  ASSERT_EQ(subsets->size(), 3u);
  EXPECT_EQ((*subsets)[2], AttributeSubset::All(2));

  config.attribute_subsets = {{"c"}};
  EXPECT_FALSE(ResolveSubsets(config, table).ok());
  config.attribute_subsets.clear();
  config.scheme.Set("zzz", AttributeGeneralizer::Identity());
  EXPECT_FALSE(ResolveSubsets(config, table).ok());
}

// --- Set-function files ----------------------------------------------------

TEST(SetFunctionFileTest, ParsesAndRoundTripsMasses) {
  auto file = ParseSetFunctionFile(R"({"frame": ["a", "b"], "assignments": [
      {"subset": ["b", "a"], "value": 0.25}, {"subset": ["a"], "value": 0.75}]})",
                                   "m");
  ASSERT_TRUE(file.ok()) << file.status();
  EXPECT_EQ(file->kind, SetFunctionKind::kMass);
  EXPECT_THAT(file->values, ElementsAre(0, 0.75, 0, 0.25));

  MassAssignment m =
      *MassAssignment::Create(file->frame, std::move(file->values));
  auto back = ParseSetFunctionFile(SerializeMass(m), "m2");
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*MassAssignment::Create(back->frame, back->values), m);
}

TEST(SetFunctionFileTest, RejectsMalformedFiles) {
  const char* bad[] = {
      R"({"frame": ["a"], "assignments": [{"subset": ["z"], "value": 1}]})",
      R"({"frame": ["a"], "assignments": [{"subset": ["a"], "value": 1},
                                          {"subset": ["a"], "value": 0}]})",
      R"({"frame": ["a", "a"], "assignments": []})",
      R"({"frame": ["a"], "assignments": [{"subset": ["a"]}]})",
      R"({"kind": "plausibility", "frame": ["a"], "assignments": []})",
      R"({"kind": "probability", "frame": ["a", "b"],
          "assignments": [{"subset": ["a", "b"], "value": 1}]})",
  };
  for (const char* text : bad) {
    EXPECT_FALSE(ParseSetFunctionFile(text, "f").ok()) << text;
  }
}

TEST(SetFunctionFileTest, ProbabilityFromSingletonCarriedMass) {
  fs::path dir = Scratch();
  auto p = LoadProbability(Put(dir, "p.json", R"({"frame": ["a", "b"],
      "assignments": [{"subset": ["a"], "value": 0.4},
                      {"subset": ["b"], "value": 0.6}]})"));
  ASSERT_TRUE(p.ok()) << p.status();
  EXPECT_DOUBLE_EQ((*p)[1], 0.6);
  EXPECT_FALSE(LoadProbability(Put(dir, "q.json", R"({"frame": ["a", "b"],
      "assignments": [{"subset": ["a", "b"], "value": 1}]})"))
                   .ok());
}

// --- mask ------------------------------------------------------------------

TEST(MaskCommandTest, AgeExampleGolden) {
  fs::path dir = Scratch();
  auto out = RunMask(AgeConfig(dir));
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_EQ(out->text,
            "age\n\"[15,19]\"\n\"[15,19]\"\n\"[15,19]\"\n\"[20,25]\"\n"
            "\"[20,25]\"\n\"[20,25]\"\n");
  EXPECT_EQ(RunMask(AgeConfig(dir))->text, out->text);
}

TEST(MaskCommandTest, UncoveredValueIsAnError) {
  fs::path dir = Scratch();
  Put(dir, "ages.csv", "age\n18\n40\n");
  RunConfig config = *LoadRunConfig(Put(dir, "config.json", kAgesConfig));
  auto out = RunMask(config);
  ASSERT_FALSE(out.ok());
  EXPECT_EQ(ExitCodeFor(out.status()), kExitConfigError);
  EXPECT_THAT(std::string(out.status().message()), HasSubstr("age"));
}

TEST(MaskCommandTest, MissingInputIsAConfigError) {
  fs::path dir = Scratch();
  RunConfig config = *LoadRunConfig(Put(dir, "config.json", kAgesConfig));
  auto out = RunMask(config);
  ASSERT_FALSE(out.ok());
  EXPECT_EQ(ExitCodeFor(out.status()), kExitConfigError);
}

// --- risk ------------------------------------------------------------------

TEST(RiskCommandTest, AgeExampleSingleAttribute) {
  fs::path dir = Scratch();
  auto report = RunRiskReport(AgeConfig(dir), 2);
  ASSERT_TRUE(report.ok()) << report.status();
  ASSERT_EQ(report->records.size(), 6u);
  for (const RecordRisk& r : report->records) {
    ASSERT_EQ(r.true_candidate_set.size(), 3u);
    for (double v : r.true_probability.values) EXPECT_NEAR(v, 1.0 / 3, 1e-12);
    ASSERT_EQ(r.subsets.size(), 1u);  // one attribute: no separate full set
    const SubsetRisk& s = r.subsets[0];
    EXPECT_EQ(s.candidate_size, 3);
    EXPECT_NEAR(*s.nonspecificity_bits, std::log2(3.0), 1e-12);
    EXPECT_NEAR(*s.pignistic_entropy_nats, std::log(3.0), 1e-12);
    EXPECT_EQ(s.compatibility, "compatible");
    EXPECT_FALSE(r.dirac.has_value());
  }
  EXPECT_THAT(report->records[0].true_candidate_set,
              ElementsAre("x0", "x1", "x2"));
  EXPECT_THAT(report->records[4].true_candidate_set,
              ElementsAre("x3", "x4", "x5"));
  EXPECT_EQ(report->summary.candidate_size_histogram,
            (std::map<int, int>{{3, 6}}));
  EXPECT_EQ(report->summary.unique_reidentification_fraction, 0.0);
  EXPECT_EQ(report->summary.lattice, "dense");
}

TEST(RiskCommandTest, IdentitySchemeIsUnprotected) {
  fs::path dir = Scratch();
  Put(dir, "t.csv", "a,b\n1,x\n2,x\n3,y\n");
  RunConfig config = *LoadRunConfig(Put(
      dir, "c.json",
      R"({"input": "t.csv", "scheme": {"a": "identity", "b": "identity"},
          "attribute_subsets": [["a", "b"]]})"));
  auto report = RunRiskReport(config, 1);
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_EQ(report->summary.unique_reidentification_fraction, 1.0);
  for (const RecordRisk& r : report->records) {
    EXPECT_EQ(r.subsets[0].candidate_size, 1);
    EXPECT_EQ(*r.subsets[0].nonspecificity_bits, 0.0);
    EXPECT_EQ(r.dirac, r.label);
  }
}

TEST(RiskCommandTest, IntersectionOfTwoAttributesFlagsDirac) {
  fs::path dir = Scratch();
  Put(dir, "t.csv", "a,b\np,u\np,v\nq,u\nq,v\n");
  RunConfig config = *LoadRunConfig(Put(
      dir, "c.json",
      R"({"input": "t.csv", "scheme": {"a": "identity", "b": "identity"}})"));
  auto report = RunRiskReport(config, 0);
  ASSERT_TRUE(report.ok()) << report.status();
  const RecordRisk& r = report->records[0];
  ASSERT_EQ(r.subsets.size(), 3u);
  EXPECT_THAT(r.subsets[0].candidate_set, ElementsAre("x0", "x1"));
  EXPECT_THAT(r.subsets[1].candidate_set, ElementsAre("x0", "x2"));
  EXPECT_THAT(r.subsets[2].candidate_set, ElementsAre("x0"));
  EXPECT_EQ(r.dirac, "x0");
}

TEST(RiskCommandTest, ReportJsonRoundTrips) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto problem = testing::RandomProblem(rng, 9, 3);
    RiskOptions options;
    options.subsets = AllAttributeSubsets(3);
    options.measures = {Measure::kNonspecificity, Measure::kPignisticEntropy,
                        Measure::kCompatibility};
    if (trial % 2) options.measures = {Measure::kCompatibility};
    auto report = ComputeRiskReport(problem.table, problem.scheme, options);
    ASSERT_TRUE(report.ok()) << report.status();
    const std::string text = SerializeRiskReport(*report);
    auto back = ParseRiskReport(text);
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(*back, *report);
    EXPECT_EQ(SerializeRiskReport(*back), text);
  }
}

TEST(RiskCommandTest, SummaryIsRecomputableAndSumsToOne) {
  testing::Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto problem = testing::RandomProblem(rng, 12, 2);
    RiskOptions options;
    options.subsets = AllAttributeSubsets(2);
    options.measures = {Measure::kCompatibility};
    auto report = ComputeRiskReport(problem.table, problem.scheme, options);
    ASSERT_TRUE(report.ok());
    int unique = 0;
    for (const RecordRisk& r : report->records) {
      if (r.true_candidate_set.size() == 1) ++unique;
      double total = 0;
      for (double v : r.true_probability.values) total += v;
      EXPECT_NEAR(total, 1.0, kTolSum);
      for (const SubsetRisk& s : r.subsets) {
        total = 0;
        for (double v : s.reidentification_probability.values) total += v;
        EXPECT_NEAR(total, 1.0, kTolSum);
        EXPECT_EQ(s.compatibility, "compatible");
      }
    }
    EXPECT_EQ(report->summary.unique_reidentifications, unique);
    EXPECT_DOUBLE_EQ(report->summary.unique_reidentification_fraction,
                     unique / 12.0);
  }
}

TEST(RiskCommandTest, ThreadCountDoesNotChangeTheReport) {
  testing::Rng rng(21);
  auto problem = testing::RandomProblem(rng, 16, 3);
  RiskOptions options;
  options.subsets = AllAttributeSubsets(3);
  options.measures = {Measure::kNonspecificity, Measure::kCompatibility};
  options.threads = 1;
  auto one = ComputeRiskReport(problem.table, problem.scheme, options);
  options.threads = 7;
  auto seven = ComputeRiskReport(problem.table, problem.scheme, options);
  ASSERT_TRUE(one.ok() && seven.ok());
  EXPECT_EQ(SerializeRiskReport(*one), SerializeRiskReport(*seven));
}

TEST(RiskCommandTest, CandidateLocalFallbackAgreesWithDenseLattice) {
  testing::Rng rng(34);
  for (int trial = 0; trial < 5; ++trial) {
    auto problem = testing::RandomProblem(rng, 10, 3);
    RiskOptions options;
    options.subsets = AllAttributeSubsets(3);
    options.measures = {Measure::kNonspecificity, Measure::kPignisticEntropy,
                        Measure::kCompatibility};
    auto dense = ComputeRiskReport(problem.table, problem.scheme, options);
    options.dense_limit = 0;
    auto local = ComputeRiskReport(problem.table, problem.scheme, options);
    ASSERT_TRUE(dense.ok() && local.ok());
    EXPECT_EQ(dense->summary.lattice, "dense");
    EXPECT_EQ(local->summary.lattice, "candidate_local");
    for (std::size_t i = 0; i < dense->records.size(); ++i) {
      const RecordRisk& d = dense->records[i];
      const RecordRisk& l = local->records[i];
      EXPECT_EQ(d.true_candidate_set, l.true_candidate_set);
      EXPECT_EQ(d.true_probability.support, l.true_probability.support);
      for (std::size_t s = 0; s < d.subsets.size(); ++s) {
        EXPECT_EQ(d.subsets[s].candidate_set, l.subsets[s].candidate_set);
        EXPECT_NEAR(*d.subsets[s].nonspecificity_bits,
                    *l.subsets[s].nonspecificity_bits, 1e-12);
        EXPECT_NEAR(*d.subsets[s].pignistic_entropy_nats,
                    *l.subsets[s].pignistic_entropy_nats, 1e-12);
        EXPECT_EQ(d.subsets[s].compatibility, l.subsets[s].compatibility);
      }
    }
  }
}

TEST(RiskCommandTest, LargeTablesUseCandidateLocalMeasures) {
  testing::Rng rng(55);
  auto problem = testing::RandomProblem(rng, 200, 2);
  RiskOptions options;
  options.subsets = AllAttributeSubsets(2);
  options.measures = {Measure::kNonspecificity, Measure::kCompatibility};
  auto report = ComputeRiskReport(problem.table, problem.scheme, options);
  ASSERT_TRUE(report.ok()) << report.status();
  EXPECT_EQ(report->summary.lattice, "candidate_local");
  EXPECT_EQ(report->summary.incompatible_evaluations, 0);
  EXPECT_EQ(report->records.size(), 200u);
}

TEST(RiskCommandTest, SerializedReportHasTheDocumentedFields) {
  fs::path dir = Scratch();
  auto out = RunRisk(AgeConfig(dir), 1);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out->exit_code, kExitOk);
  Json doc = Json::parse(out->text);
  const Json& s = doc["records"][0]["subsets"][0];
  for (const char* key :
       {"attributes", "candidate_set", "candidate_size",
        "reidentification_probability", "nonspecificity_bits",
        "pignistic_entropy_nats", "compatibility"}) {
    EXPECT_TRUE(s.contains(key)) << key;
  }
  EXPECT_EQ(doc["summary"]["candidate_size_histogram"]["3"], 6);
}

// --- combine ---------------------------------------------------------------

constexpr char kFrame[] = R"("frame": ["a", "b", "c", "d"])";

std::string Categorical(const std::string& labels) {
  return std::string("{") + kFrame + R"(, "assignments": [{"subset": [)" +
         labels + R"(], "value": 1}]})";
}

TEST(CombineCommandTest, CategoricalIntersection) {
  fs::path dir = Scratch();
  CombineOptions options;
  options.masses = {Put(dir, "m1.json", Categorical(R"("a", "b", "c")")),
                    Put(dir, "m2.json", Categorical(R"("a", "b", "d")"))};
  options.truth = Put(dir, "p.json", std::string("{\"kind\": \"probability\", ") +
                                         kFrame +
                                         R"(, "assignments": [
      {"subset": ["a"], "value": 0.5}, {"subset": ["b"], "value": 0.5}]})");
  auto out = RunCombine(options);
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_EQ(out->exit_code, kExitOk);
  Json doc = Json::parse(out->text);
  EXPECT_TRUE(doc["ok"].get<bool>());
  ASSERT_EQ(doc["result"]["assignments"].size(), 1u);
  EXPECT_EQ(doc["result"]["assignments"][0]["subset"],
            Json::array({"a", "b"}));
  EXPECT_EQ(doc["nonspecificity_trace"].size(), 2u);
}

TEST(CombineCommandTest, DisjointEvidenceFailsWithConflictAtStepOne) {
  fs::path dir = Scratch();
  CombineOptions options;
  options.masses = {Put(dir, "m1.json", Categorical(R"("a", "b")")),
                    Put(dir, "m2.json", Categorical(R"("c", "d")"))};
  options.truth = Put(dir, "p.json", std::string("{\"kind\": \"probability\", ") +
                                         kFrame +
                                         R"(, "assignments": [
      {"subset": ["a"], "value": 1}]})");
  auto out = RunCombine(options);
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_EQ(out->exit_code, kExitRejected);
  Json doc = Json::parse(out->text);
  EXPECT_FALSE(doc["ok"].get<bool>());
  EXPECT_EQ(doc["failure"]["clause"], "conflict");
  EXPECT_EQ(doc["failure"]["step"], 1);
}

TEST(CombineCommandTest, ThreeMassesReachTheTrueProbability) {
  fs::path dir = Scratch();
  const std::string truth = std::string("{\"kind\": \"probability\", ") +
                            kFrame + R"(, "assignments": [
      {"subset": ["a"], "value": 0.25}, {"subset": ["b"], "value": 0.75}]})";
  CombineOptions options;
  options.masses = {
      Put(dir, "m1.json", Categorical(R"("a", "b", "c")")),
      Put(dir, "m2.json", Categorical(R"("a", "b", "d")")),
      Put(dir, "m3.json", std::string("{") + kFrame + R"(, "assignments": [
          {"subset": ["a"], "value": 0.25}, {"subset": ["b"], "value": 0.75}]})")};
  options.truth = Put(dir, "p.json", truth);
  auto out = RunCombine(options);
  ASSERT_TRUE(out.ok()) << out.status();
  ASSERT_EQ(out->exit_code, kExitOk) << out->text;
  Json doc = Json::parse(out->text);
  EXPECT_TRUE(doc["singleton_carried"].get<bool>());
  EXPECT_EQ(doc["distribution"]["support"], Json::array({"a", "b"}));
  EXPECT_NEAR(doc["distribution"]["values"][0].get<double>(), 0.25, 1e-12);
  EXPECT_NEAR(doc["distribution"]["values"][1].get<double>(), 0.75, 1e-12);
  std::vector<double> trace = doc["nonspecificity_trace"];
  ASSERT_EQ(trace.size(), 3u);
  EXPECT_GE(trace[0], trace[1]);
  EXPECT_GE(trace[1], trace[2]);
  EXPECT_EQ(trace[2], 0.0);
}

TEST(CombineCommandTest, UnknownRuleAndMismatchedFramesAreConfigErrors) {
  fs::path dir = Scratch();
  CombineOptions options;
  options.masses = {Put(dir, "m1.json", Categorical(R"("a")")),
                    Put(dir, "m2.json", Categorical(R"("a")"))};
  options.truth = Put(dir, "p.json", R"({"kind": "probability",
      "frame": ["a", "b"], "assignments": [{"subset": ["a"], "value": 1}]})");
  options.rule = "average";
  EXPECT_EQ(ExitCodeFor(RunCombine(options).status()), kExitConfigError);
  options.rule = "conjunctive";
  auto out = RunCombine(options);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out->exit_code, kExitRejected);
  EXPECT_EQ(Json::parse(out->text)["failure"]["clause"], "frame_mismatch");
}

// --- demo-n3 ---------------------------------------------------------------

TEST(DemoN3CommandTest, CanonicalScenario) {
  auto out = RunDemoN3({});
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_EQ(out->exit_code, kExitOk);
  Json doc = Json::parse(out->text);
  EXPECT_EQ(doc["argmax"], "x0");
  EXPECT_FALSE(doc["argmax_in_neighbours"].get<bool>());
  EXPECT_EQ(doc["neighbours"], Json::array({"x1", "x2", "x3"}));
  std::vector<double> pign = doc["pignistic"]["values"];
  EXPECT_THAT(pign, ElementsAre(0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6));
  EXPECT_EQ(doc["compatibility"]["uniform_on_neighbours"]["verdict"],
            "compatible");
  EXPECT_EQ(doc["compatibility"]["posterior"]["verdict"], "compatible");
  EXPECT_FALSE(doc.contains("revealed_alpha"));
}

TEST(DemoN3CommandTest, RevealedAlphaDecidesWhetherTheGuessSurvives) {
  DemoN3Options options;
  options.reveal_alpha = 1;
  Json doc = Json::parse(RunDemoN3(options)->text);
  EXPECT_TRUE(doc["revealed_alpha"]["argmax_ruled_out"].get<bool>());
  options.reveal_alpha = 0;
  doc = Json::parse(RunDemoN3(options)->text);
  EXPECT_FALSE(doc["revealed_alpha"]["argmax_ruled_out"].get<bool>());
  EXPECT_EQ(doc["revealed_alpha"]["conditional_posterior"]["support"],
            Json::array({"x0"}));
}

TEST(DemoN3CommandTest, SeedDeterminesTheReport) {
  DemoN3Options options;
  options.seed = 99;
  options.table_size = 12;
  auto a = RunDemoN3(options);
  auto b = RunDemoN3(options);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->text, b->text);
  Json doc = Json::parse(a->text);
  EXPECT_EQ(doc["records"].size(), 12u);
  EXPECT_EQ(doc["argmax"], "x0");
  options.seed = 100;
  EXPECT_NE(RunDemoN3(options)->text, a->text);
}

TEST(DemoN3CommandTest, MissingPreimageIsAPreconditionError) {
  DemoN3Options options;
  options.omit = 0;
  auto out = RunDemoN3(options);
  ASSERT_FALSE(out.ok());
  EXPECT_EQ(out.status().code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(ExitCodeFor(out.status()), kExitConfigError);
  options.table_size = 3;
  options.omit.reset();
  EXPECT_FALSE(RunDemoN3(options).ok());
}

// --- validate --------------------------------------------------------------

TEST(ValidateCommandTest, ReportsViolations) {
  fs::path dir = Scratch();
  auto good = RunValidate(Put(dir, "m.json", Categorical(R"("a", "b")")));
  ASSERT_TRUE(good.ok());
  EXPECT_EQ(good->exit_code, kExitOk);
  EXPECT_TRUE(Json::parse(good->text)["ok"].get<bool>());

  auto bad = RunValidate(Put(dir, "bel.json", R"({"kind": "belief",
      "frame": ["a", "b"], "assignments": [{"subset": ["a"], "value": 0.6},
      {"subset": ["b"], "value": 0.6}, {"subset": ["a", "b"], "value": 1}]})"));
  ASSERT_TRUE(bad.ok());
  EXPECT_EQ(bad->exit_code, kExitRejected);
  Json doc = Json::parse(bad->text);
  EXPECT_TRUE(doc["cross_checked"].get<bool>());
  EXPECT_EQ(doc["violations"][0]["kind"], "total_monotonicity");
  EXPECT_EQ(doc["violations"][0]["subsets"][0], Json::array({"a", "b"}));

  auto prob = RunValidate(Put(dir, "p.json", R"({"kind": "probability",
      "frame": ["a", "b"], "assignments": [{"subset": ["a"], "value": 0.6}]})"));
  ASSERT_TRUE(prob.ok());
  EXPECT_EQ(prob->exit_code, kExitRejected);

  EXPECT_EQ(ExitCodeFor(RunValidate(dir / "absent.json").status()),
            kExitConfigError);
}

}  // namespace
}  // namespace beliefrisk::cli
