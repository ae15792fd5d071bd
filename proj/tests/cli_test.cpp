// Copyright 2026 The LSFF Diet Cost Authors
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

#include <cmath>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "lsff/cli.hpp"
#include "support/fixture.hpp"

namespace lsff {
namespace {

using testing::FixtureCopy;
using testing::ScratchDir;

struct Run {
  int code = 0;
  std::string out, err;
};

Run lsff(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run_cli(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture() { return testing::fixture_dir().string(); }

Table to_table(const CsvData& d) {
  Table t{d.header, {}};
  for (const auto& r : d.rows) t.add(r.fields);
  return t;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::map<std::string, std::string> files_in(const std::filesystem::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    out[e.path().filename().string()] = testing::slurp(e.path());
  }
  return out;
}

TEST(Cli, ValidateFixture) {
  const auto r = lsff({"--data", fixture(), "validate"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "foods.csv: 278 rows")) << r.out;
  EXPECT_TRUE(contains(r.out, "0 error(s), 0 warning(s)")) << r.out;
}

TEST(Cli, GlobalOptionsAfterSubcommand) {
  const auto r = lsff({"validate", "--data", fixture()});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
}

TEST(Cli, ValidateBrokenDataset) {
  FixtureCopy dir("cli_broken");
  ASSERT_TRUE(dir.replace(kFoodsFile, ",0.239,354.2,", ",-0.239,354.2,"));
  const auto r = lsff({"--data", dir.path().string(), "validate"});
  EXPECT_EQ(r.code, cli::kExitInvalid);
  EXPECT_TRUE(contains(r.err, "error: foods.csv:2: price_ppp_100g: negative price")) << r.err;
  EXPECT_TRUE(contains(r.out, "1 error(s), 0 warning(s)")) << r.out;
}

TEST(Cli, StrictPromotesWarnings) {
  FixtureCopy dir("cli_strict");
  dir.write(kSuaFile, dir.read(kSuaFile) + "Arvenia,starchy_staples,2009,1000\n");
  EXPECT_EQ(lsff({"--data", dir.path().string(), "validate"}).code, cli::kExitOk);
  EXPECT_EQ(lsff({"--data", dir.path().string(), "--strict", "validate"}).code, cli::kExitInvalid);
}

TEST(Cli, UsageErrors) {
  const auto unknown = lsff({"--data", fixture(), "validate", "--bogus"});
  EXPECT_EQ(unknown.code, cli::kExitError);
  EXPECT_TRUE(contains(unknown.err, "error: ")) << unknown.err;
  EXPECT_TRUE(contains(unknown.err, "Usage:")) << unknown.err;
  EXPECT_EQ(lsff({}).code, cli::kExitError);
  EXPECT_EQ(lsff({"--data", fixture(), "regress", "--x", "income"}).code, cli::kExitError);
  EXPECT_EQ(lsff({"--data", fixture(), "--threads", "0", "validate"}).code, cli::kExitError);
  const auto help = lsff({"--help"});
  EXPECT_EQ(help.code, cli::kExitOk);
  EXPECT_TRUE(contains(help.out, "report")) << help.out;
}

TEST(Cli, SeedIsRejected) {
  const auto r = lsff({"--data", fixture(), "--seed", "7", "validate"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_TRUE(contains(r.err, "--seed")) << r.err;
}

TEST(Cli, MissingDataDirectory) {
  ::unsetenv(kDataDirEnv);
  const auto r = lsff({"validate"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_TRUE(contains(r.err, kDataDirEnv)) << r.err;
  ::setenv(kDataDirEnv, fixture().c_str(), 1);
  EXPECT_EQ(lsff({"validate"}).code, cli::kExitOk);
  ::unsetenv(kDataDirEnv);
}

TEST(Cli, SolveUnknownCountry) {
  const auto r = lsff({"--data", fixture(), "solve", "--country", "Atlantis", "--subgroup", "f18_29", "--scenario",
                       "CoNA"});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_TRUE(contains(r.err, "unknown country 'Atlantis'")) << r.err;
}

// Frozen costs from the independent LP oracle in tests/oracles.
std::map<std::string, std::vector<std::string>> golden_costs() {
  const auto d = parse_csv(testing::slurp(testing::golden_dir() / "fixture_costs.csv"));
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& r : d.rows) out[r.fields[0] + "|" + r.fields[1] + "|" + r.fields[2]] = r.fields;
  return out;
}

void expect_close(const std::string& got, const std::string& want, const std::string& what) {
  if (want.empty()) {
    EXPECT_EQ(got, "") << what;
    return;
  }
  const double g = *parse_number(got), w = *parse_number(want);
  EXPECT_LE(std::abs(g - w), 1e-8 * std::abs(w)) << what << ": " << got << " vs " << want;
}

TEST(Cli, SolveMatchesOracle) {
  const auto golden = golden_costs();
  for (bool fortified : {false, true}) {
    std::vector<std::string> args{"--data", fixture(), "solve", "--country", "Dunmark", "--subgroup", "f30_49",
                                  "--scenario", "CoNA-SS&FV"};
    if (fortified) args.push_back("--fortified");
    const auto r = lsff(args);
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("status"), "Optimal");
    EXPECT_EQ(j.at("fortified"), fortified);
    const auto& row = golden.at("Dunmark|f30_49|CoNA-SS&FV");
    expect_close(format_number(j.at("cost_ppp_day").get<double>()), row[fortified ? 6 : 5], "solve");
    double kcal = 0.0;
    for (const auto& [group, v] : j.at("group_energy_kcal_day").items()) kcal += v.get<double>();
    EXPECT_NEAR(kcal, j.at("nutrient_totals").at("energy_kcal_day").get<double>(), 1e-6);
  }
  const auto infeasible = lsff({"--data", fixture(), "solve", "--country", "Bellora", "--subgroup", "f4_6",
                                "--scenario", "CoNA-SUA"});
  EXPECT_EQ(infeasible.code, cli::kExitOk) << infeasible.err;
  const auto j = nlohmann::json::parse(infeasible.out);
  EXPECT_EQ(j.at("status"), "Infeasible");
  EXPECT_TRUE(j.at("cost_ppp_day").is_null());
}

TEST(Cli, BatchMatchesOracleAndIsDeterministic) {
  ScratchDir a("cli_batch_a"), b("cli_batch_b");
  const auto ra = lsff({"--data", fixture(), "--out", a.path().string(), "batch"});
  ASSERT_EQ(ra.code, cli::kExitOk) << ra.err;
  EXPECT_TRUE(contains(ra.out, "396 records, 3 infeasible or failed cell(s)")) << ra.out;
  ASSERT_EQ(lsff({"--data", fixture(), "--out", b.path().string(), "--threads", "3", "batch"}).code, cli::kExitOk);
  EXPECT_EQ(files_in(a.path()), files_in(b.path()));

  const auto golden = golden_costs();
  const auto deltas = parse_csv(testing::slurp(a / "deltas.csv"));
  ASSERT_EQ(deltas.rows.size(), golden.size());
  const auto col = [&](const char* name) { return *deltas.column(name); };
  for (const auto& r : deltas.rows) {
    const std::string key = r.fields[col("country")] + "|" + r.fields[col("subgroup")] + "|" + r.fields[col("scenario")];
    const auto& g = golden.at(key);
    EXPECT_EQ(r.fields[col("base_status")], g[3]) << key;
    EXPECT_EQ(r.fields[col("fort_status")], g[4]) << key;
    expect_close(r.fields[col("cost_base_ppp_day")], g[5], key + " base");
    expect_close(r.fields[col("cost_fort_ppp_day")], g[6], key + " fort");
  }
  EXPECT_TRUE(unitless_numeric_columns(to_table(deltas)).empty());
}

TEST(Cli, ScenarioSubset) {
  ScratchDir out("cli_subset");
  const auto r = lsff({"--data", fixture(), "--out", out.path().string(), "batch", "--scenarios", "CoNA,CoNA-SUA"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "264 records")) << r.out;
  EXPECT_EQ(lsff({"--data", fixture(), "--out", out.path().string(), "batch", "--scenarios", "CoNB"}).code,
            cli::kExitError);
}

TEST(Cli, DecomposeAndRegress) {
  ScratchDir out("cli_decompose");
  const auto d = lsff({"--data", fixture(), "--out", out.path().string(), "decompose", "--by", "vehicle"});
  ASSERT_EQ(d.code, cli::kExitOk) << d.err;
  EXPECT_TRUE(std::filesystem::exists(out / "decompose_vehicle_records.csv"));
  EXPECT_TRUE(std::filesystem::exists(out / "decompose_vehicle_medians.csv"));
  const auto r = lsff({"--data", fixture(), "--out", out.path().string(), "regress", "--x", "baseline", "--log-x"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto coef = parse_csv(testing::slurp(out / "regress_baseline_coefficients.csv"));
  EXPECT_FALSE(coef.rows.empty());
  for (const auto& row : coef.rows) EXPECT_EQ(row.fields[*coef.column("log10_x_flag")], "1");
}

TEST(Cli, ReportIsDeterministicAndUnitLabelled) {
  ScratchDir a("cli_report_a"), b("cli_report_b");
  const auto ra = lsff({"--data", fixture(), "--out", a.path().string(), "report"});
  ASSERT_EQ(ra.code, cli::kExitOk) << ra.err;
  ASSERT_EQ(lsff({"--data", fixture(), "--out", b.path().string(), "--threads", "2", "report"}).code, cli::kExitOk);
  const auto fa = files_in(a.path());
  EXPECT_EQ(fa, files_in(b.path()));
  std::size_t csvs = 0, svgs = 0;
  for (const auto& [name, text] : fa) {
    if (name.ends_with(".svg")) {
      ++svgs;
      EXPECT_TRUE(text.starts_with("<svg")) << name;
    }
    if (!name.ends_with(".csv")) continue;
    ++csvs;
    const auto bad = unitless_numeric_columns(to_table(parse_csv(text)));
    EXPECT_TRUE(bad.empty()) << name << ": " << (bad.empty() ? "" : bad.front());
  }
  EXPECT_GE(csvs, 18u);
  EXPECT_GE(svgs, 10u);
  EXPECT_TRUE(fa.count("report_log.txt"));
}

TEST(Tables, UnitSuffixes) {
  EXPECT_TRUE(has_unit_suffix("cost_base_ppp_day"));
  EXPECT_TRUE(has_unit_suffix("n_count"));
  EXPECT_FALSE(has_unit_suffix("cost"));
  EXPECT_FALSE(has_unit_suffix("_pct"));
  const Table t{{"country", "cost", "median_pct", "note"}, {{"A", "1.5", "2", "x"}, {"B", "", "3", "4"}}};
  EXPECT_EQ(unitless_numeric_columns(t), std::vector<std::string>{"cost"});
}

TEST(Tables, ScenarioList) {
  EXPECT_EQ(cli::parse_scenarios("all").size(), 3u);
  EXPECT_EQ(cli::parse_scenarios("CoNA-SUA,CoNA,CoNA"),
            (std::vector<ScenarioKind>{ScenarioKind::kCoNA, ScenarioKind::kCoNA_SUA}));
  EXPECT_THROW(cli::parse_scenarios("CoNA,Other"), cli::CliError);
}

TEST(Svg, EscapingAndBars) {
  EXPECT_EQ(svg::escape("Latin America & <\"Caribbean\">"), "Latin America &amp; &lt;&quot;Caribbean&quot;&gt;");
  EXPECT_EQ(svg::fmt(-0.001), "0.00");
  const auto chart = svg::bar_chart("T & U", {"a", "b"}, {"s"}, {{1.0, -2.0}}, "change (%)");
  EXPECT_TRUE(chart.starts_with("<svg"));
  EXPECT_TRUE(contains(chart, "T &amp; U"));
  EXPECT_FALSE(contains(chart, "height=\"-"));
  std::size_t rects = 0;
  for (std::size_t at = chart.find("<rect"); at != std::string::npos; at = chart.find("<rect", at + 1)) ++rects;
  EXPECT_GE(rects, 2u);
}

}  // namespace
}  // namespace lsff
