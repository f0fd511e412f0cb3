// Copyright 2026 The icmesh Authors.
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace icmesh::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "icmesh");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("icmesh_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  // Tube surface plus a small labelled fixture mesh.
  void make_tube() {
    const CliRun r = run({"synth", "--kind", "tube", "-o", path("tube.off"),
                       "--tets", path("tube"), "--edge", "2", "--eta",
                       "6,6,6"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }

  fs::path dir_;
};

TEST_F(CliTest, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"synth"}).code, kExitUsage);  // -o is required
  EXPECT_EQ(run({"box", "--hm", "abc"}).code, kExitUsage);
  EXPECT_EQ(run({"synth", "--kind", "sphere", "-o", path("x.off")}).code,
            kExitUsage);
  EXPECT_EQ(run({"box"}).code, kExitUsage);  // no protein
}

TEST_F(CliTest, MissingProteinIsADataError) {
  const CliRun r = run({"box", "--protein", path("missing.off")});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("missing.off"), std::string::npos) << r.err;
  EXPECT_EQ(r.err.rfind("error: IoError", 0), 0u) << r.err;
}

TEST_F(CliTest, BadEtaIsAUsageError) {
  make_tube();
  EXPECT_EQ(run({"box", "--protein", path("tube.off"), "--eta", "1,2"}).code,
            kExitUsage);
  EXPECT_EQ(
      run({"box", "--protein", path("tube.off"), "--eta", "1,x,2"}).code,
      kExitUsage);
  EXPECT_EQ(
      run({"box", "--protein", path("tube.off"), "--eta", "1,-1,2"}).code,
      kExitData);
}

TEST_F(CliTest, BoxPointsAndPlc) {
  make_tube();
  const std::vector<std::string> common = {"--protein", path("tube.off"),
                                           "--out", path("out")};
  auto with = [&](std::vector<std::string> a) {
    a.insert(a.end(), common.begin(), common.end());
    return run(a);
  };
  EXPECT_EQ(with({"box"}).code, kExitOk);
  EXPECT_TRUE(fs::exists(path("out/box.off")));

  EXPECT_EQ(with({"points"}).code, kExitOk);
  const auto points =
      nlohmann::json::parse(testing::read_file(path("out/points.json")));
  EXPECT_GT(points["total"].get<int>(), 0);
  EXPECT_EQ(points["s_b"].get<int>() + points["s_t"].get<int>(),
            points["total"].get<int>());

  const CliRun plc = with({"plc"});
  EXPECT_EQ(plc.code, kExitOk);
  EXPECT_NE(plc.out.find("tetgen switches: -q1.2aVpiT1e-10AAYYCnQ"),
            std::string::npos);
  EXPECT_FALSE(
      testing::check_poly_grammar(testing::read_file(path("out/model.poly")))
          .has_value());
}

TEST_F(CliTest, PipelineWithoutTetgenStopsAfterThePlc) {
  make_tube();
  ::unsetenv("TETGEN_BIN");
  const CliRun r =
      run({"pipeline", "--protein", path("tube.off"), "--out", path("p")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("TETGEN_BIN"), std::string::npos);
  EXPECT_NE(r.out.find("-q1.2aVpiT1e-10AAYYCnQ"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("p/model.poly")));
}

TEST_F(CliTest, ExtractWritesAllOutputs) {
  make_tube();
  const CliRun r = run({"extract", "--mesh", path("tube"), "--protein",
                     path("tube.off"), "--hm", "1", "--out", path("x")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* name :
       {"x/extracted.node", "x/extracted.ele", "x/extracted.vtk",
        "x/report.json"}) {
    EXPECT_TRUE(fs::exists(path(name))) << name;
  }
  const auto report =
      nlohmann::json::parse(testing::read_file(path("x/report.json")));
  EXPECT_EQ(report["components"]["pores"], 1);
  EXPECT_GT(report["membrane"]["tets"].get<int>(), 0);
}

TEST_F(CliTest, StatsIsDeterministicApartFromTimings) {
  make_tube();
  const std::vector<std::string> args = {"stats", "--mesh", path("tube"),
                                         "--protein", path("tube.off"),
                                         "--hm", "1"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  ja.erase("timings");
  jb.erase("timings");
  EXPECT_EQ(ja, jb);
}

TEST_F(CliTest, ConfigFileAndOverrides) {
  make_tube();
  {
    std::ofstream cfg(path("cfg.json"));
    cfg << R"({"protein_path": ")" << path("tube.off")
        << R"(", "h_m": 2.0, "output_dir": ")" << path("c") << "\"}";
  }
  EXPECT_EQ(run({"box", "--config", path("cfg.json")}).code, kExitOk);
  EXPECT_TRUE(fs::exists(path("c/box.off")));
  EXPECT_EQ(run({"box", "--config", path("cfg.json"), "--format", "ply"}).code,
            kExitOk);
  EXPECT_TRUE(fs::exists(path("c/box.ply")));
  {
    std::ofstream cfg(path("bad.json"));
    cfg << R"({"bogus": 1})";
  }
  const CliRun bad = run({"box", "--config", path("bad.json")});
  EXPECT_EQ(bad.code, kExitData);
  EXPECT_NE(bad.err.find("bogus"), std::string::npos);
}

TEST_F(CliTest, ExtractRejectsMissingAttributes) {
  make_tube();
  {
    std::ofstream ele(path("bare.ele"));
    ele << "1 4 0\n1 1 2 3 4\n";
  }
  fs::copy_file(path("tube.node"), path("bare.node"));
  const CliRun r = run({"extract", "--mesh", path("bare"), "--protein",
                     path("tube.off"), "--out", path("y")});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("MissingRegionAttribute"), std::string::npos) << r.err;
}

}  // namespace
}  // namespace icmesh::cli
