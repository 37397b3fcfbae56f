// Copyright 2026 The disagree-kit Authors
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


#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.h"
#include "disagree/edge_list.h"
#include "support/test_graphs.h"

namespace disagree {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("disagree_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  static std::string read(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(CliTest, GenPsfwCounts) {
  const std::string out = path("psfw3.tsv");
  ASSERT_EQ(run({"gen", "psfw", "--g", "3", "--out", out}).code, 0);
  const LoadedGraph l = load_edge_list_file(out);
  EXPECT_EQ(l.graph.node_count(), 42u);
  EXPECT_EQ(l.graph.edge_count(), 81u);
  const json side = json::parse(read(out + ".json"));
  EXPECT_EQ(side.at("family"), "psfw");
  EXPECT_EQ(side.at("edges"), 81);
}

TEST_F(CliTest, GenIsDeterministic) {
  ASSERT_EQ(run({"gen", "ba", "--m", "2", "--n", "2000", "--seed", "7", "--out", path("a")}).code, 0);
  ASSERT_EQ(run({"gen", "ba", "--m", "2", "--n", "2000", "--seed", "7", "--out", path("b")}).code, 0);
  EXPECT_EQ(read(path("a")), read(path("b")));
  EXPECT_FALSE(read(path("a")).empty());
}

TEST_F(CliTest, GenApollonianToStdout) {
  const Outcome o = run({"gen", "apollonian", "--d", "2", "--n", "5"});
  ASSERT_EQ(o.code, 0);
  std::istringstream in(o.out);
  EXPECT_EQ(load_edge_list(in).graph.edge_count(), 9u);
}

TEST_F(CliTest, ComputeExactZachary) {
  const Outcome o = run({"compute", testing::data_path("zachary.tsv"), "exact"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json rec = json::parse(o.out);
  for (const char* key : {"command", "method", "graph", "graph_fingerprint", "seed", "timestamp",
                          "wall_time_s", "result", "warnings", "delta", "lambda", "kemeny",
                          "per_node"}) {
    EXPECT_TRUE(rec.contains(key)) << key;
  }
  EXPECT_EQ(rec["method"], "exact");
  EXPECT_NEAR(rec["delta"].get<double>(), 1.287, 0.001);
  EXPECT_EQ(rec["graph"]["nodes"], 34);
  EXPECT_EQ(rec["graph"]["edges"], 78);
  EXPECT_EQ(rec["per_node"].size(), 34u);
  EXPECT_EQ(rec["per_node"][0]["id"], 1);  // original ids are 1-based
  EXPECT_EQ(rec["graph_fingerprint"].get<std::string>().size(), 16u);
}

TEST_F(CliTest, FingerprintIgnoresEdgeOrder) {
  const std::string a = write("a.tsv", "0 1\n1 2\n2 0\n");
  const std::string b = write("b.tsv", "2 0\n0 1\n2 1\n");
  const json ra = json::parse(run({"compute", a, "exact"}).out);
  const json rb = json::parse(run({"compute", b, "exact"}).out);
  EXPECT_EQ(ra["graph_fingerprint"], rb["graph_fingerprint"]);
}

TEST_F(CliTest, ComputeSampleTriangle) {
  const std::string tri = testing::data_path("triangle.tsv");
  const Outcome o = run({"compute", tri, "sample", "--epsilon", "0.25", "--lambda-bound", "0.5",
                         "--seed", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json rec = json::parse(o.out);
  EXPECT_TRUE(std::isfinite(rec["delta_hat"].get<double>()));
  EXPECT_DOUBLE_EQ(rec["params"]["epsilon"].get<double>(), 0.25);
  EXPECT_DOUBLE_EQ(rec["params"]["lambda_bound"].get<double>(), 0.5);
  EXPECT_EQ(rec["params"]["seed"], 1);
  for (const char* key : {"ell", "walks_per_length", "node_budget", "reuse_walks"}) {
    EXPECT_TRUE(rec["params"].contains(key)) << key;
  }
}

TEST_F(CliTest, SampleWithoutLambdaIsUsageError) {
  EXPECT_EQ(run({"compute", testing::data_path("triangle.tsv"), "sample"}).code, cli::kUsage);
}

TEST_F(CliTest, BipartiteIsDomainError) {
  const Outcome o = run({"compute", testing::data_path("path5.tsv"), "exact"});
  EXPECT_EQ(o.code, cli::kDomain);
  EXPECT_NE(o.err.find("bipartite"), std::string::npos);
  const Outcome bypass =
      run({"compute", testing::data_path("path5.tsv"), "exact", "--bipartite-bypass"});
  ASSERT_EQ(bypass.code, 0) << bypass.err;
  EXPECT_NEAR(json::parse(bypass.out)["delta"].get<double>(), 0.9375, 1e-12);
}

TEST_F(CliTest, ErrorExitCodes) {
  EXPECT_EQ(run({"compute", write("bad.tsv", "0 1\n1 x\n"), "exact"}).code, cli::kDomain);
  EXPECT_EQ(run({"compute", write("neg.tsv", "0 1 -2.0\n"), "exact"}).code, cli::kDomain);
  EXPECT_EQ(run({"compute", path("missing.tsv"), "exact"}).code, cli::kDomain);
  EXPECT_EQ(run({"compute", testing::data_path("triangle.tsv"), "bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "psfw", "--g", "30"}).code, cli::kResource);
  EXPECT_EQ(run({"compute", testing::data_path("zachary.tsv"), "approx", "--kappa-override",
                 "1e-14", "--max-cg-iters", "1"})
                .code,
            cli::kConvergence);
  EXPECT_EQ(run({"--help"}).code, cli::kSuccess);
}

TEST_F(CliTest, CsvOutput) {
  const Outcome o =
      run({"compute", testing::data_path("triangle.tsv"), "exact", "--output", "csv"});
  ASSERT_EQ(o.code, 0);
  std::istringstream in(o.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "command,method,graph_fingerprint,N,M,value,wall_time_s,seed");
  EXPECT_NE(row.find(",exact,"), std::string::npos);
  EXPECT_NE(row.find(",3,3,0.8888"), std::string::npos);
}

TEST_F(CliTest, OtherMethodsRun) {
  const std::string tri = testing::data_path("triangle.tsv");
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"compute", tri, "approx", "--epsilon", "0.3"},
        {"mc", tri, "--walks-per-target", "2000"},
        {"simulate", tri, "--horizon", "20000"},
        {"compute", tri, "sample", "--estimate-gap", "--reuse-walks"},
        {"kemeny", tri},
        {"kemeny", "--psfw", "5"}}) {
    const Outcome o = run(args);
    ASSERT_EQ(o.code, 0) << args[0] << ' ' << o.err;
    EXPECT_TRUE(json::accept(o.out));
  }
  const json mc = json::parse(run({"mc", tri, "--walks-per-target", "2000"}).out);
  EXPECT_TRUE(mc.contains("truncation"));
  const json sim = json::parse(run({"simulate", tri, "--horizon", "20000"}).out);
  EXPECT_TRUE(sim.contains("standard_error"));
  const json k = json::parse(run({"kemeny", tri}).out);
  EXPECT_NEAR(k["kemeny"].get<double>(), 8.0 / 3.0, 1e-12);
}

TEST_F(CliTest, DisconnectedInputFallsBackToLargestComponent) {
  const std::string f = write("two.tsv", "0 1\n1 2\n0 2\n5 6\n");
  const Outcome o = run({"compute", f, "exact"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json rec = json::parse(o.out);
  EXPECT_EQ(rec["graph"]["nodes"], 3);
  EXPECT_FALSE(rec["warnings"].empty());
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

TEST_F(CliTest, SweepTableAndScaling) {
  json cfg = {{"graphs", {{{"name", "zachary"}, {"path", testing::data_path("zachary.tsv")}},
                          {{"name", "apollonian"},
                           {"generator", {{"family", "apollonian"}, {"d", 2}, {"n", 64}, {"seed", 2}}}}}},
              {"methods", {"exact", "sample"}},
              {"epsilons", {0.5, 0.25}},
              {"trials", 3},
              {"seed", 4},
              {"sample", {{"lambda_bound", "exact"}, {"reuse_walks", true}}}};
  const std::string config = write("sweep.json", cfg.dump());
  const Outcome o = run({"sweep", config});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto rows = parse_csv(o.out);
  ASSERT_EQ(rows[0].size(), 12u);
  EXPECT_EQ(rows[0][7], "rel_error_vs_exact");
  // Per graph: 1 exact row and 2 epsilons x 3 trials of sample.
  ASSERT_EQ(rows.size(), 1u + 2u * 7u);
  double walks_half = 0.0, walks_quarter = 0.0, err_sum = 0.0;
  int err_count = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    ASSERT_EQ(rows[r].size(), 12u);
    if (rows[r][3] != "sample") continue;
    // r / ell^2 isolates the eps^-2 factor; ell itself grows as eps shrinks.
    const double ell = std::stod(rows[r][9]);
    const double walks = std::stod(rows[r][10]) / (ell * ell);
    if (rows[r][4] == "0.5") walks_half = walks;
    if (rows[r][4] == "0.25") walks_quarter = walks;
    if (rows[r][0] == "zachary" && rows[r][4] == "0.25") {
      err_sum += std::stod(rows[r][7]);
      ++err_count;
    }
  }
  EXPECT_NEAR(walks_quarter / walks_half, 4.0, 0.5);
  EXPECT_LE(err_sum / err_count, 0.05);

  // Cell order does not depend on the pool size.
  const std::string again = run({"sweep", config}).out;
  auto strip_time = [](std::string text) {
    auto rows = parse_csv(text);
    std::string out;
    for (auto& row : rows) {
      if (row.size() > 8) row[8].clear();
      for (const auto& c : row) out += c + ',';
      out += '\n';
    }
    return out;
  };
  EXPECT_EQ(strip_time(o.out), strip_time(again));
}

TEST_F(CliTest, EmptySweepIsUsageError) {
  EXPECT_EQ(run({"sweep", write("empty.json", "{}")}).code, cli::kUsage);
  EXPECT_EQ(run({"sweep", write("none.json", R"({"graphs": []})")}).code, cli::kUsage);
}

}  // namespace
}  // namespace disagree
