// Copyright 2026 The supercolor Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "supercolor/batch.hpp"
#include "supercolor/cli.hpp"
#include "supercolor/io.hpp"
#include "support/fixtures.hpp"

namespace supercolor {
namespace {

namespace fs = std::filesystem;

const std::string kExample1 = std::string(SUPERCOLOR_DATA_DIR) + "/example1.json";

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("supercolor_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

TEST(IoTest, RoundTripPreservesDigest) {
  Instance a = load_instance(kExample1);
  Instance b = parse_instance(instance_to_json(a).dump());
  EXPECT_EQ(digest(a), digest(b));
  EXPECT_EQ(digest(a).size(), 16u);
  EXPECT_TRUE(a.g1 == testing::example1());
}

TEST(IoTest, EntryOrderDoesNotChangeDigest) {
  Instance a = parse_instance(R"({"elements":["a","b","c"],"g1":[{"set":["a","b"],"value":2},{"set":["c"],"value":1}]})");
  Instance b = parse_instance(R"({"elements":["a","b","c"],"g1":[{"set":["c"],"value":1},{"set":["b","a"],"value":2}],"g2":[]})");
  EXPECT_EQ(digest(a), digest(b));
}

TEST(IoTest, ParseErrors) {
  EXPECT_THROW(parse_instance("{"), ParseError);
  EXPECT_THROW(parse_instance(R"({"g1":[]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"elements":[],"g1":[]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"elements":["a","a"],"g1":[]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"elements":["a"],"g1":[{"set":["z"],"value":1}]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"elements":["a"],"g1":[{"set":["a"],"value":1.5}]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"elements":["a","b"],"g1":[{"set":["a"],"value":1},{"set":["a"],"value":2}]})"),
               ParseError);
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), InputError);
}

TEST(IoTest, ListsAndGraphs) {
  Instance inst = parse_instance(R"({"elements":["a","b"],"g1":[]})");
  NamedLists l = parse_lists(R"({"a":["red","blue"],"b":["red"]})", inst.ground());
  EXPECT_EQ(l.palette, (std::vector<std::string>{"blue", "red"}));
  EXPECT_EQ(l.lists.lists, (std::vector<std::vector<int>>{{1, 2}, {2}}));
  EXPECT_THROW(parse_lists(R"({"a":["red"]})", inst.ground()), ParseError);
  EXPECT_THROW(parse_lists(R"({"a":["r"],"b":["r"],"c":["r"]})", inst.ground()), ParseError);

  Multigraph g = parse_graph(R"({"S":["s"],"T":["t"],"edges":[["s","t"],["s","t"]]})");
  EXPECT_EQ(g.edges.size(), 2u);
  EXPECT_THROW(parse_graph(R"({"S":["s"],"T":["t"],"edges":[["s"]]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"S":["s"],"T":["t"],"edges":[["x","t"]]})"), ParseError);
}

TEST(CliTest, CheckExampleOne) {
  Result r = cli({"check", kExample1});
  EXPECT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["results"]["ok"], true);
  EXPECT_EQ(j["digest"], digest(load_instance(kExample1)));
  EXPECT_TRUE(j["seed"].is_null());
  EXPECT_FALSE(j.contains("timing_ms"));
  EXPECT_TRUE(cli({"--timing", "check", kExample1}).json().contains("timing_ms"));
}

TEST(CliTest, CheckReportsViolations) {
  TempDir dir;
  const auto f = dir.write("bad.json", R"({"elements":["a","b","c"],"g1":[{"set":["a","b"],"value":1},{"set":["b","c"],"value":1}],"g2":[{"set":["a"],"value":2}]})");
  Result r = cli({"check", f});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["results"]["ok"], false);
}

TEST(CliTest, MalformedInputExitsTwo) {
  TempDir dir;
  EXPECT_EQ(cli({"check", dir.write("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(cli({"check", dir.path("missing.json")}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"reduce", kExample1, "--k", "zz"}).code, 2);
  EXPECT_EQ(cli({"pi", kExample1, "--method", "magic"}).code, 2);
}

TEST(CliTest, AnalyzeExampleOne) {
  Result r = cli({"analyze", kExample1, "--side", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json g1 = r.json()["results"]["g1"];
  EXPECT_FALSE(r.json()["results"].contains("g2"));
  EXPECT_EQ(g1["effective"].size(), 6u);
  EXPECT_EQ(g1["partition"], Json::parse(R"([["a","b","c","d","e","f"],["g","h","i","j"]])"));
  EXPECT_EQ(g1["d"], Json::parse(R"({"a":4,"b":4,"c":4,"d":4,"e":4,"f":4,"g":3,"h":3,"i":3,"j":3})"));
  EXPECT_EQ(g1["part_values"][0]["value"], 4);
}

TEST(CliTest, ReduceExampleOne) {
  Result r = cli({"reduce", kExample1, "--k", "f,j"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["removed"], Json::parse(R"(["f","j"])"));
  Instance reduced = instance_from_json(j);
  EXPECT_EQ(reduced.ground().names(),
            (std::vector<std::string>{"a", "b", "c", "d", "e", "g", "h", "i"}));
  EXPECT_EQ(reduced.g1.size(), 6);
  EXPECT_EQ(reduced.g1.value(reduced.ground().bits_of({"a", "b", "c", "d", "e"})), 3);
  EXPECT_EQ(j["attainers"]["g1"].size(), 6u);
}

TEST(CliTest, TransversalAndPi) {
  Result t = cli({"transversal", kExample1});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(t.json()["results"]["case"], "b");
  EXPECT_EQ(t.json()["results"]["k"], Json::parse(R"(["a"])"));

  Result p = cli({"pi", kExample1});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.json()["results"]["ok"], true);
  EXPECT_EQ(p.json()["results"]["trace"][0]["case"], "b");

  Result s = cli({"pi", kExample1, "--method", "schrijver"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.json()["results"]["f"]["a"], 4);
}

TEST(CliTest, ColorWithNamedLists) {
  TempDir dir;
  const auto inst = dir.write("i.json", R"({"elements":["a","b"],"g1":[{"set":["a","b"],"value":2}]})");
  Result ok = cli({"color", inst, "--lists", dir.write("l.json", R"({"a":["red"],"b":["red","blue"]})")});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.json()["results"]["coloring"], Json::parse(R"({"a":"red","b":"blue"})"));
  Result no = cli({"color", inst, "--lists", dir.write("m.json", R"({"a":["red"],"b":["red"]})")});
  EXPECT_EQ(no.code, 1);
  EXPECT_TRUE(no.json()["results"]["coloring"].is_null());
}

TEST(CliTest, VerifyIsDeterministic) {
  Result a = cli({"verify", kExample1, "--trials", "4", "--seed", "9"});
  Result b = cli({"verify", kExample1, "--trials", "4", "--seed", "9"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["results"]["sigma"], 6);
  EXPECT_EQ(a.json()["seed"], 9);
  EXPECT_EQ(cli({"verify", kExample1, "--sigma", "2"}).code, 2);
}

TEST(CliTest, GenAndEncode) {
  TempDir dir;
  Result a = cli({"gen", "--strategy", "rank_complement", "--n", "5", "--seed", "4"});
  Result b = cli({"gen", "--strategy", "rank_complement", "--n", "5", "--seed", "4"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(instance_from_json(a.json()).ground().size(), 5);
  const auto path = dir.path("g.json");
  EXPECT_EQ(cli({"gen", "--seed", "4", "-o", path}).code, 0);
  EXPECT_EQ(cli({"check", path}).code, 0);
  EXPECT_EQ(cli({"gen", "--strategy", "nope"}).code, 2);

  Result e = cli({"encode-bipartite",
                  dir.write("g.json", R"({"S":["s1","s2"],"T":["t1"],"edges":[["s1","t1"],["s2","t1"]]})")});
  ASSERT_EQ(e.code, 0) << e.err;
  Json j = e.json();
  EXPECT_EQ(j["elements"], Json::parse(R"(["s1~t1~0","s2~t1~0"])"));
  EXPECT_EQ(j["g2"][0]["value"], 2);
}

TEST(CliTest, BatchZeroInstances) {
  Result r = cli({"batch", "--instances", "0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["results"]["instances"], 0);
}

TEST(CliTest, BatchIsDeterministicAcrossThreadCounts) {
  Result a = cli({"batch", "--instances", "60", "--seed", "3", "--max-n", "5"});
  Result b = cli({"batch", "--instances", "60", "--seed", "3", "--max-n", "5", "--threads", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["results"]["passed"], 60);
}

TEST(CliTest, BatchReplay) {
  TempDir dir;
  Json record = {{"instance", instance_to_json(load_instance(kExample1))},
                 {"list_seed", 5},
                 {"list_trials", 2}};
  Result r = cli({"batch", "--replay", dir.write("r.json", record.dump())});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["results"]["replay"], true);
  EXPECT_EQ(cli({"batch", "--replay", dir.write("bad.json", "{}")}).code, 2);
}

TEST(CliTest, ResourceCapExitsThree) {
  TempDir dir;
  std::string elems, sets;
  for (int i = 0; i < 12; ++i) elems += std::string(i ? "," : "") + "\"e" + std::to_string(i) + "\"";
  const auto f = dir.write("big.json", "{\"elements\":[" + elems + "],\"g1\":[]}");
  EXPECT_EQ(cli({"pi", f, "--method", "schrijver"}).code, 3);
}

TEST(CliTest, PreconditionExitsOne) {
  TempDir dir;
  const auto f = dir.write("cap.json", R"({"elements":["a","b"],"g1":[{"set":["a","b"],"value":3}]})");
  EXPECT_EQ(cli({"pi", f}).code, 1);
}

}  // namespace
}  // namespace supercolor
