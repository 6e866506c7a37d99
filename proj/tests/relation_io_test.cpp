// Copyright 2026 The rigidrel Authors
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

#include "rigidrel/relation_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "rigidrel/errors.hpp"
#include "support/brute_force.hpp"

namespace rigidrel {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(ParseRelationTest, Basic) {
  const Relation r = parse_relation("n 3\ne 0 1\ne 1 2\n");
  EXPECT_EQ(r, Relation(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(parse_relation("n 0\n"), Relation(0));
  EXPECT_EQ(parse_relation("n 2"), Relation(2));
}

TEST(ParseRelationTest, CommentsBlankLinesAndCrlf) {
  const Relation r = parse_relation("# header\n\nn 2\r\n# mid\ne 1 0\r\ne 0 0\n\n");
  EXPECT_EQ(r, Relation(2, {{0, 0}, {1, 0}}));
}

TEST(ParseRelationTest, Errors) {
  const std::vector<std::string> bad = {
      "",
      "# only a comment\n",
      "e 0 1\nn 2\n",
      "n 2\ne 0 1\ne 0 1\n",
      "n 2\ne 0 2\n",
      "n 2\ne 2 0\n",
      "n two\n",
      "n 02\n",
      "n -1\n",
      "n 2\ne 0\n",
      "n 2\ne 0 1 1\n",
      "n 2\ne 0  1\n",
      " n 2\n",
      "n 2\nx 0 1\n",
      "n 2\nn 2\n",
      "n 2\ne 01 1\n",
      "n 4097\n",
  };
  for (const auto& text : bad) {
    EXPECT_THROW(parse_relation(text), ParseError) << text;
  }
}

TEST(ParseRelationTest, ErrorNamesLine) {
  try {
    parse_relation("n 2\n# c\ne 0 1\ne 0 1\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos) << e.what();
  }
}

TEST(SerializeRelationTest, Canonical) {
  EXPECT_EQ(serialize_relation(Relation(3, {{1, 2}, {0, 1}})), "n 3\ne 0 1\ne 1 2\n");
  EXPECT_EQ(serialize_relation(Relation(0)), "n 0\n");
}

TEST(SerializeRelationTest, RoundTripProperty) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Relation r = oracle::random_relation(rng, i % 9, 0.4);
    const std::string text = serialize_relation(r);
    const Relation back = parse_relation(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(serialize_relation(back), text);
  }
}

TEST(SerializeRelationTest, FileRoundTrip) {
  const fs::path path = fs::temp_directory_path() / "rigidrel_io_test.rel";
  const Relation r(4, {{3, 0}, {0, 0}, {2, 1}});
  write_relation_file(path, r);
  EXPECT_EQ(read_relation_file(path), r);
  EXPECT_EQ(slurp(path), serialize_relation(r));
  fs::remove(path);
  EXPECT_THROW(read_relation_file(path), ParseError);
}

TEST(GoldenFilesTest, ParseSerializeParseFixpoint) {
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(RIGIDREL_GOLDEN_DIR)) {
    if (entry.path().extension() != ".rel") continue;
    const std::string name = entry.path().filename().string();
    if (name.rfind("malformed", 0) == 0) {
      EXPECT_THROW(read_relation_file(entry.path()), ParseError) << name;
      continue;
    }
    ++seen;
    const std::string text = slurp(entry.path());
    const Relation r = parse_relation(text);
    const std::string canonical = serialize_relation(r);
    EXPECT_EQ(parse_relation(canonical), r) << name;
    EXPECT_EQ(serialize_relation(parse_relation(canonical)), canonical) << name;
    if (text.find('#') == std::string::npos) {
      EXPECT_EQ(canonical, text) << name;
    }
  }
  EXPECT_GE(seen, 5U);
}

TEST(ToDotTest, Format) {
  EXPECT_EQ(to_dot(Relation(2, {{0, 1}, {1, 1}})),
            "digraph R {\n"
            "  0 [label=\"0\"];\n"
            "  1 [label=\"1\"];\n"
            "  0 -> 1;\n"
            "  1 -> 1;\n"
            "}\n");
  EXPECT_EQ(to_dot(Relation(0), "G"), "digraph G {\n}\n");
}

}  // namespace
}  // namespace rigidrel
