// Copyright 2026 The lnn-cnot Authors
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

#include "lnn/text_format.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace lnn;
using namespace lnn::testing;

TEST(matrix_format, writes_rows_by_entry) {
  BitMatrix m(3);
  m.set(1, 2, true);
  m.set(3, 1, true);
  EXPECT_EQ(matrix_to_string(m), "3\n010\n000\n100\n");
  EXPECT_EQ(matrix_from_string("3\n010\n000\n100\n"), m);
}

TEST(matrix_format, rejects_malformed_input) {
  EXPECT_THROW(matrix_from_string(""), ParseError);
  EXPECT_THROW(matrix_from_string("x\n"), ParseError);
  EXPECT_THROW(matrix_from_string("2\n01\n"), ParseError);
  EXPECT_THROW(matrix_from_string("2\n012\n10\n"), ParseError);
  EXPECT_THROW(matrix_from_string("2\n02\n10\n"), ParseError);
  EXPECT_THROW(matrix_from_string("2\n01 \n10\n"), ParseError);
}

TEST(matrix_format, round_trip) {
  std::mt19937_64 rng(kDefaultSeed);
  for (std::size_t n : {2, 3, 7, 64}) {
    const BitMatrix m = random_matrix(n, rng);
    EXPECT_EQ(matrix_from_string(matrix_to_string(m)), m);
  }
}

TEST(circuit_format, example) {
  const Circuit c = schedule(4, GateList{Gate::up(1), Gate::down(3), Gate::down(2)});
  EXPECT_EQ(circuit_to_string(c), "n 4\nu1 d3\nd2\n");
  EXPECT_EQ(circuit_from_string("n 4\nu1 d3\nd2\n"), c);
  EXPECT_EQ(circuit_to_string(Circuit(3)), "n 3\n");
}

TEST(circuit_format, rejects_malformed_input) {
  EXPECT_THROW(circuit_from_string(""), ParseError);
  EXPECT_THROW(circuit_from_string("n 1\n"), ParseError);
  EXPECT_THROW(circuit_from_string("n 3\nx1\n"), ParseError);
  EXPECT_THROW(circuit_from_string("n 3\nu3\n"), ParseError);
  EXPECT_THROW(circuit_from_string("n 3\nu1 d2\n"), ParseError);
  EXPECT_THROW(circuit_from_string("n 3\nu1\n\nd1\n"), ParseError);
}

TEST(render, examples) {
  EXPECT_EQ(render(Circuit(3)), "1 -\n2 -\n3 -\n");
  EXPECT_EQ(render(schedule(2, GateList{Gate::up(1)})), "1 -+-\n2 -^-\n");
  EXPECT_EQ(render(schedule(2, GateList{Gate::down(1)})), "1 -v-\n2 -+-\n");
  const std::string wide = render(Circuit(10));
  EXPECT_EQ(wide.substr(0, 4), " 1 -");
}

TEST(render, parse_diagram_round_trip) {
  std::mt19937_64 rng(kDefaultSeed + 1);
  std::uniform_int_distribution<std::size_t> pick(0, 1);
  for (std::size_t n : {2, 3, 9, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      GateList gates;
      std::uniform_int_distribution<std::size_t> wire(1, n - 1);
      for (int g = 0; g < 30; ++g) gates.push_back(pick(rng) ? Gate::up(wire(rng)) : Gate::down(wire(rng)));
      const Circuit c = schedule(n, gates);
      EXPECT_EQ(parse_diagram(render(c)), c);
      EXPECT_EQ(circuit_from_string(circuit_to_string(c)), c);
    }
  }
}

TEST(render, parse_diagram_rejects_inconsistent_columns) {
  EXPECT_THROW(parse_diagram("1 -+-\n2 ---\n"), ParseError);
  EXPECT_THROW(parse_diagram("1 -^-\n2 -+-\n"), ParseError);
  EXPECT_THROW(parse_diagram("1 -v-\n2 -+-\n3 -^-\n"), ParseError);
  EXPECT_THROW(parse_diagram("1 -x-\n2 -+-\n"), ParseError);
}
