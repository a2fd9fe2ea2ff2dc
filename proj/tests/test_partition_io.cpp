// Copyright 2026 The NoCliD Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "fixtures.hpp"
#include "noclid/errors.hpp"
#include "noclid/partition_io.hpp"
#include "noclid/partitioners.hpp"
#include "oracles.hpp"

namespace noclid {
namespace {

void expect_identical(const Partition& a, const Partition& b) {
  EXPECT_EQ(a.num_qubits, b.num_qubits);
  EXPECT_EQ(a.constant, b.constant);
  EXPECT_EQ(a.source.method, b.source.method);
  EXPECT_EQ(a.source.k, b.source.k);
  EXPECT_EQ(a.source.seed, b.source.seed);
  ASSERT_EQ(a.fragments.size(), b.fragments.size());
  for (std::size_t f = 0; f < a.fragments.size(); ++f) {
    EXPECT_EQ(a.fragments[f].label, b.fragments[f].label);
    ASSERT_EQ(a.fragments[f].terms.size(), b.fragments[f].terms.size());
    for (std::size_t t = 0; t < a.fragments[f].terms.size(); ++t) {
      const auto& fa = a.fragments[f].terms[t].factors;
      const auto& fb = b.fragments[f].terms[t].factors;
      ASSERT_EQ(fa.size(), fb.size());
      for (std::size_t i = 0; i < fa.size(); ++i) {
        EXPECT_EQ(fa[i].qubits, fb[i].qubits);
        EXPECT_TRUE(fa[i].block == fb[i].block);
      }
    }
  }
}

TEST(PartitionIo, JsonRoundTripIsBitExact) {
  const PauliSum h = fixtures::illustrative_hamiltonian();
  Partition p = greedy_noclid(h, 2);
  p.source.seed = 99;
  // Awkward doubles survive.
  p.fragments[0].terms[0].factors[0].block(0, 0) = std::complex<double>(0.1 + 0.2, -1.0 / 3.0);
  expect_identical(partition_from_json(to_json(p)), p);
  expect_identical(partition_from_json(nlohmann::json::parse(to_json(p).dump())), p);
}

TEST(PartitionIo, DocumentFileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "noclid_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "doc.json").string();
  PartitionDocument doc;
  doc.hamiltonian = fixtures::illustrative_hamiltonian();
  doc.partition = fixtures::illustrative_partition();
  doc.metadata = {{"class", "illustrative"}};
  doc.validation = nlohmann::json{{"ok", true}};
  write_partition_file(path, doc);
  const PartitionDocument back = read_partition_file(path);
  expect_identical(back.partition, doc.partition);
  ASSERT_TRUE(back.hamiltonian.has_value());
  EXPECT_EQ(max_abs_difference(*back.hamiltonian, *doc.hamiltonian), 0.0);
  EXPECT_EQ(back.metadata, doc.metadata);
  EXPECT_EQ(back.validation, doc.validation);
  std::filesystem::remove_all(dir);
}

TEST(PartitionIo, MalformedInputRaisesDataError) {
  const nlohmann::json good = to_json(fixtures::illustrative_partition());
  auto broken = [&](auto edit) {
    nlohmann::json j = good;
    edit(j);
    return j;
  };
  EXPECT_THROW(partition_from_json(nlohmann::json::object()), DataError);
  EXPECT_THROW(partition_from_json(broken([](auto& j) { j["format"] = "other"; })), DataError);
  EXPECT_THROW(partition_from_json(broken([](auto& j) { j["version"] = 7; })), DataError);
  EXPECT_THROW(partition_from_json(broken([](auto& j) { j["num_qubits"] = 2; })), DataError);
  EXPECT_THROW(partition_from_json(broken([](auto& j) {
                 j["fragments"][0]["terms"][0]["factors"][0]["block"].erase(0);
               })),
               DataError);
  EXPECT_THROW(partition_from_json(broken([](auto& j) {
                 j["fragments"][0]["terms"][0]["factors"][0]["qubits"] = {1, 0};
               })),
               DataError);
  EXPECT_THROW(partition_from_json(broken([](auto& j) {
                 j["fragments"][0]["terms"][0]["factors"][0]["block"][0] = "x";
               })),
               DataError);
  EXPECT_THROW(read_partition_file("/nonexistent/partition.json"), DataError);
}

}  // namespace
}  // namespace noclid
