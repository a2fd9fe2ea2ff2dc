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

#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "noclid/fragment.hpp"
#include "noclid/pauli.hpp"

namespace noclid {

/// Partition with the Hamiltonian it was built from and free-form run metadata.
struct PartitionDocument {
  Partition partition;
  std::optional<PauliSum> hamiltonian;
  nlohmann::json metadata = nlohmann::json::object();
  std::optional<nlohmann::json> validation;
};

nlohmann::json to_json(const Partition& partition);
/// Throws DataError on malformed input.
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PartitionDocument& doc);
PartitionDocument partition_document_from_json(const nlohmann::json& j);

void write_partition_file(const std::string& path, const PartitionDocument& doc);
PartitionDocument read_partition_file(const std::string& path);

}  // namespace noclid
