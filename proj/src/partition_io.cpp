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

#include "noclid/partition_io.hpp"

#include <fstream>

#include "noclid/errors.hpp"

namespace noclid {

namespace {

constexpr const char* kFormat = "noclid-partition";
constexpr int kVersion = 1;

nlohmann::json factor_json(const TensorFactor& f) {
  nlohmann::json block = nlohmann::json::array();
  for (Eigen::Index i = 0; i < f.block.rows(); ++i) {
    for (Eigen::Index j = 0; j < f.block.cols(); ++j) {
      block.push_back({f.block(i, j).real(), f.block(i, j).imag()});
    }
  }
  return {{"qubits", f.qubits}, {"block", std::move(block)}};
}

TensorFactor factor_from_json(const nlohmann::json& j) {
  TensorFactor f;
  f.qubits = j.at("qubits").get<std::vector<std::size_t>>();
  if (f.qubits.empty() || f.qubits.size() > 16) throw DataError("factor qubit list has bad size");
  const auto dim = Eigen::Index{1} << f.qubits.size();
  const auto& block = j.at("block");
  if (!block.is_array() || static_cast<Eigen::Index>(block.size()) != dim * dim) {
    throw DataError("factor block must hold " + std::to_string(dim * dim) + " entries");
  }
  f.block.resize(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      const auto& entry = block.at(static_cast<std::size_t>(i * dim + k));
      if (!entry.is_array() || entry.size() != 2) throw DataError("block entry must be [re, im]");
      f.block(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return f;
}

}  // namespace

nlohmann::json to_json(const Partition& partition) {
  nlohmann::json fragments = nlohmann::json::array();
  for (const auto& fragment : partition.fragments) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : fragment.terms) {
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& f : term.factors) factors.push_back(factor_json(f));
      terms.push_back({{"factors", std::move(factors)}});
    }
    fragments.push_back({{"label", fragment.label}, {"terms", std::move(terms)}});
  }
  const auto& src = partition.source;
  return {{"format", kFormat},
          {"version", kVersion},
          {"method", src.method},
          {"k", src.k ? nlohmann::json(*src.k) : nlohmann::json(nullptr)},
          {"seed", src.seed ? nlohmann::json(*src.seed) : nlohmann::json(nullptr)},
          {"num_qubits", partition.num_qubits},
          {"constant", partition.constant},
          {"fragments", std::move(fragments)}};
}

Partition partition_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != kFormat) throw DataError("not a partition document");
    if (j.at("version").get<int>() != kVersion) throw DataError("unsupported partition version");
    Partition p;
    p.source.method = j.at("method").get<std::string>();
    if (!j.at("k").is_null()) p.source.k = j.at("k").get<std::size_t>();
    if (!j.at("seed").is_null()) p.source.seed = j.at("seed").get<std::uint64_t>();
    p.num_qubits = j.at("num_qubits").get<std::size_t>();
    p.constant = j.at("constant").get<double>();
    for (const auto& fj : j.at("fragments")) {
      Fragment fragment;
      fragment.label = fj.at("label").get<std::string>();
      for (const auto& tj : fj.at("terms")) {
        TensorProductTerm term;
        for (const auto& factor : tj.at("factors")) term.factors.push_back(factor_from_json(factor));
        check_term_shape(term, p.num_qubits);
        fragment.terms.push_back(std::move(term));
      }
      p.fragments.push_back(std::move(fragment));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed partition JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("malformed partition JSON: ") + e.what());
  }
}

nlohmann::json to_json(const PartitionDocument& doc) {
  nlohmann::json j = to_json(doc.partition);
  j["hamiltonian"] = doc.hamiltonian ? nlohmann::json(to_text(*doc.hamiltonian))
                                     : nlohmann::json(nullptr);
  j["metadata"] = doc.metadata;
  j["validation"] = doc.validation ? *doc.validation : nlohmann::json(nullptr);
  return j;
}

PartitionDocument partition_document_from_json(const nlohmann::json& j) {
  PartitionDocument doc;
  doc.partition = partition_from_json(j);
  if (j.contains("hamiltonian") && !j["hamiltonian"].is_null()) {
    try {
      doc.hamiltonian = parse_pauli_sum(j["hamiltonian"].get<std::string>());
    } catch (const ParseError& e) {
      throw DataError(std::string("embedded Hamiltonian: ") + e.what());
    }
  }
  if (j.contains("metadata") && j["metadata"].is_object()) doc.metadata = j["metadata"];
  if (j.contains("validation") && !j["validation"].is_null()) doc.validation = j["validation"];
  return doc;
}

void write_partition_file(const std::string& path, const PartitionDocument& doc) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out << to_json(doc).dump(1) << '\n';
}

PartitionDocument read_partition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path + ": " + e.what());
  }
  return partition_document_from_json(j);
}

}  // namespace noclid
