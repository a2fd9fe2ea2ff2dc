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

// noclid: build Hamiltonians, partition them into measurement fragments,
// validate the fragments and evaluate their measurement variance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "noclid/encodings.hpp"
#include "noclid/errors.hpp"
#include "noclid/fcidump.hpp"
#include "noclid/lattice.hpp"
#include "noclid/operators.hpp"
#include "noclid/partition_io.hpp"
#include "noclid/partitioners.hpp"
#include "noclid/pauli.hpp"
#include "noclid/validators.hpp"
#include "noclid/variance.hpp"

namespace {

using nlohmann::json;
using namespace noclid;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitResource = 4;

std::string meta_path_for(const std::string& hamiltonian_path) {
  return hamiltonian_path + ".meta.json";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << text;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(path + ": " + e.what());
  }
}

// --- build -----------------------------------------------------------------

struct LatticeOptions {
  std::string kind = "chain";
  std::size_t sites = 0;
  std::size_t lx = 0, ly = 0, lz = 0;
  std::size_t cells = 1;
  std::string boundary = "open";

  Lattice make() const {
    const LatticeKind k = kind == "all_to_all" || kind == "all-to-all"
                              ? LatticeKind::custom
                              : lattice_kind_from_string(kind);
    auto need = [](std::size_t v, const char* flag) {
      if (v == 0) throw DomainError(std::string("lattice needs ") + flag);
      return v;
    };
    if (kind == "all_to_all" || kind == "all-to-all") {
      return Lattice::all_to_all(need(sites, "--sites/--modes"));
    }
    switch (k) {
      case LatticeKind::chain:
        return Lattice::chain(need(sites, "--sites/--modes"), boundary_from_string(boundary));
      case LatticeKind::square:
        return Lattice::square(need(lx, "--lx"), need(ly, "--ly"));
      case LatticeKind::hexagonal:
        return Lattice::hexagonal(need(lx, "--lx"), need(ly, "--ly"));
      case LatticeKind::triangular:
        return Lattice::triangular(need(lx, "--lx"), need(ly, "--ly"));
      case LatticeKind::cubic:
        return Lattice::cubic(need(lx, "--lx"), need(ly, "--ly"), need(lz, "--lz"));
      case LatticeKind::tetrahedral:
        return Lattice::tetrahedral(need(cells, "--cells"));
      default:
        throw DomainError("unsupported lattice '" + kind + "'");
    }
  }
};

void add_lattice_options(CLI::App* cmd, LatticeOptions& o, const std::string& count_flag) {
  cmd->add_option(count_flag, o.sites, "Number of sites (chain, all_to_all)");
  cmd->add_option("--lattice", o.kind,
                  "chain, square, hexagonal, triangular, cubic, tetrahedral or all_to_all");
  cmd->add_option("--lx", o.lx, "Patch width");
  cmd->add_option("--ly", o.ly, "Patch height");
  cmd->add_option("--lz", o.lz, "Patch depth");
  cmd->add_option("--cells", o.cells, "Cells per axis for tetrahedral patches");
  cmd->add_option("--boundary", o.boundary, "open or periodic (chain only)");
}

struct BuildOptions {
  std::string out;
  LatticeOptions lattice;
  double t = 1.0;
  double u = 1.0;
  std::size_t d = 4;
  std::string model_path;
  std::vector<double> omega;
  std::vector<std::string> couplings;
  std::string fcidump;
  std::optional<std::uint64_t> reorder_seed;
  std::size_t halt_after = kDefaultHaltAfter;
};

void finish_build(const BuildOptions& o, const PauliSum& h, json meta) {
  meta["num_qubits"] = h.num_qubits();
  write_text(o.out, to_text(h));
  write_text(meta_path_for(o.out), meta.dump(2) + "\n");
  std::cout << o.out << ": " << h.num_qubits() << " qubits, " << h.size() << " terms\n";
}

void build_fermi_hubbard_cmd(const BuildOptions& o) {
  const Lattice lat = o.lattice.make();
  const FermionOperator op = build_fermi_hubbard(lat, o.t, o.u);
  if (!op.is_hermitian()) throw DomainError("Fermi-Hubbard operator is not Hermitian");
  finish_build(o, jordan_wigner(op),
               {{"class", "fermi-hubbard"}, {"encoding", "jordan-wigner"}, {"lattice", to_json(lat)},
                {"t", o.t}, {"U", o.u}});
}

void build_bose_hubbard_cmd(const BuildOptions& o) {
  const Lattice lat = o.lattice.make();
  const BosonOperator op = build_bose_hubbard(lat, o.t, o.u, o.d);
  const EncodedOperator enc = encode_boson_operator(op);
  finish_build(o, enc.pauli,
               {{"class", "bose-hubbard"}, {"encoding", "gray"}, {"lattice", to_json(lat)},
                {"t", o.t}, {"U", o.u}, {"d", o.d}, {"mode_qubits", enc.mode_qubits}});
}

VibrationalModel vibrational_model(const BuildOptions& o) {
  if (!o.model_path.empty()) {
    try {
      return vibrational_from_json(read_json(o.model_path));
    } catch (const json::exception& e) {
      throw DataError(o.model_path + ": " + e.what());
    }
  }
  if (o.omega.empty()) throw DomainError("vibrational build needs --model or --omega");
  VibrationalModel m;
  m.omega = o.omega;
  m.d = o.d;
  for (const auto& entry : o.couplings) {
    // "i,j,k=value"
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw DomainError("coupling must look like i,j,k=value");
    std::vector<std::size_t> modes;
    std::stringstream list(entry.substr(0, eq));
    std::string item;
    try {
      while (std::getline(list, item, ',')) modes.push_back(std::stoul(item));
      m.couplings[modes] += std::stod(entry.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw DomainError("bad coupling '" + entry + "'");
    }
  }
  return m;
}

void build_vibrational_cmd(const BuildOptions& o) {
  const VibrationalModel model = vibrational_model(o);
  const BosonOperator op = build_vibrational(model);
  const EncodedOperator enc = encode_boson_operator(op);
  finish_build(o, enc.pauli,
               {{"class", "vibrational"}, {"encoding", "gray"}, {"vibrational", to_json(model)},
                {"d", model.d}, {"mode_qubits", enc.mode_qubits}});
}

void build_electronic_cmd(const BuildOptions& o) {
  FermionOperator op = load_fcidump(o.fcidump);
  if (!op.is_hermitian()) throw DomainError("electronic Hamiltonian is not Hermitian");
  json meta{{"class", "electronic"}, {"encoding", "jordan-wigner"}, {"fcidump", o.fcidump}};
  if (o.reorder_seed) {
    const ReorderResult r = reorder_indices(op, *o.reorder_seed, o.halt_after);
    op = permute_modes(op, r.permutation);
    meta["reordering"] = {{"seed", *o.reorder_seed},  {"halt_after", o.halt_after},
                          {"permutation", r.permutation}, {"initial_cost", r.initial_cost},
                          {"final_cost", r.final_cost}, {"accepted_swaps", r.accepted_swaps},
                          {"attempted_swaps", r.attempted_swaps}};
  }
  finish_build(o, jordan_wigner(op), meta);
}

// --- partition -------------------------------------------------------------

const std::vector<std::string> kMethods = {"qwc-si", "fc-si",        "greedy", "blocking",
                                           "coloring", "fh1d-coloring", "qpn",   "qp"};

PauliSum boson_image(const BosonOperator& op, const PauliSum& h) {
  const PauliSum enc = encode_boson_operator(op).pauli;
  if (enc.num_qubits() != h.num_qubits() || max_abs_difference(enc, h) > 1e-10) {
    throw DomainError("metadata does not rebuild the given Hamiltonian");
  }
  return enc;
}

json require_class(const json& meta, const std::string& cls, const std::string& method) {
  if (meta.is_null()) throw DomainError(method + " needs the Hamiltonian metadata file");
  if (meta.value("class", "") != cls) {
    throw DomainError(method + " applies to " + cls + " Hamiltonians, not '" +
                      meta.value("class", "unknown") + "'");
  }
  return meta;
}

Partition run_method(const std::string& method, const PauliSum& h, const json& meta,
                     std::optional<std::size_t> k) {
  auto need_k = [&] {
    if (!k) throw DomainError(method + " needs --k");
    return *k;
  };
  if (method == "qwc-si") return sorted_insertion(h, CommutationKind::qubitwise);
  if (method == "fc-si") return sorted_insertion(h, CommutationKind::full);
  if (method == "greedy") return greedy_noclid(h, need_k());
  if (method == "blocking") return blocking_noclid(h, need_k());
  try {
    if (method == "coloring" || method == "qpn") {
      require_class(meta, "bose-hubbard", method);
      const Lattice lat = lattice_from_json(meta.at("lattice"));
      const BosonOperator op = build_bose_hubbard(lat, meta.at("t").get<double>(),
                                                  meta.at("U").get<double>(),
                                                  meta.at("d").get<std::size_t>());
      boson_image(op, h);
      return method == "qpn" ? qpn_partition(op, lat) : color_partition_bose_hubbard(op, lat);
    }
    if (method == "fh1d-coloring") {
      require_class(meta, "fermi-hubbard", method);
      const Lattice lat = lattice_from_json(meta.at("lattice"));
      if (lat.kind() != LatticeKind::chain || lat.boundary() != Boundary::open) {
        throw DomainError("fh1d-coloring needs an open chain");
      }
      const FermionOperator op = build_fermi_hubbard(lat, meta.at("t").get<double>(),
                                                     meta.at("U").get<double>());
      if (max_abs_difference(jordan_wigner(op), h) > 1e-10) {
        throw DomainError("metadata does not rebuild the given Hamiltonian");
      }
      return color_partition_fermi_hubbard_1d(op, lat.sites());
    }
    if (method == "qp") {
      require_class(meta, "vibrational", method);
      const BosonOperator op = build_vibrational(vibrational_from_json(meta.at("vibrational")));
      boson_image(op, h);
      return qp_partition_vibrational(op);
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("metadata: ") + e.what());
  }
  throw DomainError("unknown method '" + method + "'");
}

json load_meta(const std::string& hamiltonian, const std::string& explicit_path) {
  const std::string path = explicit_path.empty() ? meta_path_for(hamiltonian) : explicit_path;
  std::ifstream probe(path);
  if (!probe) {
    if (!explicit_path.empty()) throw DataError("cannot read " + path);
    return nullptr;
  }
  return read_json(path);
}

struct PartitionOptions {
  std::string hamiltonian;
  std::string method;
  std::optional<std::size_t> k;
  std::string meta;
  std::string out;
  std::size_t validation_states = 10;
  std::uint64_t seed = 0;
};

int partition_cmd(const PartitionOptions& o) {
  const PauliSum h = read_pauli_file(o.hamiltonian);
  if (o.k && (*o.k < 1 || *o.k > h.num_qubits())) {
    throw DomainError("--k must lie in [1, " + std::to_string(h.num_qubits()) + "]");
  }
  const json meta = load_meta(o.hamiltonian, o.meta);
  PartitionDocument doc;
  doc.partition = run_method(o.method, h, meta, o.k);
  doc.hamiltonian = h;
  doc.metadata = {{"source", o.hamiltonian}};
  if (!meta.is_null()) doc.metadata["hamiltonian"] = meta;
  const ValidationReport report = validate(doc.partition, h, o.k, o.validation_states, o.seed,
                                           ValidatorCaps::from_env());
  doc.validation = to_json(report);
  write_partition_file(o.out, doc);
  std::cout << o.method << ": " << doc.partition.fragments.size() << " fragments -> " << o.out
            << (report.ok() ? "" : " (validation FAILED)") << '\n';
  return report.ok() ? kExitOk : kExitValidation;
}

// --- evaluate / sweep-k ----------------------------------------------------

std::vector<StateVector> make_states(std::size_t n, std::size_t count, std::uint64_t seed,
                                     const std::vector<std::string>& explicit_states) {
  std::vector<StateVector> states;
  if (!explicit_states.empty()) {
    for (const auto& s : explicit_states) states.push_back(parse_state(s, n));
    return states;
  }
  if (count == 0) throw DomainError("--states must be positive");
  for (std::size_t i = 0; i < count; ++i) states.push_back(random_state(n, seed + i));
  return states;
}

struct EvaluateOptions {
  std::vector<std::string> partitions;
  std::size_t states = 20;
  std::uint64_t seed = 0;
  std::vector<std::string> state;
  std::string out;
  std::string json_out;
};

int evaluate_cmd(const EvaluateOptions& o) {
  std::vector<PartitionDocument> docs;
  for (const auto& path : o.partitions) docs.push_back(read_partition_file(path));
  const PauliSum h = docs.front().hamiltonian ? *docs.front().hamiltonian
                                              : to_pauli_sum(docs.front().partition);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const PauliSum hi = docs[i].hamiltonian ? *docs[i].hamiltonian : to_pauli_sum(docs[i].partition);
    if (hi.num_qubits() != h.num_qubits() || max_abs_difference(hi, h) > 1e-12) {
      throw DomainError(o.partitions[i] + " targets a different Hamiltonian");
    }
  }
  const auto states = make_states(h.num_qubits(), o.states, o.seed, o.state);
  std::vector<double> bounds;
  for (const auto& psi : states) bounds.push_back(lower_bound(h, psi));

  std::ostringstream csv;
  write_report_csv_header(csv);
  json summary = json::array();
  json rows = json::array();
  for (const auto& doc : docs) {
    std::vector<double> totals;
    for (std::size_t s = 0; s < states.size(); ++s) {
      VarianceReport r = partition_cost(doc.partition, states[s]);
      r.lower_bound = bounds[s];
      write_report_csv_row(csv, r);
      rows.push_back(to_json(r));
      totals.push_back(r.total);
    }
    const Summary t = summarize(totals);
    const Summary lb = summarize(bounds);
    const std::string& m = doc.partition.source.method;
    const std::size_t l = doc.partition.fragments.size();
    csv << m << ",mean," << l << ',' << format_double(t.mean) << ',' << format_double(lb.mean)
        << ",\n";
    csv << m << ",stddev," << l << ',' << format_double(t.stddev) << ','
        << format_double(lb.stddev) << ",\n";
    summary.push_back({{"method", m}, {"L", l}, {"mean", t.mean}, {"stddev", t.stddev},
                       {"lower_bound_mean", lb.mean}});
  }
  if (o.out.empty()) {
    std::cout << csv.str();
  } else {
    write_text(o.out, csv.str());
  }
  if (!o.json_out.empty()) {
    write_text(o.json_out, json{{"rows", rows}, {"summary", summary}}.dump(2) + "\n");
  }
  return kExitOk;
}

struct SweepOptions {
  std::string hamiltonian;
  std::string method = "greedy";
  std::size_t k_min = 1;
  std::size_t k_max = 0;
  std::size_t states = 20;
  std::uint64_t seed = 0;
  std::string out;
};

double mean_total(const Partition& p, const std::vector<StateVector>& states) {
  std::vector<double> totals;
  for (const auto& psi : states) totals.push_back(partition_cost(p, psi).total);
  return summarize(totals).mean;
}

int sweep_cmd(const SweepOptions& o) {
  if (o.method != "greedy" && o.method != "blocking") {
    throw DomainError("sweep-k supports greedy and blocking");
  }
  const PauliSum h = read_pauli_file(o.hamiltonian);
  const std::size_t n = h.num_qubits();
  const std::size_t k_max = o.k_max == 0 ? n : o.k_max;
  if (o.k_min < 1 || k_max > n || o.k_min > k_max) {
    throw DomainError("k range must lie within [1, " + std::to_string(n) + "]");
  }
  const auto states = make_states(n, o.states, o.seed, {});
  std::vector<double> bounds;
  for (const auto& psi : states) bounds.push_back(lower_bound(h, psi));
  const double bound = summarize(bounds).mean;
  const double fc = mean_total(sorted_insertion(h, CommutationKind::full), states);

  std::ostringstream csv;
  csv << "k,L,mean_var,fc_si_var,lower_bound\n";
  std::optional<std::size_t> k_star;
  for (std::size_t k = o.k_min; k <= k_max; ++k) {
    const Partition p = o.method == "greedy" ? greedy_noclid(h, k) : blocking_noclid(h, k);
    const double mean = mean_total(p, states);
    csv << k << ',' << p.fragments.size() << ',' << format_double(mean) << ','
        << format_double(fc) << ',' << format_double(bound) << '\n';
    // Relative slack absorbs rounding between the tensor and Pauli kernels.
    if (!k_star && mean <= fc + 1e-10 * std::max(1.0, std::abs(fc))) k_star = k;
  }
  if (o.out.empty()) {
    std::cout << csv.str();
  } else {
    write_text(o.out, csv.str());
  }
  if (k_star) {
    std::cout << "k* = " << *k_star << '\n';
  } else {
    std::cout << "k* not reached in [" << o.k_min << ", " << k_max << "]\n";
  }
  return kExitOk;
}

// --- theorem1 / verify -----------------------------------------------------

struct TheoremOptions {
  std::size_t resolution = 101;
  bool reference = true;
  std::string out;
};

int theorem_cmd(const TheoremOptions& o) {
  if (o.resolution < 2) throw DomainError("--resolution must be at least 2");
  std::vector<std::pair<double, double>> points;
  const double step = 1.0 / static_cast<double>(o.resolution - 1);
  for (std::size_t i = 0; i < o.resolution; ++i) {
    for (std::size_t j = 0; j < o.resolution; ++j) {
      points.emplace_back(i == o.resolution - 1 ? 1.0 : static_cast<double>(i) * step,
                          j == o.resolution - 1 ? 1.0 : static_cast<double>(j) * step);
    }
  }
  if (o.reference) {
    const double eta = 1.0 / std::numbers::sqrt2;
    points.emplace_back(eta, std::cos(std::numbers::pi / 8.0));
    points.emplace_back(eta, 1.0);
  }
  std::ostringstream csv;
  csv << "eta,alpha,n_gpb,n_rb\n";
  std::size_t violations = 0;
  for (const auto& [eta, alpha] : points) {
    const RotatedBasisCounts c = rotated_basis_demo(eta, alpha);
    if (c.rotated_basis > c.pauli_basis + 1e-12) ++violations;
    csv << format_double(eta) << ',' << format_double(alpha) << ',' << format_double(c.pauli_basis)
        << ',' << format_double(c.rotated_basis) << '\n';
  }
  if (o.out.empty()) {
    std::cout << csv.str();
  } else {
    write_text(o.out, csv.str());
  }
  std::cerr << points.size() << " points, " << violations << " violations\n";
  return violations == 0 ? kExitOk : kExitValidation;
}

struct VerifyOptions {
  std::string partition;
  std::string hamiltonian;
  std::optional<std::size_t> k;
  std::size_t states = 10;
  std::uint64_t seed = 0;
};

int verify_cmd(const VerifyOptions& o) {
  const PartitionDocument doc = read_partition_file(o.partition);
  PauliSum h;
  if (!o.hamiltonian.empty()) {
    h = read_pauli_file(o.hamiltonian);
  } else if (doc.hamiltonian) {
    h = *doc.hamiltonian;
  } else {
    throw DomainError("no Hamiltonian embedded; pass --hamiltonian");
  }
  const ValidationReport report =
      validate(doc.partition, h, o.k, o.states, o.seed, ValidatorCaps::from_env());
  std::cout << to_json(report).dump(2) << '\n';
  return report.ok() ? kExitOk : kExitValidation;
}

int run(int argc, char** argv) {
  CLI::App app{"Measurement partitioning of qubit Hamiltonians"};
  app.require_subcommand(1);
  int code = kExitOk;

  // build
  BuildOptions bo;
  CLI::App* build = app.add_subcommand("build", "Build an encoded Hamiltonian");
  build->require_subcommand(1);
  auto common_build = [&](CLI::App* c) {
    c->add_option("-o,--out", bo.out, "Pauli-sum output path (metadata goes to <out>.meta.json)")
        ->required();
  };
  CLI::App* fh = build->add_subcommand("fermi-hubbard", "Spinless Fermi-Hubbard, Jordan-Wigner");
  common_build(fh);
  add_lattice_options(fh, bo.lattice, "--sites");
  fh->add_option("--t", bo.t, "Hopping");
  fh->add_option("--U", bo.u, "Interaction");
  fh->callback([&] { build_fermi_hubbard_cmd(bo); });

  CLI::App* bh = build->add_subcommand("bose-hubbard", "Bose-Hubbard, Gray-code encoded");
  common_build(bh);
  add_lattice_options(bh, bo.lattice, "--modes");
  bh->add_option("--t", bo.t, "Hopping");
  bh->add_option("--U", bo.u, "On-site interaction");
  bh->add_option("--d", bo.d, "Levels per mode")->check(CLI::Range(2, 1 << 16));
  bh->callback([&] { build_bose_hubbard_cmd(bo); });

  CLI::App* vib = build->add_subcommand("vibrational", "Anharmonic vibrational model");
  common_build(vib);
  vib->add_option("--model", bo.model_path, "Model JSON (omega, couplings, d)");
  vib->add_option("--omega", bo.omega, "Harmonic frequencies, one per mode")->delimiter(',');
  vib->add_option("--coupling", bo.couplings, "Coupling i,j,k=value on q_i q_j q_k");
  vib->add_option("--d", bo.d, "Levels per mode")->check(CLI::Range(2, 1 << 16));
  vib->callback([&] { build_vibrational_cmd(bo); });

  CLI::App* el = build->add_subcommand("electronic", "Electronic structure from FCIDUMP");
  common_build(el);
  el->add_option("--fcidump", bo.fcidump, "FCIDUMP file")->required();
  el->add_option("--reorder-seed", bo.reorder_seed, "Reorder spin orbitals with this seed");
  el->add_option("--halt-after", bo.halt_after, "Consecutive failed swaps before stopping");
  el->callback([&] { build_electronic_cmd(bo); });

  // partition
  PartitionOptions po;
  CLI::App* part = app.add_subcommand("partition", "Partition a Hamiltonian into fragments");
  part->add_option("hamiltonian", po.hamiltonian, "Pauli-sum file")->required();
  part->add_option("-m,--method", po.method, "Partitioning method")
      ->required()
      ->check(CLI::IsMember(kMethods));
  part->add_option("-k,--k", po.k, "Locality bound");
  part->add_option("--meta", po.meta, "Metadata JSON (default <hamiltonian>.meta.json)");
  part->add_option("-o,--out", po.out, "Partition JSON output")->required();
  part->add_option("--validation-states", po.validation_states, "States for the expectation check");
  part->add_option("--seed", po.seed, "Seed for validation states");
  part->callback([&] { code = partition_cmd(po); });

  // evaluate
  EvaluateOptions eo;
  CLI::App* eval = app.add_subcommand("evaluate", "Measurement variance of partitions");
  eval->add_option("partitions", eo.partitions, "Partition JSON files")->required();
  eval->add_option("--states", eo.states, "Number of Haar-random states");
  eval->add_option("--seed", eo.seed, "Seed of the first random state");
  eval->add_option("--state", eo.state, "Explicit state: basis:<index> or haar:<seed>");
  eval->add_option("-o,--out", eo.out, "CSV output (default stdout)");
  eval->add_option("--json", eo.json_out, "JSON output");
  eval->callback([&] { code = evaluate_cmd(eo); });

  // sweep-k
  SweepOptions so;
  CLI::App* sweep = app.add_subcommand("sweep-k", "Variance against the locality bound k");
  sweep->add_option("hamiltonian", so.hamiltonian, "Pauli-sum file")->required();
  sweep->add_option("-m,--method", so.method, "greedy or blocking");
  sweep->add_option("--k-min", so.k_min, "Smallest k");
  sweep->add_option("--k-max", so.k_max, "Largest k (default n)");
  sweep->add_option("--states", so.states, "Number of Haar-random states");
  sweep->add_option("--seed", so.seed, "Seed of the first random state");
  sweep->add_option("-o,--out", so.out, "CSV output (default stdout)");
  sweep->callback([&] { code = sweep_cmd(so); });

  // theorem1
  TheoremOptions to;
  CLI::App* thm = app.add_subcommand("theorem1", "One-qubit rotated versus Pauli basis grid");
  thm->add_option("--resolution", to.resolution, "Points per axis");
  thm->add_flag("!--no-reference", to.reference, "Omit the two reference rows");
  thm->add_option("-o,--out", to.out, "CSV output (default stdout)");
  thm->callback([&] { code = theorem_cmd(to); });

  // verify
  VerifyOptions vo;
  CLI::App* ver = app.add_subcommand("verify", "Re-run every check on a partition file");
  ver->add_option("partition", vo.partition, "Partition JSON")->required();
  ver->add_option("--hamiltonian", vo.hamiltonian, "Pauli-sum file (default: embedded)");
  ver->add_option("-k,--k", vo.k, "Locality bound (default: recorded k)");
  ver->add_option("--states", vo.states, "States for the expectation check");
  ver->add_option("--seed", vo.seed, "Seed for those states");
  ver->callback([&] { code = verify_cmd(vo); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const noclid::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const noclid::ConstraintError& e) {
    std::cerr << "validation: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
