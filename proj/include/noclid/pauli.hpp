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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace noclid {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Single-qubit Pauli letter, encoded as its symplectic pair (bit 0 = x, bit 1 = z).
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);
Eigen::Matrix2cd pauli_matrix(Pauli p);

/// Coefficients with magnitude at or below this are dropped by simplify().
inline constexpr double kZeroThreshold = 1e-12;

/// Bitmask-backed strings support up to this many qubits.
inline constexpr std::size_t kMaxQubits = 64;

/// An n-qubit Pauli string stored as x/z bitmasks; bit q of each mask is qubit q.
///
/// Matrices and state vectors use the tensor (kron) order: qubit 0 is the most
/// significant bit of a computational basis index.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n);
  static PauliString from_masks(std::size_t n, std::uint64_t x, std::uint64_t z);
  /// Dense letter sequence such as "XIZY", qubit 0 first.
  static PauliString from_letters(std::string_view letters);

  std::size_t num_qubits() const noexcept { return n_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  std::uint64_t support() const noexcept { return x_ | z_; }
  bool is_identity() const noexcept { return support() == 0; }

  Pauli operator[](std::size_t q) const;
  void set(std::size_t q, Pauli p);

  /// Dense letters, e.g. "XIZ".
  std::string letters() const;
  /// Sparse form used by the text format, e.g. "X0 Z2"; empty for identity.
  std::string sparse_text() const;

  /// Basis-index masks: P|b> = i^{y_count} (-1)^{popcount(b & sign)} |b ^ flip>.
  std::uint64_t flip_mask() const noexcept;
  std::uint64_t sign_mask() const noexcept;
  int y_count() const noexcept;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  /// Lexicographic by letter sequence (qubit 0 first) with I < X < Y < Z.
  friend bool operator<(const PauliString& a, const PauliString& b);

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// p * q = i^{i_power} * result.
struct PauliProduct {
  int i_power = 0;
  PauliString result;
  Complex phase() const;
};

PauliProduct multiply(const PauliString& p, const PauliString& q);

enum class CommutationKind { full, qubitwise };

bool commutes(const PauliString& p, const PauliString& q, CommutationKind kind);

/// Number of non-identity letters.
std::size_t weight(const PauliString& p);

/// Real-weighted sum of Pauli strings plus an identity offset.
class PauliSum {
 public:
  using TermMap = std::map<PauliString, double>;

  explicit PauliSum(std::size_t n = 0, double constant = 0.0);

  std::size_t num_qubits() const noexcept { return n_; }
  double constant() const noexcept { return constant_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty() && constant_ == 0.0; }

  /// Accumulates; an identity string is routed into the constant.
  void add_term(const PauliString& p, double coefficient);
  void add_constant(double c) { constant_ += c; }

  /// Drops terms with |c| <= threshold (and a constant below it).
  PauliSum& simplify(double threshold = kZeroThreshold);

  /// Deterministic iteration order: descending |c|, ties lexicographic.
  std::vector<std::pair<PauliString, double>> sorted_terms() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(double s);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(double s, PauliSum a) { return a *= s; }

  /// Largest |coefficient difference| over all terms and the constant.
  friend double max_abs_difference(const PauliSum& a, const PauliSum& b);

 private:
  std::size_t n_;
  double constant_;
  TermMap terms_;
};

/// Relabels a sum on `local.num_qubits()` qubits onto `qubits` of an n-qubit register.
PauliSum embed(const PauliSum& local, const std::vector<std::size_t>& qubits, std::size_t n);

/// Product of two sums acting on the same register.
PauliSum product(const PauliSum& a, const PauliSum& b);

// ---------------------------------------------------------------------------
// Matrix realization

struct MatrixCaps {
  std::size_t dense_max_qubits = 12;
  std::size_t sparse_max_qubits = 16;

  /// Defaults overridden by NOCLID_DENSE_MAX_QUBITS / NOCLID_SPARSE_MAX_QUBITS.
  static MatrixCaps from_env();
};

Eigen::MatrixXcd to_dense(const PauliSum& h, const MatrixCaps& caps = {});
SparseMatrix to_sparse(const PauliSum& h, const MatrixCaps& caps = {});

/// Matrix-free h|v>.
Eigen::VectorXcd apply(const PauliSum& h, const Eigen::VectorXcd& v);

/// Projection of a 2^k x 2^k matrix onto the k-qubit Pauli basis,
/// c_P = Tr(P A) / 2^k. Throws DomainError if A is not Hermitian to `tolerance`.
PauliSum pauli_decompose(const Eigen::MatrixXcd& a, double tolerance = 1e-10);

// ---------------------------------------------------------------------------
// Text format: one term per line, "<coefficient> <letter><qubit> ...".

/// Parses the text format. The qubit count is `n` if given, else a
/// "# qubits: N" directive if present, else max index + 1.
PauliSum parse_pauli_sum(std::istream& in, std::optional<std::size_t> n = std::nullopt);
PauliSum parse_pauli_sum(std::string_view text, std::optional<std::size_t> n = std::nullopt);
PauliSum read_pauli_file(const std::string& path);

/// Writes a "# qubits: N" directive, the constant, then terms in sorted order,
/// coefficients at 17 significant digits.
void write_pauli_sum(std::ostream& out, const PauliSum& h);
std::string to_text(const PauliSum& h);
void write_pauli_file(const std::string& path, const PauliSum& h);

/// Locale-independent shortest round-trip formatting.
std::string format_double(double v);

}  // namespace noclid
