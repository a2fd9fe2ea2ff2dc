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

#include "noclid/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "noclid/errors.hpp"

namespace noclid {

namespace {

int letter_rank(Pauli p) {
  switch (p) {
    case Pauli::I: return 0;
    case Pauli::X: return 1;
    case Pauli::Y: return 2;
    case Pauli::Z: return 3;
  }
  return 0;
}

std::uint64_t reverse_bits(std::uint64_t mask, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if ((mask >> q) & 1U) out |= std::uint64_t{1} << (n - 1 - q);
  }
  return out;
}

void require_same_n(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("Pauli strings act on " + std::to_string(p.num_qubits()) + " and " +
                         std::to_string(q.num_qubits()) + " qubits");
  }
}

const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

char to_char(Pauli p) { return "IXZY"[static_cast<int>(p)]; }

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw DomainError(std::string("not a Pauli letter: '") + c + "'");
  }
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

// --- PauliString -----------------------------------------------------------

PauliString::PauliString(std::size_t n) : n_(n) {
  if (n > kMaxQubits) {
    throw DomainError("at most " + std::to_string(kMaxQubits) + " qubits are supported");
  }
}

PauliString PauliString::from_masks(std::size_t n, std::uint64_t x, std::uint64_t z) {
  PauliString p(n);
  const std::uint64_t valid = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if ((x | z) & ~valid) throw DomainError("mask has bits beyond qubit count");
  p.x_ = x;
  p.z_ = z;
  return p;
}

PauliString PauliString::from_letters(std::string_view letters) {
  PauliString p(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) p.set(q, pauli_from_char(letters[q]));
  return p;
}

Pauli PauliString::operator[](std::size_t q) const {
  if (q >= n_) throw DimensionError("qubit index out of range");
  const auto x = static_cast<std::uint8_t>((x_ >> q) & 1U);
  const auto z = static_cast<std::uint8_t>((z_ >> q) & 1U);
  return static_cast<Pauli>(x | (z << 1));
}

void PauliString::set(std::size_t q, Pauli p) {
  if (q >= n_) throw DimensionError("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << q;
  const auto v = static_cast<std::uint8_t>(p);
  x_ = (v & 1U) ? (x_ | bit) : (x_ & ~bit);
  z_ = (v & 2U) ? (z_ | bit) : (z_ & ~bit);
}

std::string PauliString::letters() const {
  std::string s(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) s[q] = to_char((*this)[q]);
  return s;
}

std::string PauliString::sparse_text() const {
  std::string s;
  for (std::size_t q = 0; q < n_; ++q) {
    const Pauli p = (*this)[q];
    if (p == Pauli::I) continue;
    if (!s.empty()) s += ' ';
    s += to_char(p);
    s += std::to_string(q);
  }
  return s;
}

std::uint64_t PauliString::flip_mask() const noexcept { return reverse_bits(x_, n_); }
std::uint64_t PauliString::sign_mask() const noexcept { return reverse_bits(z_, n_); }
int PauliString::y_count() const noexcept { return std::popcount(x_ & z_); }

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  const std::uint64_t diff = (a.x_ ^ b.x_) | (a.z_ ^ b.z_);
  if (diff == 0) return false;
  const auto q = static_cast<std::size_t>(std::countr_zero(diff));
  return letter_rank(a[q]) < letter_rank(b[q]);
}

// --- algebra ---------------------------------------------------------------

Complex PauliProduct::phase() const { return kIPowers[((i_power % 4) + 4) % 4]; }

PauliProduct multiply(const PauliString& p, const PauliString& q) {
  require_same_n(p, q);
  // P = i^{x.z} X^x Z^z, and Z^z1 X^x2 = (-1)^{z1.x2} X^x2 Z^z1.
  const std::uint64_t x3 = p.x_mask() ^ q.x_mask();
  const std::uint64_t z3 = p.z_mask() ^ q.z_mask();
  const int e = std::popcount(p.x_mask() & p.z_mask()) + std::popcount(q.x_mask() & q.z_mask()) +
                2 * std::popcount(p.z_mask() & q.x_mask()) - std::popcount(x3 & z3);
  return {((e % 4) + 4) % 4, PauliString::from_masks(p.num_qubits(), x3, z3)};
}

bool commutes(const PauliString& p, const PauliString& q, CommutationKind kind) {
  require_same_n(p, q);
  const std::uint64_t anti = (p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask());
  if (kind == CommutationKind::qubitwise) return anti == 0;
  return std::popcount(anti) % 2 == 0;
}

std::size_t weight(const PauliString& p) {
  return static_cast<std::size_t>(std::popcount(p.support()));
}

// --- PauliSum --------------------------------------------------------------

PauliSum::PauliSum(std::size_t n, double constant) : n_(n), constant_(constant) {
  if (n > kMaxQubits) {
    throw DomainError("at most " + std::to_string(kMaxQubits) + " qubits are supported");
  }
}

void PauliSum::add_term(const PauliString& p, double coefficient) {
  if (p.num_qubits() != n_) {
    throw DimensionError("term acts on " + std::to_string(p.num_qubits()) +
                         " qubits, sum on " + std::to_string(n_));
  }
  if (p.is_identity()) {
    constant_ += coefficient;
    return;
  }
  terms_[p] += coefficient;
}

PauliSum& PauliSum::simplify(double threshold) {
  std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) <= threshold; });
  if (std::abs(constant_) <= threshold) constant_ = 0.0;
  return *this;
}

std::vector<std::pair<PauliString, double>> PauliSum::sorted_terms() const {
  std::vector<std::pair<PauliString, double>> out(terms_.begin(), terms_.end());
  // The map already iterates lexicographically, so a stable sort on |c| is enough.
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) > std::abs(b.second);
  });
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ != n_) throw DimensionError("PauliSum qubit counts differ");
  constant_ += other.constant_;
  for (const auto& [p, c] : other.terms_) terms_[p] += c;
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (other.n_ != n_) throw DimensionError("PauliSum qubit counts differ");
  constant_ -= other.constant_;
  for (const auto& [p, c] : other.terms_) terms_[p] -= c;
  return *this;
}

PauliSum& PauliSum::operator*=(double s) {
  constant_ *= s;
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

double max_abs_difference(const PauliSum& a, const PauliSum& b) {
  const PauliSum d = a - b;
  double worst = std::abs(d.constant());
  for (const auto& kv : d.terms()) worst = std::max(worst, std::abs(kv.second));
  return worst;
}

PauliSum embed(const PauliSum& local, const std::vector<std::size_t>& qubits, std::size_t n) {
  if (qubits.size() != local.num_qubits()) {
    throw DimensionError("embedding needs one target qubit per local qubit");
  }
  PauliSum out(n, local.constant());
  for (const auto& [p, c] : local.terms()) {
    PauliString q(n);
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      if (qubits[i] >= n) throw DimensionError("embedding target out of range");
      q.set(qubits[i], p[i]);
    }
    out.add_term(q, c);
  }
  return out;
}

PauliSum product(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("PauliSum qubit counts differ");
  const std::size_t n = a.num_qubits();
  std::map<PauliString, Complex> acc;
  auto with_identity = [n](const PauliSum& s) {
    std::vector<std::pair<PauliString, double>> v(s.terms().begin(), s.terms().end());
    if (s.constant() != 0.0) v.emplace_back(PauliString(n), s.constant());
    return v;
  };
  for (const auto& [p, cp] : with_identity(a)) {
    for (const auto& [q, cq] : with_identity(b)) {
      const PauliProduct r = multiply(p, q);
      acc[r.result] += r.phase() * (cp * cq);
    }
  }
  PauliSum out(n);
  for (const auto& [p, c] : acc) {
    if (std::abs(c.imag()) > 1e-10) {
      throw DomainError("product of the two sums is not Hermitian");
    }
    out.add_term(p, c.real());
  }
  return out.simplify();
}

// --- matrices --------------------------------------------------------------

MatrixCaps MatrixCaps::from_env() {
  MatrixCaps caps;
  auto read = [](const char* name, std::size_t& slot) {
    if (const char* v = std::getenv(name)) {
      std::size_t value = 0;
      const char* end = v + std::char_traits<char>::length(v);
      const auto [ptr, ec] = std::from_chars(v, end, value);
      if (ec == std::errc{} && ptr == end) slot = value;
    }
  };
  read("NOCLID_DENSE_MAX_QUBITS", caps.dense_max_qubits);
  read("NOCLID_SPARSE_MAX_QUBITS", caps.sparse_max_qubits);
  return caps;
}

Eigen::MatrixXcd to_dense(const PauliSum& h, const MatrixCaps& caps) {
  const std::size_t n = h.num_qubits();
  if (n > caps.dense_max_qubits) {
    throw ResourceError("dense realization capped at " + std::to_string(caps.dense_max_qubits) +
                        " qubits, got " + std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) * h.constant();
  for (const auto& [p, c] : h.terms()) {
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t sign = p.sign_mask();
    const Complex base = kIPowers[p.y_count() % 4] * c;
    for (std::size_t b = 0; b < dim; ++b) {
      const double s = (std::popcount(b & sign) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(b ^ flip), static_cast<Eigen::Index>(b)) += base * s;
    }
  }
  return m;
}

SparseMatrix to_sparse(const PauliSum& h, const MatrixCaps& caps) {
  const std::size_t n = h.num_qubits();
  if (n > caps.sparse_max_qubits) {
    throw ResourceError("sparse realization capped at " + std::to_string(caps.sparse_max_qubits) +
                        " qubits, got " + std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(dim * (h.size() + 1));
  if (h.constant() != 0.0) {
    for (std::size_t b = 0; b < dim; ++b) {
      triplets.emplace_back(static_cast<int>(b), static_cast<int>(b), h.constant());
    }
  }
  for (const auto& [p, c] : h.terms()) {
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t sign = p.sign_mask();
    const Complex base = kIPowers[p.y_count() % 4] * c;
    for (std::size_t b = 0; b < dim; ++b) {
      const double s = (std::popcount(b & sign) & 1) ? -1.0 : 1.0;
      triplets.emplace_back(static_cast<int>(b ^ flip), static_cast<int>(b), base * s);
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.prune(Complex(0.0, 0.0));
  return m;
}

Eigen::VectorXcd apply(const PauliSum& h, const Eigen::VectorXcd& v) {
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  if (static_cast<std::size_t>(v.size()) != dim) {
    throw DimensionError("state dimension does not match the operator");
  }
  Eigen::VectorXcd out = v * h.constant();
  for (const auto& [p, c] : h.terms()) {
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t sign = p.sign_mask();
    const Complex base = kIPowers[p.y_count() % 4] * c;
    for (std::size_t b = 0; b < dim; ++b) {
      const double s = (std::popcount(b & sign) & 1) ? -1.0 : 1.0;
      out[static_cast<Eigen::Index>(b ^ flip)] += base * s * v[static_cast<Eigen::Index>(b)];
    }
  }
  return out;
}

PauliSum pauli_decompose(const Eigen::MatrixXcd& a, double tolerance) {
  const auto dim = static_cast<std::size_t>(a.rows());
  if (a.cols() != a.rows() || dim == 0 || (dim & (dim - 1)) != 0) {
    throw DimensionError("Pauli projection needs a square 2^k matrix");
  }
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
    throw DomainError("Pauli projection needs a Hermitian matrix");
  }
  const auto k = static_cast<std::size_t>(std::countr_zero(dim));
  PauliSum out(k);
  const std::uint64_t count = std::uint64_t{1} << (2 * k);
  for (std::uint64_t code = 0; code < count; ++code) {
    const PauliString p =
        PauliString::from_masks(k, code & ((std::uint64_t{1} << k) - 1), code >> k);
    // Tr(P A) = sum_b <b|P A|b> = sum_b (P^dag)_{..}: P|b> = phase(b)|b^flip>, so
    // <b^flip|P|b> = phase(b) and Tr(PA) = sum_b phase(b) A(b, b^flip).
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t sign = p.sign_mask();
    const Complex base = kIPowers[p.y_count() % 4];
    Complex trace = 0.0;
    for (std::size_t b = 0; b < dim; ++b) {
      const double s = (std::popcount(b & sign) & 1) ? -1.0 : 1.0;
      trace += base * s * a(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ flip));
    }
    const double c = trace.real() / static_cast<double>(dim);
    if (std::abs(c) > kZeroThreshold) out.add_term(p, c);
  }
  return out;
}

// --- text format -----------------------------------------------------------

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

struct ParsedLine {
  double coefficient;
  std::vector<std::pair<std::size_t, Pauli>> letters;
};

}  // namespace

PauliSum parse_pauli_sum(std::istream& in, std::optional<std::size_t> n) {
  std::vector<ParsedLine> lines;
  std::optional<std::size_t> directive;
  std::size_t max_index = 0;
  bool any_letter = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      const std::string_view comment = trim(line.substr(hash + 1));
      constexpr std::string_view kKey = "qubits:";
      if (comment.substr(0, kKey.size()) == kKey) {
        const std::string_view value = trim(comment.substr(kKey.size()));
        std::size_t q = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), q);
        if (ec != std::errc{} || ptr != value.data() + value.size()) {
          throw ParseError("bad qubits directive", lineno);
        }
        directive = q;
      }
      line = line.substr(0, hash);
    }
    const auto tokens = split_ws(trim(line));
    if (tokens.empty()) continue;

    ParsedLine parsed{};
    const std::string_view ctok = tokens[0];
    if (ctok.find_first_of("ijJ()") != std::string_view::npos ||
        ctok.find(',') != std::string_view::npos) {
      throw ParseError("complex coefficients are not supported: '" + std::string(ctok) + "'",
                       lineno);
    }
    const char* cbegin = ctok.data() + (ctok.front() == '+' ? 1 : 0);
    const auto [cptr, cec] = std::from_chars(cbegin, ctok.data() + ctok.size(), parsed.coefficient);
    if (cec != std::errc{} || cptr != ctok.data() + ctok.size()) {
      throw ParseError("bad coefficient '" + std::string(ctok) + "'", lineno);
    }
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const std::string_view tok = tokens[t];
      if (tok.size() < 2) throw ParseError("bad Pauli factor '" + std::string(tok) + "'", lineno);
      Pauli letter{};
      try {
        letter = pauli_from_char(tok[0]);
      } catch (const DomainError&) {
        throw ParseError("bad Pauli letter in '" + std::string(tok) + "'", lineno);
      }
      std::size_t q = 0;
      const auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), q);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("bad qubit index in '" + std::string(tok) + "'", lineno);
      }
      for (const auto& [seen, _] : parsed.letters) {
        if (seen == q) throw ParseError("qubit " + std::to_string(q) + " repeated", lineno);
      }
      if (q >= kMaxQubits) throw ParseError("qubit index too large", lineno);
      parsed.letters.emplace_back(q, letter);
      max_index = std::max(max_index, q);
      any_letter = true;
    }
    lines.push_back(std::move(parsed));
  }

  const std::size_t inferred = any_letter ? max_index + 1 : 0;
  const std::size_t qubits = n.value_or(directive.value_or(inferred));
  if (any_letter && max_index >= qubits) {
    throw ParseError("qubit index " + std::to_string(max_index) + " exceeds declared count " +
                     std::to_string(qubits));
  }
  PauliSum out(qubits);
  for (const auto& line : lines) {
    PauliString p(qubits);
    for (const auto& [q, letter] : line.letters) p.set(q, letter);
    out.add_term(p, line.coefficient);
  }
  return out.simplify();
}

PauliSum parse_pauli_sum(std::string_view text, std::optional<std::size_t> n) {
  std::istringstream in{std::string(text)};
  return parse_pauli_sum(in, n);
}

PauliSum read_pauli_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_pauli_sum(in);
}

void write_pauli_sum(std::ostream& out, const PauliSum& h) {
  out << "# qubits: " << h.num_qubits() << '\n';
  if (h.constant() != 0.0) out << format_double(h.constant()) << '\n';
  for (const auto& [p, c] : h.sorted_terms()) {
    out << format_double(c) << ' ' << p.sparse_text() << '\n';
  }
}

std::string to_text(const PauliSum& h) {
  std::ostringstream out;
  write_pauli_sum(out, h);
  return out.str();
}

void write_pauli_file(const std::string& path, const PauliSum& h) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  write_pauli_sum(out, h);
}

}  // namespace noclid
