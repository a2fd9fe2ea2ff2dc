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

#include "noclid/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "noclid/errors.hpp"
#include "noclid/pauli.hpp"

namespace noclid {

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

// Fortran writers may use a D exponent.
bool parse_real(std::string token, double& out) {
  std::replace(token.begin(), token.end(), 'D', 'E');
  std::replace(token.begin(), token.end(), 'd', 'e');
  const char* begin = token.data() + (!token.empty() && token.front() == '+' ? 1 : 0);
  const auto [ptr, ec] = std::from_chars(begin, token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

bool parse_int(const std::string& token, long& out) {
  const char* begin = token.data() + (!token.empty() && token.front() == '+' ? 1 : 0);
  const auto [ptr, ec] = std::from_chars(begin, token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

FcidumpData read_fcidump(std::istream& in) {
  FcidumpData data;
  std::string line;
  std::size_t lineno = 0;

  // Namelist header: "&FCI NORB=..., ... &END" (or a closing "/"), possibly multi-line.
  std::string header;
  bool started = false;
  bool finished = false;
  while (!finished && std::getline(in, line)) {
    ++lineno;
    const std::string u = upper(line);
    if (!started) {
      const auto pos = u.find("&FCI");
      if (pos == std::string::npos) {
        if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw ParseError("expected &FCI header", lineno);
      }
      started = true;
      header += u.substr(pos + 4) + ' ';
    } else {
      header += u + ' ';
    }
    const std::string& tail = header;
    if (tail.find("&END") != std::string::npos || tail.find('/') != std::string::npos) {
      finished = true;
    }
  }
  if (!finished) throw ParseError("unterminated &FCI header", lineno);
  const std::size_t header_line = lineno;
  header = header.substr(0, std::min(header.find("&END"), header.find('/')));
  std::replace(header.begin(), header.end(), ',', ' ');

  std::istringstream hs(header);
  std::string token;
  std::string key;
  bool have_norb = false;
  std::vector<std::string> tokens;
  while (hs >> token) {
    // Split "NORB=2" and "NORB =2" alike.
    std::size_t start = 0;
    while (start < token.size()) {
      const auto eq = token.find('=', start);
      if (eq == std::string::npos) {
        tokens.push_back(token.substr(start));
        break;
      }
      if (eq > start) tokens.push_back(token.substr(start, eq - start));
      tokens.push_back("=");
      start = eq + 1;
    }
  }
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (t + 1 < tokens.size() && tokens[t + 1] == "=") {
      key = tokens[t];
      ++t;
      continue;
    }
    long v = 0;
    if (!parse_int(tokens[t], v)) {
      throw ParseError("bad header value '" + tokens[t] + "' for " + key, header_line);
    }
    if (key == "NORB") {
      if (v < 0) throw ParseError("negative NORB", header_line);
      data.norb = static_cast<std::size_t>(v);
      have_norb = true;
    } else if (key == "NELEC") {
      data.nelec = static_cast<std::size_t>(std::max(0L, v));
    } else if (key == "MS2") {
      data.ms2 = static_cast<int>(v);
    } else if (key == "ISYM") {
      data.isym = static_cast<int>(v);
    } else if (key == "ORBSYM") {
      data.orbsym.push_back(static_cast<int>(v));
    } else if (key.empty()) {
      throw ParseError("header value without a key", header_line);
    }
    // Unknown keys (UHF, IUHF, ...) are ignored.
  }
  if (!have_norb) throw ParseError("header lacks NORB", header_line);

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> f;
    while (ls >> token) f.push_back(token);
    if (f.empty()) continue;
    if (f.size() != 5) throw ParseError("expected 'value i j k l'", lineno);
    double value = 0.0;
    if (!parse_real(f[0], value)) throw ParseError("bad integral value '" + f[0] + "'", lineno);
    long idx[4];
    for (int a = 0; a < 4; ++a) {
      if (!parse_int(f[1 + a], idx[a])) {
        throw ParseError("bad orbital index '" + f[1 + a] + "'", lineno);
      }
      if (idx[a] < 0 || static_cast<std::size_t>(idx[a]) > data.norb) {
        throw DataError("line " + std::to_string(lineno) + ": orbital index " +
                        std::to_string(idx[a]) + " outside 0.." + std::to_string(data.norb));
      }
    }
    const auto [i, j, k, l] = std::tuple{idx[0], idx[1], idx[2], idx[3]};
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      data.core_energy += value;
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      data.one_body.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                               value});
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      data.two_body.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                               static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1),
                               value});
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // Orbital energies; not part of the Hamiltonian.
    } else {
      throw ParseError("unsupported index pattern", lineno);
    }
  }
  return data;
}

FcidumpData read_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_fcidump(in);
}

void write_fcidump(std::ostream& out, const FcidumpData& data) {
  out << "&FCI NORB=" << data.norb << ",NELEC=" << data.nelec << ",MS2=" << data.ms2 << ",\n";
  out << " ORBSYM=";
  if (data.orbsym.empty()) {
    for (std::size_t o = 0; o < data.norb; ++o) out << "1,";
  } else {
    for (int s : data.orbsym) out << s << ',';
  }
  out << "\n ISYM=" << data.isym << ",\n&END\n";
  for (const auto& e : data.two_body) {
    out << format_double(e.value) << ' ' << e.i + 1 << ' ' << e.j + 1 << ' ' << e.k + 1 << ' '
        << e.l + 1 << '\n';
  }
  for (const auto& e : data.one_body) {
    out << format_double(e.value) << ' ' << e.i + 1 << ' ' << e.j + 1 << " 0 0\n";
  }
  out << format_double(data.core_energy) << " 0 0 0 0\n";
}

void write_fcidump(const std::string& path, const FcidumpData& data) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  write_fcidump(out, data);
}

FermionOperator to_fermion_operator(const FcidumpData& data) {
  const std::size_t n = data.norb;
  std::vector<double> h1(n * n, 0.0);
  std::vector<double> eri(n * n * n * n, 0.0);
  auto at1 = [n](std::size_t i, std::size_t j) { return i * n + j; };
  auto at2 = [n](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ((i * n + j) * n + k) * n + l;
  };
  for (const auto& e : data.one_body) {
    h1[at1(e.i, e.j)] = e.value;
    h1[at1(e.j, e.i)] = e.value;
  }
  for (const auto& e : data.two_body) {
    const std::size_t i = e.i, j = e.j, k = e.k, l = e.l;
    for (std::size_t idx : {at2(i, j, k, l), at2(j, i, k, l), at2(i, j, l, k), at2(j, i, l, k),
                            at2(k, l, i, j), at2(l, k, i, j), at2(k, l, j, i), at2(l, k, j, i)}) {
      eri[idx] = e.value;
    }
  }

  FermionOperator h(2 * n);
  h.add_constant(data.core_energy);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = h1[at1(i, j)];
      if (v == 0.0) continue;
      for (std::size_t s = 0; s < 2; ++s) h.add_term(v, {{2 * i + s, true}, {2 * j + s, false}});
    }
  }
  // (ij|kl) sum_{s,t} a+_{is} a+_{kt} a_{lt} a_{js}, with the overall 1/2.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double v = eri[at2(i, j, k, l)];
          if (v == 0.0) continue;
          for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t t = 0; t < 2; ++t) {
              const std::size_t p = 2 * i + s, q = 2 * k + t, r = 2 * l + t, u = 2 * j + s;
              if (p == q || r == u) continue;
              h.add_term(0.5 * v, {{p, true}, {q, true}, {r, false}, {u, false}});
            }
        }
  return h;
}

FermionOperator load_fcidump(const std::string& path) {
  return to_fermion_operator(read_fcidump(path));
}

}  // namespace noclid
