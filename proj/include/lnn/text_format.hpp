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

// Text formats shared by the library and the command line tool.
//
// Matrix file:
//   n
//   n lines of n '0'/'1' characters; line i, column j is entry (i, j).
//
// Circuit file:
//   n <n>
//   one line per time slice, space separated tokens "u<i>" (bit[i] ^= bit[i+1])
//   or "d<i>" (bit[i+1] ^= bit[i]). Empty slices are not allowed.
//
// Diagram (render output): one row per wire, wire 1 on top, time left to
// right. Each slice contributes a glyph and a '-':
//   '+'  target of a gate
//   '^'  source whose target is the wire above
//   'v'  source whose target is the wire below
//   '-'  idle

#pragma once

#include <cctype>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnn/circuit.hpp"
#include "lnn/f2.hpp"

namespace lnn {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // tolerate trailing blank lines
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

inline std::size_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 4) throw ParseError("bad " + what + ": '" + s + "'");
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad " + what + ": '" + s + "'");
    }
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace detail

inline void write_matrix(std::ostream& out, const BitMatrix& m) {
  out << m.size() << '\n';
  for (std::size_t i = 1; i <= m.size(); ++i) {
    for (std::size_t j = 1; j <= m.size(); ++j) out << (m.get(i, j) ? '1' : '0');
    out << '\n';
  }
}

inline std::string matrix_to_string(const BitMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

inline BitMatrix read_matrix(std::istream& in) {
  const auto lines = detail::read_lines(in);
  if (lines.empty()) throw ParseError("matrix: empty input");
  const std::size_t n = detail::parse_count(lines[0], "matrix dimension");
  if (n < 2 || n > kMaxDim) throw ParseError("matrix: dimension must be in [2, 64]");
  if (lines.size() != n + 1) {
    throw ParseError("matrix: expected " + std::to_string(n) + " rows, got " +
                     std::to_string(lines.size() - 1));
  }
  BitMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string& row = lines[i];
    if (row.size() != n) throw ParseError("matrix: row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 1; j <= n; ++j) {
      const char c = row[j - 1];
      if (c != '0' && c != '1') throw ParseError("matrix: invalid character in row " + std::to_string(i));
      m.set(i, j, c == '1');
    }
  }
  return m;
}

inline BitMatrix matrix_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

inline void write_circuit(std::ostream& out, const Circuit& c) {
  out << "n " << c.wires() << '\n';
  for (const auto& slice : c.slices()) {
    for (std::size_t g = 0; g < slice.size(); ++g) {
      if (g) out << ' ';
      out << to_string(slice[g]);
    }
    out << '\n';
  }
}

inline std::string circuit_to_string(const Circuit& c) {
  std::ostringstream os;
  write_circuit(os, c);
  return os.str();
}

/// Parses and validates; any structural violation is a ParseError.
inline Circuit read_circuit(std::istream& in) {
  const auto lines = detail::read_lines(in);
  if (lines.empty() || lines[0].rfind("n ", 0) != 0) throw ParseError("circuit: missing 'n <n>' header");
  const std::size_t n = detail::parse_count(lines[0].substr(2), "wire count");
  if (n < 2 || n > kMaxDim) throw ParseError("circuit: wire count must be in [2, 64]");
  std::vector<TimeSlice> slices;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    std::istringstream tokens(lines[l]);
    TimeSlice slice;
    std::string tok;
    while (tokens >> tok) {
      if (tok.size() < 2 || (tok[0] != 'u' && tok[0] != 'd')) {
        throw ParseError("circuit: bad token '" + tok + "' on line " + std::to_string(l + 1));
      }
      const std::size_t i = detail::parse_count(tok.substr(1), "gate index");
      if (i < 1 || i >= n) throw ParseError("circuit: gate index out of range in '" + tok + "'");
      slice.push_back(tok[0] == 'u' ? Gate::up(i) : Gate::down(i));
    }
    if (slice.empty()) throw ParseError("circuit: empty slice on line " + std::to_string(l + 1));
    slices.push_back(std::move(slice));
  }
  Circuit c(n, std::move(slices));
  if (auto v = validate(c); !v.empty()) throw ParseError("circuit: " + describe(v.front()));
  return c;
}

inline Circuit circuit_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_circuit(is);
}

/// ASCII diagram, byte-exact for a given circuit.
inline std::string render(const Circuit& c) {
  const std::size_t n = c.wires();
  const std::size_t width = std::to_string(n).size();
  std::vector<std::string> rows(n + 1);
  for (std::size_t w = 1; w <= n; ++w) {
    std::string label = std::to_string(w);
    rows[w] = std::string(width - label.size(), ' ') + label + " -";
  }
  for (const auto& slice : c.slices()) {
    std::vector<char> glyph(n + 1, '-');
    for (const Gate& g : slice) {
      glyph[g.target] = '+';
      glyph[g.source] = g.is_up() ? '^' : 'v';
    }
    for (std::size_t w = 1; w <= n; ++w) {
      rows[w] += glyph[w];
      rows[w] += '-';
    }
  }
  std::string out;
  for (std::size_t w = 1; w <= n; ++w) out += rows[w] + '\n';
  return out;
}

/// Inverse of render().
inline Circuit parse_diagram(const std::string& text) {
  std::istringstream is(text);
  const auto lines = detail::read_lines(is);
  const std::size_t n = lines.size();
  if (n < 2) throw ParseError("diagram: need at least two wire rows");
  std::vector<std::string> body(n);
  for (std::size_t w = 0; w < n; ++w) {
    const auto pos = lines[w].find(" -");
    if (pos == std::string::npos) throw ParseError("diagram: malformed row " + std::to_string(w + 1));
    body[w] = lines[w].substr(pos + 2);
    if (body[w].size() != body[0].size() || body[w].size() % 2 != 0) {
      throw ParseError("diagram: ragged rows");
    }
  }
  std::vector<TimeSlice> slices;
  for (std::size_t col = 0; col < body[0].size(); col += 2) {
    TimeSlice slice;
    std::size_t targets = 0;
    for (std::size_t w = 0; w < n; ++w) {
      const char ch = body[w][col];
      if (ch == '+') ++targets;
      const std::size_t wire = w + 1;
      if (ch == 'v') {
        if (wire == n || body[w + 1][col] != '+') throw ParseError("diagram: dangling 'v'");
        slice.push_back(Gate::down(wire));
      } else if (ch == '^') {
        if (wire == 1 || body[w - 1][col] != '+') throw ParseError("diagram: dangling '^'");
        slice.push_back(Gate::up(wire - 1));
      } else if (ch != '+' && ch != '-') {
        throw ParseError(std::string("diagram: unknown glyph '") + ch + "'");
      }
    }
    if (targets != slice.size()) throw ParseError("diagram: '+' without a matching source");
    slices.push_back(std::move(slice));
  }
  Circuit c(n, std::move(slices));
  if (auto v = validate(c); !v.empty()) throw ParseError("diagram: " + describe(v.front()));
  return c;
}

}  // namespace lnn
