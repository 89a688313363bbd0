// Copyright 2026 The qpfaff Authors
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

#include <fstream>
#include <sstream>
#include <string>

#include "qpfaff/qlinalg.hpp"

namespace qpfaff {

// Matrix files: '#' comments, a dim line, a mode line, then one line per
// upper-triangle slot "i j value" (numeric) or "i j label" (symbolic):
//
//   dim 4
//   mode numeric
//   1 2 3
//   ...
//
// Each slot with 1 <= i < j <= dim must appear exactly once.

struct ParsedMatrix {
  int dim = 0;
  bool symbolic = false;
  std::vector<std::string> labels;   // symbolic: per-slot labels in (i,j) lex order
  std::vector<Rational> values;      // numeric: per-slot values in the same order
};

inline ParsedMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int dim = -1;
  int mode = -1;  // 0 numeric, 1 symbolic
  std::vector<std::string> cells;
  std::vector<bool> seen;
  auto slot_of = [&](int i, int j) {
    int idx = 0;
    for (int r = 1; r < i; ++r) idx += dim - r;
    return idx + (j - i - 1);
  };
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "dim") {
      if (dim != -1 || !(ls >> dim) || dim <= 0)
        throw ParseError("matrix file: bad or repeated dim line");
      cells.assign(static_cast<std::size_t>(dim) * (dim - 1) / 2, "");
      seen.assign(cells.size(), false);
    } else if (tok == "mode") {
      std::string m;
      if (mode != -1 || !(ls >> m) || (m != "numeric" && m != "symbolic"))
        throw ParseError("matrix file: mode must be 'numeric' or 'symbolic'");
      mode = m == "symbolic" ? 1 : 0;
    } else {
      if (dim < 0) throw ParseError("matrix file: entries before dim line");
      int i = 0, j = 0;
      std::string value;
      std::istringstream es(line);
      if (!(es >> i >> j >> value))
        throw ParseError("matrix file: bad entry line '" + line + "'");
      std::string extra;
      if (es >> extra)
        throw ParseError("matrix file: trailing tokens in '" + line + "'");
      if (!(1 <= i && i < j && j <= dim))
        throw ParseError("matrix file: entry needs 1 <= i < j <= dim");
      const int s = slot_of(i, j);
      if (seen[s])
        throw ParseError("matrix file: duplicate entry for (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
      seen[s] = true;
      cells[s] = value;
    }
  }
  if (dim < 0) throw ParseError("matrix file: missing dim line");
  if (mode < 0) throw ParseError("matrix file: missing mode line");
  for (std::size_t s = 0; s < seen.size(); ++s)
    if (!seen[s]) throw ParseError("matrix file: missing upper-triangle entries");

  ParsedMatrix out;
  out.dim = dim;
  out.symbolic = mode == 1;
  if (out.symbolic) {
    out.labels = cells;
  } else {
    for (const auto& c : cells) out.values.push_back(parse_rational(c));
  }
  return out;
}

inline ParsedMatrix load_matrix_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open matrix file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_matrix_text(ss.str());
}

inline SkewMatrixNum to_numeric(const ParsedMatrix& pm) {
  if (pm.symbolic) throw ParseError("matrix is symbolic, numeric requested");
  SkewMatrixNum a(pm.dim);
  std::size_t s = 0;
  for (int i = 1; i <= pm.dim; ++i)
    for (int j = i + 1; j <= pm.dim; ++j) a.set(i, j, pm.values[s++]);
  return a;
}

/// Builds the symbolic matrix; with no presentation supplied, uniform
/// q-commutation over the file's labels is used.
inline SkewMatrixSym to_symbolic(const ParsedMatrix& pm, PresentationPtr pres = nullptr) {
  if (!pm.symbolic) throw ParseError("matrix is numeric, symbolic requested");
  if (!pres) {
    pres = std::make_shared<AlgebraPresentation>(AlgebraPresentation::uniform_q(
        "uniform-q-" + std::to_string(pm.dim), pm.labels));
  }
  return SkewMatrixSym(pm.dim, pm.labels, std::move(pres));
}

inline std::string print_matrix(const ParsedMatrix& pm) {
  std::string out = "dim " + std::to_string(pm.dim) + "\n";
  out += std::string("mode ") + (pm.symbolic ? "symbolic" : "numeric") + "\n";
  std::size_t s = 0;
  for (int i = 1; i <= pm.dim; ++i) {
    for (int j = i + 1; j <= pm.dim; ++j, ++s) {
      out += std::to_string(i) + " " + std::to_string(j) + " " +
             (pm.symbolic ? pm.labels[s] : to_string(pm.values[s])) + "\n";
    }
  }
  return out;
}

}  // namespace qpfaff
