// Copyright 2026 The polarbench Authors.
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

#include "polar/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "polar/error.hpp"

namespace polar {

std::string spec_to_text(const CodeSpec& spec) {
  const Kernel& k = spec.kernel();
  std::ostringstream os;
  os << "kernel ell=" << k.ell() << " q=" << k.q() << "\n";
  if (k.is_linear()) {
    os << "G\n";
    for (const auto& row : k.generator()) {
      for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
      os << "\n";
    }
  } else {
    os << "map";
    for (long long i = 0; i < k.domain_size(); ++i) os << " " << k.apply_index(static_cast<int>(i));
    os << "\n";
  }
  if (!k.homogeneous()) {
    os << "glue ";
    const auto& glue = k.glue();
    for (size_t g = 0; g < glue.size(); ++g) {
      if (g) os << ";";
      for (int i = 0; i < glue[g].size; ++i) os << (i ? "," : "") << glue[g].start + i;
    }
    os << "\n";
  }
  os << "m " << spec.m() << "\n";
  auto frozen = spec.frozen_indices();
  if (!frozen.empty()) {
    os << "frozen";
    for (int i : frozen) {
      os << " " << i;
      if (spec.frozen_value(i) != 0) os << ":" << spec.frozen_value(i);
    }
    os << "\n";
  }
  return os.str();
}

namespace {

int to_int(const std::string& s, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
}

std::vector<GlueGroup> parse_glue(const std::string& s, int line) {
  std::vector<GlueGroup> out;
  std::stringstream groups(s);
  std::string grp;
  while (std::getline(groups, grp, ';')) {
    std::stringstream members(grp);
    std::string item;
    std::vector<int> idx;
    while (std::getline(members, item, ',')) idx.push_back(to_int(item, line));
    if (idx.empty()) throw ParseError("line " + std::to_string(line) + ": empty glue group");
    for (size_t i = 1; i < idx.size(); ++i)
      if (idx[i] != idx[i - 1] + 1)
        throw ParseError("line " + std::to_string(line) + ": glue group not consecutive");
    out.push_back({idx[0], static_cast<int>(idx.size())});
  }
  return out;
}

}  // namespace

CodeSpec spec_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int ell = 0, q = 0, m = 0, lineno = 0;
  Matrix g;
  std::vector<int> table;
  bool have_map = false;
  int g_rows_pending = 0;
  std::vector<GlueGroup> glue;
  std::vector<std::pair<int, int>> frozen;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (g_rows_pending > 0) {
      SymbolVec row;
      for (const auto& t : tok) row.push_back(to_int(t, lineno));
      g.push_back(row);
      --g_rows_pending;
      continue;
    }
    const std::string& key = tok[0];
    if (key == "kernel") {
      for (size_t i = 1; i < tok.size(); ++i) {
        auto eq = tok[i].find('=');
        if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key=value");
        std::string k = tok[i].substr(0, eq), v = tok[i].substr(eq + 1);
        if (k == "ell") ell = to_int(v, lineno);
        else if (k == "q") q = to_int(v, lineno);
        else throw ParseError("line " + std::to_string(lineno) + ": unknown kernel field " + k);
      }
    } else if (key == "G") {
      if (ell < 2) throw ParseError("line " + std::to_string(lineno) + ": G before kernel header");
      g_rows_pending = ell;
    } else if (key == "map") {
      for (size_t i = 1; i < tok.size(); ++i) table.push_back(to_int(tok[i], lineno));
      have_map = true;
    } else if (key == "glue") {
      if (tok.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": glue takes one argument");
      glue = parse_glue(tok[1], lineno);
    } else if (key == "m") {
      if (tok.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": m takes one argument");
      m = to_int(tok[1], lineno);
    } else if (key == "frozen") {
      for (size_t i = 1; i < tok.size(); ++i) {
        auto c = tok[i].find(':');
        if (c == std::string::npos) frozen.push_back({to_int(tok[i], lineno), 0});
        else frozen.push_back({to_int(tok[i].substr(0, c), lineno), to_int(tok[i].substr(c + 1), lineno)});
      }
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown directive " + key);
    }
  }
  if (g_rows_pending > 0) throw ParseError("truncated generator matrix");
  if (ell < 2 || q < 2) throw ParseError("missing kernel header");
  if (m < 1) throw ParseError("missing level count");
  auto f = Alphabet::make(q);
  KernelPtr k;
  if (have_map) k = Kernel::from_map(ell, f, table, glue);
  else if (!g.empty()) k = Kernel::linear(g, f, glue);
  else throw ParseError("kernel needs G or map");
  CodeSpec spec(k, m);
  for (auto [i, v] : frozen) spec.freeze(i, v);
  return spec;
}

CodeSpec read_spec_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return spec_from_text(ss.str());
}

void write_spec_file(const std::string& path, const CodeSpec& spec) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << spec_to_text(spec);
}

KernelPtr kernel_by_name(const std::string& name) {
  if (name == "arikan") return Kernel::arikan();
  if (name == "tri4") return Kernel::triangular4();
  if (name.rfind("rs", 0) == 0 && name.size() > 2) {
    int q = to_int(name.substr(2), 0);
    return Kernel::reed_solomon(q);
  }
  throw ParameterError("unknown kernel '" + name + "'");
}

}  // namespace polar
