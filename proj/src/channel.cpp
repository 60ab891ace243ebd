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

#include "polar/channel.hpp"

#include <cmath>
#include <sstream>

#include "polar/error.hpp"

namespace polar {

ChannelModel ChannelModel::bec(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw ParameterError("BEC erasure probability must be in [0,1]");
  return {Kind::kBec, eps};
}

ChannelModel ChannelModel::bsc(double p) {
  if (!(p >= 0.0 && p <= 0.5)) throw ParameterError("BSC crossover must be in [0,0.5]");
  return {Kind::kBsc, p};
}

ChannelModel ChannelModel::biawgn(double sigma) {
  if (!(sigma > 0.0)) throw ParameterError("AWGN sigma must be positive");
  return {Kind::kBiAwgn, sigma};
}

ChannelModel ChannelModel::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParameterError("channel must look like kind:param");
  std::string kind = text.substr(0, colon);
  double v;
  try {
    size_t pos = 0;
    v = std::stod(text.substr(colon + 1), &pos);
    if (pos != text.size() - colon - 1) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw ParameterError("bad channel parameter in '" + text + "'");
  }
  if (kind == "bec") return bec(v);
  if (kind == "bsc") return bsc(v);
  if (kind == "awgn" || kind == "biawgn") return biawgn(v);
  throw ParameterError("unknown channel kind '" + kind + "'");
}

std::string ChannelModel::name() const {
  switch (kind) {
    case Kind::kBec: return "bec";
    case Kind::kBsc: return "bsc";
    case Kind::kBiAwgn: return "awgn";
  }
  return "?";
}

std::string ChannelModel::to_string() const {
  std::ostringstream os;
  os << name() << ":" << param;
  return os.str();
}

std::vector<double> transmit(const ChannelModel& ch, const SymbolVec& x, Rng& rng) {
  std::vector<double> out(x.size());
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double bsc_llr = 0.0;
  if (ch.kind == ChannelModel::Kind::kBsc)
    bsc_llr = ch.param == 0.0 ? kInf : std::log((1.0 - ch.param) / ch.param);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && x[i] != 1) throw DomainError("binary channel needs binary symbols");
    double sign = x[i] ? -1.0 : 1.0;
    switch (ch.kind) {
      case ChannelModel::Kind::kBec:
        out[i] = uni(rng) < ch.param ? 0.0 : sign * kInf;
        break;
      case ChannelModel::Kind::kBsc: {
        bool flip = uni(rng) < ch.param;
        out[i] = (flip ? -sign : sign) * bsc_llr;
        if (bsc_llr == 0.0) out[i] = 0.0;
        break;
      }
      case ChannelModel::Kind::kBiAwgn: {
        double y = sign + ch.param * gauss(rng);
        out[i] = 2.0 * y / (ch.param * ch.param);
        break;
      }
    }
  }
  return out;
}

std::vector<double> transmit(const ChannelModel& ch, const SymbolVec& x, std::uint64_t seed) {
  Rng rng(seed);
  return transmit(ch, x, rng);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<LlrFunction> to_llr_functions(const std::vector<double>& binary_llrs) {
  std::vector<LlrFunction> out;
  out.reserve(binary_llrs.size());
  for (double l : binary_llrs) out.push_back(LlrFunction::binary(l));
  return out;
}

}  // namespace polar
