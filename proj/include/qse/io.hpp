// Copyright 2026 The QSE Authors
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

// JSON files for channels and states. Complex numbers are [re, im] pairs.
//
//   Kraus channel: {"d": 2, "label": "...", "kraus": [A_0, A_1, ...]}
//                  each A_j a flat row-major list of d*d pairs
//                  (a list of d rows of d pairs is accepted on input)
//   Choi channel:  {"d": 2, "sigma": [[[re, im], ...], ...]}   d^2 rows of d^2 pairs
//   State:         {"d": 2, "rho":   [[[re, im], ...], ...]}   d rows of d pairs
//
// Doubles are written with round-trip precision (17 significant digits).

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qse/channel.hpp"
#include "qse/entropy.hpp"
#include "qse/errors.hpp"

namespace qse {

/// A channel as read from disk: both representations are always filled.
struct Channel {
  KrausSet kraus;
  ChoiMatrix choi;

  static Channel from_kraus(KrausSet k) {
    ChoiMatrix c = kraus_to_choi(k);
    return Channel{std::move(k), std::move(c)};
  }
  static Channel from_choi(ChoiMatrix c, std::string label = {}) {
    KrausSet k = choi_to_kraus(c, std::move(label));
    return Channel{std::move(k), std::move(c)};
  }
};

namespace io {

using nlohmann::json;

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json matrix_to_flat_json(const ComplexMatrix& m) {
  json flat = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) flat.push_back(complex_to_json(m(i, j)));
  return flat;
}

/// Accepts either `n` rows of `n` pairs or a flat list of n*n pairs.
inline ComplexMatrix matrix_from_json(const json& j, Eigen::Index n, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  ComplexMatrix m(n, n);
  // For n > 1 the length decides; for n = 1 look at the nesting depth.
  const bool flat = j.size() == static_cast<std::size_t>(n * n) &&
                    (n > 1 || j[0].is_number() || (j[0].is_array() && j[0].size() == 2 && j[0][0].is_number()));
  if (flat) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index c = 0; c < n; ++c) m(i, c) = complex_from_json(j[static_cast<std::size_t>(i * n + c)]);
    return m;
  }
  if (j.size() != static_cast<std::size_t>(n))
    throw ParseError(std::string(what) + ": expected " + std::to_string(n) + " rows");
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ParseError(std::string(what) + ": row " + std::to_string(i) + " has the wrong length");
    for (Eigen::Index c = 0; c < n; ++c) m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

inline json kraus_to_json(const KrausSet& k) {
  json ops = json::array();
  for (const auto& a : k.operators()) ops.push_back(matrix_to_flat_json(a));
  return json{{"d", k.dim()}, {"label", k.label()}, {"kraus", std::move(ops)}};
}

inline json choi_to_json(const ChoiMatrix& c, const std::string& label = {}) {
  json j{{"d", c.dim()}, {"sigma", matrix_to_json(c.matrix())}};
  if (!label.empty()) j["label"] = label;
  return j;
}

inline json state_to_json(const DensityOperator& rho) {
  return json{{"d", rho.dim()}, {"rho", matrix_to_json(rho.matrix())}};
}

inline Eigen::Index read_dim(const json& j) {
  if (!j.contains("d") || !j["d"].is_number_integer()) throw ParseError("missing integer field \"d\"");
  const auto d = j["d"].get<long long>();
  if (d < 1 || d > 64) throw ParseError("field \"d\" out of range");
  return static_cast<Eigen::Index>(d);
}

inline bool is_channel_json(const json& j) { return j.contains("kraus") || j.contains("sigma"); }
inline bool is_state_json(const json& j) { return j.contains("rho"); }

inline Channel channel_from_json(const json& j) {
  const Eigen::Index d = read_dim(j);
  const std::string label = j.value("label", std::string{});
  if (j.contains("kraus")) {
    const json& ops = j["kraus"];
    if (!ops.is_array() || ops.empty()) throw ParseError("\"kraus\" must be a nonempty array");
    std::vector<ComplexMatrix> mats;
    for (const auto& op : ops) mats.push_back(matrix_from_json(op, d, "kraus operator"));
    return Channel::from_kraus(KrausSet(std::move(mats), label));
  }
  if (j.contains("sigma")) return Channel::from_choi(ChoiMatrix(matrix_from_json(j["sigma"], d * d, "sigma"), d), label);
  throw ParseError("channel file needs a \"kraus\" or \"sigma\" field");
}

inline DensityOperator state_from_json(const json& j) {
  const Eigen::Index d = read_dim(j);
  if (!j.contains("rho")) throw ParseError("state file needs a \"rho\" field");
  return DensityOperator(matrix_from_json(j["rho"], d, "rho"));
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

inline Channel load_channel(const std::string& path) { return channel_from_json(read_json_file(path)); }
inline DensityOperator load_state(const std::string& path) { return state_from_json(read_json_file(path)); }

inline void save_channel(const std::string& path, const KrausSet& k) { write_json_file(path, kraus_to_json(k)); }
inline void save_choi(const std::string& path, const ChoiMatrix& c, const std::string& label = {}) {
  write_json_file(path, choi_to_json(c, label));
}
inline void save_state(const std::string& path, const DensityOperator& rho) { write_json_file(path, state_to_json(rho)); }

}  // namespace io
}  // namespace qse
