// Copyright 2026 The cohctl Authors
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

#include "cohctl/io.hpp"

#include <fstream>
#include <sstream>

namespace cohctl::io {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(Errc::schema, "field '" + path + "': " + what);
}

const Json& field(const Json& j, const char* name, const std::string& path = "") {
  if (!j.is_object()) schema_error(path.empty() ? "<root>" : path, "expected an object");
  const auto it = j.find(name);
  if (it == j.end()) schema_error(path + name, "missing");
  return *it;
}

int dimension_field(const Json& j) {
  const Json& d = field(j, "d");
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    schema_error("d", "expected a positive integer");
  }
  return d.get<int>();
}

Complex complex_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    schema_error(path, "expected [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

}  // namespace

ChannelImplementation ChannelFile::implementation() const {
  if (!env) schema_error("env", "missing (required for an implementation)");
  return ChannelImplementation(channel, *env);
}

Json parse_text(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << source << ": line " << line << ", column " << column << ": " << e.what();
    throw Error(Errc::schema, msg.str());
  }
}

Json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::schema, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path.string());
}

ComplexMatrix matrix_from_json(const Json& j, int rows, int cols,
                               const std::string& path) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(rows)) {
    schema_error(path, "expected " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const std::string row_path = index_path(path, static_cast<std::size_t>(r));
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
      schema_error(row_path, "expected " + std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                  index_path(row_path, static_cast<std::size_t>(c)));
    }
  }
  return m;
}

ComplexVector vector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of [re, im] pairs");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], index_path(path, i));
  }
  return v;
}

ChannelFile channel_from_json(const Json& j) {
  const int d = dimension_field(j);
  const Json& kraus_json = field(j, "kraus");
  if (!kraus_json.is_array() || kraus_json.empty()) {
    schema_error("kraus", "expected a non-empty array of matrices");
  }
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < kraus_json.size(); ++i) {
    kraus.push_back(matrix_from_json(kraus_json[i], d, d, index_path("kraus", i)));
  }
  std::optional<ComplexVector> env;
  if (const auto it = j.find("env"); it != j.end()) {
    env = vector_from_json(*it, "env");
    if (env->size() != static_cast<Eigen::Index>(kraus.size())) {
      schema_error("env", "has " + std::to_string(env->size()) +
                              " amplitudes for " + std::to_string(kraus.size()) +
                              " Kraus operators");
    }
  }
  return ChannelFile{validate_channel(std::move(kraus)), std::move(env)};
}

TransformationMatrix t_from_json(const Json& j) {
  const int d = dimension_field(j);
  return {matrix_from_json(field(j, "t"), d, d, "t")};
}

ComplexMatrix state_from_json(const Json& j) {
  const int d = dimension_field(j);
  ComplexMatrix rho;
  if (j.contains("rho")) {
    rho = matrix_from_json(j["rho"], d, d, "rho");
  } else if (j.contains("ket")) {
    const ComplexVector psi = vector_from_json(j["ket"], "ket");
    if (psi.size() != d) schema_error("ket", "expected " + std::to_string(d) + " amplitudes");
    if (psi.norm() == 0.0) schema_error("ket", "zero vector");
    rho = pure_density(psi);
  } else {
    schema_error("rho", "missing (or give 'ket')");
  }
  require_density_matrix(rho);
  return rho;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Json channel_to_json(const Channel& ch, const std::optional<ComplexVector>& env) {
  Json j;
  j["d"] = ch.dim();
  Json kraus = Json::array();
  for (const auto& k : ch.kraus()) kraus.push_back(matrix_to_json(k));
  j["kraus"] = std::move(kraus);
  if (env) j["env"] = vector_to_json(*env);
  return j;
}

Json t_to_json(const TransformationMatrix& t) {
  Json j;
  j["d"] = t.matrix.rows();
  j["t"] = matrix_to_json(t.matrix);
  return j;
}

Json state_to_json(const ComplexMatrix& rho) {
  Json j;
  j["d"] = rho.rows();
  j["rho"] = matrix_to_json(rho);
  return j;
}

}  // namespace cohctl::io
