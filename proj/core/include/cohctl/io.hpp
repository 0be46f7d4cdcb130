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

// JSON file formats. Complex numbers are [re, im] pairs and matrices are
// row-major nested arrays of them.
//
//   channel:  {"d": int, "kraus": [matrix, ...], "env": [[re,im], ...]?}
//   T matrix: {"d": int, "t": matrix}
//   state:    {"d": int, "rho": matrix}  or  {"d": int, "ket": [[re,im], ...]}
//
// Every schema violation throws Error(Errc::schema) naming the offending
// field path, e.g. "kraus[1][0][2]".

#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cohctl/implementation.hpp"

namespace cohctl::io {

using Json = nlohmann::ordered_json;

struct ChannelFile {
  Channel channel;
  std::optional<ComplexVector> env;

  /// The implementation described by the file; Errc::schema if `env` is absent.
  ChannelImplementation implementation() const;
};

/// Parses text, reporting syntax errors as "line L, column C: ...".
Json parse_text(std::string_view text, std::string_view source = "<input>");
Json load_file(const std::filesystem::path& path);

ChannelFile channel_from_json(const Json& j);
TransformationMatrix t_from_json(const Json& j);
/// Accepts either "rho" or "ket"; the result is validated as a density matrix.
ComplexMatrix state_from_json(const Json& j);

Json complex_to_json(Complex z);
Json matrix_to_json(const ComplexMatrix& m);
Json vector_to_json(const ComplexVector& v);
Json channel_to_json(const Channel& ch,
                     const std::optional<ComplexVector>& env = std::nullopt);
Json t_to_json(const TransformationMatrix& t);
Json state_to_json(const ComplexMatrix& rho);

ComplexMatrix matrix_from_json(const Json& j, int rows, int cols,
                               const std::string& path);
ComplexVector vector_from_json(const Json& j, const std::string& path);

}  // namespace cohctl::io
