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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohctl {

/// Failure categories reported by the library. Every throwing entry point
/// raises `cohctl::Error` carrying one of these codes, so callers (and the
/// CLI) can tell a malformed input apart from a physically invalid one.
enum class Errc {
  dimension_mismatch,
  not_square,
  not_hermitian,
  negative_eigenvalue,
  invalid_density_matrix,
  trace_preservation,
  invalid_choi,
  not_unitary,
  out_of_range,
  length_mismatch,
  env_not_normalizable,
  inadmissible,
  unknown_case,
  schema,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cohctl
