// Copyright 2026 The groverlab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace groverlab {

enum class ErrorKind {
    InvalidSize,
    Shape,
    Normalization,
    Index,
    DegenerateSubspace,
    DivergentPeriod,
    SingularDenominator,
    Resource,
    NonFinite,
    Io,
    Usage,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` distinguishes failure
/// classes so callers (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &msg) {
    throw Error(kind, std::string(to_string(kind)) + ": " + msg);
}

} // namespace groverlab
