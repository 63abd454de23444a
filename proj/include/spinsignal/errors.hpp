// Copyright 2026 The spinsignal Authors
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

namespace spinsignal {

/// Invalid user-supplied input: a bad site index, coupling, state or config
/// field. The message names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A numerical invariant (trace, norm, positivity) drifted past tolerance.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(const std::string& invariant, const std::string& what)
      : std::runtime_error(invariant + ": " + what), invariant_(invariant) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace spinsignal
