// Copyright 2026 The rdqsim Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdq {

/// Requested object exceeds the dense-representation size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible widths/dimensions.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A post-selection projected onto (numerically) nothing; the trajectory
/// cannot be continued.
class ExtinctionError : public std::runtime_error {
 public:
  ExtinctionError(const std::string& what, std::size_t gate_index = 0,
                  double time = -1.0)
      : std::runtime_error(what), gate_index_(gate_index), time_(time) {}

  std::size_t gate_index() const { return gate_index_; }
  /// Simulated time at which the trajectory died; negative if unknown.
  double time() const { return time_; }

 private:
  std::size_t gate_index_;
  double time_;
};

/// Decoding a statevector back to a probability distribution failed
/// (vanishing overlap or non-real content beyond tolerance).
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact propagator lost probability mass beyond tolerance, which
/// indicates a defective generator.
class ConservationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  /// 1-based line number in the config source, 0 if not tied to a line.
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace rdq
