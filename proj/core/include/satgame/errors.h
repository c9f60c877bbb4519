// Copyright 2026 The Satgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SATGAME_ERRORS_H_
#define SATGAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace satgame {

// Invalid player/action indices, malformed profiles, empty inputs.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration would exceed the configured profile cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Exact verifiers require a deterministic correspondence.
class UnsupportedGameError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A conditional pmf was requested for an action with zero marginal mass.
class UndefinedConditionalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An importance ratio would divide by a zero play probability.
class DegenerateProbabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid learner or experiment configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed game, pmf or preset file. The message carries file and line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : "") +
                           ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace satgame

#endif  // SATGAME_ERRORS_H_
