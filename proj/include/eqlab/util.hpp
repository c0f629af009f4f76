// Copyright 2026 The eqlab Authors
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

#ifndef EQLAB_UTIL_HPP_
#define EQLAB_UTIL_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlab {

// Thrown on contract violations (illegal action, terminal-state query, ...).
[[noreturn]] void FatalError(const std::string& message);

// Thrown by update operations when the backing buffer holds too little data.
class NotReadyError : public std::runtime_error {
 public:
  explicit NotReadyError(const std::string& message)
      : std::runtime_error(message) {}
};

#define EQLAB_CHECK(condition, message)      \
  do {                                       \
    if (!(condition)) ::eqlab::FatalError(message); \
  } while (false)

// Decimal representation with `significant_digits` significant digits.
// 17 digits round-trips a double exactly.
std::string FormatDouble(double value, int significant_digits);

// Strict parsers; the whole token must be consumed.
double ParseDouble(const std::string& text, const std::string& what);
int64_t ParseInt64(const std::string& text, const std::string& what);
uint64_t ParseUint64(const std::string& text, const std::string& what);

std::vector<std::string> SplitString(const std::string& text, char sep);
std::string JoinStrings(const std::vector<std::string>& parts,
                        const std::string& sep);

// Lowercase hex SHA-256 of `bytes`.
std::string Sha256Hex(const std::string& bytes);

// Local time as ISO-8601 `YYYY-MM-DDTHH:MM:SS`.
std::string Iso8601Now();

}  // namespace eqlab

#endif  // EQLAB_UTIL_HPP_
