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

#include "eqlab/util.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <sstream>

namespace eqlab {

void FatalError(const std::string& message) {
  throw std::runtime_error(message);
}

std::string FormatDouble(double value, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, value);
  return buffer;
}

double ParseDouble(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    FatalError("invalid real value for " + what + ": '" + text + "'");
  }
  return value;
}

int64_t ParseInt64(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  long long value = std::strtoll(begin, &end, 10);
  if (end == begin || *end != '\0') {
    FatalError("invalid integer value for " + what + ": '" + text + "'");
  }
  return static_cast<int64_t>(value);
}

uint64_t ParseUint64(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  unsigned long long value = std::strtoull(begin, &end, 10);
  if (end == begin || *end != '\0') {
    FatalError("invalid unsigned integer value for " + what + ": '" + text +
               "'");
  }
  return static_cast<uint64_t>(value);
}

std::vector<std::string> SplitString(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::string JoinStrings(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &digest_len,
                 EVP_sha256(), nullptr) != 1) {
    FatalError("sha256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * digest_len);
  for (unsigned int i = 0; i < digest_len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string Iso8601Now() {
  std::time_t now = std::time(nullptr);
  std::tm tm_buf;
  localtime_r(&now, &tm_buf);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%S", &tm_buf);
  return buffer;
}

}  // namespace eqlab
