// Copyright 2026 The entshare Authors
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

#include <string>
#include <string_view>
#include <vector>

#include "entshare/channels.hpp"
#include "entshare/omega.hpp"

namespace entshare {

/// Malformed or unreadable input file.
class FormatError : public Error {
public:
  using Error::Error;
};

/// "%.17g" with -0 written as 0 and non-finite values as null.
std::string format_real(double value);

/// Channel file:
///   {"d": int, "kraus": [ [ [ [re, im], ...d cols ], ...d rows ], ... ]}
/// Completeness is enforced on load (NotTracePreserving on violation);
/// structural problems raise FormatError.
KrausChannel parse_channel_json(std::string_view text);
KrausChannel read_channel_file(const std::string& path);
std::string channel_to_json(const KrausChannel& ch);

/// State file: {"d": int, "amplitudes": [[re, im], ... d^2 entries]}, with
/// entry (i, j) at position i * d + j. Must be normalized within 1e-12.
PureBipartiteState parse_state_json(std::string_view text);
PureBipartiteState read_state_file(const std::string& path);
std::string state_to_json(const PureBipartiteState& psi);

std::string certificate_to_json(const TheoremCertificate& cert);

/// Column names for certificate CSV rows in dimension d.
std::vector<std::string> certificate_csv_header(int d);
std::string csv_line(const std::vector<std::string>& cells);

std::string read_text_file(const std::string& path);
/// Throws FormatError when the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

/// Minimal JSON object emitter with fixed key order and 17-digit reals.
class JsonObjectWriter {
public:
  explicit JsonObjectWriter(int indent = 0) : indent_(indent) {}

  JsonObjectWriter& real(std::string_view key, double value);
  JsonObjectWriter& integer(std::string_view key, long long value);
  JsonObjectWriter& boolean(std::string_view key, bool value);
  JsonObjectWriter& string(std::string_view key, std::string_view value);
  JsonObjectWriter& real_array(std::string_view key, const std::vector<double>& values);
  /// Pre-rendered JSON value (object, array, ...).
  JsonObjectWriter& raw(std::string_view key, std::string_view json);

  std::string str() const;

private:
  void key(std::string_view k);

  int indent_;
  std::string body_;
  bool first_ = true;
};

std::string json_quote(std::string_view s);

}  // namespace entshare
