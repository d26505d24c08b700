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

#include "entshare/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace entshare {
namespace {

using nlohmann::json;

json parse_or_throw(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

Complex parse_complex(const json& entry, const std::string& where) {
  if (entry.is_number()) return Complex(entry.get<double>(), 0.0);
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    throw FormatError(where + ": expected [re, im]");
  }
  return Complex(entry[0].get<double>(), entry[1].get<double>());
}

int parse_dim(const json& doc) {
  if (!doc.is_object() || !doc.contains("d") || !doc["d"].is_number_integer()) {
    throw FormatError("missing integer field \"d\"");
  }
  const int d = doc["d"].get<int>();
  if (d < 1) throw FormatError("\"d\" must be positive");
  return d;
}

std::string complex_pair(Complex z) {
  return "[" + format_real(z.real()) + ", " + format_real(z.imag()) + "]";
}

std::string pad(int n) { return std::string(static_cast<std::size_t>(n), ' '); }

}  // namespace

std::string format_real(double value) {
  if (!std::isfinite(value)) return "null";
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string json_quote(std::string_view s) {
  return json(std::string(s)).dump();
}

KrausChannel parse_channel_json(std::string_view text) {
  const json doc = parse_or_throw(text);
  const int d = parse_dim(doc);
  if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty()) {
    throw FormatError("missing non-empty array field \"kraus\"");
  }
  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < doc["kraus"].size(); ++k) {
    const json& op = doc["kraus"][k];
    const std::string where = "kraus[" + std::to_string(k) + "]";
    if (!op.is_array() || static_cast<int>(op.size()) != d) {
      throw FormatError(where + ": expected " + std::to_string(d) + " rows");
    }
    Matrix m(d, d);
    for (int r = 0; r < d; ++r) {
      const json& row = op[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != d) {
        throw FormatError(where + ": row " + std::to_string(r) + " needs " + std::to_string(d) +
                          " entries");
      }
      for (int c = 0; c < d; ++c) {
        m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                                where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
    ops.push_back(std::move(m));
  }
  return kraus_validate(std::move(ops));
}

KrausChannel read_channel_file(const std::string& path) {
  return parse_channel_json(read_text_file(path));
}

std::string channel_to_json(const KrausChannel& ch) {
  std::ostringstream os;
  os << "{\n  \"d\": " << ch.dim() << ",\n  \"kraus\": [\n";
  for (std::size_t k = 0; k < ch.size(); ++k) {
    const Matrix& m = ch.kraus_ops()[k];
    os << "    [\n";
    for (int r = 0; r < m.rows(); ++r) {
      os << "      [";
      for (int c = 0; c < m.cols(); ++c) {
        if (c) os << ", ";
        os << complex_pair(m(r, c));
      }
      os << "]" << (r + 1 < m.rows() ? "," : "") << "\n";
    }
    os << "    ]" << (k + 1 < ch.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

PureBipartiteState parse_state_json(std::string_view text) {
  const json doc = parse_or_throw(text);
  const int d = parse_dim(doc);
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array() ||
      static_cast<int>(doc["amplitudes"].size()) != d * d) {
    throw FormatError("\"amplitudes\" must be an array of d^2 = " + std::to_string(d * d) +
                      " entries");
  }
  Vector v(d * d);
  for (int k = 0; k < d * d; ++k) {
    v(k) = parse_complex(doc["amplitudes"][static_cast<std::size_t>(k)],
                         "amplitudes[" + std::to_string(k) + "]");
  }
  return PureBipartiteState(d, std::move(v));
}

PureBipartiteState read_state_file(const std::string& path) {
  return parse_state_json(read_text_file(path));
}

std::string state_to_json(const PureBipartiteState& psi) {
  std::string out = "{\"d\": " + std::to_string(psi.dim()) + ", \"amplitudes\": [";
  for (Eigen::Index k = 0; k < psi.amplitudes().size(); ++k) {
    if (k) out += ", ";
    out += complex_pair(psi.amplitudes()(k));
  }
  return out + "]}";
}

std::string certificate_to_json(const TheoremCertificate& cert) {
  JsonObjectWriter params(2);
  params.integer("d", cert.params.d).real_array("x", cert.params.x);

  JsonObjectWriter w;
  w.raw("params", params.str())
      .real("lambda_max_closed", cert.lambda_max_closed)
      .real("lambda_max_numeric", cert.lambda_max_numeric)
      .real("negativity_phiplus_closed", cert.negativity_phiplus_closed)
      .real("negativity_phiplus_numeric", cert.negativity_phiplus_numeric)
      .real("pt_spectrum_deviation", cert.pt_spectrum_deviation)
      .real("fstar_bound_phiplus", cert.fstar_bound_phiplus)
      .real("gap", cert.gap)
      .raw("psi_prime", state_to_json(cert.psi_prime))
      .boolean("psi_prime_degenerate", cert.psi_prime_degenerate)
      .real("psi_prime_schmidt_spread", cert.psi_prime_schmidt_spread)
      .real("fef_psi_prime", cert.fef_psi_prime)
      .boolean("fef_psi_prime_converged", cert.fef_psi_prime_converged)
      .real("negativity_psi_prime", cert.negativity_psi_prime)
      .real("fidelity_lower_bound", cert.fidelity_lower_bound)
      .boolean("verdict_lemma3", cert.verdict_lemma3)
      .boolean("verdict_theorem1", cert.verdict_theorem1)
      .boolean("verdict_negativity_corollary", cert.verdict_negativity_corollary)
      .boolean("closed_forms_consistent", cert.closed_forms_consistent);
  return w.str();
}

std::vector<std::string> certificate_csv_header(int d) {
  std::vector<std::string> h = {"d"};
  for (int i = 1; i < d; ++i) h.push_back("x" + std::to_string(i));
  for (const char* c : {"status", "lambda_max", "negativity_phiplus", "fstar_bound", "gap",
                        "fef_psi_prime", "negativity_psi_prime", "verdict_lemma3",
                        "verdict_theorem1", "verdict_negativity_corollary"}) {
    h.emplace_back(c);
  }
  return h;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path);
  out << content;
  if (!out) throw FormatError("write failed for " + path);
}

void JsonObjectWriter::key(std::string_view k) {
  body_ += first_ ? "\n" : ",\n";
  first_ = false;
  body_ += pad(indent_ + 2) + json_quote(k) + ": ";
}

JsonObjectWriter& JsonObjectWriter::real(std::string_view k, double value) {
  key(k);
  body_ += format_real(value);
  return *this;
}

JsonObjectWriter& JsonObjectWriter::integer(std::string_view k, long long value) {
  key(k);
  body_ += std::to_string(value);
  return *this;
}

JsonObjectWriter& JsonObjectWriter::boolean(std::string_view k, bool value) {
  key(k);
  body_ += value ? "true" : "false";
  return *this;
}

JsonObjectWriter& JsonObjectWriter::string(std::string_view k, std::string_view value) {
  key(k);
  body_ += json_quote(value);
  return *this;
}

JsonObjectWriter& JsonObjectWriter::real_array(std::string_view k, const std::vector<double>& values) {
  key(k);
  body_ += "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) body_ += ", ";
    body_ += format_real(values[i]);
  }
  body_ += "]";
  return *this;
}

JsonObjectWriter& JsonObjectWriter::raw(std::string_view k, std::string_view json_text) {
  key(k);
  body_ += json_text;
  return *this;
}

std::string JsonObjectWriter::str() const {
  if (first_) return "{}";
  return "{" + body_ + "\n" + pad(indent_) + "}";
}

}  // namespace entshare
