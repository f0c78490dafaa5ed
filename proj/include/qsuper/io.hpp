// Copyright 2026 The qsuper Authors
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

#include <json.hpp>

#include <optional>
#include <string>

#include "qsuper/compat.hpp"
#include "qsuper/laurent.hpp"
#include "qsuper/seed.hpp"

/**
 * JSON encodings. Vertex and lattice indices are 1-based on the wire and
 * 0-based in memory. Every parser throws MalformedInput whose message starts
 * with the JSON path of the offending value.
 */
namespace qsuper::io {

using Json = nlohmann::json;

Json to_json(const QScalar& a);
QScalar qscalar_from_json(const Json& j, const std::string& path = "$");

Json to_json(const SuperPoly& p);
SuperPoly superpoly_from_json(const Json& j, const GradedShape& shape, const std::string& path = "$");

Json to_json(const SkewForm& lambda);
SkewForm skewform_from_json(const Json& j, const std::string& path = "$");

Json to_json(const ExtQuiver& q);
ExtQuiver quiver_from_json(const Json& j, const std::string& path = "$");

Json to_json(const CompatReport& r, int n);
Json to_json(const std::vector<AllowedConditions>& table);
Json to_json(const MutationTrace& t);
MutationTrace trace_from_json(const Json& j, const std::string& path = "$");

Json to_json(const QuantumSeed& s);
QuantumSeed seed_from_json(const Json& j, const std::string& path = "$");

Json to_json(const LaurentCertificate& c);

/** The input document {"quiver": ..., "lambda": [[...]], "mode"?: "strict" | "permissive"}. */
struct SeedInput {
  ExtQuiver quiver;
  SkewForm lambda;
  std::optional<CompatMode> mode;
};

SeedInput input_from_json(const Json& j);
/** Parses text; syntax errors become MalformedInput with the byte offset. */
Json parse_text(const std::string& text);
Json read_file(const std::string& path);

/** Canonical serialization: sorted keys, no whitespace. */
std::string dump(const Json& j);

}  // namespace qsuper::io
