// Copyright 2026 The Clutterlab Authors
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


// JSON interchange for every structure and certificate. Keys are emitted in
// sorted order and arrays in canonical order, so output is byte-stable.

#ifndef CLUTTERLAB_TOOLS_JSON_IO_H_
#define CLUTTERLAB_TOOLS_JSON_IO_H_

#include <string>
#include <vector>

#include "clutterlab/certify.h"
#include "clutterlab/ideals.h"
#include "clutterlab/packing.h"
#include "clutterlab/polyhedra.h"
#include "clutterlab/structures.h"
#include "json.hpp"

namespace clutterlab::io {

using Json = nlohmann::json;

// Throws InvalidInput with line/column on malformed text.
Json Parse(const std::string& text);

Json ToJson(const Graph& graph);
Json ToJson(const Poset& poset);
Json ToJson(const Clutter& clutter);
Json ToJson(const IncidenceMatrix& matrix);
Json ToJson(const MonomialIdeal& ideal);
Json ToJson(const KonigCertificate& certificate);
Json ToJson(const MfmcCertificate& certificate);
Json ToJson(const MengerResult& result);
Json ToJson(const IdpCertificate& certificate);
Json ToJson(const RoundingCertificate& certificate, int bound);
Json ToJson(const NormalityVerdict& verdict);
Json ToJson(const LpDualityVerdict& verdict);
Json ToJson(const RationalVector& vector);
Json ToJson(const Report& report, bool with_timing);

// Schema readers; each throws InvalidInput on missing keys, wrong types or
// violated invariants.
Graph GraphFromJson(const Json& j);
// With `close`, the relation is replaced by its transitive closure first.
Poset PosetFromJson(const Json& j, bool close = false);
Clutter ClutterFromJson(const Json& j);
IncidenceMatrix MatrixFromJson(const Json& j);
MonomialIdeal IdealFromJson(const Json& j);

enum class Schema { kGraph, kPoset, kClutter, kMatrix, kIdeal, kCorpus, kUnknown };

// Detected from the keys present: "relation" (poset), "columns" (matrix),
// "generators" (ideal), "instances" (corpus), "edges" with "labels" or any
// edge of size other than 2 (clutter), otherwise "edges" (graph).
Schema DetectSchema(const Json& j);

// {"instances":[{"poset":{...}} | {"graph":{...}} | {"clutter":{...}} |
// {"ideal":{...}}, ...]} or a single document of one of those schemas.
std::vector<Instance> CorpusFromJson(const Json& j);

}  // namespace clutterlab::io

#endif  // CLUTTERLAB_TOOLS_JSON_IO_H_
