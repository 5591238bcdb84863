// Copyright 2026 The Orbitale Authors
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

// JSON forms of the library's records, shared by the C API.

#ifndef ORBITALE_SRC_SERIALIZE_HPP_
#define ORBITALE_SRC_SERIALIZE_HPP_

#include <json.hpp>

#include "orbitale/lattice.hpp"
#include "orbitale/matching.hpp"
#include "orbitale/orbital.hpp"
#include "orbitale/whittaker.hpp"

namespace orbitale {

using Json = nlohmann::ordered_json;

Json to_json(const LocalElem& e);
Json to_json(const Mat& m);
Json to_json(const std::vector<LocalElem>& v);
Json to_json(const SymOrbitDatum& d);
Json to_json(const UniOrbitDatum& d);
Json to_json(const OrbitInvariants& inv);
Json to_json(const OrbitalResult& r);
Json to_json(const LatticeCounts& c);
Json to_json(const FlReport& r);
Json match_json(const SymOrbitDatum& d);

// Parse errors carry the offending field path, e.g. "zeta[1][0]".
SymOrbitDatum sym_datum_from_json(const FieldPtr& f, const Json& j);
std::vector<LocalElem> elems_from_json(const FieldPtr& f, const Json& j, const std::string& path);

std::string rational_str(const Rational& r);

}  // namespace orbitale

#endif  // ORBITALE_SRC_SERIALIZE_HPP_
