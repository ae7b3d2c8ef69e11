/*
   Copyright 2026 The galpoint Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "galpoint/embedder.hpp"
#include "galpoint/families.hpp"
#include "galpoint/galois.hpp"

namespace galpoint {

/// Insertion-ordered so that reports are byte-stable.
using Json = nlohmann::ordered_json;

// Field elements serialize as their canonical text ("11", "a^2+3*a+1"); the
// field itself as {"spec": "p^k", "modulus": [...]}.
Json to_json(Field f);
Json to_json(const Fq& a);
Json to_json(const ProjPoint& x);
Json to_json(const ProjLine& l);
Json to_json(const Projectivity& g);
Json to_json(const FiniteProjectivityGroup& g);
Json to_json(const GroupDescriptor& d);
Json to_json(const ProductReport& r);
Json to_json(const PointDivisor& d);
Json to_json(const PlaneCurve& c);
Json to_json(const Witness& w);
Json to_json(const GaloisReport& r);
Json to_json(const RationalMap1D& h);
Json to_json(const Parametrization& phi);
Json to_json(const EmbeddingResult& r);
Json to_json(const FamilySpec& s);
Json to_json(const FamilyVerdict& v);
Json to_json(const BranchCertificate& b);

/// Canonical dump: two-space indent, trailing newline.
std::string dump(const Json& j);

// Input files. Every parser throws ParseError with the offending key.

/// {"field": "p^k", "modulus": [..]?, "affine_poly": "...", "assume_irreducible": bool?}
PlaneCurve parse_curve(const Json& j);
/// "x:y:z" or "x:y" with elements in canonical text.
ProjPoint parse_point(std::string_view text, Field f);
/// [[a, b], [c, d]] or a 3x3 list of rows.
Projectivity parse_projectivity(const Json& j, Field f);
/// {"field": "p^k", "g1": [matrices], "g2": [matrices]}: generator lists.
struct GroupFile {
    Field field = nullptr;
    FiniteProjectivityGroup g1, g2;
};
GroupFile parse_group_file(const Json& j, std::size_t closure_cap = 4096);
/// {"family": "thm3_cubic", "field": "13", "d": .., "c": .., "p": .., "e": .., "m": .., "alphas": [..], "q": ..}
FamilySpec parse_family_spec(const Json& j);

/// Reads and parses a JSON file; ParseError on I/O or syntax problems.
Json read_json_file(const std::string& path);

}  // namespace galpoint
