// Copyright 2026 The utree Authors
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

#ifndef UTREE_JSON_IO_H_
#define UTREE_JSON_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "utree/freudenthal.hpp"
#include "utree/morphisms.hpp"
#include "utree/tree.hpp"
#include "utree/ultrametric.hpp"

namespace utree {

using Json = nlohmann::json;

// {"points":["a","b"],"distances":[["a","b","1/2"]]}; every unordered pair
// must appear exactly once. Throws InputError on malformed input.
FiniteUltrametricSpace UltrametricFromJson(const Json& j);
// Canonical output: labels sorted lexicographically.
Json UltrametricToJson(const FiniteUltrametricSpace& u);

// {"nodes":[{"id":0,"level":"1","children":[1,2]},...],
//  "leaves":{"1":"RAY","2":"TIP"}}
TreePresentation TreeFromJson(const Json& j);
Json TreeToJson(const TreePresentation& t);

// {"source":...,"target":...,"map":{"a":"a2",...}}
EndMap EndMapFromJson(const Json& j);
Json EndMapToJson(const EndMap& f);

// Radial map: sigma by leaf id, reparams as breakpoint/value "p/q" pairs.
RadialTreeMap RadialTreeMapFromJson(const Json& j);
Json RadialTreeMapToJson(const RadialTreeMap& m);

// {"vertices":[0,1,...],"edges":[[0,1],...],"root":0,"rays":[3,4]}
SimplicialTreeInput SimplicialTreeFromJson(const Json& j);
Json FreudenthalReportToJson(const FreudenthalReport& r);

// Graphviz rendering: nodes annotated with level and float depth, rays drawn
// with arrowheads.
std::string TreeToDot(const TreePresentation& t);

Json LoadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace utree

#endif  // UTREE_JSON_IO_H_
