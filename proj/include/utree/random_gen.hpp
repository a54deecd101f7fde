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

#ifndef UTREE_RANDOM_GEN_H_
#define UTREE_RANDOM_GEN_H_

#include <random>

#include "utree/morphisms.hpp"
#include "utree/tree.hpp"
#include "utree/ultrametric.hpp"

namespace utree {

// Random valid ultrametric space: a random dendrogram over `points` labels
// with rational merge levels (denominators <= 2^16), read back as a matrix.
FiniteUltrametricSpace RandomUltrametric(std::mt19937& rng, int points,
                                         int max_denominator = 1 << 16);

// Random geodesically complete presentation with at most `max_ends` rays and
// at most `max_levels` distinct branch levels; may contain degree-2 chains.
TreePresentation RandomCompleteTree(std::mt19937& rng, int max_ends, int max_levels);

// Random end map between two fresh random spaces.
EndMap RandomEndMap(std::mt19937& rng, int source_points, int target_points);

// Random metrically proper radial map with the given leaf assignment, built
// over the trees of f's spaces: reparametrizations dominate the induced
// majorant, so compatibility holds by construction. Different draws give
// different reparametrizations of the same sigma.
RadialTreeMap RandomProperRadialMap(std::mt19937& rng, const EndMap& f);

}  // namespace utree

#endif  // UTREE_RANDOM_GEN_H_
