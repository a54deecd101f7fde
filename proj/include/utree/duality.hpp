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

#ifndef UTREE_DUALITY_H_
#define UTREE_DUALITY_H_

#include <map>
#include <string>
#include <vector>

#include "utree/tree.hpp"
#include "utree/ultrametric.hpp"

namespace utree {

// End space of a geodesically complete tree: one point per RAY leaf, with
// d(F,G) = level of the carriers' meet.
struct EndSpaceView {
  FiniteUltrametricSpace space;
  std::vector<int> leaf_of;           // point index -> RAY leaf id
  std::map<int, int> point_of_leaf;   // RAY leaf id -> point index
};

// Requires a geodesically complete presentation with at least one RAY leaf
// (trivial trees have empty end space; InputError).
EndSpaceView EndsOf(const TreePresentation& t);

// Dendrogram of an ultrametric space in level coordinates: a branch node at
// each realized merge level, root at level 1 (a degree-1 root segment when
// the diameter is < 1), one RAY leaf per point. Leaf ids are point indices.
TreePresentation TreeOf(const FiniteUltrametricSpace& u);

struct RoundTripReport {
  bool ok = true;
  std::string mismatch;  // first mismatch, when not ok
};

// ends_of(tree_of(U)) must reproduce U's matrix exactly.
RoundTripReport RoundTripUltrametricCheck(const FiniteUltrametricSpace& u);

// canonicalize(T) must be rooted isometric to canonicalize(tree_of(ends_of(T))).
RoundTripReport RoundTripTreeCheck(const TreePresentation& t);

}  // namespace utree

#endif  // UTREE_DUALITY_H_
