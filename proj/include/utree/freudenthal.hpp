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

#ifndef UTREE_FREUDENTHAL_H_
#define UTREE_FREUDENTHAL_H_

#include <optional>
#include <string>
#include <vector>

#include "utree/rational.hpp"

namespace utree {

// A locally finite simplicial tree, unit edge lengths, finitely presented:
// vertices marked as rays stand for branches extending to infinity.
struct SimplicialTreeInput {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  std::optional<int> root;  // first vertex when absent
  std::vector<int> ray_vertices;
};

// End-space report for a simplicial tree: unit depths stay integers, so the
// end metric is carried by meet depths (distance e^{-n} held symbolically).
struct FreudenthalReport {
  int end_count = 0;
  std::vector<int> end_vertices;              // surviving ray vertices
  std::vector<std::vector<int>> meet_depths;  // pairwise meet depths; -1 diagonal
  int pruned_vertex_count = 0;                // vertices on root-to-ray paths
  bool trivial = false;  // all branches finite: compact proper homotopy type
};

// Roots the tree, prunes branches that do not reach a marked ray, and reports
// the end space. Throws InputError on cyclic or disconnected input.
FreudenthalReport FreudenthalEnds(const SimplicialTreeInput& input);

// Finite presentations compare as properly homotopy equivalent iff their end
// spaces are homeomorphic, which for finite discrete spaces is a bijection:
// equal end counts.
bool ProperlyHomotopyEquivalent(const FreudenthalReport& a, const FreudenthalReport& b);

}  // namespace utree

#endif  // UTREE_FREUDENTHAL_H_
