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

#ifndef UTREE_TREE_H_
#define UTREE_TREE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "utree/rational.hpp"

namespace utree {

// Distances between tree points are logs of rationals. We store the exact
// ratio q >= 1 (distance = ln q), so addition of distances is multiplication
// of q values and comparisons stay exact.
struct TreeDistance {
  Rat q = 1;

  bool is_zero() const { return q == 1; }
  double value() const { return std::log(ToDouble(q)); }

  friend TreeDistance operator+(const TreeDistance& a, const TreeDistance& b) {
    return {a.q * b.q};
  }
  friend bool operator==(const TreeDistance& a, const TreeDistance& b) = default;
  friend bool operator<(const TreeDistance& a, const TreeDistance& b) { return a.q < b.q; }
  friend bool operator<=(const TreeDistance& a, const TreeDistance& b) { return a.q <= b.q; }
  friend bool operator>(const TreeDistance& a, const TreeDistance& b) { return a.q > b.q; }
  friend bool operator>=(const TreeDistance& a, const TreeDistance& b) { return a.q >= b.q; }
};

enum class LeafKind { RAY, TIP };

// One node of a finite rooted tree presentation in level coordinates
// (level u = e^{-depth}, rational, decreasing away from the root).
struct TreeNode {
  int id = -1;
  Rat level;
  int parent = -1;  // -1 marks the root
  std::vector<int> children;
  std::optional<LeafKind> leaf;  // set iff the node has no children
};

// A point of the tree: a position at `level` on the root-to-leaf arc through
// `carrier` (extended past the leaf when the carrier is a RAY). Equality is
// semantic: two points at the same level coincide when their carriers have
// not branched apart yet at that level.
struct TreePoint {
  int carrier = -1;
  Rat level;
};

// Interpolation output; the only non-exact value in the kernel.
struct ApproxPoint {
  int carrier = -1;
  double level = 0;
  static constexpr double kTolerance = 1e-12;
};

// Finite presentation of a rooted R-tree. Root has level 1; levels strictly
// decrease along branches. Leaves are RAY (arc extends to infinity) or TIP
// (branch stops at the leaf level). Geodesically complete <=> all leaves RAY.
class TreePresentation {
 public:
  // Validates structure and throws InputError on violations.
  explicit TreePresentation(std::vector<TreeNode> nodes);

  int root() const { return root_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const TreeNode& node(int id) const;
  bool has_node(int id) const { return index_.count(id) > 0; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  std::vector<int> leaves() const;
  std::vector<int> ray_leaves() const;

  bool is_leaf(int id) const { return node(id).leaf.has_value(); }

  // Level of the deepest common ancestor of two leaves; 0 when they coincide
  // (the arcs agree everywhere).
  Rat carrier_meet_level(int leaf_a, int leaf_b) const;

  // Checks a point: known leaf carrier, 0 < level <= 1, and not past the end
  // of a TIP carrier. Throws InputError otherwise.
  void require_valid(const TreePoint& x) const;

  bool points_equal(const TreePoint& x, const TreePoint& y) const;

 private:
  std::vector<TreeNode> nodes_;
  std::map<int, int> index_;  // id -> position
  int root_ = -1;
};

// ||x|| = d(root, x); q = 1/level(x).
TreeDistance Norm(const TreePresentation& t, const TreePoint& x);

// Deepest common point of the root arcs to x and y.
TreePoint Meet(const TreePresentation& t, const TreePoint& x, const TreePoint& y);

// d(x,y) = ||x|| + ||y|| - 2||meet||, i.e. q = u_m^2 / (u_x * u_y).
TreeDistance Distance(const TreePresentation& t, const TreePoint& x,
                      const TreePoint& y);

// Point at arclength s * d(x,y) along the geodesic [x,y], s in [0,1].
ApproxPoint GeodesicPoint(const TreePresentation& t, const TreePoint& x,
                          const TreePoint& y, double s);

// One point at level u on each branch crossing that level, deduplicated by
// semantic equality. Requires u < 1.
std::vector<TreePoint> CutSet(const TreePresentation& t, const Rat& level);

// Cut point -> the leaves whose arcs pass through it. A branch node at
// exactly the cut level belongs to the component it roots.
std::vector<std::pair<TreePoint, std::vector<int>>> ComponentsBeyond(
    const TreePresentation& t, const Rat& level);

bool IsGeodesicallyComplete(const TreePresentation& t);

// Maximal geodesically complete subtree: drops every node whose descendant
// leaves are all TIP. nullopt when no RAY leaf survives (trivial tree).
std::optional<TreePresentation> Prune(const TreePresentation& t);

// Suppresses non-root degree-2 interior nodes and sorts children by a
// deterministic recursive encoding. Idempotent. Requires geodesic completeness.
TreePresentation Canonicalize(const TreePresentation& t);

// Deterministic encoding of the subtree below `id` (RAY leaf levels excluded:
// they carry no metric content). Equal encodings <=> rooted isometric.
std::string CanonicalEncoding(const TreePresentation& t, int id);
std::string CanonicalEncoding(const TreePresentation& t);

// Rooted isometry test on canonicalized trees. On success returns the leaf
// correspondence (source leaf id -> target leaf id); it preserves all
// carrier meet levels.
std::optional<std::map<int, int>> RootedIsometric(const TreePresentation& t,
                                                  const TreePresentation& s);

}  // namespace utree

#endif  // UTREE_TREE_H_
