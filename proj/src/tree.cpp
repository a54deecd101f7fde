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

#include "utree/tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace utree {

TreePresentation::TreePresentation(std::vector<TreeNode> nodes)
    : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw InputError("empty tree presentation");
  for (int i = 0; i < size(); ++i) {
    const TreeNode& n = nodes_[i];
    if (index_.count(n.id)) throw InputError("duplicate node id");
    index_[n.id] = i;
    if (n.parent < 0) {
      if (root_ != -1) throw InputError("multiple roots");
      root_ = n.id;
    }
  }
  if (root_ == -1) throw InputError("no root");
  if (node(root_).level != 1) throw InputError("root level must be 1");

  for (const TreeNode& n : nodes_) {
    if (n.level <= 0 || n.level > 1) throw InputError("node level out of (0,1]");
    if (n.children.empty() != n.leaf.has_value()) {
      throw InputError("leaf tag must be set exactly on childless nodes");
    }
    for (int c : n.children) {
      if (!index_.count(c)) throw InputError("unknown child id");
      const TreeNode& child = node(c);
      if (child.parent != n.id) throw InputError("parent/child mismatch");
      if (child.level >= n.level) {
        throw InputError("child level must be strictly below parent level");
      }
    }
  }

  // Reachability (and acyclicity, since every non-root has one parent).
  std::set<int> seen;
  std::vector<int> stack = {root_};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (!seen.insert(id).second) throw InputError("cycle in presentation");
    for (int c : node(id).children) stack.push_back(c);
  }
  if (static_cast<int>(seen.size()) != size()) {
    throw InputError("unreachable nodes in presentation");
  }
}

const TreeNode& TreePresentation::node(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown node id");
  return nodes_[it->second];
}

std::vector<int> TreePresentation::leaves() const {
  std::vector<int> out;
  for (const TreeNode& n : nodes_) {
    if (n.leaf) out.push_back(n.id);
  }
  return out;
}

std::vector<int> TreePresentation::ray_leaves() const {
  std::vector<int> out;
  for (const TreeNode& n : nodes_) {
    if (n.leaf == LeafKind::RAY) out.push_back(n.id);
  }
  return out;
}

Rat TreePresentation::carrier_meet_level(int leaf_a, int leaf_b) const {
  if (leaf_a == leaf_b) return Rat(0);
  // Walk the deeper side up until the arcs join; levels strictly increase
  // towards the root, so this is the usual two-pointer ancestor chase.
  int a = leaf_a, b = leaf_b;
  while (a != b) {
    const TreeNode& na = node(a);
    const TreeNode& nb = node(b);
    if (RatLess(na.level, nb.level)) {
      a = na.parent;
    } else if (RatLess(nb.level, na.level)) {
      b = nb.parent;
    } else {
      a = na.parent;
      b = nb.parent;
    }
    if (a < 0 || b < 0) throw InputError("leaves in different trees");
  }
  return node(a).level;
}

void TreePresentation::require_valid(const TreePoint& x) const {
  const TreeNode& n = node(x.carrier);
  if (!n.leaf) throw InputError("carrier is not a leaf");
  if (x.level <= 0 || x.level > 1) throw InputError("point level out of (0,1]");
  if (n.leaf == LeafKind::TIP && x.level < n.level) {
    throw InputError("point below the end of a TIP carrier");
  }
}

bool TreePresentation::points_equal(const TreePoint& x, const TreePoint& y) const {
  if (x.level != y.level) return false;
  // Carriers coincide at levels at or above their branch level.
  return carrier_meet_level(x.carrier, y.carrier) <= x.level;
}

TreeDistance Norm(const TreePresentation& t, const TreePoint& x) {
  t.require_valid(x);
  return {Rat(1) / x.level};
}

TreePoint Meet(const TreePresentation& t, const TreePoint& x, const TreePoint& y) {
  t.require_valid(x);
  t.require_valid(y);
  Rat level = t.carrier_meet_level(x.carrier, y.carrier);
  level = std::max({level, x.level, y.level});
  return {x.carrier, level};
}

TreeDistance Distance(const TreePresentation& t, const TreePoint& x,
                      const TreePoint& y) {
  const Rat um = Meet(t, x, y).level;
  return {um * um / (x.level * y.level)};
}

ApproxPoint GeodesicPoint(const TreePresentation& t, const TreePoint& x,
                          const TreePoint& y, double s) {
  t.require_valid(x);
  t.require_valid(y);
  if (s < 0 || s > 1) throw InputError("geodesic parameter out of [0,1]");
  const Rat um = Meet(t, x, y).level;
  const double ux = ToDouble(x.level), uy = ToDouble(y.level), m = ToDouble(um);
  const double up = std::log(m / ux);     // x to meet, ascending
  const double down = std::log(m / uy);   // meet to y, descending
  const double a = s * (up + down);
  if (a <= up) return {x.carrier, ux * std::exp(a)};
  return {y.carrier, m * std::exp(-(a - up))};
}

namespace {

// Leaves whose arcs cross the given level: every RAY leaf, and TIP leaves
// that terminate at or below it.
std::vector<int> CrossingLeaves(const TreePresentation& t, const Rat& level) {
  std::vector<int> out;
  for (int id : t.leaves()) {
    const TreeNode& n = t.node(id);
    if (n.leaf == LeafKind::RAY || n.level <= level) out.push_back(id);
  }
  return out;
}

}  // namespace

std::vector<std::pair<TreePoint, std::vector<int>>> ComponentsBeyond(
    const TreePresentation& t, const Rat& level) {
  if (level >= 1) throw InputError("cut level must be < 1");
  if (level <= 0) throw InputError("cut level must be > 0");
  std::vector<int> carriers = CrossingLeaves(t, level);
  std::vector<std::pair<TreePoint, std::vector<int>>> out;
  std::vector<bool> used(carriers.size(), false);
  for (size_t i = 0; i < carriers.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> block = {carriers[i]};
    used[i] = true;
    for (size_t j = i + 1; j < carriers.size(); ++j) {
      if (!used[j] &&
          t.carrier_meet_level(carriers[i], carriers[j]) <= level) {
        block.push_back(carriers[j]);
        used[j] = true;
      }
    }
    out.push_back({TreePoint{carriers[i], level}, std::move(block)});
  }
  return out;
}

std::vector<TreePoint> CutSet(const TreePresentation& t, const Rat& level) {
  std::vector<TreePoint> out;
  for (auto& [point, block] : ComponentsBeyond(t, level)) out.push_back(point);
  return out;
}

bool IsGeodesicallyComplete(const TreePresentation& t) {
  const auto leaves = t.leaves();
  if (leaves.empty()) return false;  // trivial tree
  for (int id : leaves) {
    if (t.node(id).leaf == LeafKind::TIP) return false;
  }
  return true;
}

std::optional<TreePresentation> Prune(const TreePresentation& t) {
  std::set<int> keep;
  // A node survives iff some descendant leaf is RAY.
  std::function<bool(int)> visit = [&](int id) -> bool {
    const TreeNode& n = t.node(id);
    if (n.leaf) {
      if (n.leaf == LeafKind::RAY) {
        keep.insert(id);
        return true;
      }
      return false;
    }
    bool any = false;
    for (int c : n.children) any = visit(c) || any;
    if (any) keep.insert(id);
    return any;
  };
  if (!visit(t.root())) return std::nullopt;

  std::vector<TreeNode> nodes;
  for (const TreeNode& n : t.nodes()) {
    if (!keep.count(n.id)) continue;
    TreeNode copy = n;
    copy.children.clear();
    for (int c : n.children) {
      if (keep.count(c)) copy.children.push_back(c);
    }
    if (copy.children.empty() && !copy.leaf) copy.leaf = LeafKind::RAY;
    nodes.push_back(std::move(copy));
  }
  return TreePresentation(std::move(nodes));
}

namespace {

struct CanonNode {
  Rat level;
  std::optional<LeafKind> leaf;
  std::vector<CanonNode> children;
  std::string encoding;
  int original_leaf = -1;  // leaf id in the input tree, for correspondences
};

CanonNode BuildCanon(const TreePresentation& t, int id, bool is_root) {
  const TreeNode& n = t.node(id);
  if (n.leaf) {
    CanonNode leaf;
    leaf.level = n.level;
    leaf.leaf = n.leaf;
    leaf.original_leaf = n.id;
    if (n.leaf == LeafKind::RAY) {
      leaf.encoding = "R";  // RAY leaf levels carry no metric content
    } else {
      leaf.encoding = "T@" + FormatRat(n.level);
    }
    return leaf;
  }
  // Suppress non-root degree-2 interior nodes.
  if (!is_root && n.children.size() == 1) {
    return BuildCanon(t, n.children[0], false);
  }
  CanonNode out;
  out.level = n.level;
  for (int c : n.children) out.children.push_back(BuildCanon(t, c, false));
  std::sort(out.children.begin(), out.children.end(),
            [](const CanonNode& a, const CanonNode& b) {
              return a.encoding < b.encoding;
            });
  out.encoding = "(" + FormatRat(n.level);
  for (const CanonNode& c : out.children) out.encoding += " " + c.encoding;
  out.encoding += ")";
  return out;
}

void EmitCanon(const CanonNode& c, int parent, int* next_id,
               std::vector<TreeNode>* nodes, std::vector<int>* leaf_order) {
  TreeNode n;
  n.id = (*next_id)++;
  n.parent = parent;
  n.leaf = c.leaf;
  if (c.leaf == LeafKind::RAY) {
    // Attachment level is presentational for rays; half the parent level.
    n.level = parent < 0 ? Rat(1, 2) : (*nodes)[parent].level / 2;
  } else {
    n.level = c.level;
  }
  const int my_index = static_cast<int>(nodes->size());
  nodes->push_back(n);
  if (c.leaf) leaf_order->push_back(c.original_leaf);
  for (const CanonNode& child : c.children) {
    const int child_id = *next_id;
    EmitCanon(child, n.id, next_id, nodes, leaf_order);
    (*nodes)[my_index].children.push_back(child_id);
  }
}

TreePresentation CanonToTree(const CanonNode& root, std::vector<int>* leaf_order) {
  std::vector<TreeNode> nodes;
  int next_id = 0;
  CanonNode top = root;
  if (top.leaf) {
    // A bare ray: keep an explicit root above it.
    CanonNode wrapper;
    wrapper.level = 1;
    wrapper.children.push_back(top);
    wrapper.encoding = "(1 " + top.encoding + ")";
    top = wrapper;
  }
  top.level = 1;  // root stays at level 1 even if it was a suppressed chain
  EmitCanon(top, -1, &next_id, &nodes, leaf_order);
  return TreePresentation(std::move(nodes));
}

}  // namespace

std::string CanonicalEncoding(const TreePresentation& t, int id) {
  return BuildCanon(t, id, id == t.root()).encoding;
}

std::string CanonicalEncoding(const TreePresentation& t) {
  return CanonicalEncoding(t, t.root());
}

TreePresentation Canonicalize(const TreePresentation& t) {
  CanonNode canon = BuildCanon(t, t.root(), true);
  std::vector<int> leaf_order;
  return CanonToTree(canon, &leaf_order);
}

std::optional<std::map<int, int>> RootedIsometric(const TreePresentation& t,
                                                  const TreePresentation& s) {
  CanonNode ct = BuildCanon(t, t.root(), true);
  CanonNode cs = BuildCanon(s, s.root(), true);
  if (ct.encoding != cs.encoding) return std::nullopt;
  // Equal encodings: the sorted canonical leaf orders pair up.
  std::vector<int> lt, ls;
  std::vector<TreeNode> ignore_t, ignore_s;
  int id = 0;
  EmitCanon(ct, -1, &id, &ignore_t, &lt);
  id = 0;
  EmitCanon(cs, -1, &id, &ignore_s, &ls);
  if (lt.size() != ls.size()) return std::nullopt;
  std::map<int, int> out;
  for (size_t i = 0; i < lt.size(); ++i) out[lt[i]] = ls[i];
  return out;
}

}  // namespace utree
