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

#include "utree/duality.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace utree {

EndSpaceView EndsOf(const TreePresentation& t) {
  if (!IsGeodesicallyComplete(t)) {
    throw InputError("end space requires a geodesically complete tree");
  }
  std::vector<int> rays = t.ray_leaves();
  if (rays.empty()) throw InputError("trivial tree has empty end space");

  const int n = static_cast<int>(rays.size());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int id : rays) labels.push_back(std::to_string(id));
  std::vector<std::vector<Rat>> dist(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      dist[i][j] = dist[j][i] = t.carrier_meet_level(rays[i], rays[j]);
    }
  }
  EndSpaceView view{FiniteUltrametricSpace(std::move(labels), std::move(dist)),
                    rays,
                    {}};
  for (int i = 0; i < n; ++i) view.point_of_leaf[rays[i]] = i;
  return view;
}

namespace {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

TreePresentation TreeOf(const FiniteUltrametricSpace& u) {
  const int n = u.size();
  if (n == 0) throw InputError("empty ultrametric space");

  // Node ids: 0..n-1 are RAY leaves (point indices); branch nodes follow.
  std::vector<TreeNode> nodes(n);
  for (int i = 0; i < n; ++i) {
    nodes[i].id = i;
    nodes[i].leaf = LeafKind::RAY;
  }
  int next_id = n;
  // Active cluster -> its current top node id.
  DisjointSet ds(n);
  std::vector<int> top(n);
  std::iota(top.begin(), top.end(), 0);

  std::set<Rat> merge_levels;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) merge_levels.insert(u.dist(i, j));
  }

  Rat root_level = 0;
  int root_id = -1;
  for (const Rat& level : merge_levels) {  // ascending
    // Group the pairs realizing this level into merge classes.
    std::set<int> touched;
    DisjointSet local(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (u.dist(i, j) == level) {
          local.unite(ds.find(i), ds.find(j));
          touched.insert(ds.find(i));
          touched.insert(ds.find(j));
        }
      }
    }
    std::map<int, std::vector<int>> classes;  // local rep -> cluster reps
    for (int rep : touched) classes[local.find(rep)].push_back(rep);
    for (auto& [local_rep, reps] : classes) {
      TreeNode branch;
      branch.id = next_id++;
      branch.level = level;
      for (int rep : reps) branch.children.push_back(top[rep]);
      nodes.push_back(branch);
      int merged = reps[0];
      for (size_t k = 1; k < reps.size(); ++k) {
        ds.unite(reps[k], merged);
        merged = ds.find(merged);
      }
      top[merged] = branch.id;
      root_id = branch.id;
      root_level = level;
    }
  }

  // Root at level 1, inserted as a degree-1 segment when the diameter < 1
  // (or when the space is a single point).
  int top_node = (n == 1) ? 0 : top[ds.find(0)];
  if (n == 1 || root_level < 1) {
    TreeNode root;
    root.id = next_id++;
    root.level = 1;
    root.children.push_back(top_node);
    nodes.push_back(root);
    root_id = root.id;
  }

  // Fix parents and leaf attachment levels (half the parent level for rays).
  std::map<int, int> parent_of;
  for (const TreeNode& nd : nodes) {
    for (int c : nd.children) parent_of[c] = nd.id;
  }
  std::map<int, Rat> level_of;
  for (const TreeNode& nd : nodes) level_of[nd.id] = nd.level;
  for (TreeNode& nd : nodes) {
    nd.parent = parent_of.count(nd.id) ? parent_of[nd.id] : -1;
    if (nd.leaf) nd.level = level_of[nd.parent] / 2;
  }
  (void)root_id;
  return TreePresentation(std::move(nodes));
}

RoundTripReport RoundTripUltrametricCheck(const FiniteUltrametricSpace& u) {
  EndSpaceView ends = EndsOf(TreeOf(u));
  RoundTripReport report;
  if (ends.space.size() != u.size()) {
    report.ok = false;
    report.mismatch = "point count changed";
    return report;
  }
  // tree_of names RAY leaves by point index; map end points back through it.
  const int n = u.size();
  std::vector<int> back(n, -1);
  for (int p = 0; p < n; ++p) back[p] = ends.leaf_of[p];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rat& got = ends.space.dist(i, j);
      const Rat& want = u.dist(back[i], back[j]);
      if (got != want) {
        report.ok = false;
        report.mismatch = "d(" + u.label(back[i]) + "," + u.label(back[j]) +
                          "): expected " + FormatRat(want) + ", got " +
                          FormatRat(got);
        return report;
      }
    }
  }
  return report;
}

RoundTripReport RoundTripTreeCheck(const TreePresentation& t) {
  TreePresentation back = TreeOf(EndsOf(t).space);
  RoundTripReport report;
  if (!RootedIsometric(Canonicalize(t), Canonicalize(back))) {
    report.ok = false;
    report.mismatch = "canonical forms differ";
  }
  return report;
}

}  // namespace utree
