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

#include "utree/freudenthal.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace utree {

FreudenthalReport FreudenthalEnds(const SimplicialTreeInput& input) {
  if (input.vertices.empty()) throw InputError("empty simplicial tree");
  std::set<int> vertex_set(input.vertices.begin(), input.vertices.end());
  if (vertex_set.size() != input.vertices.size()) {
    throw InputError("duplicate vertex ids");
  }
  std::map<int, std::vector<int>> adjacency;
  for (const auto& [a, b] : input.edges) {
    if (!vertex_set.count(a) || !vertex_set.count(b)) {
      throw InputError("edge references unknown vertex");
    }
    if (a == b) throw InputError("self loop");
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  if (input.edges.size() + 1 != input.vertices.size()) {
    throw InputError("not a tree: |E| != |V| - 1");
  }

  const int root = input.root.value_or(input.vertices.front());
  if (!vertex_set.count(root)) throw InputError("unknown root vertex");

  // BFS rooting; unit edges give integer depths.
  std::map<int, int> depth, parent;
  depth[root] = 0;
  parent[root] = -1;
  std::queue<int> queue;
  queue.push(root);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int w : adjacency[v]) {
      if (depth.count(w)) {
        if (w != parent[v]) throw InputError("cycle in simplicial tree");
        continue;
      }
      depth[w] = depth[v] + 1;
      parent[w] = v;
      queue.push(w);
    }
  }
  if (depth.size() != vertex_set.size()) throw InputError("disconnected input");

  std::set<int> rays(input.ray_vertices.begin(), input.ray_vertices.end());
  for (int r : rays) {
    if (!vertex_set.count(r)) throw InputError("unknown ray vertex");
  }

  FreudenthalReport report;
  if (rays.empty()) {
    report.trivial = true;
    return report;
  }

  // Pruning: keep exactly the vertices on root-to-ray paths.
  std::set<int> kept;
  for (int r : rays) {
    for (int v = r; v != -1; v = parent[v]) {
      if (!kept.insert(v).second) break;
    }
  }

  report.pruned_vertex_count = static_cast<int>(kept.size());
  report.end_vertices.assign(rays.begin(), rays.end());
  report.end_count = static_cast<int>(rays.size());
  const int n = report.end_count;
  report.meet_depths.assign(n, std::vector<int>(n, 0));
  auto meet_depth = [&](int a, int b) {
    std::set<int> path_a;
    for (int v = a; v != -1; v = parent[v]) path_a.insert(v);
    for (int v = b; v != -1; v = parent[v]) {
      if (path_a.count(v)) return depth[v];
    }
    return 0;
  };
  for (int i = 0; i < n; ++i) {
    report.meet_depths[i][i] = -1;  // an end never branches from itself
    for (int j = i + 1; j < n; ++j) {
      report.meet_depths[i][j] = report.meet_depths[j][i] =
          meet_depth(report.end_vertices[i], report.end_vertices[j]);
    }
  }
  return report;
}

bool ProperlyHomotopyEquivalent(const FreudenthalReport& a,
                                const FreudenthalReport& b) {
  return a.end_count == b.end_count;
}

}  // namespace utree
