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

#include "utree/random_gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "utree/duality.hpp"

namespace utree {

namespace {

// `count` distinct levels over a common denominator, descending, in (0,1].
std::vector<Rat> DescendingLevelPool(std::mt19937& rng, int count, int max_den,
                                     bool include_one) {
  std::set<int> numerators;
  if (include_one) numerators.insert(max_den);
  std::uniform_int_distribution<int> pick(1, max_den);
  while (static_cast<int>(numerators.size()) < count) numerators.insert(pick(rng));
  std::vector<Rat> pool;
  for (auto it = numerators.rbegin(); it != numerators.rend(); ++it) {
    pool.push_back(Rat(*it, max_den));
  }
  return pool;
}

void FillBlockDistances(std::vector<std::vector<Rat>>* dist,
                        const std::vector<int>& points, const Rat& level,
                        const std::vector<std::vector<int>>& blocks) {
  for (size_t a = 0; a < blocks.size(); ++a) {
    for (size_t b = a + 1; b < blocks.size(); ++b) {
      for (int i : blocks[a]) {
        for (int j : blocks[b]) {
          (*dist)[i][j] = (*dist)[j][i] = level;
        }
      }
    }
  }
  (void)points;
}

void BuildDendrogram(std::mt19937& rng, const std::vector<Rat>& pool, size_t level_idx,
                     const std::vector<int>& points,
                     std::vector<std::vector<Rat>>* dist) {
  if (points.size() <= 1) return;
  // Last pool level: everything splits to singletons here.
  const bool force_singletons = level_idx + 1 >= pool.size();
  std::vector<int> shuffled = points;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<std::vector<int>> blocks;
  if (force_singletons) {
    for (int p : shuffled) blocks.push_back({p});
  } else {
    std::uniform_int_distribution<int> nblocks(2, static_cast<int>(points.size()));
    const int k = nblocks(rng);
    blocks.assign(k, {});
    for (size_t i = 0; i < shuffled.size(); ++i) {
      blocks[i % k].push_back(shuffled[i]);
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const auto& b) { return b.empty(); }),
                 blocks.end());
  }
  FillBlockDistances(dist, points, pool[level_idx], blocks);
  for (const auto& block : blocks) {
    BuildDendrogram(rng, pool, level_idx + 1, block, dist);
  }
}

}  // namespace

FiniteUltrametricSpace RandomUltrametric(std::mt19937& rng, int points,
                                         int max_denominator) {
  std::vector<std::string> labels;
  for (int i = 0; i < points; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<std::vector<Rat>> dist(points, std::vector<Rat>(points, Rat(0)));
  if (points > 1) {
    const int pool_size = std::max(points - 1, 1);
    std::bernoulli_distribution diameter_one(0.5);
    const std::vector<Rat> pool =
        DescendingLevelPool(rng, pool_size, max_denominator, diameter_one(rng));
    std::vector<int> all(points);
    std::iota(all.begin(), all.end(), 0);
    BuildDendrogram(rng, pool, 0, all, &dist);
  }
  return FiniteUltrametricSpace(std::move(labels), std::move(dist));
}

namespace {

struct TreeBuilder {
  std::mt19937& rng;
  const std::vector<Rat>& pool;
  int max_ends;
  int ends_used = 0;
  int next_id = 0;
  std::vector<TreeNode> nodes;

  int make(int parent, size_t depth) {
    TreeNode n;
    n.id = next_id++;
    n.parent = parent;
    n.level = depth == 0 ? Rat(1) : pool[depth - 1];
    const int index = static_cast<int>(nodes.size());
    nodes.push_back(n);
    std::bernoulli_distribution stop(0.35);
    const bool leaf = depth > 0 && (depth >= pool.size() || ends_used >= max_ends - 1 ||
                                    stop(rng));
    if (leaf) {
      nodes[index].leaf = LeafKind::RAY;
      ++ends_used;
      return n.id;
    }
    std::uniform_int_distribution<int> arity(1, 3);
    int k = std::min(arity(rng), max_ends - ends_used);
    if (k < 1) k = 1;
    for (int c = 0; c < k; ++c) {
      const int child = make(n.id, depth + 1);  // may reallocate nodes
      nodes[index].children.push_back(child);
    }
    return n.id;
  }
};

}  // namespace

TreePresentation RandomCompleteTree(std::mt19937& rng, int max_ends, int max_levels) {
  const std::vector<Rat> pool = DescendingLevelPool(rng, max_levels, 1 << 16, false);
  TreeBuilder builder{rng, pool, std::max(max_ends, 1)};
  builder.make(-1, 0);
  return TreePresentation(std::move(builder.nodes));
}

EndMap RandomEndMap(std::mt19937& rng, int source_points, int target_points) {
  EndMap f{RandomUltrametric(rng, source_points),
           RandomUltrametric(rng, target_points),
           {}};
  std::uniform_int_distribution<int> pick(0, target_points - 1);
  for (int i = 0; i < source_points; ++i) f.assignment.push_back(pick(rng));
  return f;
}

RadialTreeMap RandomProperRadialMap(std::mt19937& rng, const EndMap& f) {
  RadialTreeMap base = InduceTreeMap(f);
  const PLFunction& lambda = base.reparam.begin()->second;

  // Shared majorant-dominating reparametrization: bump interior values up.
  std::vector<Rat> xs = lambda.breakpoints();
  std::vector<Rat> vs = lambda.values();
  std::uniform_int_distribution<int> percent(0, 100);
  for (size_t i = 1; i + 1 < vs.size(); ++i) {
    const Rat bump = (Rat(1) - vs[i]) * percent(rng) / 200;  // up to halfway to 1
    vs[i] = std::max(vs[i - 1], Rat(vs[i] + bump));
  }
  for (size_t i = 1; i + 1 < vs.size(); ++i) vs[i] = std::max(vs[i], vs[i - 1]);
  const PLFunction shared(xs, vs);

  const std::vector<int> rays = base.source->ray_leaves();
  RadialTreeMap out;
  out.source = base.source;
  out.target = base.target;
  out.sigma = base.sigma;
  for (int leaf : rays) {
    // Private interval (0, m): below the shallowest meet with any other leaf,
    // this reparametrization is unconstrained (up to monotonicity).
    Rat m = 1;
    for (int other : rays) {
      if (other != leaf) {
        m = std::min(m, base.source->carrier_meet_level(leaf, other));
      }
    }
    const Rat at_m = shared(m);
    std::uniform_int_distribution<int> frac(1, 63);
    const Rat x_star = m * frac(rng) / 64;
    const Rat v_star = at_m * frac(rng) / 64;
    std::vector<Rat> bxs = {Rat(0)};
    std::vector<Rat> bvs = {Rat(0)};
    if (x_star > 0 && v_star > 0) {
      bxs.push_back(x_star);
      bvs.push_back(v_star);
    }
    if (m < 1) {
      bxs.push_back(m);
      bvs.push_back(at_m);
    }
    for (size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] > m) {
        bxs.push_back(xs[i]);
        bvs.push_back(vs[i]);
      }
    }
    if (bxs.back() != 1) {
      bxs.push_back(Rat(1));
      bvs.push_back(Rat(1));
    }
    out.reparam.insert({leaf, PLFunction(std::move(bxs), std::move(bvs))});
  }
  out.require_valid();
  return out;
}

}  // namespace utree
