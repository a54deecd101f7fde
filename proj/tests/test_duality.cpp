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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "test_support.hpp"
#include "utree/duality.hpp"
#include "utree/random_gen.hpp"

namespace utree {
namespace {

using utree_test::S3;

TEST_CASE("tree_of builds the expected dendrogram for the fixture") {
  const TreePresentation t = TreeOf(S3());
  // Three RAY leaves, a branch at 1/4 (b,c), a branch at 1/2, a root stub.
  CHECK(t.size() == 6);
  CHECK(t.ray_leaves().size() == 3);
  CHECK(t.node(t.root()).level == 1);
  CHECK(IsGeodesicallyComplete(t));
  CHECK(t.carrier_meet_level(1, 2) == Rat(1, 4));
  CHECK(t.carrier_meet_level(0, 1) == Rat(1, 2));
  CHECK(t.carrier_meet_level(0, 2) == Rat(1, 2));
}

TEST_CASE("tree_of on a one-point space is a single ray") {
  const FiniteUltrametricSpace one({"only"}, {{Rat(0)}});
  const TreePresentation t = TreeOf(one);
  CHECK(t.ray_leaves().size() == 1);
  CHECK(IsGeodesicallyComplete(t));
  const EndSpaceView e = EndsOf(t);
  CHECK(e.space.size() == 1);
}

TEST_CASE("distance-1 pairs meet exactly at the root") {
  const FiniteUltrametricSpace u({"x", "y"}, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  const TreePresentation t = TreeOf(u);
  CHECK(t.carrier_meet_level(0, 1) == 1);
  CHECK(t.node(t.root()).children.size() == 2);
  CHECK(RoundTripUltrametricCheck(u).ok);
}

TEST_CASE("ends_of output is a valid ultrametric space") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 10; ++iter) {
    const TreePresentation t = RandomCompleteTree(rng, 16, 6);
    const EndSpaceView e = EndsOf(t);
    CHECK(Validate(e.space).ok);
    CHECK(e.space.size() == static_cast<int>(t.ray_leaves().size()));
    // The view's leaf bookkeeping is a bijection.
    for (int i = 0; i < e.space.size(); ++i) {
      CHECK(e.point_of_leaf.at(e.leaf_of[i]) == i);
    }
  }
}

TEST_CASE("ends_of rejects trees that are not geodesically complete") {
  std::vector<TreeNode> nodes(2);
  nodes[0] = {0, Rat(1), -1, {1}, std::nullopt};
  nodes[1] = {1, Rat(1, 2), 0, {}, LeafKind::TIP};
  CHECK_THROWS_AS(EndsOf(TreePresentation(std::move(nodes))), InputError);
}

TEST_CASE("ultrametric round trip is exact on random spaces") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 64; ++iter) {
    const FiniteUltrametricSpace u = RandomUltrametric(rng, 1 + iter % 24);
    const RoundTripReport r = RoundTripUltrametricCheck(u);
    CHECK_MESSAGE(r.ok, r.mismatch);
  }
}

TEST_CASE("tree round trip is a rooted isometry on random trees") {
  std::mt19937 rng(43);
  for (int iter = 0; iter < 64; ++iter) {
    const TreePresentation t = RandomCompleteTree(rng, 12, 5);
    const RoundTripReport r = RoundTripTreeCheck(t);
    CHECK_MESSAGE(r.ok, r.mismatch);
  }
}

}  // namespace
}  // namespace utree
