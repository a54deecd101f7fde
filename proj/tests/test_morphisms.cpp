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

#include <cmath>
#include <memory>
#include <random>

#include "test_support.hpp"
#include "utree/duality.hpp"
#include "utree/morphisms.hpp"
#include "utree/random_gen.hpp"

namespace utree {
namespace {

using utree_test::ComposeEnd;
using utree_test::ComposeRadial;
using utree_test::S3;
using utree_test::S3Prime;
using utree_test::S3ToS3Prime;

// Root over a single RAY leaf; the simplest domain for reparametrization
// behavior, where compatibility is vacuous.
std::shared_ptr<const TreePresentation> SingleRay() {
  std::vector<TreeNode> nodes(2);
  nodes[0] = {0, Rat(1), -1, {1}, std::nullopt};
  nodes[1] = {1, Rat(1, 2), 0, {}, LeafKind::RAY};
  return std::make_shared<const TreePresentation>(std::move(nodes));
}

RadialTreeMap SingleRayMap(PLFunction reparam) {
  RadialTreeMap m;
  m.source = SingleRay();
  m.target = SingleRay();
  m.sigma[1] = 1;
  m.reparam.emplace(1, std::move(reparam));
  return m;
}

TEST_CASE("modulus of the fixture map") {
  const StepModulus rho = ModulusOf(S3ToS3Prime());
  CHECK(rho(Rat(1, 8)) == 0);
  CHECK(rho(Rat(1, 4)) == Rat(1, 2));
  CHECK(rho(Rat(1)) == Rat(1, 2));
}

TEST_CASE("modulus of identity and constant maps") {
  const FiniteUltrametricSpace u = S3();
  const EndMap id{u, u, {0, 1, 2}};
  const StepModulus rho = ModulusOf(id);
  CHECK(rho(Rat(1, 8)) == 0);
  CHECK(rho(Rat(1, 4)) == Rat(1, 4));
  CHECK(rho(Rat(1, 3)) == Rat(1, 4));
  CHECK(rho(Rat(1, 2)) == Rat(1, 2));

  const EndMap constant{u, u, {0, 0, 0}};
  CHECK(ModulusOf(constant)(Rat(1)) == 0);
}

TEST_CASE("induced map evaluates and is representative independent") {
  const RadialTreeMap m = InduceTreeMap(S3ToS3Prime());
  m.require_valid();

  // (b, 1/8) lands at (b', lambda(1/8)) = (b', 1/4).
  const TreePoint img = EvalTreeMap(m, {1, Rat(1, 8)});
  CHECK(m.target->points_equal(img, {1, Rat(1, 4)}));

  // Root to root.
  CHECK(m.target->points_equal(EvalTreeMap(m, {0, Rat(1)}), {0, Rat(1)}));

  // b and c coincide at level 1/4; their images must too.
  const TreePoint via_b = EvalTreeMap(m, {1, Rat(1, 4)});
  const TreePoint via_c = EvalTreeMap(m, {2, Rat(1, 4)});
  CHECK(m.source->points_equal({1, Rat(1, 4)}, {2, Rat(1, 4)}));
  CHECK(m.target->points_equal(via_b, via_c));
}

TEST_CASE("incompatible radial maps are rejected") {
  // Identity reparametrizations over the fixture trees break well-definedness:
  // b,c coincide at 1/4 but their images would only meet at 1/2.
  RadialTreeMap m;
  m.source = std::make_shared<const TreePresentation>(TreeOf(S3()));
  m.target = std::make_shared<const TreePresentation>(TreeOf(S3Prime()));
  for (int leaf : {0, 1, 2}) {
    m.sigma[leaf] = leaf;
    m.reparam.emplace(leaf, IdentityPL());
  }
  CHECK_THROWS_AS(m.require_valid(), InputError);
}

TEST_CASE("lipschitz-1 holds exactly on the induced fixture map") {
  const RadialTreeMap m = InduceTreeMap(S3ToS3Prime());

  // Hand values: source (b,1/8),(c,1/8) at q=4 -> images at q=4 (equality);
  // (a,1/8),(b,1/8) at q=16 -> images (a',1/4),(b',1/4) at q=4.
  CHECK(Distance(*m.source, {1, Rat(1, 8)}, {2, Rat(1, 8)}).q == 4);
  CHECK(Distance(*m.target, EvalTreeMap(m, {1, Rat(1, 8)}),
                 EvalTreeMap(m, {2, Rat(1, 8)}))
            .q == 4);
  CHECK(Distance(*m.source, {0, Rat(1, 8)}, {1, Rat(1, 8)}).q == 16);
  CHECK(Distance(*m.target, EvalTreeMap(m, {0, Rat(1, 8)}),
                 EvalTreeMap(m, {1, Rat(1, 8)}))
            .q == 4);

  const CheckReport r = CheckLipschitz1(m, LipschitzSamplePairs(m, 500, 1));
  CHECK_MESSAGE(r.pass, r.summary);
}

TEST_CASE("lipschitz-1 fails with a witness on a stretching map") {
  // Slope 2 in depth space on [1/2,3/4]: distances along the ray double.
  const RadialTreeMap m = SingleRayMap(PLFunction(
      {Rat(0), Rat(1, 2), Rat(3, 4), Rat(1)}, {Rat(0), Rat(1, 2), Rat(1), Rat(1)}));
  m.require_valid();
  const CheckReport r = CheckLipschitz1(m, LipschitzSamplePairs(m, 200, 2));
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());

  const BornologousReport b = CheckBornologous(m);
  CHECK(b.pass);
  CHECK(b.constant == 2);
}

TEST_CASE("metric properness") {
  CHECK(CheckMetricallyProper(InduceTreeMap(S3ToS3Prime())).pass);
  CHECK(CheckMetricallyProper(SingleRayMap(IdentityPL())).pass);

  // Constant level 1: the whole ray collapses to the root; a bounded target
  // set has unbounded preimage.
  const RadialTreeMap collapse =
      SingleRayMap(PLFunction({Rat(0), Rat(1)}, {Rat(1), Rat(1)}));
  collapse.require_valid();
  CHECK_FALSE(CheckMetricallyProper(collapse).pass);
}

TEST_CASE("bornologous constant is 1 on induced maps") {
  const BornologousReport b = CheckBornologous(InduceTreeMap(S3ToS3Prime()));
  CHECK(b.pass);
  CHECK(b.constant == 1);
}

TEST_CASE("induced end map recovers the original end map") {
  const EndMap f = S3ToS3Prime();
  const EndMap back = InduceEndMap(InduceTreeMap(f));
  CHECK(back.assignment == f.assignment);

  // Identity radial map gives the identity end map.
  std::mt19937 rng(31);
  const EndMap g = RandomEndMap(rng, 6, 5);
  const RadialTreeMap id = InduceTreeMap(EndMap{g.source, g.source, {0, 1, 2, 3, 4, 5}});
  CHECK(InduceEndMap(id).assignment == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("functoriality: composition of induced maps") {
  std::mt19937 rng(37);
  for (int iter = 0; iter < 8; ++iter) {
    const EndMap f = RandomEndMap(rng, 5, 4);
    const EndMap g_raw = RandomEndMap(rng, 4, 6);
    const EndMap g{f.target, g_raw.target, g_raw.assignment};

    const RadialTreeMap fh = InduceTreeMap(f);
    RadialTreeMap gh = InduceTreeMap(g);
    gh.source = fh.target;  // same space, identical presentation
    const RadialTreeMap composed = ComposeRadial(gh, fh);
    composed.require_valid();

    const EndMap via_tree = InduceEndMap(composed);
    const EndMap direct = ComposeEnd(g, f);
    CHECK(via_tree.assignment == direct.assignment);
  }
}

TEST_CASE("equivalence accepts shared-sigma maps and rejects perturbed sigma") {
  std::mt19937 rng(53);
  const EndMap f = S3ToS3Prime();
  const RadialTreeMap m1 = RandomProperRadialMap(rng, f);
  const RadialTreeMap m2 = RandomProperRadialMap(rng, f);
  CHECK(m1.reparam != m2.reparam);
  CHECK(MapsEquivalent(m1, m2));
  CHECK(MapsEquivalent(m1, m1));

  // Swap the targets of b and c: valid (same modulus) but a different end map.
  EndMap swapped = f;
  swapped.assignment = {0, 2, 1};
  RadialTreeMap m3 = InduceTreeMap(swapped);
  m3.source = m1.source;
  m3.target = m1.target;
  CHECK_FALSE(MapsEquivalent(m1, m3));
}

TEST_CASE("component map fixture") {
  const RadialTreeMap m = InduceTreeMap(S3ToS3Prime());

  // Target depth M = ln 4, level 1/4. lambda(u) <= 1/4 iff u <= 1/8.
  const ComponentMapResult r = ComponentMap(m, TreeDistance{Rat(4)});
  CHECK(r.target_level == Rat(1, 4));
  CHECK(r.source_level == Rat(1, 8));
  REQUIRE(r.association.size() == 3);  // all three ends separate on both sides
  for (const auto& [src, dst] : r.association) {
    // Label-for-label assignment: cut point of leaf k maps into leaf k's ray.
    CHECK(m.target->points_equal(dst, {src.carrier, r.target_level}));
  }

  // Identity map: N = M and the association is the identity on cut points.
  std::mt19937 rng(61);
  const EndMap g = RandomEndMap(rng, 5, 5);
  const EndMap id{g.source, g.source, {0, 1, 2, 3, 4}};
  const RadialTreeMap mi = InduceTreeMap(id);
  const ComponentMapResult ri = ComponentMap(mi, TreeDistance{Rat(16)});
  CHECK(ri.source_level == ri.target_level);
  for (const auto& [src, dst] : ri.association) {
    CHECK(mi.target->points_equal(dst, {src.carrier, src.level}));
  }
}

TEST_CASE("homotopy evaluation and bound") {
  std::mt19937 rng(67);
  const EndMap f = S3ToS3Prime();
  const RadialTreeMap m1 = RandomProperRadialMap(rng, f);
  const RadialTreeMap m2 = RandomProperRadialMap(rng, f);

  const TreePoint x{1, Rat(1, 8)};
  const TreePoint ix = EvalTreeMap(m1, x), jx = EvalTreeMap(m2, x);
  const ApproxPoint h0 = HomotopyEval(m1, m2, x, 0.0);
  const ApproxPoint h1 = HomotopyEval(m1, m2, x, 1.0);
  CHECK(std::abs(h0.level - ToDouble(ix.level)) < ApproxPoint::kTolerance);
  CHECK(std::abs(h1.level - ToDouble(jx.level)) < ApproxPoint::kTolerance);

  // Same-carrier midpoint: geometric mean of the endpoint levels.
  const ApproxPoint mid = HomotopyEval(m1, m1, x, 0.5);
  CHECK(std::abs(mid.level - ToDouble(ix.level)) < 1e-12);

  std::vector<double> ts;
  for (int i = 0; i <= 20; ++i) ts.push_back(i / 20.0);
  const TreePoint y{2, Rat(1, 16)};
  const CheckReport r = HomotopyBoundCheck(m1, m2, x, y, ts);
  CHECK_MESSAGE(r.pass, r.summary);
  CHECK(HomotopyBoundCheck(m1, m2, x, x, ts).pass);
}

TEST_CASE("star family witnesses grow with n") {
  int prev = 0;
  for (int n : {2, 4, 8}) {
    const EndMap f = StarFamilyMap(n, Rat(1, 8), Rat(1, 4), Rat(1, 2));
    const RadialTreeMap m = InduceTreeMap(f);
    CHECK(CheckMetricallyProper(m).pass);
    CHECK(CheckLipschitz1(m, LipschitzSamplePairs(m, 100, 3)).pass);
    const int witness = PreimageCutCardinality(m, Rat(1, 8));
    CHECK(witness >= n);
    CHECK(witness > prev);
    prev = witness;
  }
}

TEST_CASE("non-rooted bounds") {
  const TreePresentation t = TreeOf(S3());
  std::map<int, int> identity{{0, 0}, {1, 1}, {2, 2}};

  // p = root: bounds collapse to exact isometry, which holds.
  const NonRootedResult at_root =
      NonRootedEndMap(t, t, identity, {0, Rat(1)});
  CHECK(at_root.d0.is_zero());
  CHECK(at_root.distortion.pass);

  // u_p = 1/2: factor interval [1/2, 2]; the identity still passes.
  const NonRootedResult offset =
      NonRootedEndMap(t, t, identity, {0, Rat(1, 2)});
  CHECK(offset.d0.q == 2);
  CHECK(offset.distortion.pass);

  // Target with the b,c merge moved to 1/16: distance 1/4 vs 1/16 exceeds
  // factor 2, so the claimed u_p = 1/2 isometry is refuted.
  const FiniteUltrametricSpace changed(
      {"a", "b", "c"},
      {{Rat(0), Rat(1, 2), Rat(1, 2)},
       {Rat(1, 2), Rat(0), Rat(1, 16)},
       {Rat(1, 2), Rat(1, 16), Rat(0)}});
  const NonRootedResult bad =
      NonRootedEndMap(t, TreeOf(changed), identity, {0, Rat(1, 2)});
  CHECK_FALSE(bad.distortion.pass);
  CHECK_FALSE(bad.distortion.witnesses.empty());

  CHECK_THROWS_AS(
      NonRootedEndMap(t, t, std::map<int, int>{{0, 0}, {1, 1}, {2, 1}},
                      {0, Rat(1)}),
      InputError);
}

}  // namespace
}  // namespace utree
