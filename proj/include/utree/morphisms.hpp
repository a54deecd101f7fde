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

#ifndef UTREE_MORPHISMS_H_
#define UTREE_MORPHISMS_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "utree/duality.hpp"
#include "utree/piecewise.hpp"
#include "utree/tree.hpp"
#include "utree/ultrametric.hpp"

namespace utree {

// A map between finite ultrametric spaces, total on source points.
struct EndMap {
  FiniteUltrametricSpace source;
  FiniteUltrametricSpace target;
  std::vector<int> assignment;  // source point index -> target point index

  void require_valid() const;
};

// Modulus of continuity of an end map: rho(delta) = max image distance over
// source pairs at distance <= delta. Jumps only at realized source distances.
StepModulus ModulusOf(const EndMap& f);

// Radial representation of a rooted tree map: an assignment of RAY leaves
// plus one nondecreasing PL level reparametrization per source leaf, with
// value 1 at 1. (F, u) maps to (sigma F, reparam_F(u)).
struct RadialTreeMap {
  std::shared_ptr<const TreePresentation> source;
  std::shared_ptr<const TreePresentation> target;
  std::map<int, int> sigma;          // source RAY leaf id -> target RAY leaf id
  std::map<int, PLFunction> reparam;  // source RAY leaf id -> level map

  // Structural checks: totality, rooted (value 1 at 1), nondecreasing
  // reparams, and the well-definedness compatibility on every leaf pair.
  // Throws InputError naming the offending leaf pair when violated.
  // Memoized: evaluation paths revalidate only after mutation if the caller
  // clears the flag.
  void require_valid() const;
  mutable bool validated = false;
};

// The induced tree map f_hat = (sigma, lambda): sigma = f on leaves, every
// reparametrization equal to the normalized least concave majorant of f's
// modulus. Source/target trees are tree_of of the two spaces.
RadialTreeMap InduceTreeMap(const EndMap& f);

TreePoint EvalTreeMap(const RadialTreeMap& m, const TreePoint& x);

struct CheckReport {
  bool pass = true;
  std::vector<std::string> witnesses;
  std::string summary;
};

// Exact q-ratio comparison d(m x, m y) <= d(x, y) on the given pairs.
CheckReport CheckLipschitz1(const RadialTreeMap& m,
                            const std::vector<std::pair<TreePoint, TreePoint>>& pairs);

// All breakpoint levels on all leaf pairs, plus `samples` random pairs.
std::vector<std::pair<TreePoint, TreePoint>> LipschitzSamplePairs(
    const RadialTreeMap& m, int samples, unsigned seed);

// Metric properness in level space: every reparametrization vanishes at 0 and
// is strictly positive on (0,1]. The report carries the witness radius map.
CheckReport CheckMetricallyProper(const RadialTreeMap& m);

// Bornologous: uniform bound on the depth-space slopes of the
// reparametrizations. Always finite for proper finite PL data; the constant
// is reported (1 for induced maps).
struct BornologousReport {
  bool pass = true;
  Rat constant;  // max depth-space slope
  std::string summary;
};
BornologousReport CheckBornologous(const RadialTreeMap& m);

// The end map induced by a metrically proper radial map, verified against the
// cut-set chase: at levels below every target meet level, the image of a deep
// point on ray F must sit in the component of sigma(F).
EndMap InduceEndMap(const RadialTreeMap& m);

// f ~ f' iff the induced end maps agree pointwise; cross-checked through
// component_map agreement at a level below all breakpoints and meet levels.
bool MapsEquivalent(const RadialTreeMap& m, const RadialTreeMap& m2);

struct ComponentMapResult {
  Rat source_level;  // the chosen N, as a level
  Rat target_level;  // the given M, as a level
  // Source cut point -> target cut point, keyed by representative carriers.
  std::vector<std::pair<TreePoint, TreePoint>> association;
};

// The induced map between cut sets: N is the shallowest source level whose
// image lies beyond depth M on every leaf.
ComponentMapResult ComponentMap(const RadialTreeMap& m, const TreeDistance& M);

// Point on the shortest-path homotopy between m and m2 at time t.
ApproxPoint HomotopyEval(const RadialTreeMap& m, const RadialTreeMap& m2,
                         const TreePoint& x, double t);

// d(H_t(x), H_t(y)) <= max(endpoint distances) + 1e-9 at each sampled t.
CheckReport HomotopyBoundCheck(const RadialTreeMap& m, const RadialTreeMap& m2,
                               const TreePoint& x, const TreePoint& y,
                               const std::vector<double>& t_samples);

// The finite non-properness family: n points pairwise at distance d1 plus a
// hub at distance d0 > d1, mapped label-for-label into the same star with the
// hub pushed out to d0_target > d0. The induced tree map is metrically proper
// and non-expansive, yet the preimage of the closed target ball at depth
// -ln d1 contains a source cut set whose cardinality grows with n.
EndMap StarFamilyMap(int n, const Rat& d1, const Rat& d0, const Rat& d0_target);

// Cardinality of the source cut set witnessing the non-properness above:
// the cut at the shallowest source level whose image clears the given target
// level on every leaf.
int PreimageCutCardinality(const RadialTreeMap& m, const Rat& target_level);

// Non-rooted comparison: sigma a bijection of RAY leaves claimed to come from
// a non-rooted isometry sending the source root to p. Verifies the exact
// distortion bounds u_p * d <= d' <= d / u_p on every end pair.
struct NonRootedResult {
  EndMap end_map;
  TreeDistance d0;
  CheckReport distortion;
};
NonRootedResult NonRootedEndMap(const TreePresentation& source,
                                const TreePresentation& target,
                                const std::map<int, int>& sigma, const TreePoint& p);

}  // namespace utree

#endif  // UTREE_MORPHISMS_H_
