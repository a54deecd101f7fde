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

// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Tolerances are pinned here: round trips and order comparisons are
// exact rational equalities; the only floating surfaces are the majorant grid
// oracle (1e-9), homotopy endpoint reproduction (1e-12), and the homotopy
// distance bound (1e-9).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "utree/duality.hpp"
#include "utree/morphisms.hpp"
#include "utree/random_gen.hpp"

namespace utree {
namespace {

constexpr double kGridTolerance = 1e-9;
constexpr double kEndpointTolerance = 1e-12;

bool g_all_pass = true;

void Report(int index, const char* name, bool pass, const std::string& detail) {
  std::printf("%s criterion-%d (%s)%s%s\n", pass ? "PASS" : "FAIL", index, name,
              detail.empty() ? "" : ": ", detail.c_str());
  if (!pass) g_all_pass = false;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

Rat RandomLevel(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 1023);
  return Rat(num(rng), 1024);
}

// --- 1: exact ultrametric round trip ---------------------------------------

void Criterion1() {
  std::mt19937 rng(1001);
  std::uniform_int_distribution<int> size(1, 64);
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const FiniteUltrametricSpace u = RandomUltrametric(rng, size(rng));
    if (!RoundTripUltrametricCheck(u).ok) ++failures;
  }
  const double sec = Seconds(start);
  Report(1, "ultrametric round trip, exact", failures == 0 && sec < 5.0,
         "200 spaces, " + std::to_string(failures) + " mismatches, " +
             std::to_string(sec) + "s");
}

// --- 2: tree round trip up to rooted isometry ------------------------------

void Criterion2() {
  std::mt19937 rng(1002);
  std::uniform_int_distribution<int> ends(1, 64);
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const TreePresentation t = RandomCompleteTree(rng, ends(rng), 8);
    if (!RoundTripTreeCheck(t).ok) ++failures;
  }
  const double sec = Seconds(start);
  Report(2, "tree round trip, rooted isometry", failures == 0 && sec < 5.0,
         "200 trees, " + std::to_string(failures) + " mismatches, " +
             std::to_string(sec) + "s");
}

// --- 3: least concave majorant ----------------------------------------------

StepModulus RandomModulus(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 7);
  std::uniform_int_distribution<int> num(1, 1023);
  std::set<Rat> xs;
  const int k = count(rng);
  while (static_cast<int>(xs.size()) < k) xs.insert(Rat(num(rng), 1024));
  StepModulus rho;
  Rat v(0);
  for (const Rat& x : xs) {
    v += Rat(num(rng), 4096);
    if (v > 1) v = 1;
    rho.jumps.push_back({x, v});
  }
  return rho;
}

void Criterion3() {
  std::mt19937 rng(1003);
  std::string detail;
  bool pass = true;

  for (int i = 0; i < 50 && pass; ++i) {
    const StepModulus rho = RandomModulus(rng);
    const PLFunction lam = ConcaveMajorant(rho);
    const auto& xs = lam.breakpoints();
    const auto& vs = lam.values();
    if (lam(Rat(0)) != 0 || lam(Rat(1)) != 1 || !lam.nondecreasing()) {
      pass = false;
      detail = "normalization broken at modulus " + std::to_string(i);
      break;
    }
    for (const auto& [x, v] : rho.jumps) {
      if (x < 1 && lam(x) < v) {
        pass = false;
        detail = "majorant below modulus at modulus " + std::to_string(i);
      }
    }
    for (int s = 0; s + 2 < static_cast<int>(xs.size()); ++s) {
      const Rat s0 = (vs[s + 1] - vs[s]) / (xs[s + 1] - xs[s]);
      const Rat s1 = (vs[s + 2] - vs[s + 1]) / (xs[s + 2] - xs[s + 1]);
      if (s0 <= s1) {
        pass = false;
        detail = "chord slopes not strictly decreasing";
      }
    }
    const int grid = 1 << 10;
    const std::vector<double> omega = utree_test::GridChordOracle(rho, grid);
    for (int k = 0; k <= grid && pass; ++k) {
      if (std::abs(ToDouble(lam(Rat(k, grid))) - omega[k]) >= kGridTolerance) {
        pass = false;
        detail = "grid oracle disagreement at modulus " + std::to_string(i) +
                 ", k=" + std::to_string(k);
      }
    }
  }

  // The fixture: lambda = 2u on [0,1/4], then the chord to (1,1), exactly.
  const PLFunction lam = ConcaveMajorant(ModulusOf(utree_test::S3ToS3Prime()));
  if (lam.breakpoints() != std::vector<Rat>{Rat(0), Rat(1, 4), Rat(1)} ||
      lam.values() != std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)}) {
    pass = false;
    detail = "fixture majorant mismatch";
  }

  Report(3, "concave majorant vs grid oracle", pass,
         pass ? "50 moduli + fixture, grid 2^10, tol 1e-9" : detail);
}

// --- 4: Lipschitz-1 of induced maps -----------------------------------------

void Criterion4() {
  std::mt19937 rng(1004);
  std::uniform_int_distribution<int> size(2, 9);
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    const EndMap f = RandomEndMap(rng, size(rng), size(rng));
    const RadialTreeMap m = InduceTreeMap(f);
    const CheckReport r =
        CheckLipschitz1(m, LipschitzSamplePairs(m, 10000, 1004 + i));
    if (!r.pass) ++failures;
  }
  const double sec = Seconds(start);
  Report(4, "induced maps are 1-Lipschitz, exact", failures == 0 && sec < 10.0,
         "50 maps x (10^4 samples + breakpoints), " + std::to_string(failures) +
             " failures, " + std::to_string(sec) + "s");
}

// --- 5: functor identities ---------------------------------------------------

void Criterion5() {
  std::mt19937 rng(1005);
  std::uniform_int_distribution<int> size(2, 10);
  bool pass = true;
  std::string detail;

  for (int i = 0; i < 50 && pass; ++i) {
    const EndMap f = RandomEndMap(rng, size(rng), size(rng));
    if (InduceEndMap(InduceTreeMap(f)).assignment != f.assignment) {
      pass = false;
      detail = "identity xi(f^) = f failed at map " + std::to_string(i);
    }
  }
  for (int i = 0; i < 30 && pass; ++i) {
    const EndMap f = RandomEndMap(rng, size(rng), size(rng));
    const EndMap g_raw = RandomEndMap(rng, f.target.size(), size(rng));
    const EndMap g{f.target, g_raw.target, g_raw.assignment};
    RadialTreeMap gh = InduceTreeMap(g);
    const RadialTreeMap fh = InduceTreeMap(f);
    gh.source = fh.target;
    const RadialTreeMap composed = utree_test::ComposeRadial(gh, fh);
    composed.require_valid();
    if (InduceEndMap(composed).assignment !=
        utree_test::ComposeEnd(g, f).assignment) {
      pass = false;
      detail = "composition law failed at pair " + std::to_string(i);
    }
  }
  Report(5, "functor identity and composition, exact", pass,
         pass ? "50 identities + 30 compositions" : detail);
}

// --- 6: equivalence <=> end-map equality -------------------------------------

bool ComponentMapsAgree(const RadialTreeMap& a, const RadialTreeMap& b,
                        const TreeDistance& M) {
  const ComponentMapResult ra = ComponentMap(a, M);
  const ComponentMapResult rb = ComponentMap(b, M);
  // Compare by source carrier: the two associations must route each source
  // component to the same target cut point.
  for (const auto& [sa, ta] : ra.association) {
    for (const auto& [sb, tb] : rb.association) {
      // Same source branch at both cut levels: the routes must agree.
      if (a.source->carrier_meet_level(sa.carrier, sb.carrier) <=
          std::min(ra.source_level, rb.source_level)) {
        if (!a.target->points_equal(ta, tb)) return false;
      }
    }
  }
  return true;
}

void Criterion6() {
  std::mt19937 rng(1006);
  std::uniform_int_distribution<int> size(2, 8);
  bool pass = true;
  std::string detail;

  for (int i = 0; i < 30 && pass; ++i) {
    const EndMap f = RandomEndMap(rng, size(rng), size(rng));
    const RadialTreeMap m1 = RandomProperRadialMap(rng, f);
    const RadialTreeMap m2 = RandomProperRadialMap(rng, f);
    if (!MapsEquivalent(m1, m2)) {
      pass = false;
      detail = "shared-sigma pair not equivalent at " + std::to_string(i);
      break;
    }
    // Cross-check: the induced component maps agree at a deep level.
    if (!ComponentMapsAgree(m1, m2, TreeDistance{Rat(1 << 20)})) {
      pass = false;
      detail = "component maps disagree for equivalent pair " + std::to_string(i);
    }
  }
  for (int i = 0; i < 30 && pass; ++i) {
    EndMap f = RandomEndMap(rng, size(rng), 2 + size(rng));
    const RadialTreeMap m1 = RandomProperRadialMap(rng, f);
    EndMap g = f;
    g.assignment[0] = (g.assignment[0] + 1) % g.target.size();
    RadialTreeMap m2 = RandomProperRadialMap(rng, g);
    m2.source = m1.source;
    m2.target = m1.target;
    m2.validated = false;
    if (MapsEquivalent(m1, m2)) {
      pass = false;
      detail = "sigma-perturbed pair reported equivalent at " + std::to_string(i);
    }
  }
  Report(6, "equivalence iff end maps equal", pass,
         pass ? "30 equivalent + 30 distinct pairs, component cross-check" : detail);
}

// --- 7: homotopy contracts ----------------------------------------------------

void Criterion7() {
  std::mt19937 rng(1007);
  std::uniform_int_distribution<int> size(2, 8);
  bool pass = true;
  std::string detail;
  int bound_samples = 0;

  for (int i = 0; i < 10 && pass; ++i) {
    const EndMap f = RandomEndMap(rng, size(rng), size(rng));
    const RadialTreeMap m1 = RandomProperRadialMap(rng, f);
    const RadialTreeMap m2 = RandomProperRadialMap(rng, f);
    const std::vector<int> leaves = m1.source->ray_leaves();
    std::uniform_int_distribution<int> pick(0, static_cast<int>(leaves.size()) - 1);

    for (int s = 0; s < 10 && pass; ++s) {
      const TreePoint x{leaves[pick(rng)], RandomLevel(rng)};
      const TreePoint y{leaves[pick(rng)], RandomLevel(rng)};

      // Endpoint reproduction, 1e-12.
      const TreePoint ix = EvalTreeMap(m1, x), jx = EvalTreeMap(m2, x);
      const ApproxPoint h0 = HomotopyEval(m1, m2, x, 0.0);
      const ApproxPoint h1 = HomotopyEval(m1, m2, x, 1.0);
      if (std::abs(h0.level - ToDouble(ix.level)) > kEndpointTolerance ||
          std::abs(h1.level - ToDouble(jx.level)) > kEndpointTolerance ||
          !Distance(*m1.target, {h0.carrier, ix.level}, ix).is_zero() ||
          !Distance(*m1.target, {h1.carrier, jx.level}, jx).is_zero()) {
        pass = false;
        detail = "endpoint reproduction failed";
        break;
      }

      // Distance bound over sampled times, 1e-9.
      std::vector<double> ts;
      for (int k = 0; k <= 10; ++k) ts.push_back(k / 10.0);
      bound_samples += static_cast<int>(ts.size());
      const CheckReport r = HomotopyBoundCheck(m1, m2, x, y, ts);
      if (!r.pass) {
        pass = false;
        detail = "distance bound failed: " + r.summary;
        break;
      }

      // Component containment for equivalent proper maps: beyond the shared
      // cut level the whole path stays with sigma(F). Exact via carriers.
      const TreeDistance M{Rat(256)};
      const ComponentMapResult cm1 = ComponentMap(m1, M);
      const ComponentMapResult cm2 = ComponentMap(m2, M);
      const TreePoint deep{x.carrier,
                           std::min(cm1.source_level, cm2.source_level) / 2};
      const int target_ray = m1.sigma.at(deep.carrier);
      for (double t : {0.25, 0.5, 0.75}) {
        const ApproxPoint h = HomotopyEval(m1, m2, deep, t);
        if (m1.target->carrier_meet_level(h.carrier, target_ray) >
            Rat(1, 256)) {
          pass = false;
          detail = "homotopy left the component";
        }
      }
    }
  }
  Report(7, "homotopy endpoints, bound, containment", pass,
         pass ? std::to_string(bound_samples) + " bound samples, tol 1e-12/1e-9"
              : detail);
}

// --- 8: properness counterexample family --------------------------------------

void Criterion8() {
  bool pass = true;
  std::string detail;
  int prev = 0;
  std::string trace;
  for (int n = 2; n <= 256; n *= 2) {
    const EndMap f = StarFamilyMap(n, Rat(1, 8), Rat(1, 4), Rat(1, 2));
    const RadialTreeMap m = InduceTreeMap(f);
    if (!CheckMetricallyProper(m).pass) {
      pass = false;
      detail = "family member not metrically proper at n=" + std::to_string(n);
      break;
    }
    const int witness = PreimageCutCardinality(m, Rat(1, 8));
    trace += (trace.empty() ? "" : ",") + std::to_string(witness);
    if (witness < n || witness <= prev) {
      pass = false;
      detail = "witness " + std::to_string(witness) + " at n=" + std::to_string(n);
      break;
    }
    prev = witness;
  }
  Report(8, "non-properness witnesses grow", pass,
         pass ? "n=2..256, witnesses " + trace : detail);
}

// --- 9: rooted isometry detection ---------------------------------------------

void Criterion9() {
  std::mt19937 rng(1009);
  bool pass = true;
  std::string detail;
  int accepted = 0, rejected = 0;

  while ((accepted < 100 || rejected < 100) && pass) {
    const TreePresentation t = RandomCompleteTree(rng, 10, 5);

    if (accepted < 100) {
      // Relabeled, child-reversed copy must be accepted with verified meets.
      const int offset = t.size() + 7;
      std::vector<TreeNode> copy;
      for (const TreeNode& n : t.nodes()) {
        TreeNode m = n;
        m.id = offset - n.id;
        m.parent = n.parent < 0 ? -1 : offset - n.parent;
        m.children.clear();
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
          m.children.push_back(offset - *it);
        }
        copy.push_back(m);
      }
      const TreePresentation s(std::move(copy));
      const auto corr = RootedIsometric(t, s);
      if (!corr) {
        pass = false;
        detail = "relabeled copy rejected";
        break;
      }
      for (const auto& [la, ta] : *corr) {
        for (const auto& [lb, tb] : *corr) {
          if (t.carrier_meet_level(la, lb) != s.carrier_meet_level(ta, tb)) {
            pass = false;
            detail = "correspondence does not preserve meet levels";
          }
        }
      }
      ++accepted;
    }

    if (rejected < 100) {
      // Perturb one branching level; the meet multiset changes, so the
      // perturbed tree must be rejected.
      std::vector<TreeNode> copy = t.nodes();
      int victim = -1;
      for (const TreeNode& n : copy) {
        if (n.parent >= 0 && n.children.size() >= 2) victim = n.id;
      }
      if (victim >= 0) {
        for (TreeNode& n : copy) {
          if (n.id == victim) {
            n.level = (n.level + t.node(n.parent).level) / 2;
          }
        }
        const TreePresentation s(std::move(copy));
        if (RootedIsometric(t, s).has_value()) {
          pass = false;
          detail = "level-perturbed tree accepted";
        }
        ++rejected;
      }
    }
  }
  Report(9, "isometry detection", pass,
         pass ? "100 relabeled accepts + 100 perturbed rejects" : detail);
}

// --- 10: non-rooted bi-Lipschitz bound ------------------------------------------

void Criterion10() {
  std::mt19937 rng(1010);
  bool pass = true;
  std::string detail;

  for (int i = 0; i < 30 && pass; ++i) {
    const TreePresentation t = RandomCompleteTree(rng, 8, 4);
    const std::vector<int> rays = t.ray_leaves();
    std::uniform_int_distribution<int> pick(0, static_cast<int>(rays.size()) - 1);
    std::map<int, int> sigma;
    for (int r : rays) sigma[r] = r;
    const TreePoint p{rays[pick(rng)], RandomLevel(rng)};
    const NonRootedResult r = NonRootedEndMap(t, t, sigma, p);
    if (!r.distortion.pass) {
      pass = false;
      detail = "identity sigma failed the bound at tree " + std::to_string(i);
    }
  }

  // Constructed violation: meet level 1/4 mapped to 1/32 exceeds the factor
  // interval [1/2, 2] allowed by u_p = 1/2.
  const FiniteUltrametricSpace a(
      {"x", "y"}, {{Rat(0), Rat(1, 4)}, {Rat(1, 4), Rat(0)}});
  const FiniteUltrametricSpace b(
      {"x", "y"}, {{Rat(0), Rat(1, 32)}, {Rat(1, 32), Rat(0)}});
  const NonRootedResult bad = NonRootedEndMap(
      TreeOf(a), TreeOf(b), {{0, 0}, {1, 1}}, {0, Rat(1, 2)});
  if (bad.distortion.pass) {
    pass = false;
    detail = "constructed violation not detected";
  }

  Report(10, "non-rooted bi-Lipschitz bound", pass,
         pass ? "30 random trees + constructed violation" : detail);
}

}  // namespace
}  // namespace utree

int main() {
  utree::Criterion1();
  utree::Criterion2();
  utree::Criterion3();
  utree::Criterion4();
  utree::Criterion5();
  utree::Criterion6();
  utree::Criterion7();
  utree::Criterion8();
  utree::Criterion9();
  utree::Criterion10();
  return utree::g_all_pass ? 0 : 1;
}
