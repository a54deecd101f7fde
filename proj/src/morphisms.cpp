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

#include "utree/morphisms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace utree {

namespace {

bool SamePresentation(const TreePresentation& a, const TreePresentation& b) {
  if (a.size() != b.size()) return false;
  for (const TreeNode& n : a.nodes()) {
    if (!b.has_node(n.id)) return false;
    const TreeNode& m = b.node(n.id);
    if (n.level != m.level || n.parent != m.parent || n.leaf != m.leaf ||
        n.children != m.children) {
      return false;
    }
  }
  return true;
}

double ApproxDistanceValue(const TreePresentation& t, const ApproxPoint& x,
                           const ApproxPoint& y) {
  double meet = ToDouble(t.carrier_meet_level(x.carrier, y.carrier));
  meet = std::max({meet, x.level, y.level});
  return 2 * std::log(meet) - std::log(x.level) - std::log(y.level);
}

}  // namespace

void EndMap::require_valid() const {
  if (static_cast<int>(assignment.size()) != source.size()) {
    throw InputError("end map assignment is not total");
  }
  for (int i : assignment) {
    if (i < 0 || i >= target.size()) throw InputError("end map image out of range");
  }
}

StepModulus ModulusOf(const EndMap& f) {
  f.require_valid();
  std::map<Rat, Rat> worst;  // source distance -> max image distance
  for (int i = 0; i < f.source.size(); ++i) {
    for (int j = i + 1; j < f.source.size(); ++j) {
      const Rat& ds = f.source.dist(i, j);
      const Rat dt = f.target.dist(f.assignment[i], f.assignment[j]);
      auto [it, inserted] = worst.insert({ds, dt});
      if (!inserted && dt > it->second) it->second = dt;
    }
  }
  StepModulus rho;
  Rat running = 0;
  for (auto& [x, v] : worst) {
    if (v > running) running = v;
    if (rho.jumps.empty() || running > rho.jumps.back().second) {
      rho.jumps.push_back({x, running});
    }
  }
  return rho;
}

void RadialTreeMap::require_valid() const {
  if (validated) return;
  if (!source || !target) throw InputError("radial map missing trees");
  if (!IsGeodesicallyComplete(*source) || !IsGeodesicallyComplete(*target)) {
    throw InputError("radial maps need geodesically complete trees");
  }
  const std::vector<int> rays = source->ray_leaves();
  for (int f : rays) {
    auto s = sigma.find(f);
    if (s == sigma.end()) throw InputError("sigma not total: leaf " + std::to_string(f));
    if (!target->has_node(s->second) ||
        target->node(s->second).leaf != LeafKind::RAY) {
      throw InputError("sigma image is not a target RAY leaf");
    }
    auto r = reparam.find(f);
    if (r == reparam.end()) {
      throw InputError("reparametrization missing for leaf " + std::to_string(f));
    }
    const PLFunction& g = r->second;
    if (!g.nondecreasing()) throw InputError("reparametrization not nondecreasing");
    if (g.values().back() != 1) throw InputError("reparametrization must fix 1");
    for (const Rat& v : g.values()) {
      if (v < 0 || v > 1) throw InputError("reparametrization value out of [0,1]");
    }
  }
  // Well-definedness: carriers agree where their arcs do.
  for (size_t a = 0; a < rays.size(); ++a) {
    for (size_t b = a + 1; b < rays.size(); ++b) {
      const int F = rays[a], G = rays[b];
      const Rat m = source->carrier_meet_level(F, G);
      const PLFunction& gf = reparam.at(F);
      const PLFunction& gg = reparam.at(G);
      std::set<Rat> probes = {m, Rat(1)};
      for (const Rat& x : gf.breakpoints()) {
        if (x > m && x < 1) probes.insert(x);
      }
      for (const Rat& x : gg.breakpoints()) {
        if (x > m && x < 1) probes.insert(x);
      }
      for (const Rat& x : probes) {
        if (gf(x) != gg(x)) {
          throw InputError("well-definedness violated: reparametrizations of leaves " +
                           std::to_string(F) + "," + std::to_string(G) +
                           " differ at level " + FormatRat(x) + " above their meet");
        }
      }
      const Rat image_meet =
          target->carrier_meet_level(sigma.at(F), sigma.at(G));
      if (image_meet > gf(m)) {
        throw InputError("well-definedness violated: images of leaves " +
                         std::to_string(F) + "," + std::to_string(G) +
                         " branch above the image of their meet");
      }
    }
  }
  validated = true;
}

RadialTreeMap InduceTreeMap(const EndMap& f) {
  f.require_valid();
  RadialTreeMap m;
  m.source = std::make_shared<TreePresentation>(TreeOf(f.source));
  m.target = std::make_shared<TreePresentation>(TreeOf(f.target));
  const PLFunction lambda = ConcaveMajorant(ModulusOf(f));
  // tree_of names RAY leaves by point index.
  for (int i = 0; i < f.source.size(); ++i) {
    m.sigma[i] = f.assignment[i];
    m.reparam.insert({i, lambda});
  }
  m.require_valid();
  return m;
}

TreePoint EvalTreeMap(const RadialTreeMap& m, const TreePoint& x) {
  m.require_valid();
  m.source->require_valid(x);
  const Rat image_level = m.reparam.at(x.carrier)(x.level);
  if (image_level <= 0) {
    throw InputError("image level is 0: map is not proper at leaf " +
                     std::to_string(x.carrier));
  }
  return {m.sigma.at(x.carrier), image_level};
}

CheckReport CheckLipschitz1(
    const RadialTreeMap& m,
    const std::vector<std::pair<TreePoint, TreePoint>>& pairs) {
  m.require_valid();
  CheckReport report;
  const int n = static_cast<int>(pairs.size());
  std::vector<std::string> found(n);
  std::vector<char> bad(n, 0);
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
#pragma omp parallel for schedule(dynamic, 64)
  for (int i = 0; i < n; ++i) {
    const auto& [x, y] = pairs[i];
    m.source->require_valid(x);
    m.source->require_valid(y);
    // Division-free form of Distance(target, f(x), f(y)) > Distance(source,
    // x, y): with q = um^2 / (ux * uy) on each side, cross-multiply the
    // canonical integer parts instead of normalizing two rational quotients.
    Rat ms = m.source->carrier_meet_level(x.carrier, y.carrier);
    if (RatLess(ms, x.level)) ms = x.level;
    if (RatLess(ms, y.level)) ms = y.level;
    const TreePoint fx = EvalTreeMap(m, x);
    const TreePoint fy = EvalTreeMap(m, y);
    Rat mt = m.target->carrier_meet_level(fx.carrier, fy.carrier);
    if (RatLess(mt, fx.level)) mt = fx.level;
    if (RatLess(mt, fy.level)) mt = fy.level;
    const Int lhs = numerator(mt) * numerator(mt) * denominator(fx.level) *
                    denominator(fy.level) * denominator(ms) * denominator(ms) *
                    numerator(x.level) * numerator(y.level);
    const Int rhs = numerator(ms) * numerator(ms) * denominator(x.level) *
                    denominator(y.level) * denominator(mt) * denominator(mt) *
                    numerator(fx.level) * numerator(fy.level);
    if (lhs > rhs) {
      const TreeDistance pre = Distance(*m.source, x, y);
      const TreeDistance post = Distance(*m.target, fx, fy);
      bad[i] = 1;
      found[i] = "pair (" + std::to_string(x.carrier) + "@" + FormatRat(x.level) +
                 ", " + std::to_string(y.carrier) + "@" + FormatRat(y.level) +
                 "): image q " + FormatRat(post.q) + " > source q " +
                 FormatRat(pre.q);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (bad[i]) report.witnesses.push_back(found[i]);
  }
  report.pass = report.witnesses.empty();
  report.summary = report.pass ? "lipschitz-1 holds on all " + std::to_string(n) + " pairs"
                               : std::to_string(report.witnesses.size()) + " violations";
  return report;
}

std::vector<std::pair<TreePoint, TreePoint>> LipschitzSamplePairs(
    const RadialTreeMap& m, int samples, unsigned seed) {
  const std::vector<int> rays = m.source->ray_leaves();
  std::vector<std::pair<TreePoint, TreePoint>> pairs;
  // Exhaustive breakpoint levels on every leaf pair.
  for (size_t a = 0; a < rays.size(); ++a) {
    for (size_t b = a; b < rays.size(); ++b) {
      std::set<Rat> levels;
      for (const Rat& x : m.reparam.at(rays[a]).breakpoints()) levels.insert(x);
      for (const Rat& x : m.reparam.at(rays[b]).breakpoints()) levels.insert(x);
      levels.insert(m.source->carrier_meet_level(rays[a], rays[b]));
      for (const Rat& u : levels) {
        for (const Rat& w : levels) {
          if (u > 0 && w > 0) {
            pairs.push_back({{rays[a], u}, {rays[b], w}});
          }
        }
      }
    }
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> leaf_pick(0, static_cast<int>(rays.size()) - 1);
  std::uniform_int_distribution<int> num(1, 1 << 16);
  for (int i = 0; i < samples; ++i) {
    const int f = rays[leaf_pick(rng)], g = rays[leaf_pick(rng)];
    const int d1 = num(rng), d2 = num(rng);
    const Rat u1(std::min(d1, d2), std::max(d1, d2) + 1);
    const Rat u2(std::min(d1, d2) + 1, std::max(d1, d2) + 2);
    pairs.push_back({{f, u1}, {g, u2}});
  }
  return pairs;
}

CheckReport CheckMetricallyProper(const RadialTreeMap& m) {
  m.require_valid();
  CheckReport report;
  for (const auto& [leaf, g] : m.reparam) {
    if (g.values().front() != 0) {
      report.witnesses.push_back("leaf " + std::to_string(leaf) +
                                 ": reparametrization does not vanish at 0");
      continue;
    }
    if (g.values()[1] == 0) {
      report.witnesses.push_back(
          "leaf " + std::to_string(leaf) + ": ray collapses to a bounded image " +
          "(flat at 0 up to level " + FormatRat(g.breakpoints()[1]) + ")");
    }
  }
  report.pass = report.witnesses.empty();
  if (report.pass) {
    // Witness radius map via breakpoint inversion: each target level v at a
    // breakpoint is cleared by source levels at or below its preimage sup.
    std::string map_desc = "witness radius map:";
    for (const auto& [leaf, g] : m.reparam) {
      for (size_t i = 1; i < g.values().size(); ++i) {
        const Rat& v = g.values()[i];
        if (v > 0) {
          map_desc += " [leaf " + std::to_string(leaf) + "] M=" + FormatRat(v) +
                      "->N=" + FormatRat(g.inverse_sup(v)) + ";";
        }
      }
    }
    report.summary = map_desc;
  } else {
    report.summary = "not metrically proper";
  }
  return report;
}

BornologousReport CheckBornologous(const RadialTreeMap& m) {
  m.require_valid();
  BornologousReport report;
  report.constant = 0;
  for (const auto& [leaf, g] : m.reparam) {
    std::optional<Rat> slope = g.max_depth_slope();
    if (!slope) {
      report.pass = false;
      report.summary = "unbounded displacement at leaf " + std::to_string(leaf);
      return report;
    }
    if (*slope > report.constant) report.constant = *slope;
  }
  report.summary = "bornologous with constant " + FormatRat(report.constant);
  return report;
}

EndMap InduceEndMap(const RadialTreeMap& m) {
  const CheckReport proper = CheckMetricallyProper(m);
  if (!proper.pass) {
    throw InputError("cannot induce an end map: " + proper.summary +
                     (proper.witnesses.empty() ? "" : " (" + proper.witnesses[0] + ")"));
  }
  EndSpaceView src = EndsOf(*m.source);
  EndSpaceView dst = EndsOf(*m.target);

  // Cut-set chase: beyond every target meet level the image component must
  // stabilize to the component of sigma(F).
  Rat probe = 1;
  for (int i = 0; i < dst.space.size(); ++i) {
    for (int j = i + 1; j < dst.space.size(); ++j) {
      probe = std::min(probe, dst.space.dist(i, j));
    }
  }
  probe /= 2;
  for (int rounds = 0; rounds < 2; ++rounds, probe /= 2) {
    auto components = ComponentsBeyond(*m.target, probe);
    for (int leaf : m.source->ray_leaves()) {
      const Rat deep = m.reparam.at(leaf).inverse_sup(probe);
      const TreePoint image = EvalTreeMap(m, {leaf, deep});
      const int target_leaf = m.sigma.at(leaf);
      bool stabilized = false;
      for (const auto& [cut, block] : components) {
        const bool holds_image =
            m.target->carrier_meet_level(cut.carrier, image.carrier) <= probe;
        if (holds_image) {
          stabilized = std::find(block.begin(), block.end(), target_leaf) !=
                       block.end();
          break;
        }
      }
      if (!stabilized) {
        throw InputError("cut-set chase failed to stabilize at leaf " +
                         std::to_string(leaf));
      }
    }
  }

  std::vector<int> assignment(src.space.size());
  for (int p = 0; p < src.space.size(); ++p) {
    assignment[p] = dst.point_of_leaf.at(m.sigma.at(src.leaf_of[p]));
  }
  return {src.space, dst.space, std::move(assignment)};
}

ComponentMapResult ComponentMap(const RadialTreeMap& m, const TreeDistance& M) {
  const CheckReport proper = CheckMetricallyProper(m);
  if (!proper.pass) throw InputError("component map needs a metrically proper map");
  if (M.q <= 1) throw InputError("component map needs a positive depth M");
  const Rat target_level = Rat(1) / M.q;

  Rat source_level = 1;
  for (const auto& [leaf, g] : m.reparam) {
    source_level = std::min(source_level, g.inverse_sup(target_level));
  }

  ComponentMapResult out;
  out.source_level = source_level;
  out.target_level = target_level;
  auto source_components = ComponentsBeyond(*m.source, source_level);
  auto target_components = ComponentsBeyond(*m.target, target_level);

  for (const auto& [cut, block] : source_components) {
    // All leaves of the block must land in one target component.
    int found = -1;
    for (size_t k = 0; k < target_components.size(); ++k) {
      const auto& tblock = target_components[k].second;
      if (std::find(tblock.begin(), tblock.end(), m.sigma.at(block[0])) !=
          tblock.end()) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found < 0) throw InputError("component map: image component not found");
    for (int leaf : block) {
      const auto& tblock = target_components[found].second;
      if (std::find(tblock.begin(), tblock.end(), m.sigma.at(leaf)) == tblock.end()) {
        throw InputError("component map is not single-valued on the block of leaf " +
                         std::to_string(block[0]));
      }
    }
    out.association.push_back({cut, target_components[found].first});
  }
  return out;
}

bool MapsEquivalent(const RadialTreeMap& m, const RadialTreeMap& m2) {
  if (!SamePresentation(*m.source, *m2.source) ||
      !SamePresentation(*m.target, *m2.target)) {
    throw InputError("maps_equivalent: source/target mismatch");
  }
  const EndMap e1 = InduceEndMap(m);
  const EndMap e2 = InduceEndMap(m2);
  const bool pointwise = e1.assignment == e2.assignment;

  // Cross-check: the component maps must agree one level below every
  // breakpoint and meet level.
  Rat deep = 1;
  auto shrink = [&deep](const Rat& x) {
    if (x > 0 && x < deep) deep = x;
  };
  for (const auto* map : {&m, &m2}) {
    for (const auto& [leaf, g] : map->reparam) {
      for (const Rat& v : g.values()) shrink(v);
      for (const Rat& x : g.breakpoints()) shrink(x);
    }
  }
  for (const auto* tree : {m.source.get(), m.target.get()}) {
    const auto rays = tree->ray_leaves();
    for (size_t a = 0; a < rays.size(); ++a) {
      for (size_t b = a + 1; b < rays.size(); ++b) {
        shrink(tree->carrier_meet_level(rays[a], rays[b]));
      }
    }
  }
  const TreeDistance M{Rat(2) / deep};
  const ComponentMapResult c1 = ComponentMap(m, M);
  const ComponentMapResult c2 = ComponentMap(m2, M);
  // At this depth every ray has its own cut point on both sides, so the
  // component maps agree iff each leaf's two image cut points coincide.
  bool component_agree = true;
  for (int leaf : m.source->ray_leaves()) {
    const TreePoint t1{m.sigma.at(leaf), c1.target_level};
    const TreePoint t2{m2.sigma.at(leaf), c2.target_level};
    if (!m.target->points_equal(t1, t2)) {
      component_agree = false;
      break;
    }
  }
  if (component_agree != pointwise) {
    throw InputError("equivalence cross-check disagrees with end-map equality");
  }
  return pointwise;
}

ApproxPoint HomotopyEval(const RadialTreeMap& m, const RadialTreeMap& m2,
                         const TreePoint& x, double t) {
  if (!SamePresentation(*m.source, *m2.source) ||
      !SamePresentation(*m.target, *m2.target)) {
    throw InputError("homotopy needs maps with the same source and target");
  }
  return GeodesicPoint(*m.target, EvalTreeMap(m, x), EvalTreeMap(m2, x), t);
}

CheckReport HomotopyBoundCheck(const RadialTreeMap& m, const RadialTreeMap& m2,
                               const TreePoint& x, const TreePoint& y,
                               const std::vector<double>& t_samples) {
  CheckReport report;
  const TreePoint fx = EvalTreeMap(m, x), gx = EvalTreeMap(m2, x);
  const TreePoint fy = EvalTreeMap(m, y), gy = EvalTreeMap(m2, y);
  const double df = Distance(*m.target, fx, fy).value();
  const double dg = Distance(*m.target, gx, gy).value();
  const double bound = std::max(df, dg) + 1e-9;
  for (double t : t_samples) {
    const ApproxPoint hx = HomotopyEval(m, m2, x, t);
    const ApproxPoint hy = HomotopyEval(m, m2, y, t);
    const double d = ApproxDistanceValue(*m.target, hx, hy);
    if (d > bound) {
      report.witnesses.push_back("t=" + std::to_string(t) + ": d=" +
                                 std::to_string(d) + " > " + std::to_string(bound));
    }
  }
  report.pass = report.witnesses.empty();
  report.summary = report.pass ? "homotopy bound holds" : "homotopy bound violated";
  return report;
}

namespace {

FiniteUltrametricSpace StarSpace(int n, const Rat& d1, const Rat& hub_dist) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  labels.push_back("y");
  std::vector<std::vector<Rat>> dist(n + 1, std::vector<Rat>(n + 1, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) dist[i][j] = dist[j][i] = d1;
    dist[i][n] = dist[n][i] = hub_dist;
  }
  return FiniteUltrametricSpace(std::move(labels), std::move(dist));
}

}  // namespace

EndMap StarFamilyMap(int n, const Rat& d1, const Rat& d0, const Rat& d0_target) {
  if (n < 2 || d1 >= d0 || d0 >= d0_target || d0_target > 1) {
    throw InputError("star family needs 2 <= n and d1 < d0 < d0_target <= 1");
  }
  EndMap f{StarSpace(n, d1, d0), StarSpace(n, d1, d0_target), {}};
  f.assignment.resize(n + 1);
  for (int i = 0; i <= n; ++i) f.assignment[i] = i;
  return f;
}

int PreimageCutCardinality(const RadialTreeMap& m, const Rat& target_level) {
  Rat cut = 1;
  for (const auto& [leaf, g] : m.reparam) {
    cut = std::min(cut, g.inverse_sup(target_level));
  }
  return static_cast<int>(CutSet(*m.source, cut).size());
}

NonRootedResult NonRootedEndMap(const TreePresentation& source,
                                const TreePresentation& target,
                                const std::map<int, int>& sigma, const TreePoint& p) {
  EndSpaceView src = EndsOf(source);
  EndSpaceView dst = EndsOf(target);
  if (sigma.size() != src.leaf_of.size()) throw InputError("sigma not total");
  std::set<int> images;
  for (const auto& [f, g] : sigma) {
    if (!dst.point_of_leaf.count(g)) throw InputError("sigma image unknown");
    if (!images.insert(g).second) throw InputError("sigma is not injective");
  }
  if (images.size() != dst.leaf_of.size()) throw InputError("sigma is not surjective");
  target.require_valid(p);

  NonRootedResult out{EndMap{src.space, dst.space, {}}, Norm(target, p), {}};
  out.end_map.assignment.resize(src.space.size());
  for (int i = 0; i < src.space.size(); ++i) {
    out.end_map.assignment[i] = dst.point_of_leaf.at(sigma.at(src.leaf_of[i]));
  }

  const Rat up = p.level;
  for (int i = 0; i < src.space.size(); ++i) {
    for (int j = i + 1; j < src.space.size(); ++j) {
      const Rat& d = src.space.dist(i, j);
      const Rat& d2 = dst.space.dist(out.end_map.assignment[i],
                                     out.end_map.assignment[j]);
      if (d2 < up * d || d2 > d / up) {
        out.distortion.witnesses.push_back(
            "pair (" + src.space.label(i) + "," + src.space.label(j) + "): d'=" +
            FormatRat(d2) + " outside [" + FormatRat(up * d) + "," +
            FormatRat(d / up) + "]");
      }
    }
  }
  out.distortion.pass = out.distortion.witnesses.empty();
  out.distortion.summary =
      out.distortion.pass
          ? "within the distortion interval [" + FormatRat(up) + "," +
                FormatRat(Rat(1) / up) + "]"
          : std::to_string(out.distortion.witnesses.size()) + " distortion violations";
  return out;
}

}  // namespace utree
