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

#include "utree/piecewise.hpp"

#include <algorithm>

namespace utree {

Rat StepModulus::operator()(const Rat& x) const {
  Rat value = 0;
  for (const auto& [xk, vk] : jumps) {
    if (xk <= x) value = vk;
    else break;
  }
  return value;
}

PLFunction::PLFunction(std::vector<Rat> xs, std::vector<Rat> vs)
    : xs_(std::move(xs)), vs_(std::move(vs)) {
  if (xs_.size() != vs_.size() || xs_.size() < 2) {
    throw InputError("PL function needs matching breakpoint/value lists, >= 2 points");
  }
  for (size_t i = 1; i < xs_.size(); ++i) {
    if (xs_[i] <= xs_[i - 1]) throw InputError("PL breakpoints must increase");
  }
  if (xs_.front() != 0 || xs_.back() != 1) {
    throw InputError("PL function must span [0,1]");
  }
}

Rat PLFunction::operator()(const Rat& x) const {
  if (RatLess(x, xs_.front()) || RatLess(xs_.back(), x)) {
    throw InputError("PL evaluation out of [0,1]");
  }
  auto it = std::upper_bound(
      xs_.begin(), xs_.end(), x,
      [](const Rat& a, const Rat& b) { return RatLess(a, b); });
  if (it == xs_.end()) return vs_.back();
  const size_t hi = it - xs_.begin();
  const size_t lo = hi - 1;
  const Rat t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return vs_[lo] + t * (vs_[hi] - vs_[lo]);
}

bool PLFunction::nondecreasing() const {
  for (size_t i = 1; i < vs_.size(); ++i) {
    if (vs_[i] < vs_[i - 1]) return false;
  }
  return true;
}

Rat PLFunction::inverse_sup(const Rat& y) const {
  if (vs_.front() > y) throw InputError("inverse_sup: f(0) > y");
  if (vs_.back() <= y) return xs_.back();
  // First segment whose right value exceeds y.
  size_t i = 1;
  while (vs_[i] <= y) ++i;
  if (vs_[i - 1] == vs_[i]) return xs_[i - 1];  // unreachable: vs_[i] > y >= vs_[i-1]
  // Flat runs at value y extend the preimage; scan left end of the rise.
  const Rat t = (y - vs_[i - 1]) / (vs_[i] - vs_[i - 1]);
  return xs_[i - 1] + t * (xs_[i] - xs_[i - 1]);
}

std::optional<Rat> PLFunction::max_depth_slope() const {
  // On a segment [x0,x1] with values [v0,v1] and slope s, the depth-space
  // derivative of u -> f(u) is u s / f(u), monotone on the segment, so the
  // supremum sits at an endpoint: max(s x0 / v0, s x1 / v1).
  std::optional<Rat> best;
  for (int i = 0; i < segments(); ++i) {
    const Rat s = (vs_[i + 1] - vs_[i]) / (xs_[i + 1] - xs_[i]);
    if (s == 0) continue;  // flat: derivative 0
    if (s < 0) return std::nullopt;  // not a level map
    if (vs_[i] == 0 && xs_[i] > 0) return std::nullopt;  // unbounded at segment start
    std::vector<Rat> candidates;
    if (vs_[i] > 0) candidates.push_back(s * xs_[i] / vs_[i]);
    if (vs_[i + 1] > 0) candidates.push_back(s * xs_[i + 1] / vs_[i + 1]);
    for (const Rat& c : candidates) {
      if (!best || c > *best) best = c;
    }
  }
  if (!best) best = Rat(0);
  return best;
}

PLFunction IdentityPL() { return PLFunction({Rat(0), Rat(1)}, {Rat(0), Rat(1)}); }

PLFunction UpperHull(std::vector<std::pair<Rat, Rat>> points) {
  if (points.empty()) throw InputError("empty hull input");
  std::sort(points.begin(), points.end());
  // Keep the highest value per x.
  std::vector<std::pair<Rat, Rat>> distinct;
  for (const auto& p : points) {
    if (!distinct.empty() && distinct.back().first == p.first) {
      if (p.second > distinct.back().second) distinct.back().second = p.second;
    } else {
      distinct.push_back(p);
    }
  }
  // Monotone chain, upper side; collinear middle points dropped so chord
  // slopes come out strictly decreasing.
  std::vector<std::pair<Rat, Rat>> hull;
  for (const auto& p : distinct) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Cross product sign: drop b when a->b->p turns left or is straight.
      const Rat cross = (b.first - a.first) * (p.second - a.second) -
                        (b.second - a.second) * (p.first - a.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  std::vector<Rat> xs, vs;
  for (const auto& [x, v] : hull) {
    xs.push_back(x);
    vs.push_back(v);
  }
  return PLFunction(std::move(xs), std::move(vs));
}

PLFunction ConcaveMajorant(const StepModulus& rho) {
  std::vector<std::pair<Rat, Rat>> points = {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}};
  for (const auto& [x, v] : rho.jumps) {
    if (x > 1) break;
    if (x == 1) continue;  // overridden by the forced (1,1)
    points.push_back({x, v});
  }
  return UpperHull(std::move(points));
}

}  // namespace utree
