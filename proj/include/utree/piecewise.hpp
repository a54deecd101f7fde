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

#ifndef UTREE_PIECEWISE_H_
#define UTREE_PIECEWISE_H_

#include <vector>

#include "utree/rational.hpp"

namespace utree {

// Right-continuous nondecreasing step function on [0,1] with value 0 at 0.
// jumps[k] = (x_k, v_k): the function equals v_k on [x_k, x_{k+1}).
// Below the first jump the value is 0.
struct StepModulus {
  std::vector<std::pair<Rat, Rat>> jumps;  // strictly increasing x, nondecreasing v

  Rat operator()(const Rat& x) const;
};

// Piecewise-linear function on [0,1] given by breakpoints; linear in between.
// The workhorse for concave majorants and per-end level reparametrizations.
class PLFunction {
 public:
  PLFunction(std::vector<Rat> xs, std::vector<Rat> vs);

  const std::vector<Rat>& breakpoints() const { return xs_; }
  const std::vector<Rat>& values() const { return vs_; }
  int segments() const { return static_cast<int>(xs_.size()) - 1; }

  Rat operator()(const Rat& x) const;

  bool nondecreasing() const;

  // sup { x : f(x) <= y }, exact; requires nondecreasing f with f(0) <= y.
  Rat inverse_sup(const Rat& y) const;

  // Max slope in depth coordinates of the level map u -> f(u): the supremum
  // of u f'(u) / f(u) over segments. nullopt when unbounded (f vanishes on a
  // positive-level segment start while rising).
  std::optional<Rat> max_depth_slope() const;

  bool operator==(const PLFunction& other) const = default;

 private:
  std::vector<Rat> xs_, vs_;
};

// The identity reparametrization on [0,1].
PLFunction IdentityPL();

// Least concave majorant on [0,1]: upper hull of the step graph's extreme
// points with the normalization value 1 at 1 forced before hulling.
// Result: PL, nondecreasing, strictly decreasing chord slopes, f(0)=0, f(1)=1,
// f >= rho pointwise, f(u)/u nonincreasing.
PLFunction ConcaveMajorant(const StepModulus& rho);

// Upper concave hull of arbitrary points with x in [0,1] (used by the
// majorant and exposed for tests). Points need not be sorted or distinct.
PLFunction UpperHull(std::vector<std::pair<Rat, Rat>> points);

}  // namespace utree

#endif  // UTREE_PIECEWISE_H_
