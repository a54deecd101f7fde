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

#ifndef UTREE_ULTRAMETRIC_H_
#define UTREE_ULTRAMETRIC_H_

#include <string>
#include <vector>

#include "utree/rational.hpp"

namespace utree {

// A finite ultrametric space of diameter <= 1 with exact rational distances.
// Labels are kept in insertion order; the matrix is indexed by position.
class FiniteUltrametricSpace {
 public:
  FiniteUltrametricSpace(std::vector<std::string> labels,
                         std::vector<std::vector<Rat>> dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {}

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const Rat& dist(int i, int j) const { return dist_[i][j]; }
  const std::vector<std::vector<Rat>>& matrix() const { return dist_; }

  // Position of a label, or -1.
  int index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rat>> dist_;
};

struct TripleViolation {
  int x, y, z;          // d(x,y) > max(d(x,z), d(z,y))
  Rat dxy, dxz, dzy;
};

struct ValidationReport {
  bool ok = true;
  std::vector<TripleViolation> triple_violations;
  std::vector<std::string> axiom_violations;  // asymmetry, zero off-diagonal, ...

  bool empty() const { return triple_violations.empty() && axiom_violations.empty(); }
};

// Checks all ultrametric axioms on a candidate matrix: symmetry, zero
// diagonal, positive off-diagonal, diameter <= 1, and the strong triangle
// inequality on every ordered triple. Throws InputError when the matrix is
// not even a candidate (non-square, empty).
// The triple scan is OpenMP-parallel; the _serial variant is the reference
// implementation kept for testing and benchmarking.
ValidationReport ValidateUltrametric(const std::vector<std::string>& labels,
                                     const std::vector<std::vector<Rat>>& dist);
ValidationReport ValidateUltrametricSerial(const std::vector<std::string>& labels,
                                           const std::vector<std::vector<Rat>>& dist);

inline ValidationReport Validate(const FiniteUltrametricSpace& u) {
  return ValidateUltrametric(u.labels(), u.matrix());
}

// Open (strict) or closed ball around a center, as point indices in label order.
std::vector<int> Ball(const FiniteUltrametricSpace& u, const std::string& center,
                      const Rat& radius, bool closed);

// The closed r-balls partition the space. Blocks are sorted canonically:
// within a block by index, blocks by first index.
std::vector<std::vector<int>> PartitionAt(const FiniteUltrametricSpace& u,
                                          const Rat& radius);

struct IsoscelesWitness {
  bool equilateral = false;
  // When not equilateral: the two sides realizing the (shared) maximum and
  // the short side, as point-index pairs.
  std::pair<int, int> long_a, long_b, short_side;
  Rat long_value, short_value;
};

// Classifies a triple per the ultrametric isosceles law: the maximum distance
// is attained at least twice. Throws InputError on repeated points.
IsoscelesWitness IsoscelesOf(const FiniteUltrametricSpace& u, const std::string& x,
                             const std::string& y, const std::string& z);

}  // namespace utree

#endif  // UTREE_ULTRAMETRIC_H_
