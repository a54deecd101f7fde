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

#include "utree/ultrametric.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace utree {

int FiniteUltrametricSpace::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

namespace {

// Axiom checks shared by both validators. Returns false when the input is so
// broken that triple scanning is pointless (handled by the caller).
void CheckAxioms(const std::vector<std::string>& labels,
                 const std::vector<std::vector<Rat>>& dist,
                 ValidationReport* report) {
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i) {
    if (dist[i][i] != 0) {
      report->axiom_violations.push_back("d(" + labels[i] + "," + labels[i] +
                                         ") = " + FormatRat(dist[i][i]) + " != 0");
    }
    for (int j = i + 1; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) {
        report->axiom_violations.push_back("asymmetry at (" + labels[i] + "," +
                                           labels[j] + ")");
      }
      if (dist[i][j] == 0) {
        report->axiom_violations.push_back("zero distance between distinct points " +
                                           labels[i] + "," + labels[j]);
      }
      if (dist[i][j] < 0) {
        report->axiom_violations.push_back("negative distance at (" + labels[i] +
                                           "," + labels[j] + ")");
      }
      if (dist[i][j] > 1) {
        report->axiom_violations.push_back("diameter > 1 at (" + labels[i] + "," +
                                           labels[j] + "): " + FormatRat(dist[i][j]));
      }
    }
  }
}

void RequireSquare(const std::vector<std::string>& labels,
                   const std::vector<std::vector<Rat>>& dist) {
  const size_t n = labels.size();
  if (n == 0) throw InputError("empty space");
  if (dist.size() != n) throw InputError("matrix is not n x n");
  for (const auto& row : dist) {
    if (row.size() != n) throw InputError("matrix is not square");
  }
}

// Strong triangle violation for the ordered triple (x,z,y): d(x,y) exceeds
// max(d(x,z), d(z,y)). Reports each unordered pair {x,y} with its worst z.
bool TripleViolates(const std::vector<std::vector<Rat>>& dist, int x, int y, int z) {
  const Rat& dxy = dist[x][y];
  return dxy > dist[x][z] && dxy > dist[z][y];
}

}  // namespace

ValidationReport ValidateUltrametricSerial(const std::vector<std::string>& labels,
                                           const std::vector<std::vector<Rat>>& dist) {
  RequireSquare(labels, dist);
  ValidationReport report;
  CheckAxioms(labels, dist, &report);
  const int n = static_cast<int>(labels.size());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (TripleViolates(dist, x, y, z)) {
          report.triple_violations.push_back(
              {x, y, z, dist[x][y], dist[x][z], dist[z][y]});
        }
      }
    }
  }
  report.ok = report.empty();
  return report;
}

ValidationReport ValidateUltrametric(const std::vector<std::string>& labels,
                                     const std::vector<std::vector<Rat>>& dist) {
  RequireSquare(labels, dist);
  ValidationReport report;
  CheckAxioms(labels, dist, &report);
  const int n = static_cast<int>(labels.size());

  std::vector<std::vector<TripleViolation>> per_row(n);
#pragma omp parallel for schedule(dynamic)
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (TripleViolates(dist, x, y, z)) {
          per_row[x].push_back({x, y, z, dist[x][y], dist[x][z], dist[z][y]});
        }
      }
    }
  }
  for (auto& row : per_row) {
    report.triple_violations.insert(report.triple_violations.end(), row.begin(),
                                    row.end());
  }
  report.ok = report.empty();
  return report;
}

std::vector<int> Ball(const FiniteUltrametricSpace& u, const std::string& center,
                      const Rat& radius, bool closed) {
  const int c = u.index_of(center);
  if (c < 0) throw InputError("unknown center label: " + center);
  std::vector<int> out;
  for (int i = 0; i < u.size(); ++i) {
    const Rat& d = u.dist(c, i);
    if (closed ? d <= radius : d < radius) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> PartitionAt(const FiniteUltrametricSpace& u,
                                          const Rat& radius) {
  const int n = u.size();
  std::vector<std::vector<int>> blocks;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> block;
    for (int j = 0; j < n; ++j) {
      if (!seen[j] && u.dist(i, j) <= radius) {
        block.push_back(j);
        seen[j] = true;
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

IsoscelesWitness IsoscelesOf(const FiniteUltrametricSpace& u, const std::string& x,
                             const std::string& y, const std::string& z) {
  const int a = u.index_of(x), b = u.index_of(y), c = u.index_of(z);
  if (a < 0 || b < 0 || c < 0) throw InputError("unknown point label");
  if (a == b || b == c || a == c) throw InputError("repeated points in triple");

  struct Side {
    std::pair<int, int> pts;
    Rat d;
  };
  Side sides[3] = {{{a, b}, u.dist(a, b)}, {{a, c}, u.dist(a, c)}, {{b, c}, u.dist(b, c)}};
  std::sort(sides, sides + 3, [](const Side& l, const Side& r) { return l.d > r.d; });

  IsoscelesWitness w;
  if (sides[0].d == sides[2].d) {
    w.equilateral = true;
    w.long_value = w.short_value = sides[0].d;
    return w;
  }
  w.long_a = sides[0].pts;
  w.long_b = sides[1].pts;
  w.short_side = sides[2].pts;
  w.long_value = sides[0].d;
  w.short_value = sides[2].d;
  return w;
}

}  // namespace utree
