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

#include "utree/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace utree {

namespace {

Rat RatField(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a \"p/q\" string");
  return ParseRat(j.get<std::string>());
}

}  // namespace

FiniteUltrametricSpace UltrametricFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("distances")) {
    throw InputError("ultrametric JSON needs \"points\" and \"distances\"");
  }
  std::vector<std::string> labels;
  for (const Json& p : j.at("points")) {
    if (!p.is_string()) throw InputError("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  if (labels.empty()) throw InputError("empty space");
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (!index.insert({labels[i], i}).second) throw InputError("duplicate label");
  }
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<Rat>> dist(n, std::vector<Rat>(n, Rat(0)));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  for (const Json& entry : j.at("distances")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw InputError("distance entries must be [label, label, \"p/q\"]");
    }
    auto a = index.find(entry[0].get<std::string>());
    auto b = index.find(entry[1].get<std::string>());
    if (a == index.end() || b == index.end()) throw InputError("unknown label in distances");
    const Rat d = RatField(entry[2], "distance");
    const int i = a->second, k = b->second;
    if (given[i][k]) throw InputError("duplicate distance entry");
    given[i][k] = given[k][i] = true;
    dist[i][k] = dist[k][i] = d;
  }
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      if (!given[i][k]) {
        throw InputError("missing distance between " + labels[i] + " and " + labels[k]);
      }
    }
  }
  return FiniteUltrametricSpace(std::move(labels), std::move(dist));
}

Json UltrametricToJson(const FiniteUltrametricSpace& u) {
  std::vector<int> order(u.size());
  for (int i = 0; i < u.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&u](int a, int b) { return u.label(a) < u.label(b); });
  Json points = Json::array();
  for (int i : order) points.push_back(u.label(i));
  Json distances = Json::array();
  for (size_t a = 0; a < order.size(); ++a) {
    for (size_t b = a + 1; b < order.size(); ++b) {
      distances.push_back(
          {u.label(order[a]), u.label(order[b]), FormatRat(u.dist(order[a], order[b]))});
    }
  }
  return Json{{"points", points}, {"distances", distances}};
}

TreePresentation TreeFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("nodes")) throw InputError("tree JSON needs \"nodes\"");
  std::map<int, LeafKind> leaf_tags;
  if (j.contains("leaves")) {
    for (const auto& [key, value] : j.at("leaves").items()) {
      const std::string kind = value.get<std::string>();
      if (kind == "RAY") leaf_tags[std::stoi(key)] = LeafKind::RAY;
      else if (kind == "TIP") leaf_tags[std::stoi(key)] = LeafKind::TIP;
      else throw InputError("leaf kind must be RAY or TIP");
    }
  }
  std::vector<TreeNode> nodes;
  for (const Json& nj : j.at("nodes")) {
    TreeNode n;
    n.id = nj.at("id").get<int>();
    n.level = RatField(nj.at("level"), "level");
    if (nj.contains("children")) {
      for (const Json& c : nj.at("children")) n.children.push_back(c.get<int>());
    }
    auto tag = leaf_tags.find(n.id);
    if (tag != leaf_tags.end()) n.leaf = tag->second;
    nodes.push_back(std::move(n));
  }
  // Parents derive from the children lists.
  std::map<int, int> parent_of;
  for (const TreeNode& n : nodes) {
    for (int c : n.children) {
      if (!parent_of.insert({c, n.id}).second) throw InputError("node has two parents");
    }
  }
  for (TreeNode& n : nodes) {
    auto it = parent_of.find(n.id);
    n.parent = it == parent_of.end() ? -1 : it->second;
  }
  return TreePresentation(std::move(nodes));
}

Json TreeToJson(const TreePresentation& t) {
  Json nodes = Json::array();
  Json leaves = Json::object();
  for (const TreeNode& n : t.nodes()) {
    Json nj{{"id", n.id}, {"level", FormatRat(n.level)}};
    if (!n.children.empty()) nj["children"] = n.children;
    nodes.push_back(std::move(nj));
    if (n.leaf) {
      leaves[std::to_string(n.id)] = (n.leaf == LeafKind::RAY) ? "RAY" : "TIP";
    }
  }
  return Json{{"nodes", nodes}, {"leaves", leaves}};
}

EndMap EndMapFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j.contains("map")) {
    throw InputError("end map JSON needs \"source\", \"target\", \"map\"");
  }
  EndMap f{UltrametricFromJson(j.at("source")), UltrametricFromJson(j.at("target")), {}};
  f.assignment.assign(f.source.size(), -1);
  for (const auto& [from, to] : j.at("map").items()) {
    const int i = f.source.index_of(from);
    const int k = f.target.index_of(to.get<std::string>());
    if (i < 0) throw InputError("map key is not a source point: " + from);
    if (k < 0) throw InputError("map value is not a target point");
    f.assignment[i] = k;
  }
  for (int i = 0; i < f.source.size(); ++i) {
    if (f.assignment[i] < 0) {
      throw InputError("map is not total: missing " + f.source.label(i));
    }
  }
  return f;
}

Json EndMapToJson(const EndMap& f) {
  Json map = Json::object();
  for (int i = 0; i < f.source.size(); ++i) {
    map[f.source.label(i)] = f.target.label(f.assignment[i]);
  }
  return Json{{"source", UltrametricToJson(f.source)},
              {"target", UltrametricToJson(f.target)},
              {"map", map}};
}

RadialTreeMap RadialTreeMapFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j.contains("sigma") || !j.contains("reparam")) {
    throw InputError("radial map JSON needs source, target, sigma, reparam");
  }
  RadialTreeMap m;
  m.source = std::make_shared<TreePresentation>(TreeFromJson(j.at("source")));
  m.target = std::make_shared<TreePresentation>(TreeFromJson(j.at("target")));
  for (const auto& [from, to] : j.at("sigma").items()) {
    m.sigma[std::stoi(from)] = to.get<int>();
  }
  for (const auto& [leaf, pairs] : j.at("reparam").items()) {
    std::vector<Rat> xs, vs;
    for (const Json& p : pairs) {
      if (!p.is_array() || p.size() != 2) {
        throw InputError("reparam entries must be [\"u\",\"value\"] pairs");
      }
      xs.push_back(RatField(p[0], "reparam breakpoint"));
      vs.push_back(RatField(p[1], "reparam value"));
    }
    m.reparam.insert({std::stoi(leaf), PLFunction(std::move(xs), std::move(vs))});
  }
  m.require_valid();
  return m;
}

Json RadialTreeMapToJson(const RadialTreeMap& m) {
  Json sigma = Json::object();
  for (const auto& [f, g] : m.sigma) sigma[std::to_string(f)] = g;
  Json reparam = Json::object();
  for (const auto& [f, g] : m.reparam) {
    Json pairs = Json::array();
    for (size_t i = 0; i < g.breakpoints().size(); ++i) {
      pairs.push_back({FormatRat(g.breakpoints()[i]), FormatRat(g.values()[i])});
    }
    reparam[std::to_string(f)] = pairs;
  }
  return Json{{"source", TreeToJson(*m.source)},
              {"target", TreeToJson(*m.target)},
              {"sigma", sigma},
              {"reparam", reparam}};
}

std::string TreeToDot(const TreePresentation& t) {
  std::ostringstream out;
  out << "digraph tree {\n  rankdir=TB;\n";
  for (const TreeNode& n : t.nodes()) {
    out << "  n" << n.id << " [label=\"" << n.id << "\\nu=" << FormatRat(n.level)
        << "\\nt=" << DepthOf(n.level) << "\"";
    if (n.leaf == LeafKind::RAY) out << ", shape=rarrow";
    else if (n.leaf == LeafKind::TIP) out << ", shape=box";
    out << "];\n";
  }
  for (const TreeNode& n : t.nodes()) {
    for (int c : n.children) {
      out << "  n" << n.id << " -> n" << c;
      if (t.node(c).leaf == LeafKind::RAY) out << " [arrowhead=veevee]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

SimplicialTreeInput SimplicialTreeFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw InputError("simplicial tree JSON needs \"vertices\" and \"edges\"");
  }
  SimplicialTreeInput s;
  for (const Json& v : j.at("vertices")) {
    if (!v.is_number_integer()) throw InputError("vertices must be integers");
    s.vertices.push_back(v.get<int>());
  }
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("edges must be [v, w] pairs");
    s.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  if (j.contains("root")) s.root = j.at("root").get<int>();
  if (j.contains("rays")) {
    for (const Json& v : j.at("rays")) s.ray_vertices.push_back(v.get<int>());
  }
  return s;
}

Json FreudenthalReportToJson(const FreudenthalReport& r) {
  Json j;
  j["end_count"] = r.end_count;
  j["end_vertices"] = r.end_vertices;
  j["meet_depths"] = r.meet_depths;
  j["pruned_vertex_count"] = r.pruned_vertex_count;
  j["trivial"] = r.trivial;
  return j;
}

Json LoadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InputError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace utree
