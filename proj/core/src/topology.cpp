#include "linkspace/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "linkspace/error.hpp"

namespace linkspace {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string kind_name(int dimension, const ComponentSummary& c) {
  if (dimension == 1) return "circle";
  if (!c.orientable || !c.genus) return "non-orientable (χ=" + std::to_string(c.euler_characteristic) + ")";
  if (*c.genus == 0) return "sphere";
  if (*c.genus == 1) return "torus";
  return "genus-" + std::to_string(*c.genus) + " surface";
}

std::string plural(const std::string& kind) {
  if (kind == "torus") return "tori";
  if (kind.rfind("non-orientable", 0) == 0) return "non-orientable surfaces" + kind.substr(std::string("non-orientable").size());
  return kind + "s";
}

}  // namespace

std::string classify_components(int dimension, std::span<const ComponentSummary> components) {
  if (dimension >= 3) return "unclassified (dim ≥ 3)";
  if (components.empty()) return "empty";
  std::vector<std::pair<std::string, int>> groups;
  for (const auto& c : components) {
    const auto kind = kind_name(dimension, c);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == kind; });
    if (it == groups.end()) {
      groups.emplace_back(kind, 1);
    } else {
      ++it->second;
    }
  }
  std::string out;
  for (const auto& [kind, count] : groups) {
    if (!out.empty()) out += " + ";
    out += count == 1 ? kind : std::to_string(count) + " " + plural(kind);
  }
  return out;
}

TopologyReport analyze(const SurfaceMesh& mesh) {
  const std::size_t nv = mesh.vertices.size();
  // Each undirected edge maps to the faces using it and the direction each
  // face traverses it (+1 when the face walks a -> b).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, int>>> uses;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& cycle = mesh.faces[f].cycle;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t u = cycle[i];
      const std::size_t v = cycle[(i + 1) % cycle.size()];
      if (u >= nv || v >= nv) throw Error(ErrorCode::NotClosed, "face references a missing vertex");
      uses[{std::min(u, v), std::max(u, v)}].emplace_back(f, u < v ? 1 : -1);
    }
  }
  for (const auto& e : mesh.edges) {
    if (!uses.count({e.a, e.b})) throw Error(ErrorCode::NotClosed, "edge " + e.label.to_string() + " bounds no face");
  }
  for (const auto& [edge, faces] : uses) {
    if (faces.size() != 2) {
      throw Error(ErrorCode::NotClosed, "edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                                            ") lies on " + std::to_string(faces.size()) + " faces");
    }
  }

  DisjointSets sets(nv);
  for (const auto& [edge, faces] : uses) sets.unite(edge.first, edge.second);

  std::map<std::size_t, std::size_t> component_of_root;
  std::vector<ComponentSummary> components;
  const auto component = [&](std::size_t vertex) -> ComponentSummary& {
    const auto root = sets.find(vertex);
    auto [it, inserted] = component_of_root.emplace(root, components.size());
    if (inserted) components.emplace_back();
    return components[it->second];
  };
  for (std::size_t v = 0; v < nv; ++v) ++component(v).vertices;
  for (const auto& [edge, faces] : uses) ++component(edge.first).edges;
  for (const auto& face : mesh.faces) ++component(face.cycle.front()).faces;

  // Orientation propagation: neighbours across an edge must traverse it in
  // opposite directions once both orientations are applied.
  std::vector<int> orientation(mesh.faces.size(), 0);
  std::vector<std::vector<std::pair<std::size_t, int>>> constraints(mesh.faces.size());
  for (const auto& [edge, faces] : uses) {
    const auto [f, df] = faces[0];
    const auto [g, dg] = faces[1];
    // s_f * df == -(s_g * dg)  <=>  s_g = -s_f * df * dg
    constraints[f].emplace_back(g, -df * dg);
    constraints[g].emplace_back(f, -df * dg);
  }
  for (std::size_t seed = 0; seed < mesh.faces.size(); ++seed) {
    if (orientation[seed] != 0) continue;
    orientation[seed] = 1;
    std::vector<std::size_t> stack{seed};
    while (!stack.empty()) {
      const auto f = stack.back();
      stack.pop_back();
      for (const auto& [g, relation] : constraints[f]) {
        const int wanted = orientation[f] * relation;
        if (orientation[g] == 0) {
          orientation[g] = wanted;
          stack.push_back(g);
        } else if (orientation[g] != wanted) {
          component(mesh.faces[g].cycle.front()).orientable = false;
        }
      }
    }
  }

  TopologyReport report;
  report.dimension = 2;
  report.f_vector = {nv, uses.size(), mesh.faces.size()};
  for (auto& c : components) {
    c.euler_characteristic = static_cast<long>(c.vertices) - static_cast<long>(c.edges) + static_cast<long>(c.faces);
    if (c.orientable && c.euler_characteristic % 2 == 0 && c.euler_characteristic <= 2) {
      c.genus = static_cast<int>((2 - c.euler_characteristic) / 2);
    }
    report.euler_characteristic += c.euler_characteristic;
  }
  report.components = std::move(components);
  report.classification = classify_components(2, report.components);
  return report;
}

namespace {

TopologyReport analyze_curve(const CWComplex& complex) {
  const auto vertices = complex.cells(0);
  const auto edges = complex.cells(1);
  DisjointSets sets(vertices.size());
  std::vector<int> degree(vertices.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto ends = complex.boundary(1, e);
    if (ends.size() != 2) throw Error(ErrorCode::NotClosed, "1-cell " + edges[e].label.to_string() + " is not an arc");
    sets.unite(ends[0], ends[1]);
    ++degree[ends[0]];
    ++degree[ends[1]];
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (degree[v] != 2) throw Error(ErrorCode::NotClosed, "vertex " + vertices[v].label.to_string() + " has degree " + std::to_string(degree[v]));
  }
  std::map<std::size_t, ComponentSummary> by_root;
  for (std::size_t v = 0; v < vertices.size(); ++v) ++by_root[sets.find(v)].vertices;
  for (std::size_t e = 0; e < edges.size(); ++e) ++by_root[sets.find(complex.boundary(1, e)[0])].edges;

  TopologyReport report;
  report.dimension = 1;
  report.f_vector = complex.f_vector();
  report.euler_characteristic = euler_characteristic(complex);
  for (auto& [root, c] : by_root) {
    c.euler_characteristic = static_cast<long>(c.vertices) - static_cast<long>(c.edges);
    report.components.push_back(c);
  }
  report.classification = classify_components(1, report.components);
  return report;
}

}  // namespace

TopologyReport classify_linkage(const Linkage& linkage) {
  const auto complex = build_complex(linkage);
  if (linkage.n() == 5) return analyze(perform_surgery(complex));
  if (linkage.n() == 4) return analyze_curve(complex);
  TopologyReport report;
  report.dimension = complex.top_dimension();
  report.f_vector = complex.f_vector();
  report.euler_characteristic = euler_characteristic(complex);
  report.classification = classify_components(report.dimension, {});
  return report;
}

}  // namespace linkspace
