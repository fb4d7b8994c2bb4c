#include "linkspace/surgery.hpp"

#include <algorithm>
#include <map>

#include "linkspace/error.hpp"

namespace linkspace {

namespace {

using VertexPair = std::pair<CyclicOrder, CyclicOrder>;

VertexPair ordered_pair(const CyclicOrder& a, const CyclicOrder& b) {
  return label_less(a, b) ? VertexPair{a, b} : VertexPair{b, a};
}

}  // namespace

std::optional<std::size_t> SurfaceMesh::vertex_index(const Permutation& label) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), label,
                                   [](const MeshVertex& v, const Permutation& p) { return v.label < p; });
  if (it == vertices.end() || it->label != label) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<CyclicOrder> boundary_cycle(const CyclicPartition& cell, const CWComplex& complex) {
  const auto index = complex.find(cell);
  if (!index || cell.ground_size() - static_cast<int>(cell.size()) != 2) {
    throw Error(ErrorCode::NotACycle, cell.to_string() + " is not a 2-cell of the complex");
  }
  const auto nodes = cell_vertices(cell);
  std::map<CyclicOrder, std::vector<CyclicOrder>> adjacent;
  for (const auto& node : nodes) adjacent[node];
  for (std::size_t e : complex.boundary(2, *index)) {
    const auto ends = cell_vertices(complex.cells(1)[e].label);
    if (ends.size() != 2 || !adjacent.count(ends[0]) || !adjacent.count(ends[1])) {
      throw Error(ErrorCode::NotACycle, "edge " + complex.cells(1)[e].label.to_string() + " does not join vertices of " +
                                            cell.to_string());
    }
    adjacent[ends[0]].push_back(ends[1]);
    adjacent[ends[1]].push_back(ends[0]);
  }
  for (auto& [node, neighbours] : adjacent) {
    if (neighbours.size() != 2) {
      throw Error(ErrorCode::NotACycle, "vertex " + node.to_string() + " of " + cell.to_string() + " has degree " +
                                            std::to_string(neighbours.size()));
    }
    std::sort(neighbours.begin(), neighbours.end(), label_less);
  }

  std::vector<CyclicOrder> cycle{nodes.front()};
  CyclicOrder previous = nodes.front();
  CyclicOrder current = adjacent[nodes.front()].front();
  while (current != nodes.front()) {
    if (cycle.size() >= nodes.size()) break;
    cycle.push_back(current);
    const auto& next = adjacent[current];
    CyclicOrder step = next[0] == previous ? next[1] : next[0];
    previous = current;
    current = step;
  }
  if (cycle.size() != nodes.size() || current != nodes.front()) {
    throw Error(ErrorCode::NotACycle, "boundary of " + cell.to_string() + " is not a single cycle");
  }
  return cycle;
}

SurfaceMesh perform_surgery(const Linkage& linkage) {
  if (linkage.n() != 5) {
    throw Error(ErrorCode::ArityMismatch, "surgery realizes pentagons only, got n = " + std::to_string(linkage.n()));
  }
  return perform_surgery(build_complex(linkage));
}

SurfaceMesh perform_surgery(const CWComplex& complex) {
  const Linkage& linkage = complex.linkage();
  const int n = linkage.n();
  if (n != 5) throw Error(ErrorCode::ArityMismatch, "surgery realizes pentagons only, got n = " + std::to_string(n));

  const Permutohedron hull = permutohedron(n - 1);

  // Step 1: all permutohedron vertices, placed by the cut permutation.
  std::vector<MeshVertex> placed;
  for (const auto& perm : hull.vertices()) {
    auto exact = permutohedron_point(perm);
    const auto position = project_to_3d(exact);
    placed.push_back({perm, std::move(exact), position});
  }

  struct PendingFace {
    CyclicPartition label;
    FaceOrigin origin;
  };
  std::vector<PendingFace> pending;

  // Step 2: facets of Pi_4 whose label with {n} appended is admissible.
  for (const auto& facet : hull.faces(n - 3)) {
    auto label = append_last_singleton(facet);
    if (linkage.is_admissible_partition(label.parts())) pending.push_back({std::move(label), FaceOrigin::permutohedron});
  }
  // Step 3: diagonal faces, cells where n shares its part.
  for (const auto& cell : complex.cells(2)) {
    if (subset_size(cell.label.parts().back()) >= 2) pending.push_back({cell.label, FaceOrigin::diagonal});
  }
  std::sort(pending.begin(), pending.end(),
            [](const PendingFace& a, const PendingFace& b) { return label_less(a.label, b.label); });

  // Candidate edges: the permutohedron's own edges plus every 1-cell.
  std::map<VertexPair, CyclicPartition> edge_label;
  for (const auto& edge : hull.faces(1)) {
    auto label = append_last_singleton(edge);
    const auto ends = cell_vertices(label);
    edge_label.emplace(ordered_pair(ends[0], ends[1]), std::move(label));
  }
  for (const auto& cell : complex.cells(1)) {
    const auto ends = cell_vertices(cell.label);
    edge_label.emplace(ordered_pair(ends[0], ends[1]), cell.label);
  }

  std::vector<std::vector<CyclicOrder>> cycles;
  std::map<VertexPair, int> incidence;
  for (const auto& face : pending) {
    auto cycle = boundary_cycle(face.label, complex);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto key = ordered_pair(cycle[i], cycle[(i + 1) % cycle.size()]);
      if (!edge_label.count(key)) {
        throw Error(ErrorCode::NotAClosedSurface, "face " + face.label.to_string() + " uses an unknown edge");
      }
      ++incidence[key];
    }
    cycles.push_back(std::move(cycle));
  }

  // Prune: only edges on some kept face survive; each must bound exactly two.
  std::vector<std::pair<CyclicPartition, VertexPair>> kept_edges;
  for (const auto& [key, count] : incidence) {
    if (count != 2) {
      throw Error(ErrorCode::NotAClosedSurface,
                  "edge " + edge_label.at(key).to_string() + " bounds " + std::to_string(count) + " faces");
    }
    const auto& label = edge_label.at(key);
    if (!complex.contains(label)) {
      throw Error(ErrorCode::NotAClosedSurface, "edge " + label.to_string() + " is not a 1-cell of the complex");
    }
    kept_edges.emplace_back(label, key);
  }
  if (kept_edges.size() != complex.cells(1).size()) {
    throw Error(ErrorCode::NotAClosedSurface, "some 1-cells bound no face");
  }

  std::vector<bool> used(placed.size(), false);
  const auto placed_index = [&](const CyclicOrder& v) {
    const auto perm = vertex_to_permutation(v);
    return static_cast<std::size_t>(std::lower_bound(hull.vertices().begin(), hull.vertices().end(), perm) -
                                    hull.vertices().begin());
  };
  for (const auto& [label, key] : kept_edges) {
    used[placed_index(key.first)] = true;
    used[placed_index(key.second)] = true;
  }

  SurfaceMesh mesh{linkage, {}, {}, {}};
  std::vector<std::size_t> remap(placed.size(), 0);
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (!used[i]) continue;
    remap[i] = mesh.vertices.size();
    mesh.vertices.push_back(std::move(placed[i]));
  }
  for (std::size_t f = 0; f < pending.size(); ++f) {
    std::vector<std::size_t> cycle;
    for (const auto& v : cycles[f]) cycle.push_back(remap[placed_index(v)]);
    mesh.faces.push_back({pending[f].label, std::move(cycle), pending[f].origin});
  }
  std::sort(kept_edges.begin(), kept_edges.end(),
            [](const auto& a, const auto& b) { return label_less(a.first, b.first); });
  for (const auto& [label, key] : kept_edges) {
    auto a = remap[placed_index(key.first)];
    auto b = remap[placed_index(key.second)];
    if (a > b) std::swap(a, b);
    mesh.edges.push_back({label, a, b});
  }
  return mesh;
}

}  // namespace linkspace
