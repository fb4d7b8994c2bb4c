#pragma once

#include <optional>
#include <vector>

#include "linkspace/complex.hpp"
#include "linkspace/permutohedron.hpp"

namespace linkspace {

enum class FaceOrigin { permutohedron, diagonal };

struct MeshVertex {
  Permutation label;
  RationalPoint exact;  // point of Pi_4 in R^4
  Point3 position;
};

struct MeshFace {
  CyclicPartition label;
  std::vector<std::size_t> cycle;  // vertex indices in polygon order
  FaceOrigin origin;
};

struct MeshEdge {
  CyclicPartition label;
  std::size_t a;  // a < b
  std::size_t b;
};

/// Polygonal surface realizing the complex of a pentagon. Vertices are sorted
/// by permutation label, faces and edges by label string.
struct SurfaceMesh {
  Linkage linkage;
  std::vector<MeshVertex> vertices;
  std::vector<MeshFace> faces;
  std::vector<MeshEdge> edges;

  std::optional<std::size_t> vertex_index(const Permutation& label) const;
};

/// Vertices of the 2-cell `cell` of `complex` in polygon order. Arcs of the
/// cycle are the 1-cells of the complex bounding `cell`. The walk starts at
/// the smallest vertex and heads to its smaller neighbour.
/// Throws NotACycle if `cell` is not a 2-cell or its boundary graph is not a
/// single simple cycle.
std::vector<CyclicOrder> boundary_cycle(const CyclicPartition& cell, const CWComplex& complex);

/// Realizes the complex of a pentagon on the boundary of Pi_4:
///  1. vertices go to the permutohedron vertex with the same cut permutation;
///  2. a facet survives iff its label with {5} appended is admissible;
///  3. every admissible 2-cell whose part containing 5 is not a singleton is
///     patched in as a diagonal face spanned by its vertices.
/// Edges and vertices touching no surviving face are pruned.
/// Throws ArityMismatch (n != 5) and NotAClosedSurface.
SurfaceMesh perform_surgery(const Linkage& linkage);
SurfaceMesh perform_surgery(const CWComplex& complex);

}  // namespace linkspace
