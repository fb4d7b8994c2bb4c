#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "linkspace/partitions.hpp"
#include "linkspace/rational.hpp"

namespace linkspace {

using RationalPoint = std::vector<Rational>;
using Point3 = std::array<double, 3>;

/// Point of the permutohedron labelled by `perm`: the element at position j
/// (1-based) receives coordinate j. With this placement the vertices refining
/// an ordered partition are exactly the vertices of a face.
RationalPoint permutohedron_point(const Permutation& perm);

/// Convex hull of the coordinate permutations of (1, ..., m), described
/// combinatorially. Faces of dimension k are the ordered partitions of
/// {1..m} into m - k parts; dimension m - 1 is the polytope itself.
class Permutohedron {
 public:
  int order() const noexcept { return order_; }
  /// All m! vertex labels in lexicographic order.
  const std::vector<Permutation>& vertices() const noexcept { return vertices_; }
  const std::vector<OrderedPartition>& faces(int dim) const { return faces_.at(static_cast<std::size_t>(dim)); }

  std::vector<Permutation> face_vertices(const OrderedPartition& face) const;

  /// Face `small` is a face of `large` iff its label refines that of `large`.
  static bool face_of(const OrderedPartition& small, const OrderedPartition& large) { return refines(small, large); }

  /// Label of the intersection of two faces: the coarsest ordered partition
  /// refining both, or nullopt when the faces are disjoint.
  static std::optional<OrderedPartition> meet(const OrderedPartition& a, const OrderedPartition& b);

 private:
  friend Permutohedron permutohedron(int m);

  int order_ = 0;
  std::vector<Permutation> vertices_;
  std::vector<std::vector<OrderedPartition>> faces_;
};

/// Throws UnsupportedDimension unless 2 <= m <= 7.
Permutohedron permutohedron(int m);

/// Isometry from the hyperplane sum(x) = 10 of R^4 onto R^3: subtract the
/// barycenter (5/2, 5/2, 5/2, 5/2), then take coordinates in the orthonormal
/// basis obtained by Gram-Schmidt on (1,-1,0,0), (0,1,-1,0), (0,0,1,-1).
/// This is the only place exact coordinates become floating point.
/// Throws OffHyperplane.
Point3 project_to_3d(std::span<const Rational> point);

/// True iff the points span an affine subspace of dimension <= 2 (exact).
bool affinely_planar(std::span<const RationalPoint> points);

Rational squared_distance(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace linkspace
