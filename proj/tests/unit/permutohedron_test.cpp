#include "linkspace/permutohedron.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "linkspace/error.hpp"

using namespace linkspace;

namespace {

// Vertices minimizing sum_i w_i x_i, where elements of earlier parts weigh more.
std::vector<Permutation> minimizers(const Permutohedron& p, const OrderedPartition& face) {
  std::vector<Rational> weight(static_cast<std::size_t>(p.order()));
  for (std::size_t b = 0; b < face.size(); ++b) {
    for (int e : elements(face.parts()[b])) weight[static_cast<std::size_t>(e - 1)] = Rational(static_cast<std::int64_t>(face.size() - b));
  }
  std::optional<Rational> best;
  std::vector<Permutation> out;
  for (const auto& v : p.vertices()) {
    const auto x = permutohedron_point(v);
    Rational value;
    for (std::size_t i = 0; i < x.size(); ++i) value += weight[i] * x[i];
    if (!best || value < *best) {
      best = value;
      out.clear();
    }
    if (value == *best) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Permutohedron, FaceCountsOfPi4) {
  const auto p = permutohedron(4);
  EXPECT_EQ(p.vertices().size(), 24u);
  EXPECT_EQ(p.faces(0).size(), 24u);
  EXPECT_EQ(p.faces(1).size(), 36u);
  EXPECT_EQ(p.faces(2).size(), 14u);
  EXPECT_EQ(p.faces(3).size(), 1u);
  int hexagons = 0;
  int squares = 0;
  for (const auto& f : p.faces(2)) {
    const auto n = p.face_vertices(f).size();
    hexagons += n == 6;
    squares += n == 4;
  }
  EXPECT_EQ(hexagons, 8);
  EXPECT_EQ(squares, 6);
  EXPECT_EQ(24 - 36 + 14, 2);
}

TEST(Permutohedron, SegmentAndRange) {
  const auto p = permutohedron(2);
  EXPECT_EQ(p.vertices().size(), 2u);
  EXPECT_EQ(p.faces(1).size(), 1u);
  for (int bad : {1, 8}) {
    try {
      permutohedron(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedDimension);
    }
  }
}

TEST(Permutohedron, VertexPlacement) {
  EXPECT_EQ(permutohedron_point({1, 2, 3, 4}), (RationalPoint{1, 2, 3, 4}));
  // Element 3 sits first, so it gets coordinate 1.
  EXPECT_EQ(permutohedron_point({3, 1, 4, 2}), (RationalPoint{2, 4, 1, 3}));
  const auto pi4 = permutohedron(4);
  for (const auto& v : pi4.vertices()) {
    Rational sum;
    for (const auto& x : permutohedron_point(v)) sum += x;
    EXPECT_EQ(sum, Rational(10));
  }
}

TEST(Permutohedron, LabelledVertexSetsAreGenuineFaces) {
  for (int m = 2; m <= 5; ++m) {
    const auto p = permutohedron(m);
    for (int dim = 0; dim < m; ++dim) {
      for (const auto& face : p.faces(dim)) EXPECT_EQ(p.face_vertices(face), minimizers(p, face)) << face.to_string();
    }
  }
}

TEST(Permutohedron, MeetIsVertexIntersection) {
  const auto p = permutohedron(4);
  std::vector<OrderedPartition> all;
  for (int dim = 0; dim < 4; ++dim) all.insert(all.end(), p.faces(dim).begin(), p.faces(dim).end());
  for (const auto& a : all) {
    const auto va = p.face_vertices(a);
    for (const auto& b : all) {
      const auto vb = p.face_vertices(b);
      std::vector<Permutation> common;
      std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
      const auto m = Permutohedron::meet(a, b);
      if (common.empty()) {
        EXPECT_FALSE(m) << a.to_string() << " " << b.to_string();
      } else {
        ASSERT_TRUE(m) << a.to_string() << " " << b.to_string();
        EXPECT_EQ(p.face_vertices(*m), common);
      }
      EXPECT_EQ(Permutohedron::face_of(a, b), std::includes(vb.begin(), vb.end(), va.begin(), va.end()));
    }
  }
}

TEST(Projection, Isometry) {
  const RationalPoint center{Rational(5, 2), Rational(5, 2), Rational(5, 2), Rational(5, 2)};
  for (double c : project_to_3d(center)) EXPECT_NEAR(c, 0.0, 1e-15);

  const auto p = permutohedron(4);
  std::vector<Point3> image;
  for (const auto& v : p.vertices()) image.push_back(project_to_3d(permutohedron_point(v)));
  for (const auto& q : image) EXPECT_NEAR(std::hypot(q[0], q[1], q[2]), std::sqrt(5.0), 1e-12);
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = 0; j < image.size(); ++j) {
      const double d3 = std::hypot(image[i][0] - image[j][0], image[i][1] - image[j][1], image[i][2] - image[j][2]);
      const double d4 = std::sqrt(squared_distance(permutohedron_point(p.vertices()[i]), permutohedron_point(p.vertices()[j])).to_double());
      EXPECT_NEAR(d3, d4, 1e-12);
    }
  }
  const auto a = project_to_3d(permutohedron_point({1, 2, 3, 4}));
  const auto b = project_to_3d(permutohedron_point({2, 1, 3, 4}));
  EXPECT_NEAR(std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]), std::sqrt(2.0), 1e-12);
}

TEST(Projection, RejectsPointsOffTheHyperplane) {
  for (const RationalPoint& bad : {RationalPoint{1, 2, 3, 5}, RationalPoint{1, 2, 7}}) {
    try {
      project_to_3d(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OffHyperplane);
    }
  }
}

TEST(Planarity, FacetsArePlanarAndEdgesHaveLengthSqrt2) {
  const auto p = permutohedron(4);
  for (const auto& facet : p.faces(2)) {
    std::vector<RationalPoint> pts;
    for (const auto& v : p.face_vertices(facet)) pts.push_back(permutohedron_point(v));
    EXPECT_TRUE(affinely_planar(pts)) << facet.to_string();
  }
  for (const auto& edge : p.faces(1)) {
    const auto ends = p.face_vertices(edge);
    ASSERT_EQ(ends.size(), 2u);
    EXPECT_EQ(squared_distance(permutohedron_point(ends[0]), permutohedron_point(ends[1])), Rational(2));
  }
  const std::vector<RationalPoint> tetra{{1, 2, 3, 4}, {2, 1, 3, 4}, {1, 3, 2, 4}, {1, 2, 4, 3}};
  EXPECT_FALSE(affinely_planar(tetra));
}
