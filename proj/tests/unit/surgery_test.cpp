#include "linkspace/surgery.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "linkspace/error.hpp"

using namespace linkspace;

namespace {

Linkage L(const char* text) { return make_linkage(LengthSpec::parse(text).instantiate(kDefaultEpsilon)); }
CyclicPartition P(const char* text) { return parse_cyclic_partition(5, text); }

std::vector<std::string> strings(const std::vector<CyclicOrder>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

std::size_t count_origin(const SurfaceMesh& m, FaceOrigin origin) {
  return static_cast<std::size_t>(
      std::count_if(m.faces.begin(), m.faces.end(), [&](const MeshFace& f) { return f.origin == origin; }));
}

// Same cyclic sequence up to rotation and reversal.
bool same_cycle(std::vector<std::string> a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      std::rotate(a.begin(), a.begin() + 1, a.end());
      if (a == b) return true;
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

const char* const kRepresentatives[] = {"1,1,1,1,3", "1,1,1,eps,2", "2,2,1,1,3",
                                        "1,1,eps,eps,1", "2,1,1,1,2", "1,1,1,1,1"};

}  // namespace

TEST(BoundaryCycle, Square) {
  const auto k = build_complex(L("1,1,1,1,1"));
  const auto cycle = strings(boundary_cycle(P("{1,2}{3,4}{5}"), k));
  EXPECT_TRUE(same_cycle(cycle, {"{1}{2}{3}{4}{5}", "{2}{1}{3}{4}{5}", "{2}{1}{4}{3}{5}", "{1}{2}{4}{3}{5}"}));
  // Tie-break: start at the smallest vertex, step to its smaller neighbour.
  EXPECT_EQ(cycle, (std::vector<std::string>{"{1}{2}{3}{4}{5}", "{1}{2}{4}{3}{5}", "{2}{1}{4}{3}{5}", "{2}{1}{3}{4}{5}"}));
}

TEST(BoundaryCycle, HexagonalFacetStepsByAdjacentTranspositions) {
  const auto k = build_complex(L("1,1,1,1,3"));
  const auto cycle = boundary_cycle(P("{1}{2,3,4}{5}"), k);
  ASSERT_EQ(cycle.size(), 6u);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto a = vertex_to_permutation(cycle[i]);
    const auto b = vertex_to_permutation(cycle[(i + 1) % cycle.size()]);
    std::vector<std::size_t> diff;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] != b[j]) diff.push_back(j);
    }
    ASSERT_EQ(diff.size(), 2u);
    EXPECT_EQ(diff[1], diff[0] + 1);
  }
}

TEST(BoundaryCycle, DiagonalHexagon) {
  const auto k = build_complex(L("1,1,eps,eps,1"));
  const auto cycle = boundary_cycle(P("{1}{2}{3,4,5}"), k);
  EXPECT_EQ(cycle.size(), 6u);
  EXPECT_EQ(std::set<CyclicOrder>(cycle.begin(), cycle.end()).size(), 6u);
}

TEST(BoundaryCycle, RejectsNonTwoCells) {
  const auto k = build_complex(L("1,1,1,1,1"));
  for (const char* bad : {"{1}{2,3,4}{5}", "{1,2}{3}{4}{5}"}) {
    try {
      boundary_cycle(P(bad), k);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotACycle);
    }
  }
}

TEST(Surgery, SphereIsThePermutohedronBoundary) {
  const auto mesh = perform_surgery(L("1,1,1,1,3"));
  EXPECT_EQ(mesh.vertices.size(), 24u);
  EXPECT_EQ(mesh.edges.size(), 36u);
  EXPECT_EQ(mesh.faces.size(), 14u);
  EXPECT_EQ(count_origin(mesh, FaceOrigin::diagonal), 0u);
}

TEST(Surgery, EquilateralPentagon) {
  const auto mesh = perform_surgery(L("1,1,1,1,1"));
  EXPECT_EQ(mesh.vertices.size(), 24u);
  EXPECT_EQ(mesh.edges.size(), 60u);
  EXPECT_EQ(mesh.faces.size(), 30u);
  EXPECT_EQ(count_origin(mesh, FaceOrigin::permutohedron), 6u);
  EXPECT_EQ(count_origin(mesh, FaceOrigin::diagonal), 24u);
  for (const auto& f : mesh.faces) EXPECT_EQ(f.cycle.size(), 4u);
}

TEST(Surgery, TwoToriHasTwoDiagonalHexagons) {
  const auto mesh = perform_surgery(L("1,1,eps,eps,1"));
  EXPECT_EQ(mesh.faces.size(), 18u);
  std::set<std::string> hexagons;
  for (const auto& f : mesh.faces) {
    if (f.origin == FaceOrigin::diagonal && f.cycle.size() == 6) hexagons.insert(f.label.to_string());
  }
  EXPECT_EQ(hexagons, (std::set<std::string>{"{1}{2}{3,4,5}", "{2}{1}{3,4,5}"}));
}

TEST(Surgery, RejectsOtherArities) {
  try {
    perform_surgery(make_linkage(parse_lengths("1,1,1,2")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
  }
}

TEST(SurgeryProperty, MeshAgreesWithComplex) {
  std::mt19937 rng(31);
  std::vector<Linkage> linkages;
  for (const char* r : kRepresentatives) linkages.push_back(L(r));
  for (int i = 0; i < 40; ++i) linkages.push_back(*gen::random_generic_linkage(rng, 5));
  for (const auto& l : linkages) {
    const auto k = build_complex(l);
    const auto mesh = perform_surgery(k);
    ASSERT_EQ(mesh.faces.size(), k.cells(2).size());
    ASSERT_EQ(mesh.edges.size(), k.cells(1).size());
    ASSERT_EQ(mesh.vertices.size(), k.cells(0).size());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
      EXPECT_EQ(permutation_to_vertex(mesh.vertices[i].label), k.cells(0)[i].label);
    }
    std::map<std::pair<std::size_t, std::size_t>, CyclicPartition> edge_at;
    for (std::size_t i = 0; i < mesh.edges.size(); ++i) {
      EXPECT_EQ(mesh.edges[i].label, k.cells(1)[i].label);
      edge_at.emplace(std::pair{mesh.edges[i].a, mesh.edges[i].b}, mesh.edges[i].label);
    }
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
      const auto& face = mesh.faces[f];
      EXPECT_EQ(face.label, k.cells(2)[f].label);
      EXPECT_EQ(face.origin == FaceOrigin::diagonal, subset_size(face.label.parts().back()) > 1);
      EXPECT_EQ(face.cycle.size(), cell_vertices(face.label).size());
      std::set<std::string> from_mesh;
      for (std::size_t i = 0; i < face.cycle.size(); ++i) {
        auto a = face.cycle[i];
        auto b = face.cycle[(i + 1) % face.cycle.size()];
        if (a > b) std::swap(a, b);
        ASSERT_TRUE(edge_at.count({a, b}));
        from_mesh.insert(edge_at.at({a, b}).to_string());
      }
      std::set<std::string> from_complex;
      for (std::size_t e : k.boundary(2, f)) from_complex.insert(k.cells(1)[e].label.to_string());
      EXPECT_EQ(from_mesh, from_complex);

      if (face.origin == FaceOrigin::permutohedron) {
        std::vector<RationalPoint> pts;
        for (std::size_t v : face.cycle) pts.push_back(mesh.vertices[v].exact);
        EXPECT_TRUE(affinely_planar(pts)) << face.label.to_string();
      }
    }
    for (const auto& e : mesh.edges) {
      const bool permutohedron_edge = subset_size(e.label.parts().back()) == 1;
      if (permutohedron_edge) EXPECT_EQ(squared_distance(mesh.vertices[e.a].exact, mesh.vertices[e.b].exact), Rational(2));
    }
  }
}
