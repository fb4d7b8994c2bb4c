#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkspace/complex.hpp"
#include "linkspace/surgery.hpp"

namespace linkspace {

struct ComponentSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long euler_characteristic = 0;
  bool orientable = true;
  std::optional<int> genus;  // closed orientable surfaces only

  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

struct TopologyReport {
  int dimension = 0;
  std::vector<std::size_t> f_vector;
  long euler_characteristic = 0;
  std::vector<ComponentSummary> components;  // empty when dimension >= 3
  std::string classification;

  std::size_t component_count() const noexcept { return components.size(); }
};

/// Components, Euler characteristic, orientability and genus of a closed
/// polygonal surface. Throws NotClosed when an edge does not bound exactly
/// two faces.
TopologyReport analyze(const SurfaceMesh& mesh);

/// Builds, realizes and analyzes. n = 5 gives a surface report; n = 4 a
/// union of circles; n >= 6 only the f-vector and Euler characteristic.
TopologyReport classify_linkage(const Linkage& linkage);

/// Name for a list of components: "sphere", "torus", "genus-g surface",
/// "circle", "non-orientable (χ=c)"; repeats are counted, e.g. "2 tori",
/// different kinds are joined with " + ".
std::string classify_components(int dimension, std::span<const ComponentSummary> components);

}  // namespace linkspace
