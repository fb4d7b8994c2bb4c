#include "linkspace/serialize.hpp"

#include <sstream>

#include "json.hpp"

#include "linkspace/error.hpp"

namespace linkspace {

using json = nlohmann::ordered_json;

std::string complex_to_json(const CWComplex& complex) {
  json doc;
  doc["schema"] = kJsonSchemaVersion;
  json lengths = json::array();
  for (const auto& l : complex.linkage().lengths()) lengths.push_back(l.to_string());
  doc["linkage"] = std::move(lengths);
  doc["n"] = complex.ground_size();
  doc["f_vector"] = complex.f_vector();
  doc["euler_characteristic"] = euler_characteristic(complex);
  json cells = json::array();
  for (int dim = 0; dim <= complex.top_dimension(); ++dim) {
    const auto layer = complex.cells(dim);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      json boundary = json::array();
      for (std::size_t b : complex.boundary(dim, i)) boundary.push_back(complex.global_index(dim - 1, b));
      cells.push_back({{"dim", dim}, {"label", layer[i].label.to_string()}, {"boundary", std::move(boundary)}});
    }
  }
  doc["cells"] = std::move(cells);
  return doc.dump(2) + "\n";
}

CWComplex complex_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<int>() != kJsonSchemaVersion) {
      throw Error(ErrorCode::ParseError, "unsupported schema version");
    }
    std::vector<Rational> lengths;
    for (const auto& l : doc.at("linkage")) lengths.push_back(Rational::parse(l.get<std::string>()));
    Linkage linkage = make_linkage(std::move(lengths));
    const int n = linkage.n();

    std::vector<std::vector<Cell>> cells;
    std::vector<std::size_t> offsets;  // global index of the first cell per dimension
    std::vector<std::vector<std::size_t>> global_boundaries;
    std::size_t global = 0;
    for (const auto& entry : doc.at("cells")) {
      const int dim = entry.at("dim").get<int>();
      if (dim < 0 || dim > static_cast<int>(cells.size())) throw Error(ErrorCode::ParseError, "cells not dimension-major");
      if (dim == static_cast<int>(cells.size())) {
        cells.emplace_back();
        offsets.push_back(global);
      }
      if (dim != static_cast<int>(cells.size()) - 1) throw Error(ErrorCode::ParseError, "cells not dimension-major");
      cells.back().push_back({parse_cyclic_partition(n, entry.at("label").get<std::string>()), dim});
      global_boundaries.push_back(entry.at("boundary").get<std::vector<std::size_t>>());
      ++global;
    }

    CWComplex::Incidence boundary(cells.size());
    std::size_t g = 0;
    for (std::size_t d = 0; d < cells.size(); ++d) {
      for (std::size_t i = 0; i < cells[d].size(); ++i, ++g) {
        std::vector<std::size_t> local;
        for (std::size_t b : global_boundaries[g]) {
          if (d == 0 || b < offsets[d - 1] || b >= offsets[d]) throw Error(ErrorCode::ParseError, "boundary index out of range");
          local.push_back(b - offsets[d - 1]);
        }
        boundary[d].push_back(std::move(local));
      }
    }
    return CWComplex::from_parts(std::move(linkage), std::move(cells), std::move(boundary));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed complex document: ") + e.what());
  }
}

std::string report_to_json(const TopologyReport& report, const Linkage& linkage) {
  json doc;
  doc["schema"] = kJsonSchemaVersion;
  doc["linkage"] = linkage.to_string();
  doc["components"] = report.component_count();
  doc["chi"] = report.euler_characteristic;
  bool orientable = true;
  json genus = json::array();
  json per_component = json::array();
  for (const auto& c : report.components) {
    orientable = orientable && c.orientable;
    genus.push_back(c.genus ? json(*c.genus) : json(nullptr));
    per_component.push_back({{"vertices", c.vertices},
                             {"edges", c.edges},
                             {"faces", c.faces},
                             {"chi", c.euler_characteristic},
                             {"orientable", c.orientable},
                             {"genus", c.genus ? json(*c.genus) : json(nullptr)}});
  }
  doc["orientable"] = orientable;
  doc["genus"] = std::move(genus);
  doc["classification"] = report.classification;
  doc["dimension"] = report.dimension;
  doc["f_vector"] = report.f_vector;
  doc["per_component"] = std::move(per_component);
  return doc.dump(2) + "\n";
}

std::string report_to_text(const TopologyReport& report, const Linkage& linkage) {
  std::ostringstream out;
  out << "linkage:        (" << linkage.to_string() << ")\n";
  out << "f-vector:       (";
  for (std::size_t i = 0; i < report.f_vector.size(); ++i) out << (i ? "," : "") << report.f_vector[i];
  out << ")\n";
  out << "euler char:     " << report.euler_characteristic << "\n";
  if (report.dimension <= 2) {
    out << "components:     " << report.component_count() << "\n";
    for (std::size_t i = 0; i < report.components.size(); ++i) {
      const auto& c = report.components[i];
      out << "  [" << i << "] V=" << c.vertices << " E=" << c.edges;
      if (report.dimension == 2) out << " F=" << c.faces;
      out << " chi=" << c.euler_characteristic;
      if (report.dimension == 2) {
        out << (c.orientable ? " orientable" : " non-orientable");
        if (c.genus) out << " genus=" << *c.genus;
      }
      out << "\n";
    }
  }
  out << "classification: " << report.classification << "\n";
  return out.str();
}

}  // namespace linkspace
