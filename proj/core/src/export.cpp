#include "linkspace/export.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

#include "linkspace/error.hpp"

namespace linkspace {

namespace {

std::string fixed6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  std::string out(buffer);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::string_view origin_name(FaceOrigin origin) {
  return origin == FaceOrigin::permutohedron ? "permutohedron" : "diagonal";
}

// Polygons as written: either the raw cycle or its fan triangulation.
std::vector<std::vector<std::size_t>> polygons_of(const MeshFace& face, bool triangulate) {
  if (!triangulate || face.cycle.size() <= 3) return {face.cycle};
  std::vector<std::vector<std::size_t>> fan;
  for (std::size_t i = 1; i + 1 < face.cycle.size(); ++i) {
    fan.push_back({face.cycle[0], face.cycle[i], face.cycle[i + 1]});
  }
  return fan;
}

std::string to_obj(const SurfaceMesh& mesh, const ExportOptions& options) {
  std::string out;
  out += "# linkspace surface mesh\n";
  out += "# linkage: " + mesh.linkage.to_string() + "\n";
  if (!options.classification.empty()) out += "# classification: " + options.classification + "\n";
  out += "# vertices: " + std::to_string(mesh.vertices.size()) + " edges: " + std::to_string(mesh.edges.size()) +
         " faces: " + std::to_string(mesh.faces.size()) + "\n";
  for (const auto& v : mesh.vertices) {
    out += "v " + fixed6(v.position[0]) + " " + fixed6(v.position[1]) + " " + fixed6(v.position[2]) + "\n";
  }
  for (const auto& face : mesh.faces) {
    out += "# " + face.label.to_string() + " " + std::string(origin_name(face.origin)) + "\n";
    for (const auto& polygon : polygons_of(face, options.triangulate)) {
      out += "f";
      for (std::size_t index : polygon) out += " " + std::to_string(index + 1);
      out += "\n";
    }
  }
  return out;
}

std::string to_ply(const SurfaceMesh& mesh, const ExportOptions& options) {
  std::vector<std::vector<std::size_t>> polygons;
  for (const auto& face : mesh.faces) {
    for (auto& p : polygons_of(face, options.triangulate)) polygons.push_back(std::move(p));
  }
  std::string out = "ply\nformat ascii 1.0\n";
  out += "comment linkage " + mesh.linkage.to_string() + "\n";
  if (!options.classification.empty()) out += "comment classification " + options.classification + "\n";
  out += "element vertex " + std::to_string(mesh.vertices.size()) + "\n";
  out += "property double x\nproperty double y\nproperty double z\n";
  out += "element face " + std::to_string(polygons.size()) + "\n";
  out += "property list uchar int vertex_indices\nend_header\n";
  for (const auto& v : mesh.vertices) {
    out += fixed6(v.position[0]) + " " + fixed6(v.position[1]) + " " + fixed6(v.position[2]) + "\n";
  }
  for (const auto& polygon : polygons) {
    out += std::to_string(polygon.size());
    for (std::size_t index : polygon) out += " " + std::to_string(index);
    out += "\n";
  }
  return out;
}

std::string to_json(const SurfaceMesh& mesh, const ExportOptions& options) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["schema"] = 1;
  doc["linkage"] = mesh.linkage.to_string();
  if (!options.classification.empty()) doc["classification"] = options.classification;
  doc["projection"] = {
      {"barycenter", {"5/2", "5/2", "5/2", "5/2"}},
      {"gram_schmidt_seeds", {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}}},
  };
  json vertices = json::array();
  for (const auto& v : mesh.vertices) {
    json exact = json::array();
    for (const auto& x : v.exact) exact.push_back(x.to_string());
    vertices.push_back({{"label", v.label}, {"r4", exact}, {"xyz", {v.position[0], v.position[1], v.position[2]}}});
  }
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& e : mesh.edges) edges.push_back({{"label", e.label.to_string()}, {"ends", {e.a, e.b}}});
  doc["edges"] = std::move(edges);
  json faces = json::array();
  for (const auto& f : mesh.faces) {
    json polys = json::array();
    for (const auto& p : polygons_of(f, options.triangulate)) polys.push_back(p);
    faces.push_back({{"label", f.label.to_string()},
                     {"origin", origin_name(f.origin)},
                     {"cycle", f.cycle},
                     {"polygons", std::move(polys)}});
  }
  doc["faces"] = std::move(faces);
  return doc.dump(2) + "\n";
}

}  // namespace

MeshFormat parse_mesh_format(std::string_view name) {
  if (name == "obj") return MeshFormat::obj;
  if (name == "ply") return MeshFormat::ply;
  if (name == "json") return MeshFormat::json;
  throw Error(ErrorCode::UnsupportedFormat, "unknown mesh format '" + std::string(name) + "'");
}

std::optional<MeshFormat> format_from_extension(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".obj") return MeshFormat::obj;
  if (ext == ".ply") return MeshFormat::ply;
  if (ext == ".json") return MeshFormat::json;
  return std::nullopt;
}

std::string export_mesh(const SurfaceMesh& mesh, const ExportOptions& options) {
  switch (options.format) {
    case MeshFormat::obj: return to_obj(mesh, options);
    case MeshFormat::ply: return to_ply(mesh, options);
    case MeshFormat::json: return to_json(mesh, options);
  }
  throw Error(ErrorCode::UnsupportedFormat, "unknown mesh format");
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  if (path.empty()) throw Error(ErrorCode::IoFailure, "empty output path");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write to '" + path.string() + "' failed");
}

}  // namespace linkspace
