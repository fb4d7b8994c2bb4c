#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "linkspace/surgery.hpp"

namespace linkspace {

enum class MeshFormat { obj, ply, json };

/// `obj`, `ply` or `json`; anything else throws UnsupportedFormat.
MeshFormat parse_mesh_format(std::string_view name);
/// Format implied by a file extension; nullopt when the extension is unknown.
std::optional<MeshFormat> format_from_extension(const std::filesystem::path& path);

struct ExportOptions {
  MeshFormat format = MeshFormat::obj;
  bool triangulate = false;      // fan from the first cycle vertex
  std::string classification;    // written into the header when non-empty
};

/// Serializes a mesh. OBJ/PLY coordinates are fixed-point with 6 decimals;
/// JSON keeps the exact R^4 coordinates and the projection description.
/// Output is byte-identical for identical input.
std::string export_mesh(const SurfaceMesh& mesh, const ExportOptions& options);

/// Throws IoFailure (empty path, unwritable target).
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace linkspace
