#pragma once

#include <string>
#include <string_view>

#include "linkspace/complex.hpp"
#include "linkspace/topology.hpp"

namespace linkspace {

inline constexpr int kJsonSchemaVersion = 1;

/// {"schema":1,"linkage":[...],"n":..,"f_vector":[..],"euler_characteristic":..,
///  "cells":[{"dim":..,"label":"{1}{2,3}..","boundary":[..]}, ...]}
/// Cells are listed dimension-major in label order; boundary entries are
/// indices into the same "cells" array.
std::string complex_to_json(const CWComplex& complex);

/// Reads the format written by complex_to_json. Throws ParseError.
CWComplex complex_from_json(std::string_view text);

/// {"schema":1,"linkage":"..","components":k,"chi":..,"orientable":..,
///  "genus":[..],"classification":"..","f_vector":[..],"per_component":[..]}
std::string report_to_json(const TopologyReport& report, const Linkage& linkage);

std::string report_to_text(const TopologyReport& report, const Linkage& linkage);

}  // namespace linkspace
