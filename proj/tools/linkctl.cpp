// linkctl: command line front end for the linkspace library.
//
//   linkctl classify <lengths> [--format text|json] [--epsilon R]
//   linkctl complex  <lengths> [--format json] [-o FILE]
//   linkctl mesh     <lengths> -o FILE [--format obj|ply|json] [--triangulate]
//   linkctl tables   [--epsilon R]
//   linkctl verify   [--epsilon R]
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 internal invariant violation.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "linkspace/complex.hpp"
#include "linkspace/export.hpp"
#include "linkspace/serialize.hpp"
#include "linkspace/tables.hpp"
#include "linkspace/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInvariant = 3;

linkspace::Linkage linkage_from(const std::string& lengths, const std::string& epsilon) {
  const auto spec = linkspace::LengthSpec::parse(lengths);
  return linkspace::make_linkage(spec.instantiate(linkspace::Rational::parse(epsilon)));
}

void emit(const std::string& bytes, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << bytes;
  } else {
    linkspace::write_file(output, bytes);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moduli spaces of planar polygonal linkages: CW complex, surgery mesh, topology"};
  app.require_subcommand(1);

  std::string lengths;
  std::string epsilon = "1/100";
  std::string format;
  std::string output;
  bool triangulate = false;

  auto* classify = app.add_subcommand("classify", "Classify the moduli space of a linkage");
  classify->add_option("lengths", lengths, "Edge lengths, e.g. 1,1,1,1/100,2 (token 'eps' = --epsilon)")->required();
  classify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--epsilon", epsilon, "Value substituted for 'eps'");

  auto* complex = app.add_subcommand("complex", "Export the CW complex as JSON");
  complex->add_option("lengths", lengths, "Edge lengths")->required();
  complex->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  complex->add_option("-o,--output", output, "Output file (default stdout)");
  complex->add_option("--epsilon", epsilon, "Value substituted for 'eps'");

  auto* mesh = app.add_subcommand("mesh", "Export the surgery mesh of a pentagon");
  mesh->add_option("lengths", lengths, "Edge lengths")->required();
  mesh->add_option("-o,--output", output, "Output file")->required();
  mesh->add_option("--format", format, "obj, ply or json (default from extension, else obj)");
  mesh->add_flag("--triangulate", triangulate, "Fan-triangulate faces");
  mesh->add_option("--epsilon", epsilon, "Value substituted for 'eps'");

  auto* tables = app.add_subcommand("tables", "Print the admissibility tables of the six pentagon types");
  tables->add_option("--epsilon", epsilon, "Value of ε");

  auto* verify = app.add_subcommand("verify", "Check the six pentagon types against their expected surfaces");
  verify->add_option("--epsilon", epsilon, "Value of ε");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*classify) {
      const auto linkage = linkage_from(lengths, epsilon);
      const auto report = linkspace::classify_linkage(linkage);
      std::cout << (format == "json" ? linkspace::report_to_json(report, linkage)
                                     : linkspace::report_to_text(report, linkage));
    } else if (*complex) {
      const auto built = linkspace::build_complex(linkage_from(lengths, epsilon));
      emit(linkspace::complex_to_json(built), output);
    } else if (*mesh) {
      const auto linkage = linkage_from(lengths, epsilon);
      linkspace::ExportOptions options;
      if (!format.empty()) {
        options.format = linkspace::parse_mesh_format(format);
      } else if (auto inferred = linkspace::format_from_extension(output)) {
        options.format = *inferred;
      } else if (std::filesystem::path(output).has_extension()) {
        throw linkspace::Error(linkspace::ErrorCode::UnsupportedFormat,
                               "cannot infer mesh format from '" + output + "'; pass --format");
      }
      options.triangulate = triangulate;
      const auto surface = linkspace::perform_surgery(linkage);
      options.classification = linkspace::analyze(surface).classification;
      emit(linkspace::export_mesh(surface, options), output);
    } else if (*tables) {
      std::cout << linkspace::render_tables(linkspace::Rational::parse(epsilon));
    } else if (*verify) {
      const auto result =
          linkspace::verify_all(linkspace::pentagon_representatives(), linkspace::Rational::parse(epsilon));
      std::cout << result.render();
      return result.all_passed() ? kExitOk : kExitMismatch;
    }
  } catch (const linkspace::Error& e) {
    std::cerr << "linkctl: " << e.what() << "\n";
    return e.is_invariant_violation() ? kExitInvariant : kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "linkctl: internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}
