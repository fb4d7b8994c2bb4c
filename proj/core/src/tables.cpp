#include "linkspace/tables.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "linkspace/complex.hpp"
#include "linkspace/topology.hpp"

namespace linkspace {

namespace {

std::size_t display_width(const std::string& text) {
  std::size_t width = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++width;
  }
  return width;
}

std::string pad(const std::string& text, std::size_t width) {
  const auto w = display_width(text);
  return w >= width ? text : text + std::string(width - w, ' ');
}

std::string center(const std::string& text, std::size_t width) {
  const auto w = display_width(text);
  if (w >= width) return text;
  const auto left = (width - w) / 2;
  return std::string(left, ' ') + text + std::string(width - w - left, ' ');
}

void render_block(std::ostringstream& out, const std::string& title, const std::vector<MembershipRow>& rows,
                  const std::vector<std::string>& headers, std::optional<std::size_t> starred) {
  std::vector<std::string> labels;
  std::size_t label_width = std::string("partition").size();
  for (const auto& row : rows) {
    std::string text;
    for (std::size_t i = 0; i < row.labels.size(); ++i) text += (i ? " & " : "") + row.labels[i].to_string();
    label_width = std::max(label_width, display_width(text));
    labels.push_back(std::move(text));
  }
  std::size_t column_width = 0;
  for (const auto& h : headers) column_width = std::max(column_width, display_width(h));

  out << title << "\n";
  out << pad(" #", 5) << pad("partition", label_width);
  for (const auto& h : headers) out << "  " << center(h, column_width);
  out << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string number = std::to_string(r + 1);
    if (starred && *starred == r) number += "*";
    out << pad(std::string(number.size() < 3 ? 3 - number.size() : 0, ' ') + number, 5) << pad(labels[r], label_width);
    for (bool flag : rows[r].admissible) out << "  " << center(flag ? "v" : "-", column_width);
    out << "\n";
  }
}

}  // namespace

const std::vector<Representative>& pentagon_representatives() {
  static const std::vector<Representative> reps = {
      {LengthSpec::parse("1,1,1,1,3"), "sphere", 1, 2},
      {LengthSpec::parse("1,1,1,eps,2"), "torus", 1, 0},
      {LengthSpec::parse("2,2,1,1,3"), "genus-2 surface", 1, -2},
      {LengthSpec::parse("1,1,eps,eps,1"), "2 tori", 2, 0},
      {LengthSpec::parse("2,1,1,1,2"), "genus-3 surface", 1, -4},
      {LengthSpec::parse("1,1,1,1,1"), "genus-4 surface", 1, -6},
  };
  return reps;
}

std::string render_tables(const Rational& epsilon) {
  std::vector<Linkage> linkages;
  std::vector<std::string> headers;
  for (const auto& rep : pentagon_representatives()) {
    linkages.push_back(make_linkage(rep.spec.instantiate(epsilon)));
    headers.push_back(rep.spec.display());
  }
  const auto table = facet_membership_table(linkages);
  std::ostringstream out;
  render_block(out, "Step 2: permutohedron facets with {5} appended", table.step2, headers, kCorrectedStep2Row);
  out << "  * mirror of row 1; sometimes misprinted as {1,2,3}{1}{5}\n\n";
  render_block(out, "Step 3: diagonal facets (part containing 5 has two or more elements)", table.step3, headers,
               std::nullopt);
  out << "\nv = admissible, - = not admissible; ε = " << epsilon.to_string() << "\n";
  return out.str();
}

bool VerifyResult::all_passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const VerifyLine& l) { return l.passed; });
}

std::string VerifyResult::render() const {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& line : lines) {
    out << (line.passed ? "PASS " : "FAIL ") << pad(line.linkage, 16) << " " << line.message << "\n";
    passed += line.passed ? 1 : 0;
  }
  out << passed << "/" << lines.size() << " representatives match\n";
  return out.str();
}

namespace {

VerifyLine verify_one(const Representative& rep, const Rational& epsilon) {
  VerifyLine line{rep.spec.display(), false, {}};
  const auto stability = check_epsilon_stability(rep.spec, epsilon);
  if (!stability.stable) {
    line.message = "epsilon unstable: " + stability.detail;
    return line;
  }
  try {
    const auto linkage = make_linkage(rep.spec.instantiate(epsilon));
    const auto report = classify_linkage(linkage);
    const bool ok = report.classification == rep.classification && report.component_count() == rep.components &&
                    report.euler_characteristic == rep.euler_characteristic;
    std::ostringstream msg;
    msg << report.classification << ", components=" << report.component_count()
        << ", chi=" << report.euler_characteristic;
    if (!ok) {
      msg << "  (expected " << rep.classification << ", components=" << rep.components
          << ", chi=" << rep.euler_characteristic << ")";
    }
    line.passed = ok;
    line.message = msg.str();
  } catch (const std::exception& e) {
    line.message = e.what();
  }
  return line;
}

}  // namespace

VerifyResult verify_all(const std::vector<Representative>& expected, const Rational& epsilon) {
  std::vector<std::future<VerifyLine>> jobs;
  jobs.reserve(expected.size());
  for (const auto& rep : expected) jobs.push_back(std::async(std::launch::async, verify_one, std::cref(rep), epsilon));
  VerifyResult result;
  for (auto& job : jobs) result.lines.push_back(job.get());
  return result;
}

}  // namespace linkspace
