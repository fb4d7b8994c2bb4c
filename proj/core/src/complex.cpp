#include "linkspace/complex.hpp"

#include <algorithm>

#include "linkspace/error.hpp"

namespace linkspace {

CWComplex::CWComplex(Linkage linkage, std::vector<std::vector<Cell>> cells, Incidence boundary)
    : linkage_(std::move(linkage)), cells_(std::move(cells)), boundary_(std::move(boundary)) {
  for (const auto& layer : cells_) {
    for (std::size_t i = 0; i < layer.size(); ++i) index_.emplace(layer[i].label, i);
  }
}

CWComplex CWComplex::from_parts(Linkage linkage, std::vector<std::vector<Cell>> cells, Incidence boundary) {
  const int n = linkage.n();
  if (cells.size() != boundary.size()) throw Error(ErrorCode::ParseError, "cell and boundary layers differ in count");
  for (std::size_t d = 0; d < cells.size(); ++d) {
    if (cells[d].size() != boundary[d].size()) throw Error(ErrorCode::ParseError, "boundary list count mismatch");
    for (std::size_t i = 0; i < cells[d].size(); ++i) {
      const Cell& cell = cells[d][i];
      if (cell.label.ground_size() != n || cell.dim != static_cast<int>(d) ||
          n - static_cast<int>(cell.label.size()) != cell.dim) {
        throw Error(ErrorCode::ParseError, "cell " + cell.label.to_string() + " has an inconsistent dimension");
      }
      if (!linkage.is_admissible_partition(cell.label.parts())) {
        throw Error(ErrorCode::ParseError, "cell " + cell.label.to_string() + " is not admissible");
      }
      for (std::size_t b : boundary[d][i]) {
        if (d == 0 || b >= cells[d - 1].size()) throw Error(ErrorCode::ParseError, "boundary index out of range");
      }
    }
  }
  return CWComplex(std::move(linkage), std::move(cells), std::move(boundary));
}

std::optional<std::size_t> CWComplex::find(const CyclicPartition& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> CWComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& layer : cells_) out.push_back(layer.size());
  return out;
}

std::size_t CWComplex::global_index(int dim, std::size_t index) const {
  std::size_t offset = 0;
  for (int d = 0; d < dim; ++d) offset += cells_.at(static_cast<std::size_t>(d)).size();
  return offset + index;
}

std::size_t CWComplex::cell_count() const {
  std::size_t total = 0;
  for (const auto& layer : cells_) total += layer.size();
  return total;
}

CWComplex build_complex(const Linkage& linkage) {
  const int n = linkage.n();
  if (n < kMinComplexArity || n > kMaxComplexArity) {
    throw Error(ErrorCode::UnsupportedArity, "complex construction supports 4 <= n <= 8, got n = " + std::to_string(n));
  }
  const int top = n - 3;
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(top + 1));
  for (int dim = 0; dim <= top; ++dim) {
    for (auto& label : enumerate_cyclic_partitions(n, n - dim)) {
      if (linkage.is_admissible_partition(label.parts())) cells[static_cast<std::size_t>(dim)].push_back({std::move(label), dim});
    }
  }

  std::map<CyclicPartition, std::size_t> index;
  for (const auto& layer : cells) {
    for (std::size_t i = 0; i < layer.size(); ++i) index.emplace(layer[i].label, i);
  }

  // Boundary of a cell = its admissible one-step refinements; collect them by
  // walking up from each lower cell through its adjacent-pair merges.
  CWComplex::Incidence boundary(cells.size());
  boundary[0].resize(cells[0].size());
  for (std::size_t d = 1; d < cells.size(); ++d) {
    boundary[d].resize(cells[d].size());
    for (std::size_t i = 0; i < cells[d - 1].size(); ++i) {
      for (const auto& up : coarsenings(cells[d - 1][i].label)) {
        const auto it = index.find(up);
        if (it != index.end()) boundary[d][it->second].push_back(i);
      }
    }
    for (auto& list : boundary[d]) std::sort(list.begin(), list.end());
  }
  return CWComplex(linkage, std::move(cells), std::move(boundary));
}

long euler_characteristic(const CWComplex& complex) {
  long chi = 0;
  long sign = 1;
  for (std::size_t count : complex.f_vector()) {
    chi += sign * static_cast<long>(count);
    sign = -sign;
  }
  return chi;
}

const std::vector<std::vector<std::string>>& step2_row_labels() {
  static const std::vector<std::vector<std::string>> rows = {
      {"{1}{2,3,4}{5}"}, {"{2}{1,3,4}{5}"}, {"{3}{1,2,4}{5}"}, {"{4}{1,2,3}{5}"}, {"{1,2,3}{4}{5}"},
      {"{1,2,4}{3}{5}"}, {"{1,3,4}{2}{5}"}, {"{2,3,4}{1}{5}"}, {"{1,2}{3,4}{5}"}, {"{3,4}{1,2}{5}"},
      {"{1,3}{2,4}{5}"}, {"{2,4}{1,3}{5}"}, {"{1,4}{2,3}{5}"}, {"{2,3}{1,4}{5}"},
  };
  return rows;
}

const std::vector<std::vector<std::string>>& step3_row_labels() {
  static const std::vector<std::vector<std::string>> rows = {
      {"{3}{4}{1,2,5}", "{4}{3}{1,2,5}"}, {"{2}{4}{1,3,5}", "{4}{2}{1,3,5}"},
      {"{2}{3}{1,4,5}", "{3}{2}{1,4,5}"}, {"{1}{4}{2,3,5}", "{4}{1}{2,3,5}"},
      {"{1}{3}{2,4,5}", "{3}{1}{2,4,5}"}, {"{1}{2}{3,4,5}", "{2}{1}{3,4,5}"},
      {"{3,4}{2}{1,5}", "{2}{3,4}{1,5}"}, {"{2,4}{3}{1,5}", "{3}{2,4}{1,5}"},
      {"{2,3}{4}{1,5}", "{4}{2,3}{1,5}"}, {"{3,4}{1}{2,5}", "{1}{3,4}{2,5}"},
      {"{1,4}{3}{2,5}", "{3}{1,4}{2,5}"}, {"{1,3}{4}{2,5}", "{4}{1,3}{2,5}"},
      {"{2,4}{1}{3,5}", "{1}{2,4}{3,5}"}, {"{1,4}{2}{3,5}", "{2}{1,4}{3,5}"},
      {"{1,2}{4}{3,5}", "{4}{1,2}{3,5}"}, {"{2,3}{1}{4,5}", "{1}{2,3}{4,5}"},
      {"{1,3}{2}{4,5}", "{2}{1,3}{4,5}"}, {"{1,2}{3}{4,5}", "{3}{1,2}{4,5}"},
  };
  return rows;
}

namespace {

std::vector<MembershipRow> evaluate_rows(const std::vector<std::vector<std::string>>& rows,
                                         std::span<const Linkage> linkages) {
  std::vector<MembershipRow> out;
  for (const auto& texts : rows) {
    MembershipRow row;
    for (const auto& text : texts) row.labels.push_back(parse_cyclic_partition(5, text));
    for (const auto& linkage : linkages) row.admissible.push_back(linkage.is_admissible_partition(row.labels.front().parts()));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

FacetMembership facet_membership_table(std::span<const Linkage> linkages) {
  for (const auto& linkage : linkages) {
    if (linkage.n() != 5) throw Error(ErrorCode::ArityMismatch, "tables are defined for pentagons, got n = " + std::to_string(linkage.n()));
  }
  return {evaluate_rows(step2_row_labels(), linkages), evaluate_rows(step3_row_labels(), linkages)};
}

}  // namespace linkspace
