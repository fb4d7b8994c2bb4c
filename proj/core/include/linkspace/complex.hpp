#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkspace/linkage.hpp"
#include "linkspace/partitions.hpp"

namespace linkspace {

inline constexpr int kMinComplexArity = 4;
inline constexpr int kMaxComplexArity = 8;

/// Open cell of the moduli-space complex; dim = n - number of parts.
struct Cell {
  CyclicPartition label;
  int dim;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Cells are the admissible cyclically ordered partitions into at least three
/// parts. Only codimension-one boundaries are stored; a cell's closure is the
/// transitive closure of these lists. Cells in each dimension are sorted by
/// label string, so indices are deterministic.
class CWComplex {
 public:
  using Incidence = std::vector<std::vector<std::vector<std::size_t>>>;

  /// Assembles a complex from explicit data (used by the JSON reader) and
  /// checks it against the linkage: labels admissible, dimensions correct,
  /// boundary indices in range.
  static CWComplex from_parts(Linkage linkage, std::vector<std::vector<Cell>> cells, Incidence boundary);

  const Linkage& linkage() const noexcept { return linkage_; }
  int ground_size() const noexcept { return linkage_.n(); }
  int top_dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }

  std::span<const Cell> cells(int dim) const { return cells_.at(static_cast<std::size_t>(dim)); }
  /// Indices into cells(dim - 1).
  std::span<const std::size_t> boundary(int dim, std::size_t index) const {
    return boundary_.at(static_cast<std::size_t>(dim)).at(index);
  }

  /// Position of `label` within cells(dim of label), if it is a cell.
  std::optional<std::size_t> find(const CyclicPartition& label) const;
  bool contains(const CyclicPartition& label) const { return find(label).has_value(); }

  /// Cell counts per dimension (V, E, F, ...).
  std::vector<std::size_t> f_vector() const;

  /// Index in the flattened listing: dimension-major, label order within.
  std::size_t global_index(int dim, std::size_t index) const;
  std::size_t cell_count() const;

  friend bool operator==(const CWComplex& a, const CWComplex& b) {
    return a.linkage_ == b.linkage_ && a.cells_ == b.cells_ && a.boundary_ == b.boundary_;
  }

 private:
  CWComplex(Linkage linkage, std::vector<std::vector<Cell>> cells, Incidence boundary);
  friend CWComplex build_complex(const Linkage& linkage);

  Linkage linkage_;
  std::vector<std::vector<Cell>> cells_;
  Incidence boundary_;
  std::map<CyclicPartition, std::size_t> index_;
};

/// Throws UnsupportedArity outside 4 <= n <= 8.
CWComplex build_complex(const Linkage& linkage);

long euler_characteristic(const CWComplex& complex);

/// One row of an admissibility table. Step-3 rows carry a label and its
/// mirror; both always agree.
struct MembershipRow {
  std::vector<CyclicPartition> labels;
  std::vector<bool> admissible;  // one flag per linkage column
};

struct FacetMembership {
  std::vector<MembershipRow> step2;  // 14 permutohedron facets with {5} appended
  std::vector<MembershipRow> step3;  // 18 diagonal candidates, part of 5 non-singleton
};

/// Row labels of the two pentagon tables in their customary order. Step-2
/// row 8 is {2,3,4}{1}{5}, the mirror of row 1.
const std::vector<std::vector<std::string>>& step2_row_labels();
const std::vector<std::vector<std::string>>& step3_row_labels();
inline constexpr std::size_t kCorrectedStep2Row = 7;  // zero-based

/// Evaluates both tables for each linkage. Throws ArityMismatch unless n = 5.
FacetMembership facet_membership_table(std::span<const Linkage> linkages);

}  // namespace linkspace
