#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "linkspace/subset.hpp"

namespace linkspace {

/// Linear sequence of distinct elements, e.g. a vertex label of the permutohedron.
using Permutation = std::vector<int>;

/// Linearly ordered partition of {1..m}; labels faces of the permutohedron.
class OrderedPartition {
 public:
  /// Throws NotAPartition unless `parts` are nonempty, disjoint and cover {1..ground_size}.
  OrderedPartition(int ground_size, std::vector<Subset> parts);

  int ground_size() const noexcept { return ground_size_; }
  const std::vector<Subset>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::string to_string() const;

  friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  int ground_size_;
  std::vector<Subset> parts_;
};

/// Cyclically ordered partition of {1..n} with at least two parts, stored in
/// the unique rotation that puts the part containing n last.
class CyclicPartition {
 public:
  int ground_size() const noexcept { return ground_size_; }
  const std::vector<Subset>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }

  /// Number of parts is n, i.e. a vertex label.
  bool is_cyclic_order() const noexcept { return static_cast<int>(parts_.size()) == ground_size_; }

  /// Index of the part holding `element`.
  std::size_t part_of(int element) const;

  /// `{1,3}{2,4}{5}`
  std::string to_string() const;

  friend auto operator<=>(const CyclicPartition&, const CyclicPartition&) = default;

 private:
  friend CyclicPartition canonicalize(int n, std::vector<Subset> parts);
  CyclicPartition(int n, std::vector<Subset> parts) : ground_size_(n), parts_(std::move(parts)) {}

  int ground_size_;
  std::vector<Subset> parts_;
};

/// A CyclicPartition whose parts are all singletons.
using CyclicOrder = CyclicPartition;

/// Rotates `parts` so the part containing n comes last. Throws NotAPartition
/// for overlaps, gaps, empty parts or fewer than two parts.
CyclicPartition canonicalize(int n, std::vector<Subset> parts);

/// Inverse of CyclicPartition::to_string.
CyclicPartition parse_cyclic_partition(int n, std::string_view text);

/// Orders labels by their string form; every listing in the library uses it.
bool label_less(const CyclicPartition& a, const CyclicPartition& b);
void sort_by_label(std::vector<CyclicPartition>& labels);

/// All cyclic partitions of {1..n} into exactly m parts, sorted by label.
/// Throws InvalidArity unless 2 <= m <= n.
std::vector<CyclicPartition> enumerate_cyclic_partitions(int n, int m);

/// True iff `fine` splits into cyclically consecutive blocks whose unions,
/// in order, are the parts of `coarse`. Throws GroundSetMismatch.
bool refines(const CyclicPartition& fine, const CyclicPartition& coarse);

/// Cuts a cyclic order just after n and drops n.
Permutation vertex_to_permutation(const CyclicOrder& vertex);

/// Inverse of vertex_to_permutation: appends n = size+1 to the sequence.
CyclicOrder permutation_to_vertex(const Permutation& perm);

/// Every cyclic order refining `cell`, sorted; there are prod(|part|!) of them.
std::vector<CyclicOrder> cell_vertices(const CyclicPartition& cell);

/// Merges of two cyclically adjacent parts, canonical and sorted.
/// Throws TooCoarse when `cell` has fewer than three parts.
std::vector<CyclicPartition> coarsenings(const CyclicPartition& cell);

/// All ordered partitions of {1..m} into exactly k parts.
std::vector<OrderedPartition> enumerate_ordered_partitions(int m, int k);

/// True iff consecutive blocks of `fine` unite to the parts of `coarse`, in order.
bool refines(const OrderedPartition& fine, const OrderedPartition& coarse);

/// Appends the singleton {m+1} to a partition of {1..m}, giving a cyclic
/// partition of {1..m+1}.
CyclicPartition append_last_singleton(const OrderedPartition& partition);

}  // namespace linkspace
