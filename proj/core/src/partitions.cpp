#include "linkspace/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "linkspace/error.hpp"

namespace linkspace {

namespace {

void validate_parts(int n, const std::vector<Subset>& parts) {
  if (n < 1 || n > kMaxGroundSize) throw Error(ErrorCode::NotAPartition, "ground set size out of range");
  Subset seen = 0;
  for (Subset p : parts) {
    if (p == 0) throw Error(ErrorCode::NotAPartition, "empty part");
    if ((p & ~full_subset(n)) != 0) throw Error(ErrorCode::NotAPartition, subset_to_string(p) + " leaves the ground set");
    if ((p & seen) != 0) throw Error(ErrorCode::NotAPartition, "parts overlap at " + subset_to_string(p & seen));
    seen |= p;
  }
  if (seen != full_subset(n)) {
    throw Error(ErrorCode::NotAPartition, "elements " + subset_to_string(full_subset(n) & ~seen) + " are missing");
  }
}

std::string parts_to_string(const std::vector<Subset>& parts) {
  std::string out;
  for (Subset p : parts) out += subset_to_string(p);
  return out;
}

// Restricted-growth enumeration of unordered set partitions of {1..n} into k blocks.
void set_partitions(int n, int k, std::vector<Subset>& blocks, int next, std::vector<std::vector<Subset>>& out) {
  const int used = static_cast<int>(blocks.size());
  if (next > n) {
    if (used == k) out.push_back(blocks);
    return;
  }
  if (used + (n - next + 1) < k) return;
  for (int b = 0; b < used; ++b) {
    blocks[static_cast<std::size_t>(b)] |= element_bit(next);
    set_partitions(n, k, blocks, next + 1, out);
    blocks[static_cast<std::size_t>(b)] &= ~element_bit(next);
  }
  if (used < k) {
    blocks.push_back(element_bit(next));
    set_partitions(n, k, blocks, next + 1, out);
    blocks.pop_back();
  }
}

std::vector<std::vector<Subset>> set_partitions(int n, int k) {
  std::vector<std::vector<Subset>> out;
  std::vector<Subset> blocks;
  set_partitions(n, k, blocks, 1, out);
  return out;
}

}  // namespace

OrderedPartition::OrderedPartition(int ground_size, std::vector<Subset> parts)
    : ground_size_(ground_size), parts_(std::move(parts)) {
  validate_parts(ground_size_, parts_);
}

std::string OrderedPartition::to_string() const { return parts_to_string(parts_); }

std::size_t CyclicPartition::part_of(int element) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (contains(parts_[i], element)) return i;
  }
  throw Error(ErrorCode::GroundSetMismatch, std::to_string(element) + " is not in the ground set");
}

std::string CyclicPartition::to_string() const { return parts_to_string(parts_); }

CyclicPartition canonicalize(int n, std::vector<Subset> parts) {
  validate_parts(n, parts);
  if (parts.size() < 2) throw Error(ErrorCode::NotAPartition, "a cyclic partition needs at least two parts");
  const auto anchor = std::find_if(parts.begin(), parts.end(), [n](Subset p) { return contains(p, n); });
  std::rotate(parts.begin(), anchor + 1, parts.end());
  return CyclicPartition(n, std::move(parts));
}

CyclicPartition parse_cyclic_partition(int n, std::string_view text) {
  std::vector<Subset> parts;
  std::size_t i = 0;
  const auto fail = [&] { throw Error(ErrorCode::ParseError, "malformed partition '" + std::string(text) + "'"); };
  while (i < text.size()) {
    if (text[i] != '{') fail();
    ++i;
    Subset part = 0;
    while (true) {
      std::size_t j = i;
      int value = 0;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
        value = value * 10 + (text[j] - '0');
        if (value > kMaxGroundSize) fail();
        ++j;
      }
      if (j == i || value < 1) fail();
      if (contains(part, value)) fail();
      part |= element_bit(value);
      i = j;
      if (i >= text.size()) fail();
      if (text[i] == '}') break;
      if (text[i] != ',') fail();
      ++i;
    }
    ++i;
    parts.push_back(part);
  }
  return canonicalize(n, std::move(parts));
}

bool label_less(const CyclicPartition& a, const CyclicPartition& b) { return a.to_string() < b.to_string(); }

void sort_by_label(std::vector<CyclicPartition>& labels) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) keys.emplace_back(labels[i].to_string(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<CyclicPartition> sorted;
  sorted.reserve(labels.size());
  for (const auto& [key, index] : keys) sorted.push_back(labels[index]);
  labels = std::move(sorted);
}

std::vector<CyclicPartition> enumerate_cyclic_partitions(int n, int m) {
  if (m < 2 || m > n) {
    throw Error(ErrorCode::InvalidArity, "cannot split {1.." + std::to_string(n) + "} into " + std::to_string(m) +
                                             " cyclically ordered parts");
  }
  std::vector<CyclicPartition> out;
  for (auto blocks : set_partitions(n, m)) {
    // The block holding n is fixed last; the rest run through all orders.
    const auto anchor = std::find_if(blocks.begin(), blocks.end(), [n](Subset p) { return contains(p, n); });
    std::iter_swap(anchor, blocks.end() - 1);
    std::sort(blocks.begin(), blocks.end() - 1);
    do {
      out.push_back(canonicalize(n, blocks));
    } while (std::next_permutation(blocks.begin(), blocks.end() - 1));
  }
  sort_by_label(out);
  return out;
}

bool refines(const CyclicPartition& fine, const CyclicPartition& coarse) {
  if (fine.ground_size() != coarse.ground_size()) {
    throw Error(ErrorCode::GroundSetMismatch, "partitions of {1.." + std::to_string(fine.ground_size()) +
                                                  "} and {1.." + std::to_string(coarse.ground_size()) + "}");
  }
  const auto& f = fine.parts();
  const auto& c = coarse.parts();
  const std::size_t mf = f.size();
  if (mf < c.size()) return false;
  for (std::size_t start = 0; start < mf; ++start) {
    std::size_t cursor = start;
    bool ok = true;
    for (Subset target : c) {
      Subset acc = 0;
      while (acc != target) {
        const Subset piece = f[cursor % mf];
        if ((piece & ~target) != 0) {
          ok = false;
          break;
        }
        acc |= piece;
        ++cursor;
      }
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

Permutation vertex_to_permutation(const CyclicOrder& vertex) {
  if (!vertex.is_cyclic_order()) {
    throw Error(ErrorCode::InvalidArity, vertex.to_string() + " is not a cyclic order");
  }
  Permutation perm;
  const auto& parts = vertex.parts();
  perm.reserve(parts.size() - 1);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) perm.push_back(std::countr_zero(parts[i]) + 1);
  return perm;
}

CyclicOrder permutation_to_vertex(const Permutation& perm) {
  const int n = static_cast<int>(perm.size()) + 1;
  std::vector<Subset> parts;
  parts.reserve(perm.size() + 1);
  for (int e : perm) {
    if (e < 1 || e >= n) throw Error(ErrorCode::NotAPartition, "permutation entry out of range");
    parts.push_back(element_bit(e));
  }
  parts.push_back(element_bit(n));
  return canonicalize(n, std::move(parts));
}

std::vector<CyclicOrder> cell_vertices(const CyclicPartition& cell) {
  const int n = cell.ground_size();
  std::vector<std::vector<int>> orders;
  for (Subset p : cell.parts()) orders.push_back(elements(p));
  std::vector<CyclicOrder> out;
  // Odometer over the per-part permutations.
  while (true) {
    std::vector<Subset> singletons;
    singletons.reserve(static_cast<std::size_t>(n));
    for (const auto& o : orders) {
      for (int e : o) singletons.push_back(element_bit(e));
    }
    out.push_back(canonicalize(n, std::move(singletons)));
    std::size_t i = 0;
    while (i < orders.size() && !std::next_permutation(orders[i].begin(), orders[i].end())) ++i;
    if (i == orders.size()) break;
  }
  sort_by_label(out);
  return out;
}

std::vector<CyclicPartition> coarsenings(const CyclicPartition& cell) {
  const auto& parts = cell.parts();
  const std::size_t m = parts.size();
  if (m < 3) throw Error(ErrorCode::TooCoarse, cell.to_string() + " has fewer than three parts");
  std::vector<CyclicPartition> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    std::vector<Subset> merged;
    merged.reserve(m - 1);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == i) {
        merged.push_back(parts[i] | parts[j]);
      } else if (k != j) {
        merged.push_back(parts[k]);
      }
    }
    out.push_back(canonicalize(cell.ground_size(), std::move(merged)));
  }
  sort_by_label(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<OrderedPartition> enumerate_ordered_partitions(int m, int k) {
  if (k < 1 || k > m) throw Error(ErrorCode::InvalidArity, "cannot split {1.." + std::to_string(m) + "} into " + std::to_string(k) + " parts");
  std::vector<OrderedPartition> out;
  for (auto blocks : set_partitions(m, k)) {
    std::sort(blocks.begin(), blocks.end());
    do {
      out.emplace_back(m, blocks);
    } while (std::next_permutation(blocks.begin(), blocks.end()));
  }
  std::sort(out.begin(), out.end(), [](const OrderedPartition& a, const OrderedPartition& b) {
    return a.to_string() < b.to_string();
  });
  return out;
}

bool refines(const OrderedPartition& fine, const OrderedPartition& coarse) {
  if (fine.ground_size() != coarse.ground_size()) throw Error(ErrorCode::GroundSetMismatch, "different ground sets");
  std::size_t cursor = 0;
  const auto& f = fine.parts();
  for (Subset target : coarse.parts()) {
    Subset acc = 0;
    while (acc != target) {
      if (cursor >= f.size() || (f[cursor] & ~target) != 0) return false;
      acc |= f[cursor++];
    }
  }
  return true;
}

CyclicPartition append_last_singleton(const OrderedPartition& partition) {
  auto parts = partition.parts();
  const int n = partition.ground_size() + 1;
  parts.push_back(element_bit(n));
  return canonicalize(n, std::move(parts));
}

}  // namespace linkspace
