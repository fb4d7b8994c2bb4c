#include "linkspace/permutohedron.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "linkspace/error.hpp"

namespace linkspace {

RationalPoint permutohedron_point(const Permutation& perm) {
  RationalPoint point(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    const int e = perm[j];
    if (e < 1 || static_cast<std::size_t>(e) > perm.size()) throw Error(ErrorCode::NotAPartition, "not a permutation");
    point[static_cast<std::size_t>(e - 1)] = Rational(static_cast<std::int64_t>(j + 1));
  }
  return point;
}

Permutohedron permutohedron(int m) {
  if (m < 2 || m > 7) throw Error(ErrorCode::UnsupportedDimension, "permutohedron order must be 2..7, got " + std::to_string(m));
  Permutohedron p;
  p.order_ = m;
  Permutation perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    p.vertices_.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int dim = 0; dim < m; ++dim) p.faces_.push_back(enumerate_ordered_partitions(m, m - dim));
  return p;
}

std::vector<Permutation> Permutohedron::face_vertices(const OrderedPartition& face) const {
  std::vector<std::vector<int>> orders;
  for (Subset part : face.parts()) orders.push_back(elements(part));
  std::vector<Permutation> out;
  while (true) {
    Permutation perm;
    for (const auto& o : orders) perm.insert(perm.end(), o.begin(), o.end());
    out.push_back(std::move(perm));
    std::size_t i = 0;
    while (i < orders.size() && !std::next_permutation(orders[i].begin(), orders[i].end())) ++i;
    if (i == orders.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<OrderedPartition> Permutohedron::meet(const OrderedPartition& a, const OrderedPartition& b) {
  if (a.ground_size() != b.ground_size()) throw Error(ErrorCode::GroundSetMismatch, "different ground sets");
  // Nonempty blocks A_i & B_j, read in order of i, must also be in order of j.
  std::vector<Subset> parts;
  std::size_t last_j = 0;
  for (Subset pa : a.parts()) {
    for (std::size_t j = 0; j < b.parts().size(); ++j) {
      const Subset piece = pa & b.parts()[j];
      if (piece == 0) continue;
      if (j < last_j) return std::nullopt;
      last_j = j;
      parts.push_back(piece);
    }
  }
  return OrderedPartition(a.ground_size(), std::move(parts));
}

namespace {

struct ProjectionBasis {
  std::array<std::array<double, 4>, 3> rows{};
};

const ProjectionBasis& projection_basis() {
  static const ProjectionBasis basis = [] {
    const std::array<std::array<double, 4>, 3> seeds = {{{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}}};
    ProjectionBasis out;
    for (std::size_t k = 0; k < 3; ++k) {
      auto v = seeds[k];
      for (std::size_t j = 0; j < k; ++j) {
        double dot = 0;
        for (std::size_t i = 0; i < 4; ++i) dot += v[i] * out.rows[j][i];
        for (std::size_t i = 0; i < 4; ++i) v[i] -= dot * out.rows[j][i];
      }
      double norm = 0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      for (std::size_t i = 0; i < 4; ++i) out.rows[k][i] = v[i] / norm;
    }
    return out;
  }();
  return basis;
}

}  // namespace

Point3 project_to_3d(std::span<const Rational> point) {
  if (point.size() != 4) throw Error(ErrorCode::OffHyperplane, "expected a point of R^4");
  Rational sum;
  for (const auto& x : point) sum += x;
  if (sum != Rational(10)) throw Error(ErrorCode::OffHyperplane, "coordinate sum is " + sum.to_string() + ", not 10");
  std::array<double, 4> centered{};
  for (std::size_t i = 0; i < 4; ++i) centered[i] = (point[i] - Rational(5, 2)).to_double();
  Point3 out{};
  const auto& basis = projection_basis();
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < 4; ++i) out[k] += basis.rows[k][i] * centered[i];
  }
  return out;
}

bool affinely_planar(std::span<const RationalPoint> points) {
  if (points.size() <= 3) return true;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row;
    for (std::size_t c = 0; c < points[0].size(); ++c) row.push_back(points[i][c] - points[0][c]);
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  const std::size_t cols = points[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank <= 2;
}

Rational squared_distance(std::span<const Rational> a, std::span<const Rational> b) {
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

}  // namespace linkspace
