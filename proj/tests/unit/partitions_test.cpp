#include "linkspace/partitions.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "brute_force.hpp"
#include "generators.hpp"
#include "linkspace/error.hpp"

using namespace linkspace;

namespace {

CyclicPartition P(const char* text, int n = 5) { return parse_cyclic_partition(n, text); }

std::vector<std::string> strings(const std::vector<CyclicPartition>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

oracle::Blocks blocks_of(const CyclicPartition& p) { return oracle::parse_blocks(p.to_string()); }

long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST(Canonicalize, RotatesPartOfNToTheEnd) {
  EXPECT_EQ(canonicalize(5, {24, 1, 6}).to_string(), "{1}{2,3}{4,5}");
  EXPECT_EQ(canonicalize(5, {1, 2, 4, 8, 16}).to_string(), "{1}{2}{3}{4}{5}");
  EXPECT_EQ(canonicalize(5, {20, 3, 8}).to_string(), "{1,2}{4}{3,5}");
}

TEST(Canonicalize, RejectsNonPartitions) {
  for (auto parts : std::vector<std::vector<Subset>>{{3, 6, 24}, {3, 24}, {31}, {3, 0, 28}, {3, 28, 32}}) {
    try {
      canonicalize(5, parts);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotAPartition);
    }
  }
}

TEST(Canonicalize, ParsePrintRoundTrip) {
  std::mt19937 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto p = gen::random_cyclic_partition(rng, 3 + i % 6);
    EXPECT_EQ(parse_cyclic_partition(p.ground_size(), p.to_string()), p);
  }
  EXPECT_THROW(parse_cyclic_partition(5, "{1,2}{3"), Error);
  EXPECT_THROW(parse_cyclic_partition(5, "{1,,2}{3,4,5}"), Error);
  EXPECT_THROW(parse_cyclic_partition(5, "{1,1}{2,3,4,5}"), Error);
}

TEST(CanonicalizeProperty, IdempotentAndRotationInvariant) {
  std::mt19937 rng(2);
  for (int i = 0; i < 300; ++i) {
    const auto p = gen::random_cyclic_partition(rng, 3 + i % 6);
    auto parts = p.parts();
    EXPECT_EQ(canonicalize(p.ground_size(), parts), p);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      std::rotate(parts.begin(), parts.begin() + 1, parts.end());
      EXPECT_EQ(canonicalize(p.ground_size(), parts), p);
    }
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_cyclic_partitions(5, 5).size(), 24u);
  EXPECT_EQ(enumerate_cyclic_partitions(5, 4).size(), 60u);
  EXPECT_EQ(strings(enumerate_cyclic_partitions(3, 3)), (std::vector<std::string>{"{1}{2}{3}", "{2}{1}{3}"}));
  EXPECT_THROW(enumerate_cyclic_partitions(5, 1), Error);
  EXPECT_THROW(enumerate_cyclic_partitions(5, 6), Error);
}

TEST(Enumerate, MatchesFromScratchOracle) {
  // With all-tiny lengths nothing is filtered, so the oracle lists every label.
  for (int n = 3; n <= 6; ++n) {
    const std::vector<Rational> unit(static_cast<std::size_t>(n), Rational(1));
    for (int m = std::max(2, n - 3); m <= n; ++m) {
      std::set<std::string> expected;
      for (auto blocks : oracle::set_partitions(n)) {
        if (static_cast<int>(blocks.size()) != m) continue;
        std::sort(blocks.begin(), blocks.end());
        do {
          expected.insert(oracle::canonical_cyclic_string(blocks, n));
        } while (std::next_permutation(blocks.begin(), blocks.end()));
      }
      const auto got = strings(enumerate_cyclic_partitions(n, m));
      EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected) << n << "," << m;
      EXPECT_EQ(got.size(), expected.size());
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST(Enumerate, VerticesBijectWithSymmetricGroup) {
  for (int n = 3; n <= 7; ++n) {
    const auto vertices = enumerate_cyclic_partitions(n, n);
    EXPECT_EQ(static_cast<long>(vertices.size()), factorial(n - 1));
    std::set<Permutation> perms;
    for (const auto& v : vertices) {
      auto perm = vertex_to_permutation(v);
      EXPECT_EQ(permutation_to_vertex(perm), v);
      perms.insert(std::move(perm));
    }
    EXPECT_EQ(perms.size(), vertices.size());
  }
}

TEST(Refines, Examples) {
  EXPECT_TRUE(refines(P("{1}{2}{3}{4}{5}"), P("{1,2}{3}{4,5}")));
  EXPECT_FALSE(refines(P("{1}{3}{2}{4}{5}"), P("{1,2}{3}{4,5}")));
  const auto p = P("{1,3}{2,4}{5}");
  EXPECT_TRUE(refines(p, p));
  EXPECT_FALSE(refines(P("{1,2}{3}{4,5}"), P("{1}{2}{3}{4}{5}")));
  try {
    refines(P("{1}{2}{3}", 3), p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroundSetMismatch);
  }
}

TEST(RefinesProperty, AgreesWithCutEnumerationAndIsAPartialOrder) {
  for (int n = 3; n <= 5; ++n) {
    std::vector<CyclicPartition> all;
    for (int m = 2; m <= n; ++m) {
      for (auto& p : enumerate_cyclic_partitions(n, m)) all.push_back(std::move(p));
    }
    std::map<std::pair<std::size_t, std::size_t>, bool> rel;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        const bool fast = refines(all[i], all[j]);
        ASSERT_EQ(fast, oracle::cyclic_refines(blocks_of(all[i]), blocks_of(all[j]), n))
            << all[i].to_string() << " vs " << all[j].to_string();
        rel[{i, j}] = fast;
      }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_TRUE(rel[std::pair(i, i)]);
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i != j && rel[std::pair(i, j)]) EXPECT_FALSE(rel[std::pair(j, i)]);
        if (!rel[std::pair(i, j)]) continue;
        for (std::size_t k = 0; k < all.size(); ++k) {
          if (rel[std::pair(j, k)]) EXPECT_TRUE(rel[std::pair(i, k)]);
        }
      }
    }
  }
}

TEST(VertexToPermutation, Examples) {
  EXPECT_EQ(vertex_to_permutation(P("{1}{2}{3}{4}{5}")), (Permutation{1, 2, 3, 4}));
  EXPECT_EQ(vertex_to_permutation(P("{2}{1}{3}{4}{5}")), (Permutation{2, 1, 3, 4}));
  EXPECT_EQ(vertex_to_permutation(P("{3}{5}{1}{4}{2}")), (Permutation{1, 4, 2, 3}));
  EXPECT_THROW(vertex_to_permutation(P("{1,2}{3}{4}{5}")), Error);
}

TEST(CellVertices, Examples) {
  EXPECT_EQ(strings(cell_vertices(P("{1,2}{3,4}{5}"))),
            (std::vector<std::string>{"{1}{2}{3}{4}{5}", "{1}{2}{4}{3}{5}", "{2}{1}{3}{4}{5}", "{2}{1}{4}{3}{5}"}));
  EXPECT_EQ(cell_vertices(P("{1}{2}{3,4,5}")).size(), 6u);
  const auto v = P("{3}{1}{4}{2}{5}");
  EXPECT_EQ(cell_vertices(v), std::vector<CyclicOrder>{v});
}

TEST(Coarsenings, Examples) {
  EXPECT_EQ(coarsenings(P("{1}{2}{3}{4}{5}")).size(), 5u);
  EXPECT_EQ(strings(coarsenings(P("{1,2}{3}{4,5}"))),
            (std::vector<std::string>{"{1,2,3}{4,5}", "{1,2}{3,4,5}", "{3}{1,2,4,5}"}));
  const auto up = coarsenings(P("{3,4}{1}{2}{5}"));
  EXPECT_NE(std::find(up.begin(), up.end(), P("{1}{2}{3,4,5}")), up.end());
  try {
    coarsenings(P("{1,2}{3,4,5}"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooCoarse);
  }
}

TEST(CellProperty, VerticesAndCoarseningsRespectRefinement) {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto c = gen::random_cyclic_partition(rng, 3 + i % 5);
    const auto vertices = cell_vertices(c);
    long expected = 1;
    for (Subset part : c.parts()) expected *= factorial(subset_size(part));
    EXPECT_EQ(static_cast<long>(vertices.size()), expected) << c.to_string();
    EXPECT_EQ(std::set<CyclicOrder>(vertices.begin(), vertices.end()).size(), vertices.size());
    for (const auto& v : vertices) EXPECT_TRUE(refines(v, c));
    if (c.size() >= 3) {
      const auto up = coarsenings(c);
      EXPECT_EQ(up.size(), c.size());
      for (const auto& u : up) {
        EXPECT_TRUE(refines(c, u));
        EXPECT_EQ(u.size() + 1, c.size());
      }
    }
  }
}

TEST(OrderedPartitions, CountsAndRefinement) {
  EXPECT_EQ(enumerate_ordered_partitions(4, 4).size(), 24u);
  EXPECT_EQ(enumerate_ordered_partitions(4, 3).size(), 36u);
  EXPECT_EQ(enumerate_ordered_partitions(4, 2).size(), 14u);
  EXPECT_EQ(enumerate_ordered_partitions(4, 1).size(), 1u);
  const OrderedPartition fine(4, {1, 2, 4, 8});
  EXPECT_TRUE(refines(fine, OrderedPartition(4, {3, 12})));
  EXPECT_FALSE(refines(fine, OrderedPartition(4, {12, 3})));
  EXPECT_FALSE(refines(fine, OrderedPartition(4, {5, 10})));
  EXPECT_EQ(append_last_singleton(OrderedPartition(4, {1, 14})).to_string(), "{1}{2,3,4}{5}");
  EXPECT_THROW(OrderedPartition(4, {1, 2, 4}), Error);
}
