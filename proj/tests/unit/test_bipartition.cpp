#include <gtest/gtest.h>

#include "hyperlap/error.hpp"
#include "hyperlap/hypergraph.hpp"
#include "reference.hpp"

namespace hyperlap {
namespace {

TEST(OddBipartition, AgreesWithExhaustiveSearch) {
  const std::vector<UniformHypergraph> cases = {
      generate(Complete{4, 5}),   generate(Complete{4, 6}),   generate(Hyperstar{4, 3}),
      generate(Hypercycle{4, 3}), generate(Hyperpath{4, 3}),  generate(Sunflower{4}),
      generate(Hypercycle{6, 2}), UniformHypergraph(4, 6, {{0, 1, 2, 3}, {2, 3, 4, 5}, {0, 1, 4, 5}}),
      UniformHypergraph(4, 7, {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}, {0, 1, 5, 6}})};
  for (const auto& h : cases) {
    const auto fast = odd_bipartition(h);
    const auto slow = testing::exhaustive_odd_bipartition(h);
    EXPECT_EQ(fast.has_value(), slow.has_value()) << "n=" << h.n();
    if (fast) {
      EXPECT_TRUE(is_odd_bipartition(h, *fast));
    }
    if (slow) {
      EXPECT_TRUE(is_odd_bipartition(h, *slow));
    }
  }
}

TEST(OddBipartition, CoredEvenHypergraphsAreOddBipartite) {
  for (unsigned k : {4u, 6u}) {
    for (const auto& spec : std::vector<FamilySpec>{Hyperstar{k, 3}, Hypercycle{k, 5}, Hyperpath{k, 4}, Sunflower{k}}) {
      const auto h = generate(spec);
      const auto p = odd_bipartition(h);
      ASSERT_TRUE(p) << describe(spec);
      EXPECT_TRUE(is_odd_bipartition(h, *p));
    }
  }
}

TEST(OddBipartition, PredicateRejectsBadPartitions) {
  const auto h = generate(Hyperstar{4, 2});
  Partition empty{{}, {0, 1, 2, 3, 4, 5, 6}};
  EXPECT_FALSE(is_odd_bipartition(h, empty));
  Partition even{{1, 2}, {0, 3, 4, 5, 6}};
  EXPECT_FALSE(is_odd_bipartition(h, even));
  Partition missing{{1, 4}, {0, 2, 3, 5}};
  EXPECT_FALSE(is_odd_bipartition(h, missing));
  Partition good{{1, 4}, {0, 2, 3, 5, 6}};
  EXPECT_TRUE(is_odd_bipartition(h, good));
}

TEST(OddBipartition, OddKRejected) {
  try {
    odd_bipartition(generate(Hyperstar{3, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddUniformity);
  }
}

}  // namespace
}  // namespace hyperlap
