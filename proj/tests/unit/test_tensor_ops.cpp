#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hyperlap/error.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/tensor_ops.hpp"
#include "reference.hpp"

namespace hyperlap {
namespace {

DenseVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseVector x(n);
  for (double& v : x) v = u(rng);
  return x;
}

std::vector<UniformHypergraph> fixtures() {
  return {generate(Hyperstar{3, 2}), generate(Hyperstar{4, 3}), generate(Hypercycle{3, 3}),
          generate(Hyperpath{5, 2}), generate(Sunflower{4}),    generate(Complete{4, 5}),
          UniformHypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}})};
}

TEST(Apply, MatchesExplicitTensor) {
  std::mt19937_64 rng(7);
  for (const auto& h : fixtures()) {
    for (TensorKind kind : {TensorKind::adjacency, TensorKind::laplacian, TensorKind::signless}) {
      for (int trial = 0; trial < 5; ++trial) {
        const auto x = random_vector(h.n(), rng);
        const auto fast = apply(h, kind, x);
        const auto slow = testing::dense_apply(h, kind, x);
        for (std::size_t i = 0; i < h.n(); ++i) EXPECT_NEAR(fast[i], slow[i], 1e-12);
      }
    }
  }
}

TEST(Apply, HomogeneousOfDegreeKMinusOne) {
  std::mt19937_64 rng(11);
  for (const auto& h : fixtures()) {
    const auto x = random_vector(h.n(), rng);
    DenseVector y = x;
    for (double& v : y) v *= -2.5;
    const auto tx = apply(h, TensorKind::laplacian, x);
    const auto ty = apply(h, TensorKind::laplacian, y);
    const double scale = std::pow(-2.5, h.k() - 1);
    for (std::size_t i = 0; i < h.n(); ++i) EXPECT_NEAR(ty[i], scale * tx[i], 1e-10);
  }
}

TEST(Apply, DimensionMismatch) {
  const auto h = generate(Hyperstar{3, 2});
  try {
    apply(h, TensorKind::laplacian, DenseVector(3, 1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Residual, AllOnesIsLaplacianKernel) {
  for (const auto& h : fixtures()) {
    EXPECT_LE(residual(h, TensorKind::laplacian, 0.0, DenseVector(h.n(), 1.0)), 1e-12);
    const auto ax = apply(h, TensorKind::signless, DenseVector(h.n(), 1.0));
    for (std::size_t i = 0; i < h.n(); ++i) EXPECT_DOUBLE_EQ(ax[i], 2.0 * h.degree(static_cast<Vertex>(i)));
  }
}

TEST(Residual, ScaleInvariantAndMatchesDense) {
  std::mt19937_64 rng(3);
  for (const auto& h : fixtures()) {
    const auto x = random_vector(h.n(), rng);
    DenseVector y = x;
    for (double& v : y) v *= 1e6;
    const double r = residual(h, TensorKind::signless, 1.7, x);
    EXPECT_NEAR(r, residual(h, TensorKind::signless, 1.7, y), 1e-12);
    EXPECT_NEAR(r, testing::dense_residual(h, TensorKind::signless, 1.7, x), 1e-12);
  }
}

TEST(Residual, ZeroVectorRejected) {
  const auto h = generate(Hyperstar{3, 2});
  try {
    residual(h, TensorKind::laplacian, 0.0, DenseVector(h.n(), 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(Residual, DegreeIndicatorAtVertex) {
  // e_v with lambda = deg(v) is an eigenpair of L and Q when k >= 3
  for (const auto& h : fixtures()) {
    for (Vertex v = 0; v < h.n(); ++v) {
      DenseVector x(h.n(), 0.0);
      x[v] = 1.0;
      EXPECT_EQ(residual(h, TensorKind::laplacian, static_cast<double>(h.degree(v)), x), 0.0);
    }
  }
}

TEST(TensorKindNames, RoundTrip) {
  for (TensorKind kind : {TensorKind::adjacency, TensorKind::laplacian, TensorKind::signless})
    EXPECT_EQ(tensor_kind_from_string(to_string(kind)), kind);
  EXPECT_EQ(tensor_kind_from_string("L"), TensorKind::laplacian);
  EXPECT_EQ(tensor_kind_from_string("Q"), TensorKind::signless);
  EXPECT_THROW(tensor_kind_from_string("B"), Error);
}

TEST(Ipow, MatchesPow) {
  for (unsigned p = 0; p < 12; ++p) EXPECT_DOUBLE_EQ(ipow(-1.3, p), std::pow(-1.3, p));
}

TEST(StructuralChecks, RejectsNonEigenpair) {
  const auto h = generate(Hyperstar{3, 2});
  const auto pair = make_eigenpair(h, TensorKind::laplacian, 0.5, DenseVector(h.n(), 1.0));
  try {
    structural_checks(h, pair, 1e-8, 1e-9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnEigenpair);
  }
}

TEST(StructuralChecks, SignlessPairsAreOutOfScope) {
  const auto h = generate(Hyperstar{3, 2});
  const auto pair = make_eigenpair(h, TensorKind::signless, 2.0, DenseVector{1, 0, 0, 0, 0});
  const auto report = structural_checks(h, pair, 1e-8, 1e-9);
  EXPECT_EQ(report.applicable_count(), 0u);
  EXPECT_TRUE(report.all_passed());
}

TEST(StructuralChecks, AcceptsLambdaOneHyperstarPair) {
  const auto h = generate(Hyperstar{3, 2});
  const auto ok = make_eigenpair(h, TensorKind::laplacian, 1.0, DenseVector{0, 1, 1, -1, 1});
  ASSERT_LE(ok.residual, 1e-12);
  const auto report = structural_checks(h, ok, 1e-8, 1e-9);
  EXPECT_TRUE(report.all_passed());
  EXPECT_GE(report.applicable_count(), 1u);
}

TEST(StructuralChecks, FlagsUnequalCoredValues) {
  // loose residual gate so the predicate itself is exercised
  const auto h = generate(Hyperstar{3, 2});
  const auto bad = make_eigenpair(h, TensorKind::laplacian, 0.5, DenseVector{1, 1, 0.5, 1, 1});
  const auto report = structural_checks(h, bad, 1e-8, 10.0);
  EXPECT_FALSE(report.all_passed());
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.name == "cored-equal-magnitude"; });
  ASSERT_NE(it, report.checks.end());
  EXPECT_TRUE(it->applicable);
  EXPECT_FALSE(it->passed);
  EXPECT_NEAR(it->worst, 0.5, 1e-12);
}

}  // namespace
}  // namespace hyperlap
