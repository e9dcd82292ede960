#include <gtest/gtest.h>

#include <cmath>

#include "hyperlap/eigensolvers.hpp"
#include "hyperlap/error.hpp"
#include "hyperlap/family_spectra.hpp"
#include "reference_values.hpp"

namespace hyperlap {
namespace {

ScalarFunction poly(std::function<double(double)> f, Interval dom) { return ScalarFunction{std::move(f), {}, dom}; }

TEST(Bisect, FindsBracketedRoot) {
  const SolverOptions opts;
  const auto f = poly([](double t) { return t * t - 2.0; }, {0.0, 2.0});
  EXPECT_NEAR(bisect(f, 0.0, 2.0, opts), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(bisect(f, 2.0, 0.0, opts), std::sqrt(2.0), 1e-12);
}

TEST(Bisect, EndpointRoot) {
  const auto f = poly([](double t) { return t - 1.0; }, {0.0, 1.0});
  EXPECT_EQ(bisect(f, 0.0, 1.0, SolverOptions{}), 1.0);
}

TEST(Bisect, NoSignChange) {
  const auto f = poly([](double t) { return t * t + 1.0; }, {-1.0, 1.0});
  try {
    bisect(f, -1.0, 1.0, SolverOptions{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSignChange);
  }
}

TEST(Bisect, BudgetExhausted) {
  SolverOptions opts;
  opts.max_iter = 3;
  const auto f = poly([](double t) { return t - 0.3; }, {0.0, 1.0});
  EXPECT_THROW(bisect(f, 0.0, 1.0, opts), MaxIterationsError);
}

TEST(AllRealRoots, SimpleAndTangentialRoots) {
  const SolverOptions opts;
  // (t - 0.2)(t - 0.5)^2 (t + 0.7)
  const auto f = poly([](double t) { return (t - 0.2) * (t - 0.5) * (t - 0.5) * (t + 0.7); }, {-1.0, 1.0});
  const auto roots = all_real_roots(f, f.domain, opts);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_NEAR(roots[0], -0.7, 1e-12);
  EXPECT_NEAR(roots[1], 0.2, 1e-12);
  EXPECT_NEAR(roots[2], 0.5, 1e-6);
}

TEST(AllRealRoots, NoRoots) {
  const auto f = poly([](double t) { return t * t + 0.5; }, {-2.0, 2.0});
  EXPECT_TRUE(all_real_roots(f, f.domain, SolverOptions{}).empty());
}

TEST(AllRealRoots, HyperstarPolynomialRoots) {
  const auto f = hyperstar_polynomial(3, 2, 1);
  const auto roots = all_real_roots(f, f.domain, SolverOptions{});
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0], testing::ref::kHyperstarK3D2F1, 1e-12);
}

TEST(PowerIteration, HyperstarSignlessValues) {
  SolverOptions opts;
  IterationTrace trace;
  const auto pair = power_iteration_q(generate(Hyperstar{4, 2}), opts, &trace);
  EXPECT_NEAR(pair.lambda, testing::ref::kHyperstarK4D2Max, 1e-8);
  EXPECT_LE(pair.residual, 1e-9);
  EXPECT_TRUE(trace.monotone());
  EXPECT_GT(trace.iterations, 0u);
  EXPECT_LE(trace.lower.back(), pair.lambda + 1e-12);
  EXPECT_GE(trace.upper.back(), pair.lambda - 1e-12);
  for (double v : pair.x) EXPECT_GT(v, 0.0);
}

TEST(PowerIteration, BoundsBracketTheLimit) {
  const std::vector<FamilySpec> specs = {Hyperstar{3, 3}, Hypercycle{4, 3}, Sunflower{4}, Hyperpath{3, 4},
                                         Complete{3, 5}};
  for (const auto& spec : specs) {
    IterationTrace trace;
    const auto h = generate(spec);
    const auto pair = power_iteration_q(h, SolverOptions{}, &trace);
    EXPECT_TRUE(trace.monotone()) << describe(spec);
    for (std::size_t i = 0; i < trace.lower.size(); ++i) {
      EXPECT_LE(trace.lower[i], pair.lambda + 1e-9);
      EXPECT_GE(trace.upper[i], pair.lambda - 1e-9);
    }
    // Q >= max degree, <= 2 * max degree
    EXPECT_GE(pair.lambda, static_cast<double>(h.max_degree()) - 1e-9);
    EXPECT_LE(pair.lambda, 2.0 * h.max_degree() + 1e-9);
  }
}

TEST(PowerIteration, CompleteHypergraphIsRegular) {
  // regular: Q = 2 * degree with the all-ones eigenvector
  const auto pair = power_iteration_q(generate(Complete{3, 5}), SolverOptions{});
  EXPECT_NEAR(pair.lambda, 12.0, 1e-9);
}

TEST(PowerIteration, Errors) {
  const UniformHypergraph split(3, 6, {{0, 1, 2}, {3, 4, 5}});
  try {
    power_iteration_q(split, SolverOptions{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConnected);
  }
  SolverOptions tight;
  tight.max_iter = 2;
  try {
    power_iteration_q(generate(Hyperstar{4, 2}), tight);
    FAIL();
  } catch (const MaxIterationsError& e) {
    EXPECT_LT(e.lower(), e.upper());
  }
}

TEST(EvenCored, TransfersSignlessPair) {
  const auto h = generate(Hyperstar{4, 3});
  const auto q = power_iteration_q(h, SolverOptions{});
  const auto l = lambda_l_even_cored(h, SolverOptions{});
  EXPECT_EQ(l.kind, TensorKind::laplacian);
  EXPECT_DOUBLE_EQ(l.lambda, q.lambda);
  EXPECT_NEAR(l.lambda, testing::ref::kHyperstarK4D3Max, 1e-8);
  EXPECT_LE(l.residual, 1e-9);
}

TEST(EvenCored, Preconditions) {
  try {
    lambda_l_even_cored(generate(Hyperstar{3, 2}), SolverOptions{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddUniformity);
  }
  try {
    lambda_l_even_cored(generate(Complete{4, 6}), SolverOptions{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCored);
  }
}

}  // namespace
}  // namespace hyperlap
