#include <gtest/gtest.h>

#include <cmath>

#include "hyperlap/error.hpp"
#include "hyperlap/family_spectra.hpp"
#include "hyperlap/oracle.hpp"
#include "reference.hpp"
#include "reference_values.hpp"

namespace hyperlap {
namespace {

TEST(Multistart, FindingsAreEigenpairs) {
  SolverOptions opts;
  opts.restarts = 200;
  const auto h = generate(Hyperstar{3, 2});
  const auto findings = multistart_search(h, opts);
  ASSERT_FALSE(findings.empty());
  for (std::size_t i = 0; i < findings.size(); ++i) {
    const auto& f = findings[i];
    EXPECT_LE(f.residual, 1e-9);
    EXPECT_LE(testing::dense_residual(h, TensorKind::laplacian, f.lambda, f.x), 1e-9);
    EXPECT_NEAR(inf_norm(f.x), 1.0, 1e-12);
    EXPECT_GE(f.basin_count, 1u);
    if (i > 0) {
      EXPECT_LE(findings[i - 1].lambda, f.lambda);
    }
  }
}

TEST(Multistart, DeterministicForFixedSeed) {
  SolverOptions opts;
  opts.restarts = 50;
  const auto h = generate(Hypercycle{3, 3});
  const auto a = multistart_search(h, opts);
  const auto b = multistart_search(h, opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].lambda, b[i].lambda);
    EXPECT_EQ(a[i].x, b[i].x);
  }
}

TEST(Multistart, SignlessKind) {
  SolverOptions opts;
  opts.restarts = 200;
  const auto h = generate(Hyperstar{4, 2});
  const auto findings = multistart_search(h, opts, TensorKind::signless);
  ASSERT_FALSE(findings.empty());
  EXPECT_NEAR(findings.back().lambda, testing::ref::kHyperstarK4D2Max, 1e-8);
}

TEST(Multistart, SizeLimit) {
  try {
    multistart_search(generate(Hyperstar{3, 4000}), SolverOptions{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InstanceTooLarge);
  }
}

TEST(Certify, RefinesPerturbedVector) {
  const auto h = generate(Hyperpath{3, 3});
  const auto report = hyperpath3_spectrum(3, SolverOptions{});
  for (const auto& e : report.entries) {
    if (!e.certified) continue;
    DenseVector x0 = e.witness->x;
    for (std::size_t i = 0; i < x0.size(); ++i) x0[i] += 1e-4 * std::cos(static_cast<double>(i));
    const auto pair = certify(h, e.lambda, x0, SolverOptions{});
    ASSERT_TRUE(pair) << e.lambda;
    EXPECT_LE(pair->residual, 1e-9);
    EXPECT_EQ(pair->lambda, e.lambda);
  }
}

TEST(Certify, RejectsNonEigenvalue) {
  const auto h = generate(Hyperstar{3, 2});
  EXPECT_FALSE(certify(h, 0.7, DenseVector(h.n(), 0.5), SolverOptions{}).has_value());
}

TEST(Compare, Statuses) {
  SpectrumReport catalog;
  for (double v : {0.0, 1.0, 2.0}) {
    SpectrumEntry e;
    e.lambda = v;
    e.certified = true;
    catalog.add(e);
  }
  SpectrumEntry uncertified;
  uncertified.lambda = 0.5;
  catalog.add(uncertified);
  catalog.finalize();

  auto finding = [](double l) {
    OracleFinding f;
    f.lambda = l;
    return f;
  };
  const auto agree = spectrum_compare(catalog, {finding(0.0), finding(1.0 + 1e-9), finding(2.0)}, 1e-6);
  EXPECT_EQ(agree.status, CompareStatus::agree);
  EXPECT_EQ(agree.matched.size(), 3u);

  const auto subset = spectrum_compare(catalog, {finding(0.0), finding(2.0)}, 1e-6);
  EXPECT_EQ(subset.status, CompareStatus::oracle_subset);
  ASSERT_EQ(subset.catalog_only.size(), 1u);
  EXPECT_EQ(subset.catalog_only[0], 1.0);

  const auto disagree = spectrum_compare(catalog, {finding(0.0), finding(0.5), finding(1.0), finding(2.0)}, 1e-6);
  EXPECT_EQ(disagree.status, CompareStatus::disagree);
  ASSERT_EQ(disagree.oracle_only.size(), 1u);
  EXPECT_EQ(to_string(disagree.status), "disagree");
  EXPECT_EQ(to_string(CompareStatus::oracle_subset), "oracle-subset");
}

TEST(SpectrumReportMerge, TagsJoinAndWitnessKept) {
  const auto h = generate(Hyperstar{3, 2});
  SpectrumReport r;
  r.add(make_entry(2.0, "a", std::nullopt, 1e-9));
  r.add(make_entry(2.0 + 1e-10, "b", make_eigenpair(h, TensorKind::laplacian, 2.0, DenseVector{1, 0, 0, 0, 0}), 1e-9));
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].case_tag, "a; b");
  EXPECT_TRUE(r.entries[0].certified);
  EXPECT_NE(r.find(2.0, 1e-8), nullptr);
  EXPECT_EQ(r.find(3.0, 1e-8), nullptr);
}

}  // namespace
}  // namespace hyperlap
