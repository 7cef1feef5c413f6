#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "zass/coeffs.hpp"
#include "zass/verify.hpp"

namespace zass {
namespace {

std::string meta(const Metadata& m, const std::string& key) {
  for (const auto& [k, v] : m)
    if (k == key) return v;
  return {};
}

TEST(CheckResult, PassedMatchesTolerance) {
  EXPECT_TRUE(CheckResult::make("a", 1e-11, 1e-10).passed);
  EXPECT_TRUE(CheckResult::make("a", 1e-10, 1e-10).passed);
  EXPECT_FALSE(CheckResult::make("a", 2e-10, 1e-10).passed);
  EXPECT_FALSE(CheckResult::make("a", std::nan(""), 1e-10).passed);
}

TEST(CheckReport, AggregatesPasses) {
  CheckReport r;
  r.add(CheckResult::make("a", 0.0, 1.0));
  EXPECT_TRUE(r.all_passed);
  r.add(CheckResult::make("b", 2.0, 1.0));
  r.add(CheckResult::make("c", 0.0, 1.0));
  EXPECT_FALSE(r.all_passed);
  EXPECT_EQ(r.results.size(), 3u);
}

TEST(Disentangle, Heisenberg) {
  const auto p = heisenberg_3x3(1.0);
  const auto r = check_disentangle(p, Side::Right, 1e-10);
  EXPECT_LE(r.residual, 1e-14);
  EXPECT_EQ(meta(r.metadata, "coefficient"), format_scalar(-0.5));
}

TEST(Disentangle, AffineAllSides) {
  const auto p = affine_2x2(1.0, 2.0, 1.0, 1.0);
  for (Side s : {Side::Right, Side::Center, Side::Left}) EXPECT_LE(check_disentangle(p, s, 1e-10).residual, 1e-11);
}

TEST(Disentangle, Su11Raise) {
  const auto r = check_disentangle(su11_pair(Su11Generator::RaiseSq, 8), Side::Right, 1e-10);
  EXPECT_LE(r.residual, 1e-10);
  EXPECT_EQ(meta(r.metadata, "coefficient"), format_scalar((3.0 * std::exp(-2.0) - 1.0) / 4.0));
}

TEST(Disentangle, WrongCoefficientIsDetected) {
  // Guard against a harness that passes everything: swap the sides'
  // coefficients by hand and confirm the residual is large.
  const auto p = affine_2x2(1.0, 2.0);
  const CMatrix lhs = expm(p.x() + p.y());
  const CMatrix wrong = expm(p.x()) * expm(p.y()) * expm(g_left(1.0, 2.0).value * p.w());
  EXPECT_GT(rel_residual(lhs, wrong), 1e-3);
}

TEST(Swap, Cases) {
  const auto h = check_swap(heisenberg_3x3(1.0), 1e-10);
  EXPECT_LE(h.residual, 1e-14);
  EXPECT_EQ(meta(h.metadata, "coefficient"), format_scalar(1.0));
  EXPECT_LE(check_swap(affine_2x2(1.0, -1.0, 1.0, 2.0), 1e-10).residual, 1e-11);
}

TEST(Bch, Cases) {
  EXPECT_LE(check_bch(heisenberg_3x3(1.0), 1e-10).residual, 1e-14);
  EXPECT_LE(check_bch(affine_2x2(2.0, 0.0, 1.0, 0.0), 1e-10).residual, 1e-11);
  EXPECT_LE(check_bch(affine_2x2(1.0, 1.0, 1.0, 1.0), 1e-10).residual, 1e-11);
}

TEST(Bch, PoleThrows) {
  const Scalar two_pi_i(0.0, 2.0 * M_PI);
  EXPECT_THROW(check_bch(affine_2x2(two_pi_i, 0.0), 1e-10), PoleError);
}

TEST(AbStructure, Cases) {
  EXPECT_LE(check_ab_structure(affine_2x2(1.0, 2.0), 1e-10).residual, 1e-12);
  EXPECT_LE(check_ab_structure(affine_2x2(1.5, 1.5), 1e-10).residual, 1e-12);
  EXPECT_EQ(check_ab_structure(heisenberg_3x3(1.0), 1e-10).residual, 0.0);
}

TEST(Integral, Cases) {
  const auto h = check_integral(heisenberg_3x3(1.0), 1e-10);
  EXPECT_LE(std::abs(std::stod(meta(h.metadata, "scalar_error"))), 1e-13);
  EXPECT_TRUE(h.passed);

  const auto a = check_integral(affine_2x2(1.3, -0.7), 1e-10);
  EXPECT_LE(std::stod(meta(a.metadata, "scalar_error")), 1e-12);
  EXPECT_FALSE(meta(a.metadata, "integral_16").empty());

  EXPECT_LE(check_integral(su11_pair(Su11Generator::RaiseSq, 8), 1e-10).residual, 1e-10);
}

TEST(TruncatedProduct, Cases) {
  EXPECT_LE(check_truncated_product(heisenberg_3x3(1.0), 2, 1e-10).residual, 1e-14);
  EXPECT_LE(check_truncated_product(affine_2x2(1.0, -1.0, 1.0, 2.0), 30, 1e-10).residual, 1e-10);
  const auto p = affine_2x2(2.0, 1.0, 1.0, 1.0);
  EXPECT_GT(check_truncated_product(p, 10, 1e-10).residual, check_truncated_product(p, 20, 1e-10).residual);
}

TEST(TruncatedProduct, ResidualSequenceRecorded) {
  const auto r = check_truncated_product(affine_2x2(1.0, 2.0), 6, 1e-10);
  const std::string seq = meta(r.metadata, "residual_sequence");
  EXPECT_EQ(std::count(seq.begin(), seq.end(), ',') + 1, 5);
}

TEST(Hadamard, Cases) {
  EXPECT_EQ(check_hadamard(affine_2x2(1.0, 2.0), 0.0, 40, 1e-10).residual, 0.0);
  EXPECT_LE(check_hadamard(heisenberg_3x3(1.0), 1.0, 5, 1e-10).residual, 1e-14);
  EXPECT_LE(check_hadamard(affine_2x2(1.0, 2.0), 0.5, 40, 1e-10).residual, 1e-12);
}

TEST(Lindblad, ReportBothForms) {
  const auto r = check_lindblad_application(0.3, 0.7, 1e-10);
  ASSERT_EQ(r.results.size(), 2u);
  EXPECT_EQ(r.results[0].name, "lindblad-printed-form");
  EXPECT_EQ(r.results[1].name, "lindblad-structure-form");
  EXPECT_TRUE(r.results[0].passed || r.results[1].passed);
  EXPECT_EQ(meta(r.metadata, "passing_forms"), "structure");
}

TEST(Lindblad, PrintedCoefficientAtUnitParameters) {
  const auto r = check_lindblad_application(1.0, 1.0, 1e-10);
  const double printed = -std::pow(std::exp(1.0) - 1.0, 2) / 2.0;
  EXPECT_NEAR(printed, -1.476, 1e-3);
  EXPECT_EQ(meta(r.results[0].metadata, "coefficient"), format_scalar(printed));
  EXPECT_EQ(meta(r.results[1].metadata, "coefficient"), format_scalar(g_right(1.0, -1.0).value));
  EXPECT_EQ(meta(r.metadata, "passing_forms"), "both");
}

TEST(Lindblad, SmallParameterLimitsAgree) {
  // Both coefficients tend to -ab/2.
  for (double s : {1e-2, 1e-3}) {
    const double a = 0.3 * s, b = 0.7 * s, ab = a * b;
    const double printed = -std::pow(std::expm1(ab), 2) / (2.0 * ab);
    const Scalar structure = g_right(b, -a).value * ab;
    EXPECT_LE(std::abs(printed / (-ab / 2.0) - 1.0), 2.0 * ab);
    EXPECT_LE(std::abs(structure / (-ab / 2.0) - 1.0), 2.0 * s);
  }
}

TEST(Suite, SpecPairs) {
  for (const auto& p : {heisenberg_3x3(1.0), affine_2x2(1.0, 2.0, 1.0, 1.0)}) {
    const auto r = run_suite(p, 1e-10);
    EXPECT_TRUE(r.all_passed) << p.name();
    EXPECT_EQ(r.results.size(), check_names().size());
    for (std::size_t i = 0; i < r.results.size(); ++i) EXPECT_EQ(r.results[i].name, check_names()[i]);
  }
  EXPECT_TRUE(run_suite(su11_pair(Su11Generator::LowerSq, 12), 1e-9).all_passed);
}

TEST(Suite, ErrorsBecomeFailedResults) {
  const Scalar two_pi_i(0.0, 2.0 * M_PI);
  const auto r = run_suite(affine_2x2(two_pi_i, 0.0), 1e-10);
  EXPECT_FALSE(r.all_passed);
  bool saw_error = false;
  for (const auto& res : r.results) {
    if (!meta(res.metadata, "error").empty()) {
      saw_error = true;
      EXPECT_FALSE(res.passed);
      EXPECT_TRUE(std::isinf(res.residual));
    }
  }
  EXPECT_TRUE(saw_error);
}

TEST(Suite, DefaultToleranceRelaxesForLargeNorms) {
  EXPECT_EQ(default_tolerance(affine_2x2(1.0, 2.0)), kDefaultTolerance);
  EXPECT_EQ(default_tolerance(su11_pair(Su11Generator::LowerSq, 16)), kLargeNormTolerance);
}

TEST(Suite, NamedChecks) {
  const auto p = affine_2x2(1.0, 2.0);
  for (const auto& name : check_names()) EXPECT_EQ(run_named_check(name, p, 1e-10).name, name);
  EXPECT_THROW(run_named_check("bogus", p, 1e-10), std::invalid_argument);
}

}  // namespace
}  // namespace zass
