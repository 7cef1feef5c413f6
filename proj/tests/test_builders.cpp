#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "zass/builders.hpp"
#include "zass/coeffs.hpp"

namespace zass {
namespace {

void expect_valid(const AlgebraPair& p) {
  EXPECT_EQ(p.w(), commutator(p.x(), p.y())) << p.name();
  EXPECT_LE(p.ad_residual(), 1e-12) << p.name();
  EXPECT_LE(rel_residual(commutator(p.x(), p.w()), p.v() * p.w()), 1e-12) << p.name();
  EXPECT_LE(rel_residual(commutator(p.y(), p.w()), -p.u() * p.w()), 1e-12) << p.name();
}

void expect_round_trip(const AlgebraPair& p) {
  const StructureFit f = infer_uvc(p.x(), p.y());
  EXPECT_LE(f.fit_residual, 1e-12) << p.name();
  EXPECT_LE(std::abs(f.u - p.u()), 1e-12 * (1.0 + std::abs(p.u()))) << p.name();
  EXPECT_LE(std::abs(f.v - p.v()), 1e-12 * (1.0 + std::abs(p.v()))) << p.name();
  EXPECT_LE(std::abs(f.c - p.c()), 1e-12 * (1.0 + std::abs(p.c()))) << p.name();
}

std::vector<AlgebraPair> sample_pairs() {
  std::vector<AlgebraPair> out;
  out.push_back(affine_2x2(1.0, 2.0));
  out.push_back(affine_2x2(2.0, 0.0, 1.0, 0.0));
  out.push_back(affine_2x2(Scalar(0.5, -1.0), Scalar(0.0, 2.0), 1.0, 1.0));
  out.push_back(shift_center(affine_2x2(1.0, 2.0), 5.0));
  out.push_back(shift_center(affine_2x2(0.0, 3.0), Scalar(-1.0, 0.5)));
  for (int N : {4, 6, 8, 12, 16}) {
    out.push_back(su11_pair(Su11Generator::RaiseSq, N));
    out.push_back(su11_pair(Su11Generator::LowerSq, N));
  }
  out.push_back(lindblad_pair());
  return out;
}

TEST(Builders, InvariantSuiteOnEveryBuilder) {
  for (const auto& p : sample_pairs()) {
    expect_valid(p);
    expect_round_trip(p);
  }
  for (Scalar c : {Scalar(1.0), Scalar(2.0), Scalar(0.0, -3.0)}) expect_valid(heisenberg_3x3(c));
}

TEST(Affine2x2, SpecCases) {
  const auto p = affine_2x2(1.0, 2.0, 1.0, 1.0);
  EXPECT_EQ(p.w(), 3.0 * CMatrix::unit(2, 0, 1));
  EXPECT_EQ(p.w(), p.x() + 2.0 * p.y());
  EXPECT_EQ(p.c(), Scalar(0.0));

  const auto q = affine_2x2(2.0, 0.0, 1.0, 0.0);
  EXPECT_EQ(q.w(), 2.0 * CMatrix::unit(2, 0, 1));
  EXPECT_EQ(q.w(), 2.0 * q.x());

  EXPECT_THROW(affine_2x2(0.0, 0.0, 1.0, 1.0), DegenerateError);
  EXPECT_THROW(affine_2x2(1.0, -1.0, 1.0, 1.0), DegenerateError);
  EXPECT_NO_THROW(affine_2x2(1.0, -1.0, 1.0, 2.0));
}

TEST(ShiftCenter, Behaviour) {
  const auto base = affine_2x2(1.0, 2.0, 1.0, 1.0);
  const auto shifted = shift_center(base, 5.0);
  const StructureFit f = infer_uvc(shifted.x(), shifted.y());
  EXPECT_LE(std::abs(f.u - 1.0), 1e-14);
  EXPECT_LE(std::abs(f.v - 2.0), 1e-14);
  EXPECT_LE(std::abs(f.c - 5.0), 1e-14);
  EXPECT_LE(f.fit_residual, 1e-14);
  EXPECT_EQ(shifted.w(), base.w());

  const auto same = shift_center(base, 0.0);
  EXPECT_EQ(same.x(), base.x());
  EXPECT_EQ(same.y(), base.y());

  EXPECT_THROW(shift_center(heisenberg_3x3(1.0), 1.0), DegenerateError);
}

TEST(Heisenberg, CentralCommutator) {
  const auto p = heisenberg_3x3(1.0);
  EXPECT_EQ(p.w(), CMatrix::unit(3, 0, 2));
  EXPECT_EQ(commutator(p.x(), p.w()), CMatrix::zero(3));
  EXPECT_EQ(commutator(p.y(), p.w()), CMatrix::zero(3));
  EXPECT_EQ(heisenberg_3x3(2.0).w(), 2.0 * CMatrix::unit(3, 0, 2));
  EXPECT_THROW(heisenberg_3x3(0.0), DegenerateError);
}

TEST(Heisenberg, GlauberFormula) {
  for (Scalar c : {Scalar(1.0), Scalar(2.0)}) {
    const auto p = heisenberg_3x3(c);
    const CMatrix lhs = expm(p.x() + p.y());
    const CMatrix rhs = expm(p.x()) * expm(p.y()) * expm(-0.5 * p.w());
    EXPECT_LE(rel_residual(lhs, rhs), 1e-14);
  }
}

TEST(Su11, TruncationIntroducesNoBoundaryDefect) {
  // The relation holds exactly in exact arithmetic; in floating point the only
  // error is rounding of k*x - (k+2)*x, so every entry is within a few ulps.
  for (int N = 4; N <= 16; ++N) {
    const auto r = su11_pair(Su11Generator::RaiseSq, N);
    const auto l = su11_pair(Su11Generator::LowerSq, N);
    const CMatrix dr = commutator(r.x(), r.y()) + 2.0 * r.x();
    const CMatrix dl = commutator(l.x(), l.y()) - 2.0 * l.x();
    for (std::size_t i = 0; i < dr.dim(); ++i) {
      for (std::size_t j = 0; j < dr.dim(); ++j) {
        const double scale = 2.0 * (N - 1) * std::abs(r.x()(i, j) + l.x()(i, j));
        EXPECT_LE(std::abs(dr(i, j)), 4.0 * std::numeric_limits<double>::epsilon() * scale) << N;
        EXPECT_LE(std::abs(dl(i, j)), 4.0 * std::numeric_limits<double>::epsilon() * scale) << N;
      }
    }
    EXPECT_LE(r.ad_residual(), 1e-12);
    EXPECT_LE(l.ad_residual(), 1e-12);
  }
  for (int N = 4; N <= 6; ++N) {
    const auto r = su11_pair(Su11Generator::RaiseSq, N);
    EXPECT_EQ(commutator(r.x(), r.y()) + 2.0 * r.x(), CMatrix::zero(N)) << N;
  }
  EXPECT_THROW(su11_pair(Su11Generator::RaiseSq, 3), DimensionError);
  EXPECT_THROW(su11_pair(Su11Generator::LowerSq, 17), DimensionError);
}

TEST(Su11, RaiseEntriesAndStructureConstants) {
  const auto p = su11_pair(Su11Generator::RaiseSq, 6);
  EXPECT_EQ(p.u(), Scalar(-2.0));
  EXPECT_EQ(p.v(), Scalar(0.0));
  for (int k = 0; k + 2 < 6; ++k) EXPECT_DOUBLE_EQ(p.x()(k + 2, k).real(), std::sqrt((k + 1.0) * (k + 2.0)));
  const StructureFit f = infer_uvc(p.x(), p.y());
  EXPECT_LE(std::abs(f.u + 2.0), 1e-14);
  EXPECT_LE(std::abs(f.v), 1e-14);
  EXPECT_LE(std::abs(f.c), 1e-14);
  EXPECT_LE(f.fit_residual, 1e-14);
}

TEST(Su11, PrintedCoefficientRaise) {
  const auto p = su11_pair(Su11Generator::RaiseSq, 8);
  const double g = (3.0 * std::exp(-2.0) - 1.0) / 4.0;
  const CMatrix lhs = expm(p.x() + p.y());
  const CMatrix rhs = expm(p.x()) * expm(p.y()) * expm((g * -2.0) * p.x());
  EXPECT_LE(rel_residual(lhs, rhs), 1e-10);
}

TEST(Su11, PrintedCoefficientLower) {
  const auto p = su11_pair(Su11Generator::LowerSq, 12);
  const double g = -(std::exp(2.0) + 1.0) / 4.0;
  const CMatrix lhs = expm(p.x() + p.y());
  const CMatrix rhs = expm(p.x()) * expm(p.y()) * expm((g * 2.0) * p.x());
  EXPECT_LE(rel_residual(lhs, rhs), 1e-9);
}

TEST(Lindblad, AcceptedConventionAndShape) {
  const auto p = lindblad_pair();
  EXPECT_EQ(p.dim(), 4u);
  EXPECT_EQ(p.u(), Scalar(1.0));
  EXPECT_EQ(p.v(), Scalar(-1.0));
  EXPECT_EQ(p.name(), "lindblad[sigma/sqrt2,untransposed]");
  EXPECT_LE(rel_residual(p.w(), p.x() - p.y()), 1e-12);
}

TEST(Lindblad, TransposedConventionsFailTheCommutator) {
  // With the transposed Kronecker factors [D_up, D_down] leaves span{D_up, D_down, 1}
  // at any Pauli scale, so no normalization alone can satisfy the relation.
  int transposed = 0;
  for (const auto& conv : lindblad_conventions()) {
    if (!conv.transpose) continue;
    ++transposed;
    const auto [up, down] = lindblad_dissipators(conv);
    EXPECT_GT(rel_residual(commutator(up, down), up - down), 1e-3) << conv.name;
    EXPECT_GT(infer_uvc(up, down).fit_residual, 1e-3) << conv.name;
  }
  EXPECT_EQ(transposed, 2);
  EXPECT_TRUE(lindblad_conventions().front().transpose);
  EXPECT_TRUE(lindblad_conventions().front().normalized);
}

TEST(BuiltinPair, Names) {
  for (const auto& name : builtin_pair_names()) {
    const auto p = builtin_pair(name);
    expect_valid(p);
  }
  EXPECT_EQ(builtin_pair_names().size(), 5u);
  EXPECT_THROW(builtin_pair("nope"), std::invalid_argument);
}

}  // namespace
}  // namespace zass
