#include "zass/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "zass/casas.hpp"
#include "zass/coeffs.hpp"
#include "zass/quadrature.hpp"

namespace zass {

namespace {

constexpr int kQuadNodes = 32;
constexpr int kQuadNodesCoarse = 16;
constexpr int kSuiteProductOrder = 30;
constexpr double kSuiteHadamardT = 0.5;
constexpr int kSuiteHadamardK = 40;

Scalar integrate_h(const GaussRule& rule, Scalar u, Scalar v) {
  Scalar acc{0.0};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * integrand(rule.nodes[i], u, v);
  return acc;
}

std::string side_name(Side side) {
  switch (side) {
    case Side::Right: return "right";
    case Side::Center: return "center";
    case Side::Left: return "left";
  }
  return "?";
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_scalar(Scalar z) {
  // + 0.0 folds negative zero so printed values do not depend on its sign.
  return format_number(z.real() + 0.0) + (z.imag() < 0 ? "-" : "+") + format_number(std::abs(z.imag())) + "i";
}

CheckResult CheckResult::make(std::string name, double residual, double tolerance, Metadata metadata) {
  CheckResult r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  r.metadata = std::move(metadata);
  return r;
}

void CheckReport::add(CheckResult r) {
  all_passed = all_passed && r.passed;
  results.push_back(std::move(r));
}

double default_tolerance(const AlgebraPair& pair) {
  return expm(pair.x() + pair.y()).frobenius() > 1e6 ? kLargeNormTolerance : kDefaultTolerance;
}

CheckResult check_disentangle(const AlgebraPair& pair, Side side, double tol) {
  const CMatrix& x = pair.x();
  const CMatrix& y = pair.y();
  const CMatrix& w = pair.w();
  const CMatrix lhs = expm(x + y);
  CoeffValue g;
  CMatrix rhs(pair.dim());
  switch (side) {
    case Side::Right:
      g = g_right(pair.u(), pair.v());
      rhs = expm(x) * expm(y) * expm(g.value * w);
      break;
    case Side::Center:
      g = g_center(pair.u(), pair.v());
      rhs = expm(x) * expm(g.value * w) * expm(y);
      break;
    case Side::Left:
      g = g_left(pair.u(), pair.v());
      rhs = expm(g.value * w) * expm(x) * expm(y);
      break;
  }
  return CheckResult::make("disentangle-" + side_name(side), rel_residual(lhs, rhs), tol,
                           {{"coefficient", format_scalar(g.value)},
                            {"method", std::string(to_string(g.method))},
                            {"terms_used", std::to_string(g.terms_used)}});
}

CheckResult check_swap(const AlgebraPair& pair, double tol) {
  const CoeffValue gamma = gamma_swap(pair.u(), pair.v());
  const CMatrix lhs = expm(pair.x()) * expm(pair.y());
  const CMatrix rhs = expm(pair.y()) * expm(pair.x()) * expm(gamma.value * pair.w());
  return CheckResult::make("swap", rel_residual(lhs, rhs), tol,
                           {{"coefficient", format_scalar(gamma.value)},
                            {"method", std::string(to_string(gamma.method))}});
}

CheckResult check_bch(const AlgebraPair& pair, double tol) {
  const CoeffValue f = f_bch(pair.u(), pair.v());
  const CMatrix lhs = expm(pair.x()) * expm(pair.y());
  const CMatrix rhs = expm(pair.x() + pair.y() + f.value * pair.w());
  return CheckResult::make("bch", rel_residual(lhs, rhs), tol,
                           {{"coefficient", format_scalar(f.value)},
                            {"method", std::string(to_string(f.method))}});
}

CheckResult check_ab_structure(const AlgebraPair& pair, double tol) {
  const Scalar gl = g_left(pair.u(), pair.v()).value;
  const Scalar f = f_bch(pair.u(), pair.v()).value;
  const CMatrix a = gl * pair.w();
  const CMatrix b = pair.x() + pair.y() + f * pair.w();
  return CheckResult::make("ab-structure", rel_residual(commutator(a, b), (pair.u() - pair.v()) * a), tol,
                           {{"g_left", format_scalar(gl)}, {"f", format_scalar(f)}});
}

CheckResult check_integral(const AlgebraPair& pair, double tol) {
  static const GaussRule fine = gauss_legendre01(kQuadNodes);
  static const GaussRule coarse = gauss_legendre01(kQuadNodesCoarse);
  const Scalar u = pair.u();
  const Scalar v = pair.v();
  const Scalar integral = integrate_h(fine, u, v);
  const Scalar integral_coarse = integrate_h(coarse, u, v);
  const Scalar g = g_right(u, v).value;
  const double scalar_err = std::abs(integral - g);
  const CMatrix lhs = expm(pair.x() + pair.y());
  const CMatrix rhs = expm(pair.x()) * expm(pair.y()) * expm(integral * pair.w());
  const double matrix_err = rel_residual(lhs, rhs);
  return CheckResult::make("integral", std::max(scalar_err, matrix_err), tol,
                           {{"integral_32", format_scalar(integral)},
                            {"integral_16", format_scalar(integral_coarse)},
                            {"quadrature_error_estimate", format_number(std::abs(integral - integral_coarse))},
                            {"g_right", format_scalar(g)},
                            {"scalar_error", format_number(scalar_err)},
                            {"matrix_residual", format_number(matrix_err)}});
}

CheckResult check_truncated_product(const AlgebraPair& pair, int N, double tol) {
  if (N < 2) throw std::invalid_argument("check_truncated_product: N must be >= 2");
  const std::vector<Scalar> cn = recurrence_coefficients(N, pair.u(), pair.v());
  const CMatrix lhs = expm(pair.x() + pair.y());
  CMatrix rhs = expm(pair.x()) * expm(pair.y());
  std::string sequence;
  double residual = 0.0;
  for (std::size_t i = 0; i < cn.size(); ++i) {
    rhs = rhs * expm(cn[i] * pair.w());
    residual = rel_residual(lhs, rhs);
    if (i > 0) sequence += ',';
    sequence += format_number(residual);
  }
  return CheckResult::make("truncated-product", residual, tol,
                           {{"N", std::to_string(N)}, {"residual_sequence", sequence}});
}

CheckResult check_hadamard(const AlgebraPair& pair, Scalar t, int K, double tol) {
  const CMatrix& x = pair.x();
  const CMatrix series = conjugate_series(x, pair.y(), t, K);
  const CMatrix direct = expm(-t * x) * pair.y() * expm(t * x);
  const bool in_radius = std::abs(t) * x.norm1() <= 2.0 && K >= 20;
  return CheckResult::make("hadamard", rel_residual(series, direct), tol,
                           {{"t", format_scalar(t)},
                            {"K", std::to_string(K)},
                            {"within_nominal_radius", in_radius ? "true" : "false"}});
}

CheckReport check_lindblad_application(Scalar alpha, Scalar beta, double tol) {
  if (alpha * beta == Scalar{0.0}) throw std::invalid_argument("check_lindblad_application: alpha*beta must be nonzero");
  const AlgebraPair pair = lindblad_pair();
  const CMatrix& up = pair.x();
  const CMatrix& down = pair.y();
  const CMatrix diff = up - down;
  const Scalar ab = alpha * beta;
  const CMatrix lhs = expm(alpha * up + beta * down);
  const CMatrix base = expm(alpha * up) * expm(beta * down);

  const Scalar em1 = std::exp(ab) - 1.0;
  const Scalar printed = -(em1 * em1) / (2.0 * ab);
  const Scalar structure = g_right(beta, -alpha).value * ab;

  CheckReport report;
  report.pair_name = pair.name();
  report.add(CheckResult::make("lindblad-printed-form", rel_residual(lhs, base * expm(printed * diff)), tol,
                               {{"coefficient", format_scalar(printed)},
                                {"identification", "g_r(ab,-ab)*ab"}}));
  report.add(CheckResult::make("lindblad-structure-form", rel_residual(lhs, base * expm(structure * diff)), tol,
                               {{"coefficient", format_scalar(structure)},
                                {"identification", "g_r(b,-a)*ab"}}));
  const bool p = report.results[0].passed;
  const bool s = report.results[1].passed;
  report.metadata = {{"alpha", format_scalar(alpha)},
                     {"beta", format_scalar(beta)},
                     {"passing_forms", p && s ? "both" : p ? "printed" : s ? "structure" : "neither"}};
  return report;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "disentangle-right", "disentangle-center", "disentangle-left", "swap", "bch",
      "ab-structure",      "integral",           "truncated-product", "hadamard"};
  return names;
}

CheckResult run_named_check(const std::string& name, const AlgebraPair& pair, double tol) {
  if (name == "disentangle-right") return check_disentangle(pair, Side::Right, tol);
  if (name == "disentangle-center") return check_disentangle(pair, Side::Center, tol);
  if (name == "disentangle-left") return check_disentangle(pair, Side::Left, tol);
  if (name == "swap") return check_swap(pair, tol);
  if (name == "bch") return check_bch(pair, tol);
  if (name == "ab-structure") return check_ab_structure(pair, tol);
  if (name == "integral") return check_integral(pair, tol);
  if (name == "truncated-product") return check_truncated_product(pair, kSuiteProductOrder, tol);
  if (name == "hadamard") return check_hadamard(pair, kSuiteHadamardT, kSuiteHadamardK, tol);
  throw std::invalid_argument("unknown check '" + name + "'");
}

CheckReport run_suite(const AlgebraPair& pair, double tol) {
  CheckReport report;
  report.pair_name = pair.name();
  for (const auto& name : check_names()) {
    try {
      report.add(run_named_check(name, pair, tol));
    } catch (const std::exception& e) {
      CheckResult failed;
      failed.name = name;
      failed.residual = std::numeric_limits<double>::infinity();
      failed.tolerance = tol;
      failed.passed = false;
      failed.metadata = {{"error", e.what()}};
      report.add(std::move(failed));
    }
  }
  report.metadata = {{"u", format_scalar(pair.u())}, {"v", format_scalar(pair.v())}, {"c", format_scalar(pair.c())}};
  return report;
}

}  // namespace zass
