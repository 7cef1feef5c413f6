#pragma once

// Runs each disentangling identity on concrete matrix realizations and
// reports relative Frobenius residuals.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zass/builders.hpp"

namespace zass {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kLargeNormTolerance = 1e-9;

// Ordered key/value diagnostics. Values are preformatted text; numbers use 17
// significant digits.
using Metadata = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = kDefaultTolerance;
  bool passed = false;  // residual <= tolerance
  Metadata metadata;

  static CheckResult make(std::string name, double residual, double tolerance, Metadata metadata = {});
};

struct CheckReport {
  std::string pair_name;
  std::vector<CheckResult> results;
  bool all_passed = true;  // every result passed
  Metadata metadata;

  void add(CheckResult r);
};

enum class Side : std::uint8_t { Right, Center, Left };

// 1e-10, or 1e-9 when ||e^{X+Y}||_F exceeds 1e6.
double default_tolerance(const AlgebraPair& pair);

// e^{X+Y} against e^X e^Y e^{g_r W}, e^X e^{g_c W} e^Y or e^{g_l W} e^X e^Y.
CheckResult check_disentangle(const AlgebraPair& pair, Side side, double tol);

// e^X e^Y against e^Y e^X e^{gamma W}.
CheckResult check_swap(const AlgebraPair& pair, double tol);

// e^X e^Y against e^{X + Y + f W}. Throws PoleError from f_bch.
CheckResult check_bch(const AlgebraPair& pair, double tol);

// With A = g_l W and B = X + Y + f W, [A,B] against (u - v) A.
CheckResult check_ab_structure(const AlgebraPair& pair, double tol);

// I = int_0^1 h(s) ds by 32-node Gauss-Legendre (16-node estimate in the
// metadata); residual is max(|I - g_r|, residual of e^{X+Y} vs e^X e^Y e^{I W}).
// The integrand values are all multiples of W and commute, so the time-ordered
// exponential is the plain exponential of the integral.
CheckResult check_integral(const AlgebraPair& pair, double tol);

// e^{X+Y} against e^X e^Y prod_{n=2}^{N} e^{C_n W} with C_n from the
// recurrence. Metadata holds the residual after each factor.
CheckResult check_truncated_product(const AlgebraPair& pair, int N, double tol);

// conjugate_series(X, Y, t, K) against e^{-tX} Y e^{tX}.
CheckResult check_hadamard(const AlgebraPair& pair, Scalar t, int K, double tol);

// e^{aD_up + bD_down} against two candidate right factors:
//   printed:   exp(-((e^{ab} - 1)^2 / (2ab)) (D_up - D_down))
//   structure: exp(g_r(b, -a) ab (D_up - D_down)), from [aD_up, bD_down] = b(aD_up) - a(bD_down).
// Report metadata "passing_forms" is one of printed, structure, both, neither.
CheckReport check_lindblad_application(Scalar alpha, Scalar beta, double tol);

// All three disentangle sides, swap, bch, ab-structure, integral, truncated
// product (N = 30) and Hadamard (t = 0.5, K = 40). A check that throws is
// recorded as failed with the message under "error".
CheckReport run_suite(const AlgebraPair& pair, double tol);

// Names accepted by run_named_check, in suite order.
const std::vector<std::string>& check_names();
// Runs a single suite check by name; throws std::invalid_argument otherwise.
CheckResult run_named_check(const std::string& name, const AlgebraPair& pair, double tol);

std::string format_number(double x);
std::string format_scalar(Scalar z);

}  // namespace zass
