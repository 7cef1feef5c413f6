#pragma once

// Scalar coefficients of the disentangling formulas for pairs with
// [X,Y] = uX + vY + c*1:
//
//   e^{X+Y} = e^X e^Y e^{g_r W} = e^X e^{g_c W} e^Y = e^{g_l W} e^X e^Y
//   e^X e^Y = e^{X+Y+f W}
//   e^X e^Y = e^Y e^X e^{gamma W}
//
// with W = [X,Y]. Every closed form has removable singularities on the lines
// u = 0, v = 0 and u = v; near them evaluation switches to series or
// divided-difference paths. The right-sided coefficient is the second-order
// divided difference of exp on the nodes {0, u-v, u}:
//
//   g_r(u,v) = -exp[0, u-v, u] = (phi1(u-v) - phi1(u)) / v.

#include <cstdint>
#include <string_view>

#include "zass/types.hpp"

namespace zass {

enum class Method : std::uint8_t { ClosedForm, Series, DividedDifference };

std::string_view to_string(Method m);

struct CoeffValue {
  Scalar value{};
  Method method = Method::ClosedForm;
  int terms_used = 0;  // zero iff method == ClosedForm
};

// Closed forms are used when min(|u|, |v|, |u-v|) >= kBranchSwitch.
inline constexpr double kBranchSwitch = 0.25;
// Near the origin (max(|u|, |v|, |u-v|) < kSeriesRadius) the everywhere
// convergent double series is used instead of divided differences.
inline constexpr double kSeriesRadius = 0.5;
// Series accumulation stops once |term| < kSeriesRelTol * |partial sum|.
inline constexpr double kSeriesRelTol = 1e-18;
inline constexpr int kMaxSeriesTerms = 64;

// (e^x - 1)/x, continued to 1 at x = 0.
Scalar phi1(Scalar x);
CoeffValue phi1_eval(Scalar x);

CoeffValue g_right(Scalar u, Scalar v);
CoeffValue g_left(Scalar u, Scalar v);
CoeffValue g_center(Scalar u, Scalar v);

// BCH coefficient f(u,v). Throws PoleError when e^u = e^v with u != v.
CoeffValue f_bch(Scalar u, Scalar v);

// Swap coefficient gamma(u,v) = -(g_r(-v,-u) + g_r(u,v)) = phi1(u) phi1(-v).
CoeffValue gamma_swap(Scalar u, Scalar v);

// Evaluates g_r along a forced path, bypassing branch selection. The closed
// form evaluated on a singular line yields non-finite values.
CoeffValue g_right_via(Method path, Scalar u, Scalar v);

// Zassenhaus exponent C_n(u,v), n >= 2, so that C_n(X,Y) = C_n(u,v) W.
Scalar zass_coeff(int n, Scalar u, Scalar v);

// Commuting integrand h(s) of the integral representation; int_0^1 h = g_r.
Scalar integrand(Scalar s, Scalar u, Scalar v);

}  // namespace zass
