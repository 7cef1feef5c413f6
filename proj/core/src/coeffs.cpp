#include "zass/coeffs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zass {

namespace {

// e^z - 1 without cancellation in the real part for small Re z.
Scalar expm1c(Scalar z) {
  const double a = z.real();
  const double b = z.imag();
  if (b == 0.0) return {std::expm1(a), 0.0};
  const double s = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

// Taylor series of phi1: sum_k x^k / (k+1)!.
CoeffValue phi1_series(Scalar x) {
  Scalar sum{0.0};
  Scalar term{1.0};
  int k = 0;
  while (k < kMaxSeriesTerms) {
    sum += term;
    ++k;
    if (std::abs(term) < kSeriesRelTol * std::abs(sum)) break;
    term *= x / static_cast<double>(k + 1);
  }
  return {sum, Method::Series, k};
}

// First-order divided difference exp[x,y] = e^x phi1(y - x).
CoeffValue exp_dd1(Scalar x, Scalar y) {
  CoeffValue p = phi1_eval(y - x);
  p.value *= std::exp(x);
  return p;
}

Scalar g_right_closed(Scalar u, Scalar v) {
  const Scalar eu = std::exp(u);
  const Scalar num = u * (std::exp(u - v) - eu) + v * expm1c(u);
  return num / (u * v * (u - v));
}

// -exp[0, u-v, u] = -sum_{k>=0} h_k(u-v, u) / (k+2)!, with h_k the complete
// homogeneous symmetric polynomial of degree k. Converges everywhere.
CoeffValue g_right_series(Scalar u, Scalar v) {
  const Scalar a = u - v;
  const Scalar b = u;
  const double r = std::max(std::abs(a), std::abs(b));

  Scalar h{1.0};     // h_k(a, b)
  Scalar a_pow{1.0}; // a^k
  double inv_fact = 0.5;  // 1/(k+2)!
  double r_pow = 1.0;     // r^k
  Scalar sum{0.0};
  int k = 0;
  while (k < kMaxSeriesTerms) {
    sum += h * inv_fact;
    // |h_k| <= (k+1) r^k bounds the current term even when h_k cancels.
    const double bound = static_cast<double>(k + 1) * r_pow * inv_fact;
    ++k;
    if (bound < kSeriesRelTol * std::abs(sum)) break;
    a_pow *= a;
    h = b * h + a_pow;
    inv_fact /= static_cast<double>(k + 2);
    r_pow *= r;
  }
  return {-sum, Method::Series, k};
}

// -exp[p,q,r] with (p,r) the most widely separated pair of nodes, so the
// final quotient never divides by a small separation.
CoeffValue g_right_divided(Scalar u, Scalar v) {
  std::array<Scalar, 3> nodes{Scalar{0.0}, u - v, u};
  const std::array<double, 3> sep{std::abs(nodes[1] - nodes[0]), std::abs(nodes[2] - nodes[0]),
                                  std::abs(nodes[2] - nodes[1])};
  // sep[0]: (0,1), sep[1]: (0,2), sep[2]: (1,2)
  const auto widest = std::distance(sep.begin(), std::max_element(sep.begin(), sep.end()));
  Scalar p, q, r;
  switch (widest) {
    case 0: p = nodes[0]; r = nodes[1]; q = nodes[2]; break;
    case 1: p = nodes[0]; r = nodes[2]; q = nodes[1]; break;
    default: p = nodes[1]; r = nodes[2]; q = nodes[0]; break;
  }
  const CoeffValue right = exp_dd1(q, r);
  const CoeffValue left = exp_dd1(p, q);
  const Scalar dd2 = (right.value - left.value) / (r - p);
  return {-dd2, Method::DividedDifference, right.terms_used + left.terms_used};
}

double min_sep(Scalar u, Scalar v) {
  return std::min({std::abs(u), std::abs(v), std::abs(u - v)});
}

double max_sep(Scalar u, Scalar v) {
  return std::max({std::abs(u), std::abs(v), std::abs(u - v)});
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Series: return "series";
    case Method::DividedDifference: return "divided-difference";
  }
  return "unknown";
}

CoeffValue phi1_eval(Scalar x) {
  if (std::abs(x) > kBranchSwitch) return {expm1c(x) / x, Method::ClosedForm, 0};
  return phi1_series(x);
}

Scalar phi1(Scalar x) { return phi1_eval(x).value; }

CoeffValue g_right_via(Method path, Scalar u, Scalar v) {
  switch (path) {
    case Method::ClosedForm: return {g_right_closed(u, v), Method::ClosedForm, 0};
    case Method::Series: return g_right_series(u, v);
    case Method::DividedDifference: return g_right_divided(u, v);
  }
  throw std::invalid_argument("g_right_via: unknown method");
}

CoeffValue g_right(Scalar u, Scalar v) {
  if (min_sep(u, v) >= kBranchSwitch) return g_right_via(Method::ClosedForm, u, v);
  if (max_sep(u, v) < kSeriesRadius) return g_right_series(u, v);
  return g_right_divided(u, v);
}

CoeffValue g_left(Scalar u, Scalar v) { return g_right(v, u); }

CoeffValue g_center(Scalar u, Scalar v) {
  CoeffValue gl = g_left(u, v);
  gl.value *= std::exp(-v);
  return gl;
}

CoeffValue f_bch(Scalar u, Scalar v) {
  const Scalar d = u - v;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double k = std::round(d.imag() / two_pi);
  if (k != 0.0 && std::abs(d - Scalar{0.0, two_pi * k}) <= 1e-12 * (1.0 + std::abs(d))) {
    throw PoleError("f_bch: e^u = e^v with u != v (u - v = 2*pi*i*" +
                    std::to_string(static_cast<long long>(k)) + ")");
  }

  CoeffValue out;
  if (min_sep(u, v) >= kBranchSwitch) {
    const Scalar eu = std::exp(u);
    const Scalar ev = std::exp(v);
    const Scalar num = u * eu * expm1c(v) - v * ev * expm1c(u);
    out = {num / (u * v * (eu - ev)), Method::ClosedForm, 0};
  } else {
    // 1 + x f(x,0) = 1/phi1(-x) turns the BCH relation for g_l into
    // f(u,v) = -g_l(u,v) / phi1(v - u), which is regular on all three lines.
    const CoeffValue gl = g_left(u, v);
    const CoeffValue p = phi1_eval(v - u);
    out = {-gl.value / p.value, gl.method, gl.terms_used + p.terms_used};
  }
  if (!is_finite(out.value)) throw PoleError("f_bch: non-finite value near a pole");
  return out;
}

CoeffValue gamma_swap(Scalar u, Scalar v) {
  const CoeffValue a = phi1_eval(u);
  const CoeffValue b = phi1_eval(-v);
  const bool closed = a.method == Method::ClosedForm && b.method == Method::ClosedForm;
  return {a.value * b.value, closed ? Method::ClosedForm : Method::Series,
          a.terms_used + b.terms_used};
}

Scalar zass_coeff(int n, Scalar u, Scalar v) {
  if (n < 2) throw std::invalid_argument("zass_coeff: n must be >= 2");
  // C_n = -h_{n-2}(u-v, u) / n!
  const Scalar a = u - v;
  const Scalar b = u;
  const int m = n - 2;
  Scalar h{0.0};
  Scalar a_pow{1.0};
  for (int j = 0; j <= m; ++j) {
    Scalar b_pow{1.0};
    for (int i = 0; i < m - j; ++i) b_pow *= b;
    h += a_pow * b_pow;
    a_pow *= a;
  }
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  return -h / fact;
}

Scalar integrand(Scalar s, Scalar u, Scalar v) {
  return -s * std::exp(s * u) * phi1(-s * v);
}

}  // namespace zass
