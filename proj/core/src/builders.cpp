#include "zass/builders.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace zass {

namespace {

constexpr double kAdTolerance = 1e-12;

std::string label(Scalar z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%g%+gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace

AlgebraPair::AlgebraPair(CMatrix x, CMatrix y, Scalar u, Scalar v, Scalar c, std::string name)
    : x_(std::move(x)), y_(std::move(y)), w_(commutator(x_, y_)), u_(u), v_(v), c_(c), name_(std::move(name)) {
  if (w_.frobenius() == 0.0) {
    throw DegenerateError("AlgebraPair '" + name_ + "': [X,Y] = 0, every identity holds trivially");
  }
  const double ad = ad_residual();
  if (!(ad <= kAdTolerance)) {
    throw Error("AlgebraPair '" + name_ + "': ad relations [X,W] = vW, [Y,W] = -uW violated (residual " +
                std::to_string(ad) + ")");
  }
}

double AlgebraPair::ad_residual() const {
  const double rx = rel_residual(commutator(x_, w_), v_ * w_);
  const double ry = rel_residual(commutator(y_, w_), -u_ * w_);
  return std::max(rx, ry);
}

AlgebraPair affine_2x2(Scalar u, Scalar v, Scalar b, Scalar d) {
  const Scalar k = u * b + v * d;
  if (std::abs(k) <= 1e-14 * (std::abs(u * b) + std::abs(v * d)) || k == Scalar{0.0}) {
    throw DegenerateError("affine_2x2: ub + vd = 0 gives a vanishing commutator");
  }
  CMatrix x{{v, b}, {0.0, 0.0}};
  CMatrix y{{-u, d}, {0.0, 0.0}};
  return AlgebraPair(std::move(x), std::move(y), u, v, 0.0,
                     "affine2(u=" + label(u) + ",v=" + label(v) + ")");
}

AlgebraPair shift_center(const AlgebraPair& pair, Scalar c) {
  if (c == Scalar{0.0}) return pair;
  const Scalar u = pair.u();
  const Scalar v = pair.v();
  const CMatrix id = CMatrix::identity(pair.dim());
  const std::string name = pair.name() + "+c=" + label(pair.c() + c);
  // uX' + vY + (c0 + c) 1 with X' = X - (c/u) 1 reproduces [X', Y] = [X, Y].
  if (u != Scalar{0.0}) {
    return AlgebraPair(pair.x() - (c / u) * id, pair.y(), u, v, pair.c() + c, name);
  }
  if (v != Scalar{0.0}) {
    return AlgebraPair(pair.x(), pair.y() - (c / v) * id, u, v, pair.c() + c, name);
  }
  throw DegenerateError("shift_center: u = v = 0; [X,Y] = c*1 with c != 0 has no finite-dimensional realization");
}

AlgebraPair heisenberg_3x3(Scalar c) {
  if (c == Scalar{0.0}) throw DegenerateError("heisenberg_3x3: c = 0 gives commuting X, Y");
  return AlgebraPair(c * CMatrix::unit(3, 0, 1), CMatrix::unit(3, 1, 2), 0.0, 0.0, c,
                     "heisenberg3(c=" + label(c) + ")");
}

AlgebraPair su11_pair(Su11Generator which, int N) {
  if (N < 4 || N > 16) {
    throw DimensionError("su11_pair: N = " + std::to_string(N) + " outside [4, 16]");
  }
  const auto n = static_cast<std::size_t>(N);
  CMatrix ladder(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const double amp = std::sqrt(static_cast<double>((k + 1) * (k + 2)));
    if (which == Su11Generator::RaiseSq) {
      ladder(k + 2, k) = amp;
    } else {
      ladder(k, k + 2) = amp;
    }
  }
  std::vector<Scalar> occ(n);
  for (std::size_t k = 0; k < n; ++k) occ[k] = static_cast<double>(k);
  CMatrix number = CMatrix::diagonal(occ);
  const bool raise = which == Su11Generator::RaiseSq;
  return AlgebraPair(std::move(ladder), std::move(number), raise ? -2.0 : 2.0, 0.0, 0.0,
                     std::string(raise ? "su11-raise" : "su11-lower") + "(N=" + std::to_string(N) + ")");
}

const std::vector<LindbladConvention>& lindblad_conventions() {
  static const std::vector<LindbladConvention> conventions{
      {"sigma/sqrt2,transposed", true, true},
      {"sigma,transposed", false, true},
      {"sigma/sqrt2,untransposed", true, false},
      {"sigma,untransposed", false, false},
  };
  return conventions;
}

std::pair<CMatrix, CMatrix> lindblad_dissipators(const LindbladConvention& conv) {
  const double scale = conv.normalized ? 1.0 / std::sqrt(2.0) : 1.0;
  const std::array<CMatrix, 2> sigma{
      scale * CMatrix{{0.0, 1.0}, {1.0, 0.0}},
      scale * CMatrix{{0.0, Scalar{0.0, -1.0}}, {Scalar{0.0, 1.0}, 0.0}},
  };
  const CMatrix id = CMatrix::identity(2);
  auto maybe_t = [&](const CMatrix& m) { return conv.transpose ? m.transpose() : m; };
  // D_kl rho = sigma_k rho sigma_l - 1/2 {sigma_l sigma_k, rho}
  auto dissipator = [&](std::size_t k, std::size_t l) {
    return kron(maybe_t(sigma[l]), sigma[k]) - 0.5 * kron(id, sigma[l] * sigma[k]) -
           0.5 * kron(maybe_t(sigma[k] * sigma[l]), id);
  };
  const CMatrix d11 = dissipator(0, 0);
  const CMatrix d22 = dissipator(1, 1);
  const CMatrix d12 = dissipator(0, 1);
  const CMatrix d21 = dissipator(1, 0);
  const Scalar i{0.0, 1.0};
  CMatrix up = 0.5 * (d11 + d22 + i * (d21 - d12));
  CMatrix down = 0.5 * (d11 + d22 + i * (d12 - d21));
  return {std::move(up), std::move(down)};
}

AlgebraPair lindblad_pair() {
  std::string tried;
  for (const auto& conv : lindblad_conventions()) {
    auto [up, down] = lindblad_dissipators(conv);
    const double res = rel_residual(commutator(up, down), up - down);
    if (res <= 1e-12) {
      return AlgebraPair(std::move(up), std::move(down), 1.0, -1.0, 0.0, "lindblad[" + conv.name + "]");
    }
    tried += (tried.empty() ? "" : ", ") + conv.name + " (residual " + std::to_string(res) + ")";
  }
  throw ConventionError("lindblad_pair: no convention satisfies [D_up, D_down] = D_up - D_down; tried " + tried);
}

AlgebraPair builtin_pair(std::string_view name) {
  if (name == "affine2") return affine_2x2(1.0, 2.0, 1.0, 1.0);
  if (name == "heisenberg3") return heisenberg_3x3(1.0);
  if (name == "su11-raise") return su11_pair(Su11Generator::RaiseSq, 8);
  if (name == "su11-lower") return su11_pair(Su11Generator::LowerSq, 8);
  if (name == "lindblad") return lindblad_pair();
  throw std::invalid_argument("unknown pair '" + std::string(name) + "'");
}

std::vector<std::string> builtin_pair_names() {
  return {"affine2", "heisenberg3", "su11-raise", "su11-lower", "lindblad"};
}

}  // namespace zass
