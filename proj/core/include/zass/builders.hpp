#pragma once

// Exact finite-dimensional realizations of [X,Y] = uX + vY + c*1.
//
// Identities are always verified against W = [X,Y] computed from the matrices,
// never against uX + vY + c*1. The proofs only use the ad relations
// [X,W] = vW and [Y,W] = -uW, and checking against W keeps the central case
// u = v = 0 testable where c*1 has no finite-dimensional realization.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zass/matrix.hpp"

namespace zass {

class AlgebraPair {
 public:
  // Validates the ad relations to rel_residual <= 1e-12 and that W != 0;
  // throws DegenerateError otherwise.
  AlgebraPair(CMatrix x, CMatrix y, Scalar u, Scalar v, Scalar c, std::string name);

  const CMatrix& x() const { return x_; }
  const CMatrix& y() const { return y_; }
  const CMatrix& w() const { return w_; }
  Scalar u() const { return u_; }
  Scalar v() const { return v_; }
  Scalar c() const { return c_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return x_.dim(); }

  // Largest rel_residual of [X,W] - vW and [Y,W] + uW.
  double ad_residual() const;

 private:
  CMatrix x_;
  CMatrix y_;
  CMatrix w_;
  Scalar u_;
  Scalar v_;
  Scalar c_;
  std::string name_;
};

// X = [[v, b], [0, 0]], Y = [[-u, d], [0, 0]]; [X,Y] = (ub + vd) E12 = uX + vY.
// Throws DegenerateError when ub + vd = 0.
AlgebraPair affine_2x2(Scalar u, Scalar v, Scalar b = 1.0, Scalar d = 1.0);

// Adds c*1 to the commutator by shifting X by -(c/u)*1 (or Y by (c/v)*1 when
// u = 0). W is unchanged. Throws DegenerateError when u = v = 0.
AlgebraPair shift_center(const AlgebraPair& pair, Scalar c);

// X = c E12, Y = E23, W = c E13 central. Records u = v = 0 and the given c as
// the scale of W. Throws DegenerateError for c = 0.
AlgebraPair heisenberg_3x3(Scalar c = 1.0);

enum class Su11Generator : std::uint8_t { RaiseSq, LowerSq };

// Truncated a^dag^2 (RaiseSq) or a^2 (LowerSq) paired with n = diag(0..N-1).
// [X, n] = -2X (RaiseSq) or +2X (LowerSq) holds exactly after truncation.
// Throws DimensionError unless 4 <= N <= 16.
AlgebraPair su11_pair(Su11Generator which, int N);

// Vectorized qubit dissipators D_up, D_down with [D_up, D_down] = D_up - D_down.
struct LindbladConvention {
  std::string name;
  bool normalized;  // sigma_k / sqrt(2) instead of sigma_k
  bool transpose;   // sigma_l^T in the left Kronecker factor
};

// Conventions in the order lindblad_pair tries them.
const std::vector<LindbladConvention>& lindblad_conventions();

// D_up, D_down under one convention, without checking the commutator.
std::pair<CMatrix, CMatrix> lindblad_dissipators(const LindbladConvention& conv);

// First convention whose dissipators satisfy [D_up, D_down] = D_up - D_down to
// rel_residual <= 1e-12; the convention is recorded in the pair name. Throws
// ConventionError if none does.
AlgebraPair lindblad_pair();

// Built-in pairs addressable by name: "affine2", "heisenberg3", "su11-raise",
// "su11-lower", "lindblad". Throws std::invalid_argument for unknown names.
AlgebraPair builtin_pair(std::string_view name);
std::vector<std::string> builtin_pair_names();

}  // namespace zass
