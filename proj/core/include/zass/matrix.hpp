#pragma once

// Small dense complex matrices: the carrier of all verification arithmetic.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "zass/types.hpp"

namespace zass {

inline constexpr std::size_t kMaxDim = 64;

class CMatrix {
 public:
  // Zero matrix; throws DimensionError unless 0 < dim <= kMaxDim.
  explicit CMatrix(std::size_t dim);
  // Row-major entries; throws DimensionError on size mismatch.
  CMatrix(std::size_t dim, std::vector<Scalar> entries);
  // Rows given as nested lists; must be square.
  CMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static CMatrix identity(std::size_t dim);
  static CMatrix zero(std::size_t dim) { return CMatrix(dim); }
  // E_ij with a single unit entry (zero-based indices).
  static CMatrix unit(std::size_t dim, std::size_t i, std::size_t j);
  static CMatrix diagonal(std::span<const Scalar> diag);

  std::size_t dim() const { return dim_; }
  std::span<const Scalar> entries() const { return data_; }

  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Scalar s);

  CMatrix transpose() const;
  bool all_finite() const;

  double norm1() const;      // maximum absolute column sum
  double frobenius() const;

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Scalar> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a);
CMatrix operator*(Scalar s, CMatrix a);
CMatrix operator*(CMatrix a, Scalar s);
// Throws DimensionMismatch.
CMatrix operator*(const CMatrix& a, const CMatrix& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);

// AB - BA
CMatrix commutator(const CMatrix& a, const CMatrix& b);

// e^A by scaling and squaring with a Taylor kernel. Throws OverflowError if
// ||A||_1 > 700.
CMatrix expm(const CMatrix& a);

// sum_{k=0}^{K} (-t)^k ad_A^k(B) / k!, which tends to e^{-tA} B e^{tA}.
CMatrix conjugate_series(const CMatrix& a, const CMatrix& b, Scalar t, int K);

// ||A - B||_F / max(1, ||A||_F, ||B||_F)
double rel_residual(const CMatrix& a, const CMatrix& b);

struct StructureFit {
  Scalar u{};
  Scalar v{};
  Scalar c{};
  double fit_residual = 0.0;  // rel_residual([X,Y], uX + vY + c*1)
  int rank = 0;               // numerical rank of span{X, Y, 1}
  double gram_condition = 1.0;
  bool ill_conditioned = false;  // gram_condition > 1e12 or rank-deficient
};

// Least-squares fit of [X,Y] onto span{X, Y, 1} in the Frobenius inner
// product; the minimum-norm (u,v,c) is returned when the span is degenerate.
StructureFit infer_uvc(const CMatrix& x, const CMatrix& y);

}  // namespace zass
