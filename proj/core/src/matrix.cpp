#include "zass/matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace zass {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw DimensionError("CMatrix: dimension " + std::to_string(dim) + " outside [1, " +
                         std::to_string(kMaxDim) + "]");
  }
}

void check_same(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
}

Scalar inner(const CMatrix& a, const CMatrix& b) {
  Scalar acc{0.0};
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) acc += std::conj(ea[k]) * eb[k];
  return acc;
}

// Dense solve of an n x n system (n <= 3) by Gaussian elimination with
// partial pivoting. The system is assumed nonsingular.
template <std::size_t N>
std::array<Scalar, N> solve_small(std::array<std::array<Scalar, N>, N> m, std::array<Scalar, N> rhs,
                                  std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    }
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Scalar f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<Scalar, N> x{};
  for (std::size_t i = n; i-- > 0;) {
    Scalar acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * x[c];
    x[i] = acc / m[i][i];
  }
  return x;
}

}  // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim) {
  check_dim(dim);
  data_.assign(dim * dim, Scalar{0.0});
}

CMatrix::CMatrix(std::size_t dim, std::vector<Scalar> entries) : dim_(dim), data_(std::move(entries)) {
  check_dim(dim);
  if (data_.size() != dim * dim) {
    throw DimensionError("CMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(data_.size()));
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) : dim_(rows.size()) {
  check_dim(dim_);
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("CMatrix: rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::unit(std::size_t dim, std::size_t i, std::size_t j) {
  CMatrix m(dim);
  m(i, j) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Scalar> diag) {
  CMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  check_same(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  check_same(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Scalar s) {
  for (auto& e : data_) e *= s;
  return *this;
}

CMatrix CMatrix::transpose() const {
  CMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool CMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar z) { return is_finite(z); });
}

double CMatrix::norm1() const {
  double best = 0.0;
  for (std::size_t j = 0; j < dim_; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) col += std::abs((*this)(i, j));
    best = std::max(best, col);
  }
  return best;
}

double CMatrix::frobenius() const {
  double acc = 0.0;
  for (Scalar z : data_) acc += std::norm(z);
  return std::sqrt(acc);
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator-(CMatrix a) { return a *= Scalar{-1.0}; }
CMatrix operator*(Scalar s, CMatrix a) { return a *= s; }
CMatrix operator*(CMatrix a, Scalar s) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  check_same(a, b, "operator*");
  const std::size_t n = a.dim();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar aik = a(i, k);
      if (aik == Scalar{0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  CMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  check_same(a, b, "commutator");
  return a * b - b * a;
}

CMatrix expm(const CMatrix& a) {
  const double n1 = a.norm1();
  if (!(n1 <= 700.0)) {
    throw OverflowError("expm: ||A||_1 = " + std::to_string(n1) + " exceeds 700");
  }
  const std::size_t n = a.dim();
  if (n1 == 0.0) return CMatrix::identity(n);

  const int s = std::max(0, static_cast<int>(std::ceil(std::log2(n1))));
  const CMatrix scaled = std::ldexp(1.0, -s) * a;

  CMatrix sum = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  for (int k = 1; k <= 60; ++k) {
    term = term * scaled;
    term *= Scalar{1.0 / k};
    sum += term;
    if (term.norm1() < 1e-18 * sum.norm1()) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

CMatrix conjugate_series(const CMatrix& a, const CMatrix& b, Scalar t, int K) {
  check_same(a, b, "conjugate_series");
  CMatrix sum = b;
  CMatrix term = b;
  for (int k = 1; k <= K; ++k) {
    term = commutator(a, term);
    term *= -t / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

double rel_residual(const CMatrix& a, const CMatrix& b) {
  check_same(a, b, "rel_residual");
  const double scale = std::max({1.0, a.frobenius(), b.frobenius()});
  return (a - b).frobenius() / scale;
}

StructureFit infer_uvc(const CMatrix& x, const CMatrix& y) {
  check_same(x, y, "infer_uvc");
  const std::size_t n = x.dim();
  const CMatrix w = commutator(x, y);
  const std::array<CMatrix, 3> basis{x, y, CMatrix::identity(n)};

  std::array<std::array<Scalar, 3>, 3> gram{};
  std::array<Scalar, 3> rhs{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) gram[i][j] = inner(basis[i], basis[j]);
    rhs[i] = inner(basis[i], w);
  }

  // Diagonally pivoted elimination on the Hermitian PSD Gram matrix. Pivots
  // below 1e-12 of the largest are treated as dependent directions.
  constexpr double kCondLimit = 1e12;
  std::array<std::array<Scalar, 3>, 3> work = gram;
  std::array<std::size_t, 3> perm{0, 1, 2};
  std::array<bool, 3> used{false, false, false};
  double first_pivot = 0.0;
  double last_pivot = 0.0;
  std::size_t rank = 0;
  for (std::size_t step = 0; step < 3; ++step) {
    std::size_t piv = 3;
    double best = -1.0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (!used[i] && work[i][i].real() > best) {
        best = work[i][i].real();
        piv = i;
      }
    }
    if (step == 0) first_pivot = best;
    if (!(best > 0.0) || best < first_pivot / kCondLimit) break;
    used[piv] = true;
    perm[rank++] = piv;
    last_pivot = best;
    for (std::size_t i = 0; i < 3; ++i) {
      if (used[i]) continue;
      const Scalar f = work[i][piv] / work[piv][piv];
      for (std::size_t j = 0; j < 3; ++j) {
        if (!used[j]) work[i][j] -= f * work[piv][j];
      }
    }
  }

  StructureFit fit;
  fit.rank = static_cast<int>(rank);
  fit.gram_condition = rank == 3 ? first_pivot / last_pivot : std::numeric_limits<double>::infinity();
  fit.ill_conditioned = rank < 3;

  std::array<Scalar, 3> coeff{};
  if (rank > 0) {
    // Basic columns B = perm[0..rank), the rest N. Least-squares coordinates in
    // B: y = G_BB^{-1} r_B. Dependent columns satisfy A_N = A_B F with
    // F = G_BB^{-1} G_BN, and the minimum-norm x solves x_B + F x_N = y.
    std::array<std::size_t, 3> nonbasic{};
    std::size_t nn = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (!used[i]) nonbasic[nn++] = i;
    }
    std::array<std::array<Scalar, 3>, 3> gbb{};
    std::array<Scalar, 3> rb{};
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < rank; ++j) gbb[i][j] = gram[perm[i]][perm[j]];
      rb[i] = rhs[perm[i]];
    }
    const std::array<Scalar, 3> yb = solve_small<3>(gbb, rb, rank);

    std::array<std::array<Scalar, 3>, 3> f{};  // rank x nn
    for (std::size_t k = 0; k < nn; ++k) {
      std::array<Scalar, 3> col{};
      for (std::size_t i = 0; i < rank; ++i) col[i] = gram[perm[i]][nonbasic[k]];
      const std::array<Scalar, 3> fk = solve_small<3>(gbb, col, rank);
      for (std::size_t i = 0; i < rank; ++i) f[i][k] = fk[i];
    }

    std::array<Scalar, 3> xn{};
    if (nn > 0) {
      // (I + F^* F) x_N = F^* y
      std::array<std::array<Scalar, 3>, 3> m{};
      std::array<Scalar, 3> r{};
      for (std::size_t a = 0; a < nn; ++a) {
        for (std::size_t b = 0; b < nn; ++b) {
          Scalar acc = a == b ? Scalar{1.0} : Scalar{0.0};
          for (std::size_t i = 0; i < rank; ++i) acc += std::conj(f[i][a]) * f[i][b];
          m[a][b] = acc;
        }
        Scalar acc{0.0};
        for (std::size_t i = 0; i < rank; ++i) acc += std::conj(f[i][a]) * yb[i];
        r[a] = acc;
      }
      xn = solve_small<3>(m, r, nn);
    }
    for (std::size_t i = 0; i < rank; ++i) {
      Scalar acc = yb[i];
      for (std::size_t k = 0; k < nn; ++k) acc -= f[i][k] * xn[k];
      coeff[perm[i]] = acc;
    }
    for (std::size_t k = 0; k < nn; ++k) coeff[nonbasic[k]] = xn[k];
  }

  fit.u = coeff[0];
  fit.v = coeff[1];
  fit.c = coeff[2];
  const CMatrix model = fit.u * x + fit.v * y + fit.c * CMatrix::identity(n);
  fit.fit_residual = rel_residual(w, model);
  return fit;
}

}  // namespace zass
