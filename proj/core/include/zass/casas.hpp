#pragma once

// Zassenhaus exponents from the Casas-Murua-Nadinic recurrence, specialized to
// [X,Y] = uX + vY + c*1. Every F_n is then a scalar series beta_n(t) times
// W = [X,Y], and one recurrence step zeroes the degree-n coefficient:
//
//   beta_{n+1}(t) = beta_n(t) - t^n/n! * beta_n^{(n)}(0),
//   C_{n+1}       = beta_n^{(n)}(0) / (n+1)!.
//
// This path is independent of the closed form in coeffs.hpp and serves as its
// oracle.

#include <span>
#include <vector>

#include "zass/types.hpp"

namespace zass {

inline constexpr int kDefaultSeriesOrder = 32;

// Power series in t truncated after t^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Scalar> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Scalar> coeffs() const { return coeffs_; }

  // Throws OrderError for k outside [0, order].
  Scalar operator[](int k) const;
  Scalar& at(int k);

  // Cauchy product truncated to min(order(), other.order()).
  TruncatedSeries operator*(const TruncatedSeries& other) const;

  // e^{a t} truncated at the given order.
  static TruncatedSeries exponential(Scalar a, int order);

 private:
  std::vector<Scalar> coeffs_;
};

// beta_1(t) = e^{tu} (e^{-tv} - 1) / v, built as the Cauchy product of e^{tu}
// with the v-regular series (e^{-tv} - 1)/v = sum_{k>=1} (-1)^k v^{k-1} t^k / k!.
TruncatedSeries beta1_series(Scalar u, Scalar v, int order = kDefaultSeriesOrder);

// One recurrence step: zero the coefficient of t^n. Throws OrderError if
// n > beta.order(); requires n >= 1.
TruncatedSeries beta_step(const TruncatedSeries& beta, int n);

// C_n(u,v) for n >= 2, by n-2 explicit recurrence steps from beta_1.
Scalar c_from_recurrence(int n, Scalar u, Scalar v);

// C_2 .. C_max_n in one recurrence sweep; element i holds C_{i+2}.
std::vector<Scalar> recurrence_coefficients(int max_n, Scalar u, Scalar v);

// sum_{n=2}^{N} C_n(u,v); requires N >= 2.
Scalar partial_sum_gr(Scalar u, Scalar v, int N);

}  // namespace zass
