#include "zass/casas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace zass {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw OrderError("TruncatedSeries: negative order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Scalar{0.0});
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0 || coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw OrderError("TruncatedSeries: coefficient count must equal order + 1");
  }
}

Scalar TruncatedSeries::operator[](int k) const {
  if (k < 0 || k > order()) throw OrderError("TruncatedSeries: index " + std::to_string(k) + " beyond order");
  return coeffs_[static_cast<std::size_t>(k)];
}

Scalar& TruncatedSeries::at(int k) {
  if (k < 0 || k > order()) throw OrderError("TruncatedSeries: index " + std::to_string(k) + " beyond order");
  return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  const int m = std::min(order(), other.order());
  TruncatedSeries out(m);
  for (int k = 0; k <= m; ++k) {
    Scalar acc{0.0};
    for (int j = 0; j <= k; ++j) acc += coeffs_[j] * other.coeffs_[k - j];
    out.coeffs_[k] = acc;
  }
  return out;
}

TruncatedSeries TruncatedSeries::exponential(Scalar a, int order) {
  TruncatedSeries out(order);
  Scalar term{1.0};
  for (int k = 0; k <= order; ++k) {
    out.coeffs_[k] = term;
    term *= a / static_cast<double>(k + 1);
  }
  return out;
}

TruncatedSeries beta1_series(Scalar u, Scalar v, int order) {
  if (order < 1) throw OrderError("beta1_series: order must be >= 1");
  TruncatedSeries damped(order);
  // (-1)^k v^{k-1} / k!
  Scalar c{-1.0};
  for (int k = 1; k <= order; ++k) {
    damped.at(k) = c;
    c *= -v / static_cast<double>(k + 1);
  }
  return TruncatedSeries::exponential(u, order) * damped;
}

TruncatedSeries beta_step(const TruncatedSeries& beta, int n) {
  if (n < 1) throw std::invalid_argument("beta_step: n must be >= 1");
  if (n > beta.order()) {
    throw OrderError("beta_step: n = " + std::to_string(n) + " exceeds series order " +
                     std::to_string(beta.order()));
  }
  TruncatedSeries next = beta;
  next.at(n) = Scalar{0.0};
  return next;
}

std::vector<Scalar> recurrence_coefficients(int max_n, Scalar u, Scalar v) {
  if (max_n < 2) throw std::invalid_argument("recurrence_coefficients: max_n must be >= 2");
  TruncatedSeries beta = beta1_series(u, v, std::max(kDefaultSeriesOrder, max_n));
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(max_n) - 1);
  // Invariant at loop head: beta holds beta_n; C_{n+1} = beta_n^{(n)}(0)/(n+1)!
  // = [t^n] beta_n / (n+1).
  for (int n = 1; n + 1 <= max_n; ++n) {
    out.push_back(beta[n] / static_cast<double>(n + 1));
    beta = beta_step(beta, n);
  }
  return out;
}

Scalar c_from_recurrence(int n, Scalar u, Scalar v) {
  if (n < 2) throw std::invalid_argument("c_from_recurrence: n must be >= 2");
  return recurrence_coefficients(n, u, v).back();
}

Scalar partial_sum_gr(Scalar u, Scalar v, int N) {
  if (N < 2) throw std::invalid_argument("partial_sum_gr: N must be >= 2");
  Scalar sum{0.0};
  for (Scalar c : recurrence_coefficients(N, u, v)) sum += c;
  return sum;
}

}  // namespace zass
