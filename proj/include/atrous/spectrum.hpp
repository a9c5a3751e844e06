#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "atrous/sequence.hpp"

namespace atrous {

/// Uniform sampling of [0,1) with N = 2^k points.
struct GridSpec {
  std::size_t n = 4096;

  static GridSpec of(std::size_t n) {
    if (n == 0 || (n & (n - 1)) != 0) throw Error("BadGrid", "grid size must be a power of two");
    return {n};
  }

  /// Smallest power-of-two grid that is at least `need` and at least n.
  GridSpec grown_to(std::size_t need) const {
    std::size_t m = std::max<std::size_t>(n, 2);
    while (m < need) m <<= 1;
    return {m};
  }
};

inline std::complex<double> eval_ft(const FiniteSequence& x, double xi) {
  std::vector<std::complex<double>> terms(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ph = -2.0 * std::numbers::pi * static_cast<double>(x.offset() + static_cast<std::int64_t>(i)) * xi;
    terms[i] = x.taps()[i] * std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return pairwise_sum(std::span<const std::complex<double>>(terms));
}

namespace detail {

/// Iterative radix-2 DFT, v[k] <- sum_n v[n] e^{-2 pi i n k / N}.
inline void fft_forward(std::vector<std::complex<double>>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = v[i + k];
        const auto t = v[i + k + len / 2] * w;
        v[i + k] = u + t;
        v[i + k + len / 2] = u - t;
        w *= wl;
      }
    }
  }
}

}  // namespace detail

/// Values of xhat at xi = k/N, k = 0..N-1.
inline std::vector<std::complex<double>> eval_ft_grid(const FiniteSequence& x, GridSpec grid) {
  if (grid.n < x.size())
    throw grid_too_small("grid of size " + std::to_string(grid.n) +
                         " cannot resolve a sequence with " + std::to_string(x.size()) + " taps");
  std::vector<std::complex<double>> v(grid.n, 0.0);
  const auto n = static_cast<std::int64_t>(grid.n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t k = (x.offset() + static_cast<std::int64_t>(i)) % n;
    if (k < 0) k += n;
    v[static_cast<std::size_t>(k)] += x.taps()[i];
  }
  detail::fft_forward(v);
  return v;
}

/// |xhat|^2 at xi = k/N.
inline std::vector<double> power_grid(const FiniteSequence& x, GridSpec grid) {
  auto v = eval_ft_grid(x, grid);
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::norm(v[i]);
  return out;
}

/// 2 pi sum_{k,k'} |k-k'| |x(k) x(k')|, a global bound on d/dxi |xhat(xi)|^2.
/// Evaluated in O(len) with prefix sums.
inline double lipschitz_bound_power(const FiniteSequence& x) {
  const auto& t = x.taps();
  double cross = 0.0;        // sum over k > k' of (k - k') a_k a_k'
  double prefix_a = 0.0;     // sum of a_k' for k' < k
  double prefix_ka = 0.0;    // sum of k' a_k' for k' < k
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double a = std::abs(t[k]);
    cross += a * (static_cast<double>(k) * prefix_a - prefix_ka);
    prefix_a += a;
    prefix_ka += static_cast<double>(k) * a;
  }
  return 2.0 * std::numbers::pi * 2.0 * cross;
}

/// One-sided certified enclosure of an extremum over the torus: the grid
/// extremum plus padding covering what the function can do between samples.
struct CertifiedInterval {
  double lo = 0.0;
  double hi = 0.0;
  double lipschitz_pad = 0.0;
  GridSpec grid;
};

/// Certified extrema of Phi(xi) = sum_i |xhat_i(xi)|^2 over the torus.
struct CertifiedRange {
  CertifiedInterval inf;  // [grid_min - pad, grid_min]
  CertifiedInterval sup;  // [grid_max, grid_max + pad]

  /// Point estimates (grid extrema, no padding).
  double inf_value() const { return inf.hi; }
  double sup_value() const { return sup.lo; }
};

inline CertifiedRange certified_range(const std::vector<FiniteSequence>& terms, GridSpec grid) {
  std::size_t max_len = 1;
  for (const auto& t : terms) max_len = std::max(max_len, t.size());
  if (grid.n <= 2 * max_len)
    throw grid_too_small("certified_range requires N > 2 * max support length");

  std::vector<double> phi(grid.n, 0.0);
  double lipschitz = 0.0;
  for (const auto& t : terms) {
    const auto p = power_grid(t, grid);
    for (std::size_t i = 0; i < grid.n; ++i) phi[i] += p[i];
    lipschitz += lipschitz_bound_power(t);
  }
  const auto [mn, mx] = std::minmax_element(phi.begin(), phi.end());
  const double pad = lipschitz / (2.0 * static_cast<double>(grid.n));
  CertifiedRange r;
  r.inf = {std::max(0.0, *mn - pad), *mn, pad, grid};
  r.sup = {*mx, *mx + pad, pad, grid};
  return r;
}

/// Exact integral over the torus of Phi(xi) |xhat(xi)|^2, where
/// Phi = sum_i |xhat_i|^2. Uniform sampling integrates a trigonometric
/// polynomial exactly once N exceeds its degree. Single-tap terms are
/// folded in as c^2 ||x||^2 so that the delta case reproduces the
/// pairwise-summed energy bit for bit.
inline double quadrature_energy(const std::vector<FiniteSequence>& terms, const FiniteSequence& x) {
  double direct = 0.0;
  std::vector<const FiniteSequence*> rest;
  for (const auto& t : terms) {
    if (t.size() == 1)
      direct += t.taps()[0] * t.taps()[0] * x.norm_sq();
    else
      rest.push_back(&t);
  }
  if (rest.empty()) return direct;

  std::size_t max_len = 1;
  for (const auto* t : rest) max_len = std::max(max_len, t->size());
  const std::size_t degree = 2 * (max_len - 1) + 2 * (x.size() - 1);
  const GridSpec grid = GridSpec{2}.grown_to(degree + 1);

  const auto px = power_grid(x, grid);
  std::vector<double> phi(grid.n, 0.0);
  for (const auto* t : rest) {
    const auto p = power_grid(*t, grid);
    for (std::size_t i = 0; i < grid.n; ++i) phi[i] += p[i];
  }
  std::vector<double> widths(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) widths[i] = phi[i] * px[i];
  return direct + pairwise_sum(widths) / static_cast<double>(grid.n);
}

/// Self-test of the iterated cosine-factor estimate
/// |prod_{k<J} (1+e^{2 pi i 2^k xi})/2| <= min{1, 1/(2^{J+1}|xi|)}
/// at all grid points of [-1/2, 1/2].
inline bool haar_factor_bound_check(unsigned j_levels, GridSpec grid) {
  if (j_levels == 0 || j_levels > 20) throw Error("BadParams", "J must be in 1..20");
  const std::size_t n = grid.n;
  const double two_pow = std::ldexp(1.0, static_cast<int>(j_levels) + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double xi = -0.5 + static_cast<double>(k) / static_cast<double>(n);
    std::complex<double> prod = 1.0;
    for (unsigned m = 0; m < j_levels; ++m) {
      const double ph = 2.0 * std::numbers::pi * std::ldexp(xi, static_cast<int>(m));
      prod *= (1.0 + std::complex<double>(std::cos(ph), std::sin(ph))) / 2.0;
    }
    double bound = 1.0;
    if (xi != 0.0) bound = std::min(1.0, 1.0 / (two_pow * std::abs(xi)));
    if (std::abs(prod) > bound + 1e-12) return false;
  }
  return true;
}

}  // namespace atrous
