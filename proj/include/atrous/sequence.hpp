#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "atrous/errors.hpp"

namespace atrous {

/// Deterministic balanced-tree summation. The reduction order depends only
/// on the length of the input, never on threading or chunking.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 8) {
    T acc = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) acc += v[i];
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

/// A finitely supported real sequence over the integers: taps[i] is the
/// value at index offset + i. Canonical form trims exact zeros from both
/// ends; the zero sequence is a single zero tap at index 0. Immutable
/// after construction.
class FiniteSequence {
public:
  FiniteSequence() : offset_(0), taps_{0.0} {}

  FiniteSequence(std::int64_t offset, std::vector<double> taps)
      : offset_(offset), taps_(std::move(taps)) {
    for (double t : taps_)
      if (!std::isfinite(t)) throw Error("NonFinite", "sequence tap is not finite");
    canonicalize();
  }

  static FiniteSequence delta() { return {0, {1.0}}; }
  static FiniteSequence zero() { return {}; }

  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t last_index() const noexcept {
    return offset_ + static_cast<std::int64_t>(taps_.size()) - 1;
  }
  std::size_t size() const noexcept { return taps_.size(); }
  const std::vector<double>& taps() const noexcept { return taps_; }

  double at(std::int64_t k) const noexcept {
    const std::int64_t i = k - offset_;
    if (i < 0 || i >= static_cast<std::int64_t>(taps_.size())) return 0.0;
    return taps_[static_cast<std::size_t>(i)];
  }

  bool is_zero() const noexcept { return taps_.size() == 1 && taps_[0] == 0.0; }

  bool operator==(const FiniteSequence& other) const noexcept {
    return offset_ == other.offset_ && taps_ == other.taps_;
  }

  double norm_sq() const {
    std::vector<double> sq(taps_.size());
    for (std::size_t i = 0; i < taps_.size(); ++i) sq[i] = taps_[i] * taps_[i];
    return pairwise_sum(sq);
  }
  double norm() const { return std::sqrt(norm_sq()); }

  double norm_l1() const {
    std::vector<double> a(taps_.size());
    for (std::size_t i = 0; i < taps_.size(); ++i) a[i] = std::abs(taps_[i]);
    return pairwise_sum(a);
  }

  /// Sum of all taps, i.e. the Fourier transform at frequency zero.
  double tap_sum() const { return pairwise_sum(taps_); }

private:
  void canonicalize() {
    std::size_t lo = 0, hi = taps_.size();
    while (lo < hi && taps_[lo] == 0.0) ++lo;
    while (hi > lo && taps_[hi - 1] == 0.0) --hi;
    if (lo == hi) {
      offset_ = 0;
      taps_ = {0.0};
      return;
    }
    offset_ += static_cast<std::int64_t>(lo);
    taps_ = std::vector<double>(taps_.begin() + static_cast<std::ptrdiff_t>(lo),
                                taps_.begin() + static_cast<std::ptrdiff_t>(hi));
  }

  std::int64_t offset_;
  std::vector<double> taps_;
};

namespace detail {

inline std::size_t nonzero_count(const FiniteSequence& x) {
  std::size_t n = 0;
  for (double t : x.taps())
    if (t != 0.0) ++n;
  return n;
}

}  // namespace detail

/// (x*y)(k) = sum_n y(n) x(k-n). The operand with fewer nonzero taps drives
/// the inner loop, so convolving with an upsampled filter costs only its
/// nonzero part. Per-output-coefficient terms are reduced pairwise in a
/// fixed order.
inline FiniteSequence convolve(const FiniteSequence& x, const FiniteSequence& y) {
  if (x.is_zero() || y.is_zero()) return FiniteSequence::zero();
  const bool x_outer = detail::nonzero_count(x) >= detail::nonzero_count(y);
  const FiniteSequence& a = x_outer ? x : y;
  const FiniteSequence& b = x_outer ? y : x;

  std::vector<std::int64_t> bk;
  std::vector<double> bv;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.taps()[i] != 0.0) {
      bk.push_back(static_cast<std::int64_t>(i));
      bv.push_back(b.taps()[i]);
    }
  }

  const std::size_t out_len = a.size() + b.size() - 1;
  std::vector<double> out(out_len, 0.0);
  std::vector<double> terms;
  terms.reserve(bk.size());
  for (std::size_t k = 0; k < out_len; ++k) {
    terms.clear();
    for (std::size_t j = 0; j < bk.size(); ++j) {
      const std::int64_t ia = static_cast<std::int64_t>(k) - bk[j];
      if (ia >= 0 && ia < static_cast<std::int64_t>(a.size()))
        terms.push_back(a.taps()[static_cast<std::size_t>(ia)] * bv[j]);
    }
    out[k] = pairwise_sum(std::span<const double>(terms));
  }
  return {a.offset() + b.offset(), std::move(out)};
}

/// U^m: tap at index k moves to 2^m k; Fourier transform becomes x^(2^m xi).
inline FiniteSequence upsample(const FiniteSequence& x, unsigned m) {
  const std::int64_t factor = std::int64_t{1} << m;
  if (m == 0) return x;
  if (x.is_zero() || x.size() == 1) return {x.offset() * factor, {x.taps()}};
  std::vector<double> out((x.size() - 1) * static_cast<std::size_t>(factor) + 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i * static_cast<std::size_t>(factor)] = x.taps()[i];
  return {x.offset() * factor, std::move(out)};
}

/// Involution (time reversal; real sequences, so no conjugation).
inline FiniteSequence involute(const FiniteSequence& x) {
  std::vector<double> rev(x.taps().rbegin(), x.taps().rend());
  return {-x.last_index(), std::move(rev)};
}

inline FiniteSequence translate(const FiniteSequence& x, std::int64_t k) {
  return {x.offset() + k, {x.taps()}};
}

/// g(k) = (-1)^k x(k); |ghat(xi)| = |xhat(xi + 1/2)|.
inline FiniteSequence modulate_half(const FiniteSequence& x) {
  std::vector<double> out(x.taps());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t k = x.offset() + static_cast<std::int64_t>(i);
    if (k & 1) out[i] = -out[i];
  }
  return {x.offset(), std::move(out)};
}

inline FiniteSequence scale(const FiniteSequence& x, double c) {
  std::vector<double> out(x.taps());
  for (double& t : out) t *= c;
  return {x.offset(), std::move(out)};
}

inline FiniteSequence add(const FiniteSequence& x, const FiniteSequence& y) {
  const std::int64_t lo = std::min(x.offset(), y.offset());
  const std::int64_t hi = std::max(x.last_index(), y.last_index());
  std::vector<double> out(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    out[static_cast<std::size_t>(x.offset() - lo + static_cast<std::int64_t>(i))] += x.taps()[i];
  for (std::size_t i = 0; i < y.size(); ++i)
    out[static_cast<std::size_t>(y.offset() - lo + static_cast<std::int64_t>(i))] += y.taps()[i];
  return {lo, std::move(out)};
}

inline FiniteSequence subtract(const FiniteSequence& x, const FiniteSequence& y) {
  return add(x, scale(y, -1.0));
}

}  // namespace atrous
