#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "atrous/sequence.hpp"
#include "atrous/spectrum.hpp"

namespace atrous {

inline constexpr unsigned kMaxDepth = 24;

/// One low-pass filter h plus L >= 1 high-pass filters g^1..g^L.
/// Normalizations hhat(0)=1, hhat(1/2)=0, ghat(0)=0 are enforced at
/// construction; the 1e-6 tolerance accommodates coefficient tables
/// printed to 8 decimals.
struct FilterBank {
  FiniteSequence lowpass;
  std::vector<FiniteSequence> highpass;
  std::string name;

  FilterBank(FiniteSequence h, std::vector<FiniteSequence> gs, std::string label = "")
      : lowpass(std::move(h)), highpass(std::move(gs)), name(std::move(label)) {
    if (highpass.empty()) throw bad_params("a filter bank needs at least one high-pass filter");
    if (std::abs(eval_ft(lowpass, 0.0) - 1.0) > 1e-6)
      throw not_low_pass("hhat(0) must equal 1 (bank '" + name + "')");
    if (std::abs(eval_ft(lowpass, 0.5)) > 1e-6)
      throw not_low_pass("hhat(1/2) must vanish (bank '" + name + "')");
    for (const auto& g : highpass)
      if (std::abs(eval_ft(g, 0.0)) > 1e-6)
        throw bad_params("ghat(0) must vanish (bank '" + name + "')");
  }

  std::size_t channels() const noexcept { return highpass.size(); }
};

/// h_j = h * Uh * ... * U^{j-1}h; h_0 = delta (empty product).
inline FiniteSequence iterated_lowpass(const FiniteSequence& h, unsigned j) {
  FiniteSequence cur = FiniteSequence::delta();
  for (unsigned m = 0; m < j; ++m) cur = convolve(cur, upsample(h, m));
  return cur;
}

/// g_j = h_{j-1} * U^{j-1}g, the level-j analysis filter.
inline FiniteSequence iterated_highpass(const FiniteSequence& h, const FiniteSequence& g,
                                        unsigned j) {
  if (j == 0) throw bad_params("iterated_highpass needs j >= 1");
  return convolve(iterated_lowpass(h, j - 1), upsample(g, j - 1));
}

/// Output of analyze: detail branches x * involute(g^l_j) for j = 1..J and
/// the low-pass residual x * involute(h_J).
struct CoefficientPyramid {
  unsigned order = 0;                                 // J
  std::vector<std::vector<FiniteSequence>> details;   // details[j-1][l-1]
  FiniteSequence approximation;

  std::size_t channels() const noexcept { return details.empty() ? 0 : details[0].size(); }

  double norm_sq() const {
    std::vector<double> parts;
    for (const auto& level : details)
      for (const auto& d : level) parts.push_back(d.norm_sq());
    parts.push_back(approximation.norm_sq());
    return pairwise_sum(parts);
  }
  double norm() const { return std::sqrt(norm_sq()); }
};

namespace detail {

/// All iterated filters up to order J, sharing the h_j prefix products.
struct IteratedFamily {
  std::vector<FiniteSequence> h;                        // h[j] = h_j, j = 0..J
  std::vector<std::vector<FiniteSequence>> g;           // g[j-1][l-1] = g^l_j
};

inline IteratedFamily iterate_bank(const FilterBank& bank, unsigned J) {
  IteratedFamily fam;
  fam.h.reserve(J + 1);
  fam.h.push_back(FiniteSequence::delta());
  fam.g.resize(J);
  for (unsigned j = 1; j <= J; ++j) {
    for (const auto& gl : bank.highpass)
      fam.g[j - 1].push_back(convolve(fam.h[j - 1], upsample(gl, j - 1)));
    fam.h.push_back(convolve(fam.h[j - 1], upsample(bank.lowpass, j - 1)));
  }
  return fam;
}

}  // namespace detail

inline CoefficientPyramid analyze(const FilterBank& bank, const FiniteSequence& x, unsigned J) {
  if (J == 0 || J > kMaxDepth)
    throw depth_limit("analysis order must be in 1.." + std::to_string(kMaxDepth));
  const auto fam = detail::iterate_bank(bank, J);
  CoefficientPyramid pyr;
  pyr.order = J;
  pyr.details.resize(J);
  for (unsigned j = 1; j <= J; ++j)
    for (const auto& gj : fam.g[j - 1])
      pyr.details[j - 1].push_back(convolve(x, involute(gj)));
  pyr.approximation = convolve(x, involute(fam.h[J]));
  return pyr;
}

/// Adjoint of analyze: F* c = c_{J+1} * h_J + sum_{j,l} c_{j,l} * g^l_j.
inline FiniteSequence synthesize(const FilterBank& bank, const CoefficientPyramid& pyr) {
  if (pyr.order == 0 || pyr.order > kMaxDepth) throw depth_limit("pyramid order out of range");
  if (pyr.details.size() != pyr.order) throw pyramid_shape("pyramid levels do not match order");
  for (const auto& level : pyr.details)
    if (level.size() != bank.channels())
      throw pyramid_shape("pyramid channel count does not match bank");
  const auto fam = detail::iterate_bank(bank, pyr.order);
  FiniteSequence out = convolve(pyr.approximation, fam.h[pyr.order]);
  for (unsigned j = 1; j <= pyr.order; ++j)
    for (std::size_t l = 0; l < bank.channels(); ++l)
      out = add(out, convolve(pyr.details[j - 1][l], fam.g[j - 1][l]));
  return out;
}

/// Certified frame-bound report for Phi_J (finite order) or for the partial
/// sums of the infinite frame function (truncated at Jmax).
struct FrameReport {
  unsigned order = 0;
  bool truncated_infinite = false;
  CertifiedInterval A;                 // encloses ess-inf Phi
  CertifiedInterval B;                 // encloses ess-sup Phi
  std::vector<double> per_level_sup;   // sup_xi sum_l |ghat^l_j|^2, j = 1..order
  double parseval_deviation = 0.0;     // certified sup |Phi - 1|
  bool tail_flag = false;              // divergence indicator

  /// Grid extrema (point estimates; the intervals add the Lipschitz pad).
  double A_value() const { return A.hi; }
  double B_value() const { return B.lo; }
};

namespace detail {

/// Predicted support length of the largest iterated filter at order J.
inline std::size_t max_iterated_support(const FilterBank& bank, unsigned J) {
  const auto span = [](const FiniteSequence& f) { return f.size() - 1; };
  std::size_t gspan = 0;
  for (const auto& g : bank.highpass) gspan = std::max(gspan, span(g));
  const std::size_t pow = std::size_t{1} << (J - 1);
  const std::size_t sh = (2 * pow - 1) * span(bank.lowpass) + 1;
  const std::size_t sg = (pow - 1) * span(bank.lowpass) + pow * gspan + 1;
  return std::max(sh, sg);
}

inline double deriv_bound(const FiniteSequence& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += std::abs(static_cast<double>(x.offset() + static_cast<std::int64_t>(i))) *
         std::abs(x.taps()[i]);
  return 2.0 * std::numbers::pi * s;
}

/// Closed-form Lipschitz bounds for the iterated frame-function terms,
/// usable without forming the (exponentially long) iterated taps:
/// sup|h_j| <= Mh^j, sup|h_j'| <= (2^j - 1) Dh Mh^{j-1}, and for
/// g_j = g(2^{j-1}.) h_{j-1} the product rule gives the mixed bound below.
struct LevelLipschitz {
  double Mh, Dh;
  std::vector<double> Mg, Dg;

  explicit LevelLipschitz(const FilterBank& bank)
      : Mh(bank.lowpass.norm_l1()), Dh(deriv_bound(bank.lowpass)) {
    for (const auto& g : bank.highpass) {
      Mg.push_back(g.norm_l1());
      Dg.push_back(deriv_bound(g));
    }
  }

  double lowpass_term(unsigned j) const {
    if (j == 0) return 0.0;
    const double mh_j = std::pow(Mh, j);
    const double dh_j = (std::ldexp(1.0, static_cast<int>(j)) - 1.0) * Dh * std::pow(Mh, j - 1.0);
    return 2.0 * mh_j * dh_j;
  }

  double highpass_level(unsigned j) const {
    const double pow2 = std::ldexp(1.0, static_cast<int>(j) - 1);
    const double mh_prev = std::pow(Mh, j - 1.0);
    const double dh_prev =
        j >= 2 ? (pow2 - 1.0) * Dh * std::pow(Mh, j - 2.0) : 0.0;
    double total = 0.0;
    for (std::size_t l = 0; l < Mg.size(); ++l) {
      const double m = Mg[l] * mh_prev;
      const double d = pow2 * Dg[l] * mh_prev + Mg[l] * dh_prev;
      total += 2.0 * m * d;
    }
    return total;
  }
};

/// Grid values of the frame function, computed level by level with the
/// index-doubling recurrence |ghat_j(k/N)|^2 =
/// |ghat(2^{j-1}k/N)|^2 |hhat_{j-1}(k/N)|^2; every argument stays on the
/// grid, so the values are exact (no interpolation), and the cost is O(N)
/// per level regardless of the iterated support.
struct FrameAccumulator {
  GridSpec grid;
  std::vector<double> base_h;
  std::vector<std::vector<double>> base_g;
  std::vector<double> hprod;   // |hhat_j|^2 at grid points
  std::vector<double> phi;     // running sum of high-pass levels
  std::vector<double> level;   // scratch: current level's sum over l
  std::size_t pow2mod = 1;

  FrameAccumulator(const FilterBank& bank, GridSpec g)
      : grid(g),
        base_h(power_grid(bank.lowpass, g)),
        hprod(g.n, 1.0),
        phi(g.n, 0.0),
        level(g.n, 0.0) {
    for (const auto& gl : bank.highpass) base_g.push_back(power_grid(gl, g));
  }

  /// Advance from level j-1 to level j; returns this level's grid sup.
  double step() {
    const std::size_t n = grid.n;
    std::fill(level.begin(), level.end(), 0.0);
    for (const auto& bg : base_g)
      for (std::size_t k = 0; k < n; ++k)
        level[k] += hprod[k] * bg[(k * pow2mod) % n];
    double sup = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      phi[k] += level[k];
      sup = std::max(sup, level[k]);
    }
    for (std::size_t k = 0; k < n; ++k) hprod[k] *= base_h[(k * pow2mod) % n];
    pow2mod = (pow2mod * 2) % n;
    return sup;
  }
};

/// Sharper Lipschitz constant from the autocorrelation of the iterated
/// filters: Phi is the transform of R = sum_i x_i * involute(x_i), so
/// sup|Phi'| <= 2 pi sum_k |k||R(k)|. Only affordable for small supports.
inline constexpr std::size_t kAutocorrLimit = 4096;

struct SharpPad {
  bool available = false;
  double lipschitz = 0.0;
  double l1_deviation = 0.0;   // sum |R(k) - delta(k)| >= sup|Phi - 1|
};

inline SharpPad sharp_pad(const FilterBank& bank, unsigned J, bool include_lowpass) {
  SharpPad out;
  if (max_iterated_support(bank, J) > kAutocorrLimit) return out;
  const auto fam = iterate_bank(bank, J);
  FiniteSequence r = FiniteSequence::zero();
  for (unsigned j = 1; j <= J; ++j)
    for (const auto& gj : fam.g[j - 1]) r = add(r, convolve(gj, involute(gj)));
  if (include_lowpass) r = add(r, convolve(fam.h[J], involute(fam.h[J])));
  out.available = true;
  out.lipschitz = deriv_bound(r);
  const FiniteSequence d = subtract(r, FiniteSequence::delta());
  out.l1_deviation = d.norm_l1();
  return out;
}

inline GridSpec frame_grid(const FilterBank& bank, unsigned J, GridSpec grid) {
  // Auto-grow so the grid resolves the iterated supports, capped to keep
  // deep analyses affordable (values stay exact at grid points; only the
  // pad loosens beyond the cap).
  constexpr std::size_t kGridCap = std::size_t{1} << 22;
  const std::size_t want = 2 * max_iterated_support(bank, J) + 1;
  return grid.grown_to(std::min(want, kGridCap));
}

inline FrameReport frame_report(const FilterBank& bank, unsigned J, GridSpec grid,
                                bool include_lowpass, bool truncated) {
  if (J == 0 || J > 40) throw depth_limit("iteration order out of range");
  grid = frame_grid(bank, std::min(J, kMaxDepth), grid);

  FrameAccumulator acc(bank, grid);
  const LevelLipschitz lip(bank);
  FrameReport rep;
  rep.order = J;
  rep.truncated_infinite = truncated;
  double lipschitz = 0.0;
  for (unsigned j = 1; j <= J; ++j) {
    rep.per_level_sup.push_back(acc.step());
    lipschitz += lip.highpass_level(j);
  }
  std::vector<double>& phi = acc.phi;
  if (include_lowpass) {
    for (std::size_t k = 0; k < grid.n; ++k) phi[k] += acc.hprod[k];
    lipschitz += lip.lowpass_term(J);
  }

  const auto sp = sharp_pad(bank, J, include_lowpass);
  if (sp.available) lipschitz = std::min(lipschitz, sp.lipschitz);

  const auto [mn, mx] = std::minmax_element(phi.begin(), phi.end());
  const double pad = lipschitz / (2.0 * static_cast<double>(grid.n));
  rep.A = {std::max(0.0, *mn - pad), *mn, pad, grid};
  rep.B = {*mx, *mx + pad, pad, grid};

  double dev = std::max(std::abs(*mx - 1.0), std::abs(*mn - 1.0)) + pad;
  if (sp.available) dev = std::min(dev, sp.l1_deviation);
  rep.parseval_deviation = dev;
  return rep;
}

}  // namespace detail

/// Certified extrema of Phi_J = |hhat_J|^2 + sum_{j<=J} sum_l |ghat^l_j|^2.
inline FrameReport frame_bounds(const FilterBank& bank, unsigned J, GridSpec grid) {
  return detail::frame_report(bank, J, grid, /*include_lowpass=*/true, /*truncated=*/false);
}

/// Partial sums of the infinite frame function, truncated at Jmax, with a
/// divergence heuristic: least-squares slope of log(per-level sup) over the
/// last five levels; flagged when the slope is nonnegative and the last
/// level exceeds 10x the first. Geometric growth (the non-Bessel examples)
/// trips this; certified-Bessel decay does not.
inline FrameReport infinite_frame_bounds(const FilterBank& bank, unsigned Jmax, GridSpec grid) {
  FrameReport rep = detail::frame_report(bank, Jmax, grid, /*include_lowpass=*/false,
                                         /*truncated=*/true);
  const auto& sup = rep.per_level_sup;
  if (sup.size() >= 5) {
    const std::size_t m = 5, start = sup.size() - m;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double x = static_cast<double>(i);
      const double y = std::log(std::max(sup[start + i], 1e-300));
      sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    rep.tail_flag = slope >= 0.0 && sup.back() > 10.0 * sup.front();
  }
  return rep;
}

/// Certified sup over the torus of | |hhat|^2 + sum_l |ghat^l|^2 - 1 |,
/// via the autocorrelation taps (both an l1 bound and a padded grid sup;
/// the smaller wins).
inline double check_perfect_reconstruction(const FilterBank& bank, GridSpec grid) {
  FiniteSequence r = convolve(bank.lowpass, involute(bank.lowpass));
  for (const auto& g : bank.highpass) r = add(r, convolve(g, involute(g)));
  const FiniteSequence d = subtract(r, FiniteSequence::delta());
  if (d.is_zero()) return 0.0;
  const double l1 = d.norm_l1();

  grid = grid.grown_to(2 * r.size() + 1);
  const auto vals = eval_ft_grid(d, grid);
  double grid_sup = 0.0;
  for (const auto& v : vals) grid_sup = std::max(grid_sup, std::abs(v.real()));
  const double pad = detail::deriv_bound(d) / (2.0 * static_cast<double>(grid.n));
  return std::min(l1, grid_sup + pad);
}

/// Partial sums sum_{j<=Jmax} sum_l |ghat^l_j(xi)|^2 at a single frequency,
/// evaluated from the product formula ghat_j(xi) = ghat(2^{j-1}xi)
/// prod_{m<j-1} hhat(2^m xi) (no iterated taps needed).
inline std::vector<double> phi_partial_at(const FilterBank& bank, double xi, unsigned Jmax) {
  std::vector<double> partial;
  double hprod_sq = 1.0;
  double arg = xi;
  double running = 0.0;
  for (unsigned j = 1; j <= Jmax; ++j) {
    double level = 0.0;
    for (const auto& g : bank.highpass) level += std::norm(eval_ft(g, arg));
    running += level * hprod_sq;
    partial.push_back(running);
    hprod_sq *= std::norm(eval_ft(bank.lowpass, arg));
    arg = 2.0 * arg;
    arg -= std::floor(arg);
  }
  return partial;
}

/// Multiplicity n of the cosine factor and the residual polynomial p with
/// phat(0) = 1, from hhat = [(1+e^{2 pi i xi})/2]^n phat. Each factor is
/// removed by synthetic division of the tap polynomial (in u = e^{-2 pi i
/// xi}) at the root u = -1; a root "counts" while |hhat(1/2)| of the
/// remaining factor is below tol * its l1 norm.
inline std::pair<unsigned, FiniteSequence> factor_haar_type(const FiniteSequence& h,
                                                            double tol = 1e-8) {
  FiniteSequence cur = h;
  unsigned n = 0;
  auto value_at_half = [](const FiniteSequence& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::int64_t k = f.offset() + static_cast<std::int64_t>(i);
      s += (k & 1) ? -f.taps()[i] : f.taps()[i];
    }
    return s;
  };
  while (cur.size() > 1 && std::abs(value_at_half(cur)) <= tol * cur.norm_l1()) {
    // Divide the tap polynomial by (1 + u)/2 shifted to taps {1/2@-1, 1/2@0}:
    // synthetic division by (u + 1), then scale by 2 and shift by one.
    const auto& t = cur.taps();
    std::vector<double> q(t.size() - 1);
    double carry = 0.0;
    for (std::size_t i = 0; i < t.size() - 1; ++i) {
      q[i] = t[i] - carry;
      carry = q[i];
    }
    for (double& c : q) c *= 2.0;
    cur = FiniteSequence(cur.offset() + 1, std::move(q));
    ++n;
  }
  if (n == 0) throw not_low_pass("no cosine factor: hhat(1/2) does not vanish within tolerance");
  const double s = cur.tap_sum();
  if (s == 0.0) throw not_low_pass("degenerate residual polynomial");
  return {n, scale(cur, 1.0 / s)};
}

/// Smallest s with certified sup |prod_{k<s} phat(2^k xi)| < 2^{ns}, and the
/// resulting epsilon = n - log2(sup)/s. The reported sup is the grid value
/// (exact at grid points by the index-doubling recurrence); the pad is used
/// only to keep the admissibility comparison honest.
struct BesselCheck {
  bool ok = false;
  unsigned s = 0;
  double epsilon = 0.0;
  double sup = 0.0;   // grid sup of |prod phat(2^k xi)| at the accepted s
};

inline BesselCheck check_bessel_condition(const FiniteSequence& p, unsigned n, unsigned s_max,
                                          GridSpec grid) {
  if (std::abs(eval_ft(p, 0.0) - 1.0) > 1e-6) throw bad_params("phat(0) must equal 1");
  grid = grid.grown_to(4 * p.size());
  std::vector<double> base(grid.n);
  {
    const auto v = eval_ft_grid(p, grid);
    for (std::size_t k = 0; k < grid.n; ++k) base[k] = std::abs(v[k]);
  }
  const double mp = p.norm_l1();
  const double dp = detail::deriv_bound(p);

  std::vector<double> prod(grid.n, 1.0);
  std::size_t pow2mod = 1;
  double lipschitz = 0.0;
  BesselCheck out;
  for (unsigned s = 1; s <= s_max; ++s) {
    for (std::size_t k = 0; k < grid.n; ++k) prod[k] *= base[(k * pow2mod) % grid.n];
    pow2mod = (pow2mod * 2) % grid.n;
    lipschitz += std::ldexp(1.0, static_cast<int>(s) - 1) * dp * std::pow(mp, s - 1.0);
    const double sup = *std::max_element(prod.begin(), prod.end());
    const double pad = lipschitz / (2.0 * static_cast<double>(grid.n));
    if (sup + pad < std::ldexp(1.0, static_cast<int>(n * s))) {
      out.ok = true;
      out.s = s;
      out.sup = sup;
      out.epsilon = static_cast<double>(n) - std::log2(sup) / static_cast<double>(s);
      return out;
    }
  }
  return out;
}

/// Constants (p0, a, delta, q0) of the lower-frame-bound conditions:
/// p0 = inf |phat| on [-1/4,1/4]; a bounds (1 - |phat(xi)|)/|xi| there;
/// delta = min(1/4, 1/(2a)); q0 = inf over the outer band [1/4,1/2] of
/// max_l |ghat^l|. Values are grid point estimates; failure reflects a
/// certified nonpositive value or a broken condition (ii).
struct LowerCheck {
  bool ok = false;
  double p0 = 0.0;
  double a = 0.0;
  double delta = 0.0;
  double q0 = 0.0;
};

inline LowerCheck check_lower_condition(const FiniteSequence& p, const FilterBank& bank,
                                        GridSpec grid) {
  grid = grid.grown_to(4 * std::max(p.size(), std::size_t{4}));
  const std::size_t n = grid.n;
  const auto pv = eval_ft_grid(p, grid);

  LowerCheck out;
  double p0 = std::numeric_limits<double>::infinity();
  double a = 0.0;
  for (std::size_t k = 0; k <= n / 4; ++k) {   // xi = k/N, |xi| <= 1/4; |phat| is even in xi for the banks
    const double xi = static_cast<double>(k) / static_cast<double>(n);
    const double mag_pos = std::abs(pv[k]);
    const double mag_neg = std::abs(pv[(n - k) % n]);
    const double mag = std::min(mag_pos, mag_neg);
    p0 = std::min(p0, mag);
    if (k > 0) {
      a = std::max(a, (1.0 - mag_pos) / xi);
      a = std::max(a, (1.0 - mag_neg) / xi);
    }
  }
  a = std::max(a, 1e-6);
  const double delta = std::min(0.25, 1.0 / (2.0 * a));

  // Condition (ii) re-verified on [-delta, delta]: |phat(xi)| >= 1 - a|xi|.
  bool cond2 = true;
  for (std::size_t k = 0; k <= n / 4; ++k) {
    const double xi = static_cast<double>(k) / static_cast<double>(n);
    if (xi > delta) break;
    const double lower = 1.0 - a * xi;
    if (std::abs(pv[k]) < lower - 1e-12 || std::abs(pv[(n - k) % n]) < lower - 1e-12)
      cond2 = false;
  }

  double q0 = std::numeric_limits<double>::infinity();
  std::vector<std::vector<std::complex<double>>> gv;
  for (const auto& g : bank.highpass) gv.push_back(eval_ft_grid(g, grid));
  for (std::size_t k = n / 4; k <= n / 2; ++k) {
    double best_pos = 0.0, best_neg = 0.0;
    for (const auto& v : gv) {
      best_pos = std::max(best_pos, std::abs(v[k]));
      best_neg = std::max(best_neg, std::abs(v[(n - k) % n]));
    }
    q0 = std::min(q0, std::min(best_pos, best_neg));
  }

  out.p0 = p0;
  out.a = a;
  out.delta = delta;
  out.q0 = q0;
  out.ok = cond2 && p0 > 0.0 && q0 > 0.0;
  return out;
}

enum class Verdict { CertifiedStable, BesselOnly, Unverified, DivergenceDetected };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedStable: return "CertifiedStable";
    case Verdict::BesselOnly: return "BesselOnly";
    case Verdict::Unverified: return "Unverified";
    case Verdict::DivergenceDetected: return "DivergenceDetected";
  }
  return "Unverified";
}

/// Constants of the sufficient stability conditions plus a verdict. The
/// certificate is one-sided: Unverified does not mean unstable.
struct StabilityCertificate {
  unsigned n = 0;
  FiniteSequence p;
  unsigned s = 0;
  double epsilon = 0.0;
  double p0 = 0.0;
  double a = 0.0;
  double delta = 0.0;
  double q0 = 0.0;
  Verdict verdict = Verdict::Unverified;
};

inline StabilityCertificate certify_stability(const FilterBank& bank,
                                              GridSpec grid = GridSpec{4096}) {
  StabilityCertificate cert;
  auto [n, p] = factor_haar_type(bank.lowpass);
  cert.n = n;
  cert.p = p;

  const BesselCheck bessel = check_bessel_condition(p, n, 8, grid);
  if (!bessel.ok) {
    const FrameReport tail = infinite_frame_bounds(bank, 20, grid);
    cert.verdict = tail.tail_flag ? Verdict::DivergenceDetected : Verdict::Unverified;
    return cert;
  }
  cert.s = bessel.s;
  cert.epsilon = bessel.epsilon;

  const LowerCheck lower = check_lower_condition(p, bank, grid);
  cert.p0 = lower.p0;
  cert.a = lower.a;
  cert.delta = lower.delta;
  cert.q0 = lower.q0;
  cert.verdict = lower.ok ? Verdict::CertifiedStable : Verdict::BesselOnly;
  return cert;
}

/// (A, B) for the finitely iterated banks given infinite-bank bounds:
/// min{A, A/B} and max{B/A, B}.
inline std::pair<double, double> bound_propagation(double a, double b) {
  if (!(a > 0.0) || !(b >= a)) throw bad_bounds("need 0 < A <= B");
  return {std::min(a, a / b), std::max(b / a, b)};
}

/// ||x * involute(h_J)|| for J = 1..Jmax (the necessary-condition diagnostic).
inline std::vector<double> lowpass_decay(const FilterBank& bank, const FiniteSequence& x,
                                         unsigned Jmax) {
  if (Jmax == 0 || Jmax > kMaxDepth) throw depth_limit("Jmax out of range");
  std::vector<double> out;
  FiniteSequence hj = FiniteSequence::delta();
  for (unsigned j = 1; j <= Jmax; ++j) {
    hj = convolve(hj, upsample(bank.lowpass, j - 1));
    out.push_back(convolve(x, involute(hj)).norm());
  }
  return out;
}

namespace detail {

inline CoefficientPyramid pyramid_diff(const CoefficientPyramid& a, const CoefficientPyramid& b) {
  if (a.order != b.order || a.channels() != b.channels())
    throw pyramid_shape("pyramid shapes differ");
  CoefficientPyramid out;
  out.order = a.order;
  out.details.resize(a.order);
  for (unsigned j = 0; j < a.order; ++j)
    for (std::size_t l = 0; l < a.details[j].size(); ++l)
      out.details[j].push_back(subtract(a.details[j][l], b.details[j][l]));
  out.approximation = subtract(a.approximation, b.approximation);
  return out;
}

}  // namespace detail

/// Frame-algorithm inversion of analyze: x <- x + 2/(A+B) F*(c - Fx).
/// The error contracts by (B-A)/(B+A) per step, which is why the certified
/// bounds are taken as inputs. Residual norms per iteration are written to
/// *residuals when provided.
inline FiniteSequence frame_reconstruct(const FilterBank& bank, const CoefficientPyramid& pyr,
                                        double A, double B, double tol, unsigned max_iter,
                                        std::vector<double>* residuals = nullptr) {
  if (!(A > 0.0) || !(B >= A)) throw bad_bounds("need 0 < A <= B");
  const double relax = 2.0 / (A + B);
  const double target = tol * pyr.norm();
  FiniteSequence x = FiniteSequence::zero();
  for (unsigned it = 0; it <= max_iter; ++it) {
    const CoefficientPyramid residual = detail::pyramid_diff(pyr, analyze(bank, x, pyr.order));
    const double rnorm = residual.norm();
    if (residuals) residuals->push_back(rnorm);
    if (rnorm <= target) return x;
    if (it == max_iter) break;
    x = add(x, scale(synthesize(bank, residual), relax));
  }
  throw no_convergence("frame reconstruction did not reach tolerance in " +
                       std::to_string(max_iter) + " iterations");
}

}  // namespace atrous
