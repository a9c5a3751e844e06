#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "atrous/spectrum.hpp"

using atrous::FiniteSequence;
using atrous::GridSpec;

namespace {

// Table 1 low-pass filter (symmetric, 5 taps, printed to 8 decimals).
FiniteSequence table1_h() {
  return {-2, {-0.05125162, 0.25, 0.60250325, 0.25, -0.05125162}};
}
FiniteSequence table1_g() {
  return {-2, {-0.05125162, -0.25, 0.60250325, -0.25, -0.05125162}};
}

FiniteSequence random_seq(std::mt19937& rng, std::size_t max_len = 24) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::int64_t> off(-10, 10);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::vector<double> taps(len(rng));
  for (double& t : taps) t = val(rng);
  return {off(rng), std::move(taps)};
}

}  // namespace

TEST_CASE("eval_ft at distinguished frequencies") {
  CHECK(std::abs(eval_ft(FiniteSequence::delta(), 0.37) - 1.0) < 1e-15);

  // tap sums as printed: hhat(0) = 1.00000001, hhat(1/2) ~ 0
  CHECK(eval_ft(table1_h(), 0.0).real() == doctest::Approx(1.00000001).epsilon(1e-12));
  CHECK(std::abs(eval_ft(table1_h(), 0.5)) < 2e-8);

  // filter whose taps sum to 1 exactly
  FiniteSequence h3(-3, {-0.05, 0.05, 0.3, 0.4, 0.3, 0.05, -0.05});
  CHECK(eval_ft(h3, 0.0).real() == 1.0);
}

TEST_CASE("eval_ft_grid agrees with pointwise evaluation") {
  // Haar on a 4-point grid: {1, (1-i)/2, 0, (1+i)/2}
  FiniteSequence haar(0, {0.5, 0.5});
  auto v = eval_ft_grid(haar, GridSpec::of(4));
  CHECK(std::abs(v[0] - std::complex<double>(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(v[1] - std::complex<double>(0.5, -0.5)) < 1e-15);
  CHECK(std::abs(v[2]) < 1e-15);
  CHECK(std::abs(v[3] - std::complex<double>(0.5, 0.5)) < 1e-15);

  auto ones = eval_ft_grid(FiniteSequence::delta(), GridSpec::of(8));
  for (const auto& z : ones) CHECK(std::abs(z - 1.0) < 1e-15);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_seq(rng);
    GridSpec grid = GridSpec::of(64);
    auto g = eval_ft_grid(x, grid);
    for (std::size_t k = 0; k < grid.n; ++k) {
      auto p = eval_ft(x, static_cast<double>(k) / static_cast<double>(grid.n));
      CHECK(std::abs(g[k] - p) <= 1e-12);
    }
  }
}

TEST_CASE("grid too small is rejected") {
  FiniteSequence x(0, {1, 2, 3, 4, 5});
  CHECK_THROWS_AS(eval_ft_grid(x, GridSpec::of(4)), atrous::Error);
}

TEST_CASE("certified_range encloses the true extrema") {
  // Haar pair: |hhat|^2 + |ghat|^2 = cos^2 + sin^2 = 1
  FiniteSequence h(0, {0.5, 0.5}), g(0, {0.5, -0.5});
  auto r = certified_range({h, g}, GridSpec::of(256));
  CHECK(r.inf.lo <= 1.0);
  CHECK(r.inf.hi == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.sup.lo == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.sup.hi >= 1.0);

  // scaled delta: interval [c^2, c^2], zero pad
  auto d = atrous::scale(FiniteSequence::delta(), -1.7);
  auto rd = certified_range({d}, GridSpec::of(64));
  CHECK(rd.inf.hi == doctest::Approx(2.89).epsilon(1e-14));
  CHECK(rd.sup.lo == doctest::Approx(2.89).epsilon(1e-14));
  CHECK(rd.sup.lipschitz_pad == 0.0);
}

TEST_CASE("certified_range: Table 1 frame function on N=4096") {
  // Frozen dense-grid values for |hhat|^2 + |ghat|^2 of the Table 1 pair.
  auto r = certified_range({table1_h(), table1_g()}, GridSpec::of(4096));
  CHECK(r.inf_value() == doctest::Approx(0.97591568).epsilon(1e-6));
  CHECK(r.sup_value() == doctest::Approx(1.00000002).epsilon(1e-8));
  CHECK(r.inf.lo <= r.inf_value());
  CHECK(r.sup.hi >= r.sup_value());
}

TEST_CASE("certified intervals contain random point evaluations") {
  std::mt19937 rng(42);
  auto h = table1_h();
  auto g = table1_g();
  auto r = certified_range({h, g}, GridSpec::of(1024));
  std::uniform_real_distribution<double> xi(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double f = xi(rng);
    const double phi = std::norm(eval_ft(h, f)) + std::norm(eval_ft(g, f));
    CHECK(phi >= r.inf.lo - 1e-12);
    CHECK(phi <= r.sup.hi + 1e-12);
  }
}

TEST_CASE("increasing N shrinks the pad") {
  auto h = table1_h();
  auto a = certified_range({h}, GridSpec::of(512));
  auto b = certified_range({h}, GridSpec::of(2048));
  CHECK(b.sup.lipschitz_pad < a.sup.lipschitz_pad);
}

TEST_CASE("quadrature_energy") {
  std::mt19937 rng(5);

  // Parseval cases: terms {delta} and the Haar pair both integrate to ||x||^2.
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_seq(rng);
    const double nsq = x.norm_sq();
    CHECK(quadrature_energy({FiniteSequence::delta()}, x) == nsq);  // bit-for-bit
    FiniteSequence h(0, {0.5, 0.5}), g(0, {0.5, -0.5});
    CHECK(quadrature_energy({h, g}, x) == doctest::Approx(nsq).epsilon(1e-12));
  }

  // Frequency-domain energy equals time-domain branch energy.
  auto g1 = table1_g();
  auto x = random_seq(rng);
  const double fd = quadrature_energy({g1}, x);
  const double td = convolve(x, involute(g1)).norm_sq();
  CHECK(fd == doctest::Approx(td).epsilon(1e-12));
}

TEST_CASE("haar factor bound self-test") {
  CHECK(haar_factor_bound_check(1, GridSpec::of(1024)));
  CHECK(haar_factor_bound_check(8, GridSpec::of(8192)));
}
