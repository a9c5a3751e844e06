#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "atrous/sequence.hpp"

using atrous::FiniteSequence;

namespace {

FiniteSequence random_seq(std::mt19937& rng, std::size_t max_len = 32) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::int64_t> off(-20, 20);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::vector<double> taps(len(rng));
  for (double& t : taps) t = val(rng);
  return {off(rng), std::move(taps)};
}

}  // namespace

TEST_CASE("canonical form trims zeros and normalizes the zero sequence") {
  FiniteSequence x(-3, {0.0, 0.0, 1.0, 2.0, 0.0});
  CHECK(x.offset() == -1);
  CHECK(x.size() == 2);
  CHECK(x.at(-1) == 1.0);
  CHECK(x.at(0) == 2.0);
  CHECK(x.at(5) == 0.0);

  FiniteSequence z(7, {0.0, 0.0});
  CHECK(z.is_zero());
  CHECK(z.offset() == 0);
  CHECK(z == FiniteSequence::zero());
}

TEST_CASE("convolution basics") {
  FiniteSequence haar(0, {0.5, 0.5});
  auto h2 = convolve(haar, haar);
  CHECK(h2.offset() == 0);
  CHECK(h2.taps() == std::vector<double>{0.25, 0.5, 0.25});

  // delta is the identity
  auto d = FiniteSequence::delta();
  auto x = FiniteSequence(-2, {1.0, -3.0, 2.0});
  CHECK(convolve(d, x) == x);
  CHECK(convolve(x, d) == x);

  // offsets add
  auto y = FiniteSequence(5, {2.0});
  CHECK(convolve(x, y) == FiniteSequence(3, {2.0, -6.0, 4.0}));

  CHECK(convolve(x, FiniteSequence::zero()).is_zero());
}

TEST_CASE("convolution is commutative and associative on random input") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_seq(rng), b = random_seq(rng), c = random_seq(rng);
    auto ab = convolve(a, b);
    auto ba = convolve(b, a);
    REQUIRE(ab.offset() == ba.offset());
    REQUIRE(ab.size() == ba.size());
    for (std::size_t i = 0; i < ab.size(); ++i)
      CHECK(ab.taps()[i] == doctest::Approx(ba.taps()[i]).epsilon(1e-12));

    auto left = convolve(ab, c);
    auto right = convolve(a, convolve(b, c));
    for (std::int64_t k = left.offset(); k <= left.last_index(); ++k)
      CHECK(left.at(k) == doctest::Approx(right.at(k)).epsilon(1e-10));
  }
}

TEST_CASE("upsampling") {
  FiniteSequence x(-1, {1.0, 2.0, 3.0});
  auto u = upsample(x, 1);
  CHECK(u.offset() == -2);
  CHECK(u.taps() == std::vector<double>{1.0, 0.0, 2.0, 0.0, 3.0});
  auto u2 = upsample(x, 2);
  CHECK(u2.offset() == -4);
  CHECK(u2.size() == 9);
  CHECK(u2.at(-4) == 1.0);
  CHECK(u2.at(0) == 2.0);
  CHECK(u2.at(4) == 3.0);
  CHECK(upsample(x, 0) == x);
}

TEST_CASE("involution, translation, modulation") {
  FiniteSequence x(-1, {1.0, 2.0, 3.0});
  auto r = involute(x);
  CHECK(r.offset() == -1);
  CHECK(r.taps() == std::vector<double>{3.0, 2.0, 1.0});
  CHECK(involute(r) == x);

  auto t = translate(x, 4);
  CHECK(t.offset() == 3);
  CHECK(t.taps() == x.taps());

  auto m = modulate_half(x);
  CHECK(m.at(-1) == -1.0);
  CHECK(m.at(0) == 2.0);
  CHECK(m.at(1) == -3.0);
  CHECK(modulate_half(m) == x);
}

TEST_CASE("arithmetic and norms") {
  FiniteSequence x(0, {3.0, 4.0});
  CHECK(x.norm_sq() == 25.0);
  CHECK(x.norm() == 5.0);
  CHECK(x.norm_l1() == 7.0);
  CHECK(x.tap_sum() == 7.0);

  FiniteSequence y(1, {-4.0, 1.0});
  auto s = add(x, y);
  CHECK(s == FiniteSequence(0, {3.0, 0.0, 1.0}));
  CHECK(subtract(x, x).is_zero());
}

TEST_CASE("pairwise sum matches long double accumulation") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::vector<double> v(10001);
  long double acc = 0.0L;
  for (double& t : v) {
    t = val(rng);
    acc += t;
  }
  CHECK(atrous::pairwise_sum(v) == doctest::Approx(static_cast<double>(acc)).epsilon(1e-12));
}

TEST_CASE("non-finite taps are rejected") {
  CHECK_THROWS_AS(FiniteSequence(0, {1.0, std::nan("")}), atrous::Error);
}
