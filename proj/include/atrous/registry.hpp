#pragma once

#include <string>
#include <vector>

#include "atrous/filterbank.hpp"

namespace atrous {

// Built-in banks. Coefficients are stored exactly as published (8 decimal
// places); derived quantities therefore carry ~1e-8 rounding, which the
// FilterBank tolerances accommodate.

inline FilterBank haar_bank() {
  return {FiniteSequence(0, {0.5, 0.5}), {FiniteSequence(0, {0.5, -0.5})}, "haar"};
}

/// Symmetric 5-tap pair, n = 2, p(xi) = (1+a) - a cos(2 pi xi), a = 0.410013.
inline FilterBank example_5_1() {
  FiniteSequence h(-2, {-0.05125162, 0.25000000, 0.60250325, 0.25000000, -0.05125162});
  FiniteSequence g(-2, {-0.05125162, -0.25000000, 0.60250325, -0.25000000, -0.05125162});
  return {h, {g}, "example-5.1"};
}

/// Symmetric 7-tap pair, n = 2, degree-2 polynomial,
/// (a, b) = (0.32890122, 0.04248420).
inline FilterBank example_5_2() {
  FiniteSequence h(-3, {-0.00531052, -0.05173370, 0.25531052, 0.60346740, 0.25531052,
                        -0.05173370, -0.00531052});
  FiniteSequence g(-3, {0.00531052, -0.05173370, -0.25531052, 0.60346740, -0.25531052,
                        -0.05173370, 0.00531052});
  return {h, {g}, "example-5.2"};
}

/// Two high-pass filters designed by frequency interpolation.
inline FilterBank example_5_3() {
  FiniteSequence h(-3, {-0.05000000, 0.05000000, 0.30000000, 0.40000000, 0.30000000,
                        0.05000000, -0.05000000});
  FiniteSequence g1(-4, {-0.03511286, 0.02810626, -0.24357939, -0.02810626, 0.55738452,
                         -0.02810626, -0.24357939, 0.02810626, -0.03511286});
  FiniteSequence g2(-4, {-0.02588834, 0.00000000, 0.12500000, -0.25000000, 0.30177670,
                         -0.25000000, 0.12500000, 0.00000000, -0.02588834});
  return {h, {g1, g2}, "example-5.3"};
}

/// Perfect-reconstruction triplet from the Bezout/Riesz construction.
inline FilterBank example_5_4() {
  FiniteSequence h(-2, {-0.10956917, 0.09694723, 0.31919216, 0.40305277, 0.29037701});
  FiniteSequence g1(-4, {-0.03342562, -0.10296278, -0.05386255, 0.33807931, 0.13363824,
                         -0.36727027, 0.02801366, 0.13215374, -0.07436373});
  FiniteSequence g2(-4, {0.01271264, 0.04169253, 0.01150312, -0.13643441, -0.06718653,
                         0.20830747, -0.26150312, 0.38643441, -0.19552611});
  return {h, {g1, g2}, "example-5.4"};
}

/// Non-Bessel construction: n = 1 with p(xi) = 2 - cos(2 pi xi); the
/// iterated high-pass transforms blow up along the orbit of xi = 1/3.
inline FilterBank divergent_example() {
  FiniteSequence h(-2, {-0.25, 0.75, 0.75, -0.25});
  return {h, {modulate_half(h)}, "divergent-example"};
}

inline std::vector<std::string> registry_names() {
  return {"haar", "example-5.1", "example-5.2", "example-5.3", "example-5.4",
          "divergent-example"};
}

inline FilterBank registry_bank(const std::string& name) {
  if (name == "haar") return haar_bank();
  if (name == "example-5.1") return example_5_1();
  if (name == "example-5.2") return example_5_2();
  if (name == "example-5.3") return example_5_3();
  if (name == "example-5.4") return example_5_4();
  if (name == "divergent-example") return divergent_example();
  throw bad_params("unknown bank '" + name + "'");
}

}  // namespace atrous
