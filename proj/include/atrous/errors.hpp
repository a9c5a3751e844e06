#pragma once

#include <stdexcept>
#include <string>

namespace atrous {

// Error category names are stable strings used by the CLI for exit codes
// and machine-parsable "error:" lines.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

inline Error grid_too_small(const std::string& what) { return {"GridTooSmall", what}; }
inline Error depth_limit(const std::string& what) { return {"DepthLimit", what}; }
inline Error pyramid_shape(const std::string& what) { return {"PyramidShape", what}; }
inline Error not_low_pass(const std::string& what) { return {"NotLowPass", what}; }
inline Error bad_bounds(const std::string& what) { return {"BadBounds", what}; }
inline Error no_convergence(const std::string& what) { return {"NoConvergence", what}; }
inline Error bad_params(const std::string& what) { return {"BadParams", what}; }
inline Error empty_feasible_set(const std::string& what) { return {"EmptyFeasibleSet", what}; }
inline Error singular_system(const std::string& what) { return {"SingularSystem", what}; }
inline Error not_coprime(const std::string& what) { return {"NotCoprime", what}; }
inline Error not_nonnegative(const std::string& what) { return {"NotNonnegative", what}; }
inline Error odd_circle_root(const std::string& what) { return {"OddCircleRoot", what}; }
inline Error negative_factor(const std::string& what) { return {"NegativeFactor", what}; }
inline Error zero_sequence(const std::string& what) { return {"ZeroSequence", what}; }

}  // namespace atrous
