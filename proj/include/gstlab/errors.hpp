#ifndef GSTLAB_ERRORS_HPP
#define GSTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gstlab {

// Spectral radius below tolerance; the operator cannot be normalized
// (nilpotent adjacency / DAG case).
class ZeroSpectralRadiusError : public std::runtime_error {
 public:
  explicit ZeroSpectralRadiusError(const std::string& what)
      : std::runtime_error(what) {}
};

// QR iteration failed to converge within the sweep cap.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Assembled basis is numerically singular or too ill-conditioned to solve.
class SingularBasisError : public std::runtime_error {
 public:
  SingularBasisError(const std::string& what, double condition_estimate)
      : std::runtime_error(what), condition_estimate(condition_estimate) {}
  double condition_estimate;
};

// Interpolation nodes nearly coincide across groups with conflicting values.
class IllConditionedInterpolationError : public std::runtime_error {
 public:
  IllConditionedInterpolationError(const std::string& what, double estimate)
      : std::runtime_error(what), condition_estimate(estimate) {}
  double condition_estimate;
};

}  // namespace gstlab

#endif
