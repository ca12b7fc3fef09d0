#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace framekit {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Scalar field of a frame. Real data rides the complex path with zero
// imaginary parts; the tag controls diagram-vector layout and serialization.
enum class Field { Real, Complex };

inline const char* field_name(Field f) {
  return f == Field::Real ? "real" : "complex";
}

// Relative/absolute cutoffs shared by every numerical predicate.
// rel_eps scales with the data, abs_floor is a hard lower cutoff so that
// thresholds never collapse to zero.
struct Tolerance {
  double rel_eps = 1e-10;
  double abs_floor = 1e-12;

  [[nodiscard]] bool valid() const { return rel_eps > 0.0 && abs_floor > 0.0; }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape mismatch, empty input, or an operation undefined at this dimension.
struct DimensionError : Error {
  using Error::Error;
};

// A documented precondition does not hold for the given input.
struct ContractViolation : Error {
  using Error::Error;
};

// A vector sequence that must be a frame does not span its space.
struct NotAFrameError : ContractViolation {
  using ContractViolation::ContractViolation;
};

// Subset enumeration would exceed the configured cap.
struct ResourceLimitError : Error {
  using Error::Error;
};

// Malformed input file or argument payload.
struct ParseError : Error {
  using Error::Error;
};

// Default caps for exponential subset enumerations. Overridable per call.
inline constexpr int kSubsetEnumerationCap = 20;
inline constexpr int kSpanningEnumerationCap = 24;

}  // namespace framekit
