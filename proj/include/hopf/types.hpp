#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopf {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// A point of C^2. Points of W = C^2 \ {0} use the same carrier.
struct Point {
  Complex z{};
  Complex w{};

  friend Point operator+(Point a, Point b) { return {a.z + b.z, a.w + b.w}; }
  friend Point operator-(Point a, Point b) { return {a.z - b.z, a.w - b.w}; }
  friend Point operator*(Complex s, Point a) { return {s * a.z, s * a.w}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double norm2(Point p) { return std::norm(p.z) + std::norm(p.w); }
inline double norm(Point p) { return std::sqrt(norm2(p)); }
inline Point conj(Point p) { return {std::conj(p.z), std::conj(p.w)}; }
inline double distance(Point a, Point b) { return norm(a - b); }

/// A point of the model manifold S^1 x S^3, stored as (zeta, (u, v)).
struct ModelPoint {
  Complex zeta{1.0, 0.0};
  Point sphere{};
};

/// Product-metric distance on S^1 x S^3.
inline double distance(const ModelPoint& a, const ModelPoint& b) {
  return std::sqrt(std::norm(a.zeta - b.zeta) + norm2(a.sphere - b.sphere));
}

enum class ErrorCode {
  DomainError,
  DegreeOverflow,
  NotInvertibleShape,
  NotWehlerForm,
  NotContraction,
  NotCommuting,
  NotDeckPower,
  NoSuchStructure,
  NotInvolution,
  NumericallySingular,
  NotOddSquare,
  NoAntiholomorphic,
  NotPositiveDiagonal,
  NotRealCoefficients,
  ConvergenceFailure,
  ZeroArgument,
  NotRealZeta,
  NotQuaternionicShape,
  InvalidArgument,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hopf
