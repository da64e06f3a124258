#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "hopf/polymap.hpp"

namespace hopf {

/// Extended Wehler classes. The tilde classes only arise internally as
/// squares of IIa/IIb contractions with negative coefficients.
enum class WehlerClass { IV, III, IIa, IIb, IIc, IIcPrime, IIaTilde, IIbTilde };

std::string_view to_string(WehlerClass c);
WehlerClass wehler_class_from_string(std::string_view s);

/// Bound on r in the "alpha != delta^r" test for class IIc.
inline constexpr int kIIcPowerBound = 64;
/// Absolute tolerance for coefficient identities (alpha == delta^r, ...).
inline constexpr double kCoefficientTol = 1e-12;

/// A validated contraction in (extended) Wehler normal form:
///   IV        (a z, a w)
///   III       (d^r z, d w)
///   IIa       (d^r z + w^r, d w)          IIaTilde: c w^r
///   IIb       (a z + w, a w)              IIbTilde: c w
///   IIc       (a z, d w),  a != d^r for all r >= 1
///   IIcPrime  (a z, conj(a) w),  a not real
class Contraction {
 public:
  static Contraction iv(Complex alpha);
  static Contraction iii(Complex delta, int r);
  static Contraction iia(Complex delta, int r);
  static Contraction iib(Complex alpha);
  /// Promotes to IIcPrime when delta == conj(alpha) and alpha is not real.
  static Contraction iic(Complex alpha, Complex delta);
  static Contraction iic_prime(Complex alpha);
  static Contraction iia_tilde(Complex delta, int r, Complex c);
  static Contraction iib_tilde(Complex alpha, Complex c);

  WehlerClass cls() const { return cls_; }
  Complex alpha() const { return alpha_; }
  Complex delta() const { return delta_; }
  int r() const { return r_; }
  /// Off-diagonal coefficient (1 for IIa/IIb, 0 for diagonal classes).
  Complex c() const { return c_; }

  /// The two diagonal coefficients (z-coefficient, w-coefficient).
  std::pair<Complex, Complex> diagonal() const;
  bool has_off_diagonal() const;

  PolyMap to_polymap() const;

  friend bool operator==(const Contraction&, const Contraction&) = default;

 private:
  Contraction(WehlerClass cls, Complex alpha, Complex delta, int r, Complex c)
      : cls_(cls), alpha_(alpha), delta_(delta), r_(r), c_(c) {}
  void validate() const;

  WehlerClass cls_ = WehlerClass::IV;
  Complex alpha_{};
  Complex delta_{};
  int r_ = 1;
  Complex c_{};
};

/// Diagonal contraction (a z, d w) in the given coordinate order: IV when
/// a == d, III when a == d^r, IIc (or IIcPrime) otherwise.
Contraction diagonal_form(Complex a, Complex d);

/// Exact-with-tolerance coefficient comparison.
bool same_contraction(const Contraction& a, const Contraction& b, double tol = kCoefficientTol);

/// Detects the Wehler class of a holomorphic polynomial contraction. IIc pairs
/// are put in canonical order |alpha| <= |delta| (ties: lexicographic on
/// (re, im)) whenever the swapped pair is itself a valid IIc pair.
Contraction classify(const PolyMap& f);

/// True iff H_f1 and H_f2 are biholomorphic: equal data, or IIc pairs
/// related by swapping the two coefficients.
bool is_biholomorphic_pair(const Contraction& f1, const Contraction& f2);

struct StructuralFlags {
  bool real_coeffs = false;
  bool positive_diagonal = false;
  int negative_diagonal_count = 0;
  bool is_iic_prime = false;
  friend bool operator==(const StructuralFlags&, const StructuralFlags&) = default;
};

StructuralFlags structural_flags(const Contraction& f);

inline bool is_real(Complex x, double tol = kCoefficientTol) { return std::abs(x.imag()) <= tol; }

/// True if alpha == delta^r for some 1 <= r <= kIIcPowerBound.
bool is_power_of(Complex alpha, Complex delta);

std::string describe(const Contraction& f);

}  // namespace hopf
