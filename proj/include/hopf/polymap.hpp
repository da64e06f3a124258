#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hopf/types.hpp"

namespace hopf {

/// Coefficients below this magnitude are dropped on construction.
inline constexpr double kDedupEpsilon = 1e-14;
/// Default tolerance of maps_equal.
inline constexpr double kMapTolerance = 1e-10;
/// Default cap on the total degree of a composition.
inline constexpr int kDefaultDegreeCap = 16;

/// Exponent pair (p, q) of the monomial z^p w^q.
struct Exponent {
  int p = 0;
  int q = 0;
  int degree() const { return p + q; }
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse bivariate polynomial in (z, w) with complex coefficients.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Complex>;

  Polynomial() = default;
  explicit Polynomial(Terms terms);

  static Polynomial monomial(Exponent e, Complex c);
  static Polynomial constant(Complex c) { return monomial({0, 0}, c); }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Complex coeff(Exponent e) const;

  Complex evaluate(Complex z, Complex w) const;
  Polynomial conj_coefficients() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Complex s) const;

 private:
  void prune();
  Terms terms_;
};

/// Holomorphic (anti = false) or anti-holomorphic (anti = true) polynomial
/// self-map (z, w) -> (P(.), Q(.)) of C^2. An anti-holomorphic map evaluates
/// its component polynomials at (conj z, conj w).
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(bool anti, Polynomial p, Polynomial q)
      : anti_(anti), p_(std::move(p)), q_(std::move(q)) {}

  static PolyMap identity();
  /// c(z, w) = (conj z, conj w).
  static PolyMap conjugation();
  /// c'(z, w) = (conj w, conj z).
  static PolyMap swap_conjugation();
  /// J(z, w) = (-conj w, conj z).
  static PolyMap quaternionic();
  /// Z -> M Z (anti = false) or Z -> M conj(Z) (anti = true).
  static PolyMap linear(const Eigen::Matrix2cd& m, bool anti = false);
  static PolyMap diagonal(Complex a, Complex d, bool anti = false);
  /// (z, w) -> (a z + b w^r, d w), optionally on conjugated input.
  static PolyMap triangular(Complex a, Complex b, int r, Complex d, bool anti = false);

  bool anti() const { return anti_; }
  const Polynomial& p() const { return p_; }
  const Polynomial& q() const { return q_; }
  int degree() const;

  /// True when every monomial has total degree exactly one.
  bool is_linear() const;
  /// Matrix of the degree-one part (the Jacobian at 0 before conjugation).
  Eigen::Matrix2cd linear_part() const;

  /// Marks the map as an automorphism of W; evaluate() then rejects
  /// (numerically) zero images.
  PolyMap& mark_automorphism(bool on = true) {
    automorphism_ = on;
    return *this;
  }
  bool marked_automorphism() const { return automorphism_; }

  Point operator()(Point z) const { return evaluate(z); }
  Point evaluate(Point z) const;

 private:
  bool anti_ = false;
  Polynomial p_;
  Polynomial q_;
  bool automorphism_ = false;
};

/// g o h. Throws DegreeOverflow when the result exceeds degree_cap.
PolyMap compose(const PolyMap& g, const PolyMap& h, int degree_cap = kDefaultDegreeCap);

/// Two-sided inverse for linear maps and triangular maps (a z + b w^r, d w),
/// either holomorphic or anti-holomorphic. Throws NotInvertibleShape otherwise.
PolyMap invert(const PolyMap& m);

/// f^n for n in Z (negative powers go through invert()).
PolyMap power(const PolyMap& f, int n, int degree_cap = kDefaultDegreeCap);

bool maps_equal(const PolyMap& a, const PolyMap& b, double tol = kMapTolerance);

/// Largest coefficient difference between two maps of the same type
/// (infinity when the conjugation flags differ).
double max_coefficient_difference(const PolyMap& a, const PolyMap& b);

/// True when no sampled point of W maps (numerically) to 0.
bool maps_w_to_w(const PolyMap& m, std::span<const Point> samples);

std::string to_string(const PolyMap& m);

}  // namespace hopf
