#pragma once

// Seeded input samplers shared by the verify suites and the tests. Lifts
// are drawn from the involution constraints written out per class, not from
// the library's normalization code.

#include <random>
#include <vector>

#include "hopf/realstruct.hpp"

namespace hopf::sampling {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }
  Complex unit() { return std::polar(1.0, uniform(-kPi, kPi)); }
  Complex nonzero(double lo = 0.3, double hi = 2.0) { return std::polar(uniform(lo, hi), uniform(-kPi, kPi)); }
  double modulus(double lo = 0.3, double hi = 0.9) { return uniform(lo, hi); }
  double sign() { return integer(0, 1) ? 1.0 : -1.0; }

  Point point(double scale = 1.0) {
    Point p{complex(scale), complex(scale)};
    while (norm(p) < 1e-3) p = {complex(scale), complex(scale)};
    return p;
  }

  /// A random contraction of the given user class; `positive` forces
  /// positive real diagonal coefficients.
  Contraction contraction(WehlerClass cls, bool positive) {
    auto s = [&] { return positive ? 1.0 : sign(); };
    switch (cls) {
      case WehlerClass::IV: return Contraction::iv(s() * modulus());
      case WehlerClass::III: return Contraction::iii(s() * modulus(0.5, 0.9), integer(2, 3));
      case WehlerClass::IIa: return Contraction::iia(s() * modulus(0.5, 0.9), integer(2, 3));
      case WehlerClass::IIb: return Contraction::iib(s() * modulus());
      case WehlerClass::IIc:
        for (;;) {
          const double a = s() * modulus(), d = s() * modulus();
          if (std::abs(std::abs(a) - std::abs(d)) < 0.05) continue;
          try {
            return Contraction::iic(a, d);
          } catch (const Error&) {
          }
        }
      case WehlerClass::IIcPrime: return Contraction::iic_prime(std::polar(modulus(), uniform(0.3, 2.8)));
      default: break;
    }
    throw Error(ErrorCode::InvalidArgument, "unsupported sampler class");
  }

  /// Unit b-argument solving e^(2i beta) = target, with random real length.
  Complex constrained_b(Complex target) {
    const double beta = std::arg(target) / 2.0 + (integer(0, 1) ? kPi : 0.0);
    return std::polar(uniform(-1.5, 1.5), beta);
  }

  /// A random anti-holomorphic involution commuting with f.
  PolyMap even_lift(const Contraction& f) {
    switch (f.cls()) {
      case WehlerClass::IV: {
        // M = l conj(l)^-1 satisfies M conj(M) = id.
        Eigen::Matrix2cd l;
        do {
          l << complex(), complex(), complex(), complex();
        } while (std::abs(l.determinant()) < 0.2);
        const Eigen::Matrix2cd m = l * Eigen::Matrix2cd(l.conjugate()).inverse();
        return PolyMap::linear(m, true);
      }
      case WehlerClass::III: {
        // |a| = |d| = 1 and a conj(b) + b conj(d)^r = 0.
        const Complex a = unit(), d = unit();
        const Complex b = constrained_b(-a * std::pow(d, f.r()));
        return PolyMap::triangular(a, b, f.r(), d, true);
      }
      case WehlerClass::IIa: {
        // |a| = 1 and a^r conj(b) + b conj(a)^r = 0.
        const Complex a = unit();
        const Complex b = constrained_b(-std::pow(a, 2 * f.r()));
        return PolyMap::triangular(std::pow(a, f.r()), b, f.r(), a, true);
      }
      case WehlerClass::IIb: {
        const Complex a = unit();
        const Complex b = constrained_b(-a * a);
        return PolyMap::triangular(a, b, 1, a, true);
      }
      case WehlerClass::IIc: return PolyMap::diagonal(unit(), unit(), true);
      case WehlerClass::IIcPrime: {
        // conj(a) = d^-1.
        const Complex a = nonzero();
        return PolyMap(true, Polynomial::monomial({0, 1}, a), Polynomial::monomial({1, 0}, 1.0 / std::conj(a)));
      }
      default: break;
    }
    throw Error(ErrorCode::InvalidArgument, "unsupported sampler class");
  }

  /// A random element of the holomorphic commutant of f.
  PolyMap commutant(const Contraction& f) {
    switch (f.cls()) {
      case WehlerClass::IV: {
        Eigen::Matrix2cd l;
        do {
          l << complex(), complex(), complex(), complex();
        } while (std::abs(l.determinant()) < 0.2);
        return PolyMap::linear(l).mark_automorphism();
      }
      case WehlerClass::III:
        return PolyMap::triangular(nonzero(), complex(), f.r(), nonzero()).mark_automorphism();
      case WehlerClass::IIa:
      case WehlerClass::IIaTilde: {
        const Complex a = nonzero(0.6, 1.5);
        return PolyMap::triangular(std::pow(a, f.r()), complex(), f.r(), a).mark_automorphism();
      }
      case WehlerClass::IIb:
      case WehlerClass::IIbTilde: {
        const Complex a = nonzero();
        return PolyMap::triangular(a, complex(), 1, a).mark_automorphism();
      }
      case WehlerClass::IIc:
      case WehlerClass::IIcPrime: return PolyMap::diagonal(nonzero(), nonzero()).mark_automorphism();
    }
    throw Error(ErrorCode::InvalidArgument, "unsupported sampler class");
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline const std::vector<WehlerClass>& user_classes() {
  static const std::vector<WehlerClass> v = {WehlerClass::IV,  WehlerClass::III, WehlerClass::IIa,
                                             WehlerClass::IIb, WehlerClass::IIc, WehlerClass::IIcPrime};
  return v;
}

}  // namespace hopf::sampling
