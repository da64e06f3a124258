#include "hopf/contraction.hpp"

#include <sstream>

namespace hopf {

namespace {

bool close(Complex a, Complex b, double tol = kCoefficientTol) { return std::abs(a - b) <= tol; }

void require_contracting(Complex x, const char* name) {
  const double m = std::abs(x);
  if (!(m > 0.0 && m < 1.0))
    throw Error(ErrorCode::NotContraction,
                std::string(name) + " must satisfy 0 < |" + name + "| < 1");
}

bool is_valid_iic_pair(Complex a, Complex d) {
  return !close(a, d) && !is_power_of(a, d);
}

// Strict order used to canonicalize IIc pairs.
bool precedes(Complex a, Complex b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (std::abs(ma - mb) > kCoefficientTol) return ma < mb;
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::string_view to_string(WehlerClass c) {
  switch (c) {
    case WehlerClass::IV: return "IV";
    case WehlerClass::III: return "III";
    case WehlerClass::IIa: return "IIa";
    case WehlerClass::IIb: return "IIb";
    case WehlerClass::IIc: return "IIc";
    case WehlerClass::IIcPrime: return "IIcPrime";
    case WehlerClass::IIaTilde: return "IIaTilde";
    case WehlerClass::IIbTilde: return "IIbTilde";
  }
  return "?";
}

WehlerClass wehler_class_from_string(std::string_view s) {
  for (auto c : {WehlerClass::IV, WehlerClass::III, WehlerClass::IIa, WehlerClass::IIb,
                 WehlerClass::IIc, WehlerClass::IIcPrime, WehlerClass::IIaTilde,
                 WehlerClass::IIbTilde})
    if (to_string(c) == s) return c;
  throw Error(ErrorCode::SchemaError, "unknown class '" + std::string(s) + "'");
}

bool is_power_of(Complex alpha, Complex delta) {
  const double ma = std::abs(alpha);
  const double md = std::abs(delta);
  Complex pw = delta;
  for (int r = 1; r <= kIIcPowerBound; ++r, pw *= delta) {
    if (close(alpha, pw)) return true;
    // |delta|^r only shrinks from here on.
    if (std::pow(md, r) < ma / 2 && md < 1.0) break;
  }
  return false;
}

Contraction Contraction::iv(Complex alpha) {
  Contraction f(WehlerClass::IV, alpha, {}, 1, {});
  f.validate();
  return f;
}

Contraction Contraction::iii(Complex delta, int r) {
  Contraction f(WehlerClass::III, {}, delta, r, {});
  f.validate();
  return f;
}

Contraction Contraction::iia(Complex delta, int r) {
  Contraction f(WehlerClass::IIa, {}, delta, r, 1.0);
  f.validate();
  return f;
}

Contraction Contraction::iib(Complex alpha) {
  Contraction f(WehlerClass::IIb, alpha, {}, 1, 1.0);
  f.validate();
  return f;
}

Contraction Contraction::iic(Complex alpha, Complex delta) {
  if (!is_real(alpha) && close(delta, std::conj(alpha))) return iic_prime(alpha);
  Contraction f(WehlerClass::IIc, alpha, delta, 1, {});
  f.validate();
  return f;
}

Contraction Contraction::iic_prime(Complex alpha) {
  Contraction f(WehlerClass::IIcPrime, alpha, std::conj(alpha), 1, {});
  f.validate();
  return f;
}

Contraction Contraction::iia_tilde(Complex delta, int r, Complex c) {
  Contraction f(WehlerClass::IIaTilde, {}, delta, r, c);
  f.validate();
  return f;
}

Contraction Contraction::iib_tilde(Complex alpha, Complex c) {
  Contraction f(WehlerClass::IIbTilde, alpha, {}, 1, c);
  f.validate();
  return f;
}

void Contraction::validate() const {
  switch (cls_) {
    case WehlerClass::IV:
    case WehlerClass::IIb:
    case WehlerClass::IIbTilde:
      require_contracting(alpha_, "alpha");
      break;
    case WehlerClass::III:
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde:
      require_contracting(delta_, "delta");
      if (r_ < 2) throw Error(ErrorCode::InvalidArgument, "r must be an integer >= 2");
      break;
    case WehlerClass::IIc:
      require_contracting(alpha_, "alpha");
      require_contracting(delta_, "delta");
      if (!is_valid_iic_pair(alpha_, delta_))
        throw Error(ErrorCode::NotWehlerForm, "IIc requires alpha != delta^r for all r >= 1");
      break;
    case WehlerClass::IIcPrime:
      require_contracting(alpha_, "alpha");
      if (is_real(alpha_)) throw Error(ErrorCode::NotWehlerForm, "IIcPrime requires non-real alpha");
      break;
  }
}

std::pair<Complex, Complex> Contraction::diagonal() const {
  switch (cls_) {
    case WehlerClass::IV: return {alpha_, alpha_};
    case WehlerClass::III:
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde: return {std::pow(delta_, r_), delta_};
    case WehlerClass::IIb:
    case WehlerClass::IIbTilde: return {alpha_, alpha_};
    case WehlerClass::IIc:
    case WehlerClass::IIcPrime: return {alpha_, delta_};
  }
  return {};
}

bool Contraction::has_off_diagonal() const {
  return cls_ == WehlerClass::IIa || cls_ == WehlerClass::IIb || cls_ == WehlerClass::IIaTilde ||
         cls_ == WehlerClass::IIbTilde;
}

PolyMap Contraction::to_polymap() const {
  const auto [a, d] = diagonal();
  PolyMap m;
  switch (cls_) {
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde: m = PolyMap::triangular(a, c_, r_, d); break;
    case WehlerClass::IIb:
    case WehlerClass::IIbTilde: m = PolyMap::triangular(a, c_, 1, d); break;
    default: m = PolyMap::diagonal(a, d); break;
  }
  return m.mark_automorphism();
}

Contraction diagonal_form(Complex a, Complex d) {
  if (close(a, d)) return Contraction::iv(a);
  require_contracting(a, "z-coefficient");
  require_contracting(d, "w-coefficient");
  const int r = static_cast<int>(std::lround(std::log(std::abs(a)) / std::log(std::abs(d))));
  if (r >= 2 && close(std::pow(d, r), a)) return Contraction::iii(d, r);
  return Contraction::iic(a, d);
}

bool same_contraction(const Contraction& a, const Contraction& b, double tol) {
  return a.cls() == b.cls() && a.r() == b.r() && close(a.alpha(), b.alpha(), tol) &&
         close(a.delta(), b.delta(), tol) && close(a.c(), b.c(), tol);
}

Contraction classify(const PolyMap& f) {
  if (f.anti()) throw Error(ErrorCode::NotWehlerForm, "map is anti-holomorphic");
  const auto& qt = f.q().terms();
  const auto& pt = f.p().terms();
  if (qt.size() != 1 || qt.begin()->first != Exponent{0, 1})
    throw Error(ErrorCode::NotWehlerForm, "second component must be a multiple of w");
  const Complex l2 = qt.begin()->second;
  const Complex l1 = f.p().coeff({1, 0});
  if (l1 == Complex{}) throw Error(ErrorCode::NotWehlerForm, "first component lacks a z term");

  Exponent extra{-1, -1};
  for (const auto& [e, c] : pt) {
    if (e == Exponent{1, 0}) continue;
    if (e.p != 0 || extra.p != -1)
      throw Error(ErrorCode::NotWehlerForm, "unsupported monomial support " + to_string(f));
    extra = e;
  }
  require_contracting(l1, "z-coefficient");
  require_contracting(l2, "w-coefficient");

  if (extra.p == -1) {
    if (close(l1, l2)) return Contraction::iv(l1);
    const int r = static_cast<int>(std::lround(std::log(std::abs(l1)) / std::log(std::abs(l2))));
    if (r >= 2 && close(std::pow(l2, r), l1)) return Contraction::iii(l2, r);
    if (!is_real(l1) && close(l2, std::conj(l1))) return Contraction::iic_prime(l1);
    if (precedes(l2, l1) && is_valid_iic_pair(l2, l1)) return Contraction::iic(l2, l1);
    return Contraction::iic(l1, l2);
  }

  const Complex b = f.p().coeff(extra);
  if (!close(b, 1.0))
    throw Error(ErrorCode::NotWehlerForm, "off-diagonal coefficient must be 1 (tilde classes are internal)");
  if (extra.q == 1) {
    if (!close(l1, l2)) throw Error(ErrorCode::NotWehlerForm, "IIb requires equal diagonal entries");
    return Contraction::iib(l1);
  }
  if (!close(std::pow(l2, extra.q), l1))
    throw Error(ErrorCode::NotWehlerForm, "IIa requires z-coefficient delta^r");
  return Contraction::iia(l2, extra.q);
}

bool is_biholomorphic_pair(const Contraction& f1, const Contraction& f2) {
  if (same_contraction(f1, f2)) return true;
  auto iic_family = [](const Contraction& f) {
    return f.cls() == WehlerClass::IIc || f.cls() == WehlerClass::IIcPrime;
  };
  if (!iic_family(f1) || !iic_family(f2)) return false;
  const auto [a1, d1] = f1.diagonal();
  const auto [a2, d2] = f2.diagonal();
  return (close(a1, a2) && close(d1, d2)) || (close(a1, d2) && close(d1, a2));
}

StructuralFlags structural_flags(const Contraction& f) {
  StructuralFlags flags;
  const auto [a, d] = f.diagonal();
  flags.is_iic_prime = f.cls() == WehlerClass::IIcPrime;
  flags.real_coeffs = is_real(a) && is_real(d) && is_real(f.c());
  if (flags.real_coeffs) {
    flags.negative_diagonal_count = (a.real() < 0) + (d.real() < 0);
    flags.positive_diagonal = flags.negative_diagonal_count == 0;
  }
  return flags;
}

std::string describe(const Contraction& f) {
  std::ostringstream os;
  os << to_string(f.cls()) << " " << to_string(f.to_polymap());
  return os.str();
}

}  // namespace hopf
