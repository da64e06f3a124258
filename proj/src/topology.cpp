#include "hopf/topology.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "hopf/flows.hpp"

namespace hopf {

namespace {

// Solves g(x) = 0 for a strictly increasing g given as (value, derivative).
// Stops once |expm1(g)| <= tol, i.e. the underlying weight is within tol of 1.
double solve_increasing(const std::function<std::pair<double, double>(double)>& g, double x0,
                        const char* what) {
  double lo = x0 - 1.0, hi = x0 + 1.0;
  auto glo = g(lo), ghi = g(hi);
  for (int i = 0; glo.first > 0.0 || ghi.first < 0.0; ++i) {
    if (i > 64) throw Error(ErrorCode::ConvergenceFailure, std::string(what) + ": no bracket");
    const double w = hi - lo;
    if (glo.first > 0.0) {
      hi = lo;
      ghi = glo;
      lo -= 2.0 * w;
      glo = g(lo);
    } else {
      lo = hi;
      glo = ghi;
      hi += 2.0 * w;
      ghi = g(hi);
    }
  }
  double x = std::abs(glo.first) < std::abs(ghi.first) ? lo : hi;
  for (int it = 0; it < kMaxSolverIterations; ++it) {
    const auto [v, dv] = g(x);
    if (!std::isfinite(v)) throw Error(ErrorCode::ConvergenceFailure, std::string(what) + ": overflow");
    if (std::abs(std::expm1(v)) <= kEtaTolerance) return x;
    if (v < 0.0) lo = x; else hi = x;
    double next = dv > 0.0 ? x - v / dv : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) return x;
    x = next;
  }
  throw Error(ErrorCode::ConvergenceFailure, std::string(what) + ": iteration limit");
}

void require_unit_sphere_input(Point z) {
  if (norm2(z) == 0.0) throw Error(ErrorCode::DomainError, "zero point");
}

}  // namespace

EtaSpec eta_params(const Contraction& f) {
  require_flow_admissible(f);
  switch (f.cls()) {
    case WehlerClass::IV: return {1, 1.0, 2.0 * std::log(f.alpha().real())};
    case WehlerClass::III: return {1, 1.0, 2.0 * std::log(f.delta().real())};
    case WehlerClass::IIc:
      return {1, 1.0, 2.0 * std::max(std::log(f.alpha().real()), std::log(f.delta().real()))};
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde: {
      const double d = f.delta().real(), c = f.c().real(), ld = std::log(d);
      const int r = f.r();
      const double bound = c * c / (r * r * std::pow(d, 2 * r) * ld * ld);
      return {r, std::max(1.0, bound), r * ld};
    }
    case WehlerClass::IIb:
    case WehlerClass::IIbTilde: {
      const double a = f.alpha().real(), c = f.c().real(), la = std::log(a);
      return {1, std::max(1.0, c * c / (a * a * la * la)), la};
    }
    case WehlerClass::IIcPrime: break;
  }
  throw Error(ErrorCode::NotRealCoefficients, describe(f));
}

double eta(const EtaSpec& spec, Point z) {
  return std::norm(z.z) + spec.B * std::pow(std::norm(z.w), spec.q);
}

double eta_derivative(const Contraction& f, const EtaSpec& spec, Point z) {
  const Point v = flow_generator(f, z);
  const double dz = 2.0 * (std::conj(z.z) * v.z).real();
  const double dw = 2.0 * (std::conj(z.w) * v.w).real();
  return dz + spec.B * spec.q * std::pow(std::norm(z.w), spec.q - 1) * dw;
}

Point sigma_project(const EtaSpec& spec, Point z) {
  require_unit_sphere_input(z);
  const double a = std::norm(z.z), b = spec.B * std::pow(std::norm(z.w), spec.q);
  if (spec.q == 1) return (1.0 / std::sqrt(a + b)) * z;
  // g(x) = ln eta(e^x Z), increasing with slope in [2, 2q].
  auto g = [&](double x) {
    const double e1 = a * std::exp(2.0 * x), e2 = b * std::exp(2.0 * spec.q * x);
    return std::pair{std::log(e1 + e2), (2.0 * e1 + 2.0 * spec.q * e2) / (e1 + e2)};
  };
  const double x = solve_increasing(g, -0.5 * std::log(a + b), "sigma_project");
  return std::exp(x) * z;
}

Point big_F(const Contraction& f, double t, Point z) { return flow_point(f, t, z); }

FlowCoordinates big_F_inverse(const Contraction& f, const EtaSpec& spec, Point y) {
  require_unit_sphere_input(y);
  // s -> -ln eta(f^s y) is increasing; its root s gives the slice point f^s(y).
  auto g = [&](double s) {
    const Point p = flow_point(f, s, y);
    const double e = eta(spec, p);
    return std::pair{-std::log(e), -eta_derivative(f, spec, p) / e};
  };
  const double s0 = std::log(eta(spec, y)) / -spec.C;
  const double s = solve_increasing(g, s0, "big_F_inverse");
  return {-s, flow_point(f, s, y)};
}

FlowCoordinates big_F_inverse(const Contraction& f, Point y) { return big_F_inverse(f, eta_params(f), y); }

std::string_view to_string(ModelInvolution m) {
  switch (m) {
    case ModelInvolution::Tau: return "Tau";
    case ModelInvolution::TauPrime: return "TauPrime";
    case ModelInvolution::Mu0: return "Mu0";
    case ModelInvolution::Mu: return "Mu";
  }
  return "?";
}

ModelInvolution model_involution_from_string(std::string_view s) {
  for (auto m : {ModelInvolution::Tau, ModelInvolution::TauPrime, ModelInvolution::Mu0, ModelInvolution::Mu})
    if (to_string(m) == s) return m;
  throw Error(ErrorCode::SchemaError, "unknown model involution: " + std::string(s));
}

ModelPoint model_involution(ModelInvolution m, const ModelPoint& p) {
  switch (m) {
    case ModelInvolution::Tau: return {p.zeta, conj(p.sphere)};
    case ModelInvolution::TauPrime: return {p.zeta, {std::conj(p.sphere.z), p.zeta * std::conj(p.sphere.w)}};
    case ModelInvolution::Mu0: return {-p.zeta, p.sphere};
    case ModelInvolution::Mu: return {-p.zeta, conj(p.sphere)};
  }
  return p;
}

Point rotate(Complex zeta, Point p) {
  const double x = zeta.real(), y = zeta.imag();
  return {x * p.z - y * p.w, y * p.z + x * p.w};
}

ModelPoint cover_prime(const ModelPoint& p) {
  return {p.zeta * p.zeta, {p.sphere.z, p.zeta * p.sphere.w}};
}

ModelPoint cover_double_prime(const ModelPoint& p) { return {p.zeta * p.zeta, rotate(p.zeta, p.sphere)}; }

ModelPoint deck_prime(const ModelPoint& p) { return {-p.zeta, {p.sphere.z, -p.sphere.w}}; }

ModelPoint deck_double_prime(const ModelPoint& p) { return {-p.zeta, -1.0 * p.sphere}; }

Point sphere_normalize(Point z) {
  require_unit_sphere_input(z);
  return (1.0 / norm(z)) * z;
}

double hopf_level(const Contraction& f, Point z) {
  require_unit_sphere_input(z);
  const auto flags = structural_flags(f);
  if (flags.is_iic_prime) return std::log(norm(z)) / std::log(std::abs(f.alpha()));
  if (!flags.real_coeffs) throw Error(ErrorCode::NotRealCoefficients, describe(f));
  if (flags.positive_diagonal) return big_F_inverse(f, z).t;
  return 2.0 * big_F_inverse(square_for_negatives(f), z).t;
}

Point canonical_representative(const Contraction& f, Point z) {
  const double level = hopf_level(f, z);
  const double k = std::floor(level);
  const auto flags = structural_flags(f);
  if (flags.is_iic_prime) {
    const Complex a = f.alpha();
    return {std::pow(a, -k) * z.z, std::pow(std::conj(a), -k) * z.w};
  }
  if (flags.positive_diagonal) {
    const auto fc = big_F_inverse(f, z);
    return flow_point(f, fc.t - std::floor(fc.t), fc.slice);
  }
  // f^-k = g^-m o f^-e with k = 2m + e.
  const long m = static_cast<long>(std::floor(k / 2.0));
  const bool odd = static_cast<long>(k) - 2 * m == 1;
  const Point y = odd ? invert(f.to_polymap())(z) : z;
  return flow_point(square_for_negatives(f), -static_cast<double>(m), y);
}

}  // namespace hopf
