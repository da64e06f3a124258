#pragma once

#include <string_view>

#include "hopf/contraction.hpp"

namespace hopf {

/// Weight eta(z, w) = |z|^2 + B |w|^(2q) with decay constant C < 0.
struct EtaSpec {
  int q = 1;
  double B = 1.0;
  double C = -1.0;
};

/// Table parameters for a flow-admissible contraction (tilde classes allowed).
EtaSpec eta_params(const Contraction& f);

double eta(const EtaSpec& spec, Point z);

/// d/dt eta(f^t Z) at t = 0, from the closed-form generator.
double eta_derivative(const Contraction& f, const EtaSpec& spec, Point z);

/// Newton/bisection settings shared by the slice and trivialization solvers.
inline constexpr double kEtaTolerance = 1e-12;
inline constexpr int kMaxSolverIterations = 200;

/// The unique rho Z (rho > 0) with eta(rho Z) = 1.
Point sigma_project(const EtaSpec& spec, Point z);

/// F(t, Z) = f^t(Z).
Point big_F(const Contraction& f, double t, Point z);

struct FlowCoordinates {
  double t = 0.0;
  Point slice{};
};

/// (t, Z) with Z on the slice and f^t(Z) = y.
FlowCoordinates big_F_inverse(const Contraction& f, const EtaSpec& spec, Point y);
FlowCoordinates big_F_inverse(const Contraction& f, Point y);

/// Involutions of S^1 x S^3. Mu is the intermediate odd model (-zeta, conj Z).
enum class ModelInvolution { Tau, TauPrime, Mu0, Mu };

std::string_view to_string(ModelInvolution m);
ModelInvolution model_involution_from_string(std::string_view s);

ModelPoint model_involution(ModelInvolution m, const ModelPoint& p);

/// Real rotation [[x, -y], [y, x]] for zeta = x + iy, applied to (u, v).
Point rotate(Complex zeta, Point p);

/// a'(zeta, (u, v)) = (zeta^2, (u, zeta v)) and a''(zeta, Z) = (zeta^2, R_zeta Z).
ModelPoint cover_prime(const ModelPoint& p);
ModelPoint cover_double_prime(const ModelPoint& p);
/// Deck involutions j'(zeta, (u, v)) = (-zeta, (u, -v)), j''(zeta, Z) = (-zeta, -Z).
ModelPoint deck_prime(const ModelPoint& p);
ModelPoint deck_double_prime(const ModelPoint& p);

/// Sphere normalization Z / |Z|.
Point sphere_normalize(Point z);

/// Points of H_f = W / <f>. Real coefficients (any signs) or IIcPrime.
/// The level is the flow time of the representative, measured in units of f.
double hopf_level(const Contraction& f, Point z);
/// f^-floor(level)(z): the representative with level in [0, 1).
Point canonical_representative(const Contraction& f, Point z);

}  // namespace hopf
