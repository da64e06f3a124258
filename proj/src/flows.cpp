#include "hopf/flows.hpp"

namespace hopf {

namespace {

struct FlowData {
  double lambda1;  // z-diagonal (positive)
  double lambda2;  // w-diagonal (positive)
  double base;     // delta for IIa-type, alpha for IIb-type
  double c;        // off-diagonal coefficient
  int r;           // exponent of the off-diagonal monomial (0 if none)
};

FlowData flow_data(const Contraction& f) {
  require_flow_admissible(f);
  const auto [a, d] = f.diagonal();
  FlowData fd{a.real(), d.real(), 0.0, 0.0, 0};
  switch (f.cls()) {
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde:
      fd.base = f.delta().real();
      fd.c = f.c().real();
      fd.r = f.r();
      break;
    case WehlerClass::IIb:
    case WehlerClass::IIbTilde:
      fd.base = f.alpha().real();
      fd.c = f.c().real();
      fd.r = 1;
      break;
    default: break;
  }
  return fd;
}

double real_power(double base, double t) { return std::exp(t * std::log(base)); }

// Off-diagonal coefficient of f^t: c t d^(r(t-1)) (IIa), c t a^(t-1) (IIb).
double off_diagonal(const FlowData& fd, double t) {
  if (fd.r == 0) return 0.0;
  return fd.c * t * real_power(fd.base, fd.r * (t - 1.0));
}

}  // namespace

void require_flow_admissible(const Contraction& f) {
  const auto flags = structural_flags(f);
  if (!flags.real_coeffs) throw Error(ErrorCode::NotRealCoefficients, describe(f));
  if (!flags.positive_diagonal) throw Error(ErrorCode::NotPositiveDiagonal, describe(f));
}

PolyMap flow(const Contraction& f, double t) {
  if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "flow time must be finite");
  const FlowData fd = flow_data(f);
  const double a = real_power(fd.lambda1, t);
  const double d = real_power(fd.lambda2, t);
  if (fd.r == 0) return PolyMap::diagonal(a, d).mark_automorphism();
  return PolyMap::triangular(a, off_diagonal(fd, t), fd.r, d).mark_automorphism();
}

PolyMap kth_root(const Contraction& f, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "root order must be positive");
  if (k == 1) {
    require_flow_admissible(f);
    return f.to_polymap();
  }
  return flow(f, 1.0 / k);
}

Point flow_point(const Contraction& f, double t, Point z) {
  const FlowData fd = flow_data(f);
  const double a = real_power(fd.lambda1, t);
  const double d = real_power(fd.lambda2, t);
  Point out{a * z.z, d * z.w};
  if (fd.r > 0) out.z += off_diagonal(fd, t) * std::pow(z.w, fd.r);
  return out;
}

Point flow_generator(const Contraction& f, Point z) {
  const FlowData fd = flow_data(f);
  Point v{std::log(fd.lambda1) * z.z, std::log(fd.lambda2) * z.w};
  // d/dt of c t base^(r(t-1)) at t = 0 is c base^(-r).
  if (fd.r > 0) v.z += fd.c * real_power(fd.base, -fd.r) * std::pow(z.w, fd.r);
  return v;
}

Contraction square_for_negatives(const Contraction& f) {
  const auto flags = structural_flags(f);
  if (!flags.real_coeffs) throw Error(ErrorCode::NotRealCoefficients, describe(f));
  if (flags.negative_diagonal_count == 0)
    throw Error(ErrorCode::InvalidArgument, "no negative diagonal coefficient: " + describe(f));
  switch (f.cls()) {
    case WehlerClass::IV: return Contraction::iv(f.alpha() * f.alpha());
    case WehlerClass::III: return Contraction::iii(f.delta() * f.delta(), f.r());
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde:
      return Contraction::iia_tilde(f.delta() * f.delta(), f.r(),
                                    2.0 * f.c() * std::pow(f.delta(), f.r()));
    case WehlerClass::IIb:
    case WehlerClass::IIbTilde:
      return Contraction::iib_tilde(f.alpha() * f.alpha(), 2.0 * f.c() * f.alpha());
    case WehlerClass::IIc: return diagonal_form(f.alpha() * f.alpha(), f.delta() * f.delta());
    case WehlerClass::IIcPrime: break;
  }
  throw Error(ErrorCode::NotRealCoefficients, describe(f));
}

}  // namespace hopf
