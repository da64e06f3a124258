#include "hopf/picard.hpp"

#include <random>

#include "hopf/topology.hpp"

namespace hopf {

namespace {

void require_nonzero(Complex zeta) {
  if (zeta == Complex{}) throw Error(ErrorCode::ZeroArgument, "zeta must be nonzero");
}

}  // namespace

Complex pic_involution(Complex zeta) {
  require_nonzero(zeta);
  return std::conj(zeta);
}

PicardDatum real_structures_on_line_bundle(Parity parity, Complex zeta) {
  require_nonzero(zeta);
  PicardDatum d{zeta, parity, false, 0.0};
  if (!is_real(zeta)) return d;
  const double x = zeta.real();
  if (parity == Parity::Even) {
    d.exists = true;
    d.circle_radius = 1.0;
  } else if (x > 0.0) {
    d.exists = true;
    d.circle_radius = std::sqrt(x);
  }
  return d;
}

PicRealGroup pic_real_group(Parity parity) {
  if (parity == Parity::Even) return {"R*", 2, ""};
  return {"R>0", 1, "zeta<0"};
}

bool verify_bundle_involution(const Contraction& f, const RealStructureSpec& s, Complex zeta, Complex nu,
                              int samples, std::uint64_t seed) {
  require_nonzero(zeta);
  if (!is_real(zeta)) throw Error(ErrorCode::NotRealZeta, "zeta must be real");
  const RealStructureSpec red = reduce_lift(f, s);
  const PolyMap fm = f.to_polymap();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < samples; ++i) {
    const Point x{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const Complex z{u(rng), u(rng)};
    // (nu phi_0)^2 (x, z) = (s(s(x)), nu conj(nu conj(z))).
    const Point x2 = red.lift(red.lift(x));
    const Complex z2 = nu * std::conj(nu * std::conj(z));
    // Bring (x2, z2) back to the sheet of (x, z) with the deck map f_zeta^-k.
    const int k = static_cast<int>(std::lround(hopf_level(f, x2) - hopf_level(f, x)));
    if (distance(power(fm, k)(x), x2) > 1e-8 * std::max(1.0, norm(x2))) return false;
    const Complex zk = std::pow(zeta, k) * z;
    if (std::abs(zk - z2) > 1e-9 * std::max(1.0, std::abs(z2))) return false;
  }
  return true;
}

Complex circle_equivalence(Complex nu_from, Complex nu_to) {
  require_nonzero(nu_from);
  const Complex ratio = nu_to / nu_from;
  if (std::abs(std::abs(ratio) - 1.0) > 1e-12)
    throw Error(ErrorCode::InvalidArgument, "nu values lie on different circles");
  return std::sqrt(ratio / std::abs(ratio));
}

}  // namespace hopf
