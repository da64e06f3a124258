#pragma once

#include <cstdint>
#include <string>

#include "hopf/realstruct.hpp"

namespace hopf {

/// Real structures on L_zeta = (W x C) / <(f, zeta)>.
struct PicardDatum {
  Complex zeta{1.0, 0.0};
  Parity parity = Parity::Even;
  bool exists = false;
  /// Involutive lifts are nu phi_0 with |nu| = circle_radius.
  double circle_radius = 0.0;
};

/// The involution induced on Pic(H) = C*: zeta -> conj(zeta).
Complex pic_involution(Complex zeta);

PicardDatum real_structures_on_line_bundle(Parity parity, Complex zeta);

struct PicRealGroup {
  std::string group;
  int components = 0;
  /// Real points of Pic(H) that carry no Real line bundle.
  std::string non_surjective;
};

PicRealGroup pic_real_group(Parity parity);

/// (nu phi_0)^2 on sampled points of the total space, compared in the quotient
/// by (x, z) -> (f(x), zeta z). phi_0(x, z) = (s(x), conj z) for the reduced lift.
bool verify_bundle_involution(const Contraction& f, const RealStructureSpec& s, Complex zeta, Complex nu,
                              int samples = 16, std::uint64_t seed = 1);

/// u on the unit circle with u^2 nu_from = nu_to (|nu_from| = |nu_to|): the
/// bundle automorphism by u carries nu_from phi_0 to nu_to phi_0.
Complex circle_equivalence(Complex nu_from, Complex nu_to);

}  // namespace hopf
