#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/realstruct.hpp"

namespace hopf {

/// Element of Aut_h(W)^f with its table parameters:
///   IV (a, b, c, d) = entries of A, row major
///   III (a, d, b):  (a z + b w^r, d w)
///   IIa (a, b):     (a^r z + b w^r, a w)
///   IIb (a, b):     (a z + b w, a w)
///   IIc, IIcPrime (a, d): (a z, d w)
struct CommutantElement {
  WehlerClass cls = WehlerClass::IV;
  PolyMap map;
  std::vector<Complex> params;
};

/// Reads the parameters of g; throws NotCommuting unless g commutes with f and
/// has the table shape of f's class.
CommutantElement commutant_element(const Contraction& f, const PolyMap& g);
CommutantElement make_commutant(const Contraction& f, const std::vector<Complex>& params);

/// g o f^k with the class scale parameter in [lower, 1):
/// IV |det A| in [|alpha|^2, 1); III, IIc |d| in [|delta|, 1); IIa, IIb |a|
/// in [|delta|, 1) resp. [|alpha|, 1); IIcPrime |a| in [|alpha|, 1).
CommutantElement canonical_rep(const Contraction& f, const CommutantElement& g);

/// The exponent k used by canonical_rep.
int canonical_shift(const Contraction& f, const CommutantElement& g);

bool same_coset(const Contraction& f, const CommutantElement& g1, const CommutantElement& g2, double tol = 1e-9);

struct GroupDescriptor {
  std::string presentation;
  int dimension = 0;
  std::vector<std::string> notes;
};

GroupDescriptor real_automorphism_group(const Contraction& f, const RealStructureSpec& s);

/// g commutes with the standard even lift (c, or c' for IIcPrime).
bool membership_even(const Contraction& f, const CommutantElement& g);

struct SpincWitness {
  double circle = 1.0;       // det(A)^(1/2)
  Eigen::Matrix2cd su2;      // det(A)^(-1/2) A
  std::optional<Complex> circle_point;  // e^(pi i ln(rho) / ln|alpha|)
};

/// Phi(A) for A = [[a, -conj b], [b, conj a]], (a, b) != 0.
SpincWitness spinc_witness(const Eigen::Matrix2cd& a, std::optional<Complex> alpha = std::nullopt);

/// III elements as ((a, d), x) with x = b d^-r; the group law is
/// ((a, d), x) ((a', d'), x') = ((a a', d d'), x + rho_r(a, d)(x')), rho_r(a, d)(b) = a d^-r b.
struct SemidirectIII {
  Complex a, d, x;
};

SemidirectIII to_semidirect(int r, const CommutantElement& g);
CommutantElement from_semidirect(const Contraction& f, const SemidirectIII& e);
SemidirectIII semidirect_product(int r, const SemidirectIII& p, const SemidirectIII& q);
Complex rho(int r, Complex a, Complex d, Complex b);

}  // namespace hopf
