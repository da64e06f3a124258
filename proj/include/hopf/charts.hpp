#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hopf/chain.hpp"
#include "hopf/realstruct.hpp"

namespace hopf {

enum class CoverRoute { Direct, ViaQPrime, ViaQDoublePrime, ViaIIcPrimeFlattening, OddRoute };

std::string_view to_string(CoverRoute r);

/// Equivariant chart H_f -> S^1 x S^3. forward takes any representative in W.
struct ModelChart {
  ModelInvolution model = ModelInvolution::Tau;
  CoverRoute route = CoverRoute::Direct;
  ChainMap forward_chain;
  ChainMap backward_chain;

  ModelPoint forward(Point z) const;
  Point backward(const ModelPoint& m) const;
};

ModelChart build_chart(const Contraction& f, const RealStructureSpec& s);

/// L = [[1, i], [1, -i]], with L^-1 f L = |alpha| R_theta for f of type IIcPrime.
PolyMap flattening_matrix();
/// The flattening l o Psi_tau, tau(t) = theta ln t / ln|alpha|, and its inverse.
ChainMap flattening(const Contraction& f);
ChainMap flattening_inverse(const Contraction& f);

enum class LocusType { Torus, KleinBottle, Empty };

std::string_view to_string(LocusType t);

struct RealLocus {
  LocusType type = LocusType::Empty;
  /// Set for IIcPrime: the torus carries the conformal structure of C*/<alpha>.
  std::optional<Complex> elliptic_parameter;
};

RealLocus real_locus(const Contraction& f, const RealStructureSpec& s);

struct QuotientDescriptor {
  std::string space = "S1xS3";
  std::optional<LocusType> locus_image;
  bool double_cover = false;
  std::string deck_note;
  /// Whether the real part F_0 of f preserves orientation of R^4 \ 0.
  bool orientation_preserving = true;
};

QuotientDescriptor quotient_descriptor(const Contraction& f, const RealStructureSpec& s);

/// zeta -> zeta^2 on the plane coordinates (x, y) of zeta = x + iy.
std::pair<double, double> beta_map(double x, double y);

}  // namespace hopf
