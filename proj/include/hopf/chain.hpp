#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hopf/topology.hpp"

namespace hopf {

/// Value carried through a chain: a point of W (p only), of R/Z x Sigma or of
/// S^1 x S^3 (zeta and p).
struct ChainState {
  Complex zeta{1.0, 0.0};
  Point p{};
};

enum class NodeKind {
  Poly,             // p -> m(p)
  RadialTwist,      // Psi_tau, tau(t) = coef ln t
  Scale,            // p -> s p
  FlowSegment,      // p -> f^t(p)
  Trivialize,       // p -> (e^(2 pi i t), Z) with F(t, Z) = p
  SphereNormalize,  // Sigma -> S^3
  CircleSquareCover,  // a' (variant 1) or a'' (variant 2)
  Twist,            // sphere -> e^(i angle) sphere
  RealFrame,        // (z, w) -> (Re z + i Re w, Im z + i Im w)
  FiberTwist,       // (zeta, (m, n)) -> (zeta, (m, zeta n))
  Conj,
};

std::string_view to_string(NodeKind k);
NodeKind node_kind_from_string(std::string_view s);

struct ChainNode {
  NodeKind kind = NodeKind::Conj;
  bool inverted = false;
  PolyMap map;          // Poly
  PolyMap map_inverse;  // Poly
  double value = 0.0;   // coef, scale, time or angle
  int variant = 0;      // cover: 1 = a', 2 = a''
  std::optional<Contraction> f;
  EtaSpec eta;

  static ChainNode poly(const PolyMap& m);
  static ChainNode radial_twist(double coef);
  static ChainNode scale(double s);
  static ChainNode flow_segment(const Contraction& f, double t);
  static ChainNode trivialize(const Contraction& f);
  static ChainNode sphere_normalize(const EtaSpec& spec);
  static ChainNode cover(int variant);
  static ChainNode twist(double angle);
  static ChainNode real_frame();
  static ChainNode fiber_twist();
  static ChainNode conjugate();

  ChainState apply(const ChainState& s) const;
};

class ChainMap {
 public:
  ChainMap() = default;
  explicit ChainMap(std::vector<ChainNode> nodes) : nodes_(std::move(nodes)) {}

  ChainMap& then(ChainNode n) {
    nodes_.push_back(std::move(n));
    return *this;
  }
  const std::vector<ChainNode>& nodes() const { return nodes_; }

  ChainState evaluate(const ChainState& s) const;
  Point evaluate(Point z) const { return evaluate(ChainState{{1.0, 0.0}, z}).p; }

  /// Reversed order with every inverse marker flipped.
  ChainMap inverse() const;

 private:
  std::vector<ChainNode> nodes_;
};

/// Psi_tau(Z) = R_(e^(i coef ln|Z|)) Z.
Point radial_twist(double coef, Point z);

Point real_frame(Point z);
Point real_frame_inverse(Point z);

}  // namespace hopf
