#include "hopf/chain.hpp"

#include <algorithm>
#include <array>

#include "hopf/flows.hpp"

namespace hopf {

namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 11> kNames{{
    {NodeKind::Poly, "Poly"},
    {NodeKind::RadialTwist, "RadialTwist"},
    {NodeKind::Scale, "Scale"},
    {NodeKind::FlowSegment, "FlowSegment"},
    {NodeKind::Trivialize, "Trivialize"},
    {NodeKind::SphereNormalize, "SphereNormalize"},
    {NodeKind::CircleSquareCover, "CircleSquareCover"},
    {NodeKind::Twist, "Twist"},
    {NodeKind::RealFrame, "RealFrame"},
    {NodeKind::FiberTwist, "FiberTwist"},
    {NodeKind::Conj, "Conj"},
}};

Complex unit(Complex z) { return z / std::abs(z); }

ChainState model(Complex zeta, Point p) { return {unit(zeta), sphere_normalize(p)}; }

}  // namespace

std::string_view to_string(NodeKind k) {
  for (const auto& [kind, name] : kNames)
    if (kind == k) return name;
  return "?";
}

NodeKind node_kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kNames)
    if (name == s) return kind;
  throw Error(ErrorCode::SchemaError, "unknown chain node kind: " + std::string(s));
}

Point radial_twist(double coef, Point z) {
  return rotate(std::polar(1.0, coef * std::log(norm(z))), z);
}

Point real_frame(Point z) {
  return {{z.z.real(), z.w.real()}, {z.z.imag(), z.w.imag()}};
}

Point real_frame_inverse(Point m) {
  return {{m.z.real(), m.w.real()}, {m.z.imag(), m.w.imag()}};
}

ChainNode ChainNode::poly(const PolyMap& m) {
  ChainNode n;
  n.kind = NodeKind::Poly;
  n.map = m;
  n.map_inverse = invert(m);
  return n;
}

ChainNode ChainNode::radial_twist(double coef) {
  ChainNode n;
  n.kind = NodeKind::RadialTwist;
  n.value = coef;
  return n;
}

ChainNode ChainNode::scale(double s) {
  if (!(s > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale must be positive");
  ChainNode n;
  n.kind = NodeKind::Scale;
  n.value = s;
  return n;
}

ChainNode ChainNode::flow_segment(const Contraction& f, double t) {
  require_flow_admissible(f);
  ChainNode n;
  n.kind = NodeKind::FlowSegment;
  n.f = f;
  n.value = t;
  return n;
}

ChainNode ChainNode::trivialize(const Contraction& f) {
  ChainNode n;
  n.kind = NodeKind::Trivialize;
  n.f = f;
  n.eta = eta_params(f);
  return n;
}

ChainNode ChainNode::sphere_normalize(const EtaSpec& spec) {
  ChainNode n;
  n.kind = NodeKind::SphereNormalize;
  n.eta = spec;
  return n;
}

ChainNode ChainNode::cover(int variant) {
  if (variant != 1 && variant != 2) throw Error(ErrorCode::InvalidArgument, "cover variant must be 1 or 2");
  ChainNode n;
  n.kind = NodeKind::CircleSquareCover;
  n.variant = variant;
  return n;
}

ChainNode ChainNode::twist(double angle) {
  ChainNode n;
  n.kind = NodeKind::Twist;
  n.value = angle;
  return n;
}

ChainNode ChainNode::real_frame() {
  ChainNode n;
  n.kind = NodeKind::RealFrame;
  return n;
}

ChainNode ChainNode::fiber_twist() {
  ChainNode n;
  n.kind = NodeKind::FiberTwist;
  return n;
}

ChainNode ChainNode::conjugate() { return ChainNode{}; }

ChainState ChainNode::apply(const ChainState& s) const {
  const bool inv = inverted;
  switch (kind) {
    case NodeKind::Poly: return {s.zeta, inv ? map_inverse(s.p) : map(s.p)};
    case NodeKind::RadialTwist: return {s.zeta, hopf::radial_twist(inv ? -value : value, s.p)};
    case NodeKind::Scale: return {s.zeta, (inv ? 1.0 / value : value) * s.p};
    case NodeKind::FlowSegment: return {s.zeta, flow_point(*f, inv ? -value : value, s.p)};
    case NodeKind::Trivialize: {
      if (inv) return {1.0, big_F(*f, std::arg(s.zeta) / (2.0 * kPi), s.p)};
      const auto fc = big_F_inverse(*f, eta, s.p);
      return {std::polar(1.0, 2.0 * kPi * (fc.t - std::floor(fc.t))), fc.slice};
    }
    case NodeKind::SphereNormalize:
      if (inv) return {s.zeta, sigma_project(eta, s.p)};
      return model(s.zeta, s.p);
    case NodeKind::CircleSquareCover: {
      if (!inv) {
        const ModelPoint m{s.zeta, s.p};
        const auto out = variant == 1 ? cover_prime(m) : cover_double_prime(m);
        return model(out.zeta, out.sphere);
      }
      const Complex zeta = std::sqrt(unit(s.zeta));
      if (variant == 1) return model(zeta, {s.p.z, s.p.w / zeta});
      return model(zeta, rotate(std::conj(zeta), s.p));
    }
    case NodeKind::Twist: return model(s.zeta, std::polar(1.0, inv ? -value : value) * s.p);
    case NodeKind::RealFrame: return model(s.zeta, inv ? real_frame_inverse(s.p) : hopf::real_frame(s.p));
    case NodeKind::FiberTwist: {
      const Complex k = inv ? std::conj(s.zeta) : s.zeta;
      return model(s.zeta, {s.p.z, k * s.p.w});
    }
    case NodeKind::Conj: return {s.zeta, conj(s.p)};
  }
  return s;
}

ChainState ChainMap::evaluate(const ChainState& s) const {
  ChainState out = s;
  for (const auto& n : nodes_) out = n.apply(out);
  return out;
}

ChainMap ChainMap::inverse() const {
  std::vector<ChainNode> rev(nodes_.rbegin(), nodes_.rend());
  for (auto& n : rev) n.inverted = !n.inverted;
  return ChainMap(std::move(rev));
}

}  // namespace hopf
