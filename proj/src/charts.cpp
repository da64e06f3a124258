#include "hopf/charts.hpp"

#include "hopf/flows.hpp"

namespace hopf {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_spec_for(const Contraction& f, const RealStructureSpec& s) {
  const DeckPower dp = parity_of_lift(f, s.lift);
  if (dp.n != s.deck_power || dp.parity != s.parity)
    throw Error(ErrorCode::InvalidArgument, "real structure data does not match its lift");
}

double flattening_coefficient(const Contraction& f) {
  return std::arg(f.alpha()) / std::log(std::abs(f.alpha()));
}

// Trivialization followed by sphere normalization.
void append_direct(ChainMap& c, const Contraction& g) {
  auto triv = ChainNode::trivialize(g);
  const EtaSpec spec = triv.eta;
  c.then(std::move(triv)).then(ChainNode::sphere_normalize(spec));
}

void append_mu_to_mu0(ChainMap& c) { c.then(ChainNode::real_frame()).then(ChainNode::fiber_twist()); }

}  // namespace

std::string_view to_string(CoverRoute r) {
  switch (r) {
    case CoverRoute::Direct: return "Direct";
    case CoverRoute::ViaQPrime: return "ViaQPrime";
    case CoverRoute::ViaQDoublePrime: return "ViaQDoublePrime";
    case CoverRoute::ViaIIcPrimeFlattening: return "ViaIIcPrimeFlattening";
    case CoverRoute::OddRoute: return "OddRoute";
  }
  return "?";
}

std::string_view to_string(LocusType t) {
  switch (t) {
    case LocusType::Torus: return "Torus";
    case LocusType::KleinBottle: return "KleinBottle";
    case LocusType::Empty: return "Empty";
  }
  return "?";
}

ModelPoint ModelChart::forward(Point z) const {
  const auto s = forward_chain.evaluate(ChainState{{1.0, 0.0}, z});
  return {s.zeta, s.p};
}

Point ModelChart::backward(const ModelPoint& m) const {
  return backward_chain.evaluate(ChainState{m.zeta, m.sphere}).p;
}

PolyMap flattening_matrix() {
  Eigen::Matrix2cd l;
  l << 1.0, kI, 1.0, -kI;
  return PolyMap::linear(l).mark_automorphism();
}

ChainMap flattening(const Contraction& f) {
  if (f.cls() != WehlerClass::IIcPrime) throw Error(ErrorCode::InvalidArgument, "flattening needs IIcPrime");
  ChainMap c;
  c.then(ChainNode::radial_twist(flattening_coefficient(f))).then(ChainNode::poly(flattening_matrix()));
  return c;
}

ChainMap flattening_inverse(const Contraction& f) { return flattening(f).inverse(); }

ModelChart build_chart(const Contraction& f, const RealStructureSpec& s) {
  require_spec_for(f, s);
  const Existence ex = existence(f);
  if (!(s.parity == Parity::Even ? ex.even_exists : ex.odd_exists))
    throw Error(ErrorCode::NoSuchStructure, describe(f));

  // Move the reduced lift onto the canonical one first.
  ModelChart chart;
  ChainMap& c = chart.forward_chain;
  c.then(ChainNode::poly(invert(normalize(f, s))));

  const auto flags = structural_flags(f);
  const bool odd = s.parity == Parity::Odd;
  if (flags.is_iic_prime) {
    const ChainMap flat = flattening_inverse(f);
    for (const auto& n : flat.nodes()) c.then(n);
    append_direct(c, Contraction::iv(std::abs(f.alpha())));
    chart.route = CoverRoute::ViaIIcPrimeFlattening;
    chart.model = ModelInvolution::Tau;
    if (odd) {
      append_mu_to_mu0(c);
      chart.model = ModelInvolution::Mu0;
    }
  } else if (flags.positive_diagonal) {
    append_direct(c, f);
    chart.route = odd ? CoverRoute::OddRoute : CoverRoute::Direct;
    chart.model = ModelInvolution::Tau;
    if (odd) {
      append_mu_to_mu0(c);
      chart.model = ModelInvolution::Mu0;
    }
  } else if (odd) {
    // Only alpha < 0 in class IV has odd structures among negative cases.
    append_direct(c, square_for_negatives(f));
    c.then(ChainNode::cover(2)).then(ChainNode::twist(-kPi / 4.0));
    append_mu_to_mu0(c);
    chart.route = CoverRoute::OddRoute;
    chart.model = ModelInvolution::Mu0;
  } else if (flags.negative_diagonal_count == 1) {
    const auto [a, d] = f.diagonal();
    Contraction g = square_for_negatives(f);
    if (a.real() < 0.0) {
      // Put the negative coefficient on w.
      Eigen::Matrix2cd sw;
      sw << 0.0, 1.0, 1.0, 0.0;
      c.then(ChainNode::poly(PolyMap::linear(sw).mark_automorphism()));
      g = diagonal_form(d * d, a * a);
    }
    append_direct(c, g);
    c.then(ChainNode::cover(1));
    chart.route = CoverRoute::ViaQPrime;
    chart.model = ModelInvolution::TauPrime;
  } else {
    append_direct(c, square_for_negatives(f));
    c.then(ChainNode::cover(2));
    chart.route = CoverRoute::ViaQDoublePrime;
    chart.model = ModelInvolution::Tau;
  }
  chart.backward_chain = c.inverse();
  return chart;
}

RealLocus real_locus(const Contraction& f, const RealStructureSpec& s) {
  require_spec_for(f, s);
  if (s.parity == Parity::Odd) return {LocusType::Empty, std::nullopt};
  if (f.cls() == WehlerClass::IIcPrime) return {LocusType::Torus, f.alpha()};
  const auto [a, d] = f.diagonal();
  return {a.real() * d.real() > 0.0 ? LocusType::Torus : LocusType::KleinBottle, std::nullopt};
}

QuotientDescriptor quotient_descriptor(const Contraction& f, const RealStructureSpec& s) {
  QuotientDescriptor q;
  const RealLocus locus = real_locus(f, s);
  if (f.cls() != WehlerClass::IIcPrime) {
    const auto [a, d] = f.diagonal();
    q.orientation_preserving = a.real() * d.real() > 0.0;
  }
  if (s.parity == Parity::Odd) {
    q.double_cover = true;
    q.deck_note = "double, anti-holomorphic deck";
  } else {
    q.locus_image = locus.type;
  }
  return q;
}

std::pair<double, double> beta_map(double x, double y) { return {x * x - y * y, 2.0 * x * y}; }

}  // namespace hopf
