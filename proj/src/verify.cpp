#include "hopf/verify.hpp"

#include <functional>
#include <limits>
#include <random>

#include "hopf/flows.hpp"
#include "hopf/sampler.hpp"

namespace hopf::verify {

namespace {

using io::json;
using Gen = sampling::Sampler;
constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<WehlerClass> kClasses = {WehlerClass::IV,  WehlerClass::III, WehlerClass::IIa,
                                           WehlerClass::IIb, WehlerClass::IIc, WehlerClass::IIcPrime};

class Tracker {
 public:
  Tracker(std::string name, double tol, const Options& opt) {
    r_.name = std::move(name);
    r_.tolerance = opt.tol.value_or(tol);
  }

  // Runs one sample; `body` returns the residual and fills the state for replay.
  void sample(const std::function<double(json&)>& body) {
    json state = json::object();
    double res;
    try {
      res = body(state);
    } catch (const std::exception& e) {
      res = kInf;
      state["error"] = e.what();
    }
    if (!std::isfinite(res)) res = kInf;
    ++r_.samples;
    if (res > r_.max_residual || (r_.samples == 1 && res >= r_.max_residual)) {
      r_.max_residual = res;
      worst_ = std::move(state);
    }
  }

  PropertyResult finish() {
    r_.pass = r_.max_residual <= r_.tolerance;
    if (!r_.pass) {
      worst_["residual"] = r_.max_residual;
      r_.counterexample = worst_;
    }
    return r_;
  }

 private:
  PropertyResult r_;
  json worst_;
};

// Coefficient difference relative to max(1, largest coefficient).
double map_residual(const PolyMap& a, const PolyMap& b) {
  if (a.anti() != b.anti()) return kInf;
  return max_coefficient_difference(a, b) / scaled_tolerance(a, b, 1.0);
}

double point_residual(Point a, Point b) { return distance(a, b) / std::max(1.0, norm(b)); }

std::vector<PropertyResult> polymap_suite(const Options& opt, Gen& g) {
  auto tri = [&] { return PolyMap::triangular(g.nonzero(), g.complex(), g.integer(1, 3), g.nonzero()); };
  Tracker assoc("compose_associative", 1e-12, opt), hom("evaluate_homomorphism", 1e-10, opt),
      inv("invert_two_sided", 1e-10, opt);
  for (int i = 0; i < opt.samples; ++i) {
    assoc.sample([&](json& s) {
      const PolyMap a = tri(), b = tri(), c = tri();
      s["maps"] = {io::to_json(a), io::to_json(b), io::to_json(c)};
      return map_residual(compose(a, compose(b, c)), compose(compose(a, b), c));
    });
    hom.sample([&](json& s) {
      const PolyMap a = tri(), b = g.integer(0, 1) ? tri() : compose(PolyMap::conjugation(), tri());
      const Point z = g.point();
      s["g"] = io::to_json(a);
      s["h"] = io::to_json(b);
      s["point"] = io::to_json(z);
      return point_residual(compose(a, b)(z), a(b(z)));
    });
    inv.sample([&](json& s) {
      const PolyMap a = tri();
      s["map"] = io::to_json(a);
      const PolyMap ai = invert(a);
      return std::max(map_residual(compose(a, ai), PolyMap::identity()),
                      map_residual(compose(ai, a), PolyMap::identity()));
    });
  }
  return {assoc.finish(), hom.finish(), inv.finish()};
}

std::vector<PropertyResult> flows_suite(const Options& opt, Gen& g) {
  Tracker law("flow_group_law", 1e-10, opt), roots("root_composition", 1e-12, opt);
  for (int i = 0; i < opt.samples; ++i) {
    law.sample([&](json& s) {
      const Contraction f = g.contraction(kClasses[i % 5], true);
      const double t = g.uniform(-2, 2), u = g.uniform(-2, 2);
      s["contraction"] = io::to_json(f);
      s["t"] = t;
      s["s"] = u;
      return map_residual(flow(f, t + u), compose(flow(f, t), flow(f, u)));
    });
    roots.sample([&](json& s) {
      const Contraction f = g.contraction(kClasses[i % 5], true);
      const int k = g.integer(2, 6);
      s["contraction"] = io::to_json(f);
      s["k"] = k;
      return map_residual(power(kth_root(f, k), k), f.to_polymap());
    });
  }
  return {law.finish(), roots.finish()};
}

std::vector<PropertyResult> realstruct_suite(const Options& opt, Gen& g) {
  Tracker even("normalize_even", 1e-9, opt), odd("normalize_odd", 1e-9, opt), quat("normalize_quaternionic", 1e-9, opt),
      parity("parity_shift", 0.0, opt);
  for (int i = 0; i < opt.samples; ++i) {
    const WehlerClass cls = kClasses[i % kClasses.size()];
    even.sample([&](json& s) {
      const Contraction f = g.contraction(cls, g.integer(0, 1) == 1);
      const PolyMap phi = g.even_lift(f);
      s["contraction"] = io::to_json(f);
      s["lift"] = io::to_json(phi);
      const PolyMap psi = normalize_even(f, phi);
      const PolyMap c = cls == WehlerClass::IIcPrime ? PolyMap::swap_conjugation() : PolyMap::conjugation();
      return std::max(map_residual(compose(psi, compose(c, invert(psi))), phi),
                      map_residual(compose(psi, f.to_polymap()), compose(f.to_polymap(), psi)));
    });
    odd.sample([&](json& s) {
      const Contraction f = g.contraction(cls, true);
      const PolyMap phi = compose(canonical_square_root(f), g.even_lift(f));
      s["contraction"] = io::to_json(f);
      s["lift"] = io::to_json(phi);
      const PolyMap psi = normalize_odd(f, phi);
      const PolyMap can = canonical_structure(f, Parity::Odd).lift;
      return map_residual(compose(psi, compose(can, invert(psi))), phi);
    });
    quat.sample([&](json& s) {
      const Contraction f = Contraction::iv(-g.uniform(0.3, 0.9));
      const PolyMap jf = canonical_structure(f, Parity::Odd).lift;
      const PolyMap m = g.commutant(f);
      const PolyMap phi = compose(m, compose(jf, invert(m)));
      s["contraction"] = io::to_json(f);
      s["lift"] = io::to_json(phi);
      const PolyMap psi = normalize_odd(f, phi);
      return map_residual(compose(psi, compose(jf, invert(psi))), phi);
    });
    parity.sample([&](json& s) {
      const Contraction f = g.contraction(cls, true);
      const PolyMap phi = g.even_lift(f);
      const int k = g.integer(-3, 3);
      s["contraction"] = io::to_json(f);
      s["lift"] = io::to_json(phi);
      s["k"] = k;
      const DeckPower dp = parity_of_lift(f, compose(phi, power(f.to_polymap(), k)));
      return dp.n == 2 * k && dp.parity == Parity::Even ? 0.0 : 1.0;
    });
  }
  return {even.finish(), odd.finish(), quat.finish(), parity.finish()};
}

std::vector<std::pair<Contraction, Parity>> route_cases(Gen& g) {
  return {
      {g.contraction(WehlerClass::IIa, true), Parity::Even},
      {Contraction::iic(g.uniform(0.3, 0.6), -g.uniform(0.65, 0.9)), Parity::Even},
      {Contraction::iib(-g.uniform(0.3, 0.9)), Parity::Even},
      {g.contraction(WehlerClass::IIcPrime, true), Parity::Even},
      {g.contraction(WehlerClass::III, true), Parity::Odd},
      {g.contraction(WehlerClass::IIcPrime, true), Parity::Odd},
      {Contraction::iv(-g.uniform(0.3, 0.9)), Parity::Odd},
  };
}

std::vector<PropertyResult> topology_suite(const Options& opt, Gen& g) {
  Tracker ineq("differential_inequality", 1e-9, opt), trip("big_F_roundtrip", 1e-8, opt),
      deck("hopf_canonical_representative", 1e-8, opt), chart("chart_equivariance", 1e-8, opt),
      cover("cover_invariance", 1e-12, opt);
  const auto cases = route_cases(g);
  for (int i = 0; i < opt.samples; ++i) {
    const Contraction f = g.contraction(kClasses[i % 5], true);
    ineq.sample([&](json& s) {
      const EtaSpec e = eta_params(f);
      const Point z = g.point(2.0);
      s["contraction"] = io::to_json(f);
      s["point"] = io::to_json(z);
      return std::max(0.0, eta_derivative(f, e, z) - e.C * eta(e, z));
    });
    trip.sample([&](json& s) {
      const EtaSpec e = eta_params(f);
      const Point z = sigma_project(e, g.point());
      const double t = g.uniform(-4, 4);
      s["contraction"] = io::to_json(f);
      s["slice_point"] = io::to_json(z);
      s["t"] = t;
      const FlowCoordinates fc = big_F_inverse(f, big_F(f, t, z));
      return std::max(std::abs(fc.t - t), distance(fc.slice, z));
    });
    deck.sample([&](json& s) {
      const Contraction h = g.contraction(kClasses[i % kClasses.size()], false);
      const Point z = g.point(2.0);
      s["contraction"] = io::to_json(h);
      s["point"] = io::to_json(z);
      const Point a = canonical_representative(h, z);
      return point_residual(canonical_representative(h, h.to_polymap()(z)), a);
    });
    const auto& [cf, cp] = cases[i % cases.size()];
    chart.sample([&](json& s) {
      const RealStructureSpec spec = canonical_structure(cf, cp);
      const ModelChart ch = build_chart(cf, spec);
      const Point z = g.point(2.0);
      s["contraction"] = io::to_json(cf);
      s["parity"] = std::string(to_string(cp));
      s["point"] = io::to_json(z);
      return distance(ch.forward(spec.lift(z)), model_involution(ch.model, ch.forward(z)));
    });
    cover.sample([&](json& s) {
      const ModelPoint p{g.unit(), sphere_normalize(g.point())};
      s["point"] = io::to_json(p);
      return std::max(distance(cover_prime(deck_prime(p)), cover_prime(p)),
                      distance(cover_double_prime(deck_double_prime(p)), cover_double_prime(p)));
    });
  }
  return {ineq.finish(), trip.finish(), deck.finish(), chart.finish(), cover.finish()};
}

std::vector<PropertyResult> picard_suite(const Options& opt, Gen& g) {
  Tracker rule("bundle_involution_rule", 0.0, opt), inv("pic_involution_homomorphism", 1e-14, opt);
  const Contraction f = Contraction::iv(0.5);
  for (int i = 0; i < opt.samples; ++i) {
    rule.sample([&](json& s) {
      const Parity p = g.integer(0, 1) ? Parity::Odd : Parity::Even;
      const double zeta = g.sign() * g.uniform(0.2, 5.0);
      const PicardDatum d = real_structures_on_line_bundle(p, zeta);
      const double r = d.exists && g.integer(0, 1) ? d.circle_radius : g.uniform(0.1, 3.0);
      const Complex nu = std::polar(r, g.uniform(-kPi, kPi));
      s["parity"] = std::string(to_string(p));
      s["zeta"] = zeta;
      s["nu"] = io::to_json(nu);
      const bool want = d.exists && std::abs(r - d.circle_radius) < 1e-12;
      return verify_bundle_involution(f, canonical_structure(f, p), zeta, nu) == want ? 0.0 : 1.0;
    });
    inv.sample([&](json& s) {
      const Complex a = g.nonzero(), b = g.nonzero();
      s["a"] = io::to_json(a);
      s["b"] = io::to_json(b);
      return std::max(std::abs(pic_involution(a * b) - pic_involution(a) * pic_involution(b)),
                      std::abs(pic_involution(pic_involution(a)) - a));
    });
  }
  return {rule.finish(), inv.finish()};
}

std::vector<PropertyResult> autgroup_suite(const Options& opt, Gen& g) {
  Tracker coset("canonical_rep_coset_constancy", 1e-9, opt), phi("spinc_homomorphism", 1e-10, opt),
      semi("semidirect_law_III", 1e-10, opt);
  auto quat = [&] {
    const Complex x = g.complex(), y = g.complex();
    Eigen::Matrix2cd m;
    m << x, -std::conj(y), y, std::conj(x);
    return m;
  };
  for (int i = 0; i < opt.samples; ++i) {
    coset.sample([&](json& s) {
      const Contraction f = g.contraction(kClasses[i % kClasses.size()], false);
      const CommutantElement e = commutant_element(f, g.commutant(f));
      const int k = g.integer(-3, 3);
      s["contraction"] = io::to_json(f);
      s["element"] = io::to_json(e.map);
      s["k"] = k;
      const CommutantElement c = canonical_rep(f, e);
      const CommutantElement shifted = commutant_element(f, compose(e.map, power(f.to_polymap(), k)));
      return std::max(max_coefficient_difference(canonical_rep(f, shifted).map, c.map),
                      max_coefficient_difference(canonical_rep(f, c).map, c.map));
    });
    phi.sample([&](json& s) {
      const Eigen::Matrix2cd a = quat(), b = quat();
      s["A"] = {{io::to_json(a(0, 0)), io::to_json(a(0, 1))}, {io::to_json(a(1, 0)), io::to_json(a(1, 1))}};
      s["B"] = {{io::to_json(b(0, 0)), io::to_json(b(0, 1))}, {io::to_json(b(1, 0)), io::to_json(b(1, 1))}};
      const SpincWitness wa = spinc_witness(a), wb = spinc_witness(b), wab = spinc_witness(a * b);
      return std::max(std::abs(wab.circle - wa.circle * wb.circle), (wab.su2 - wa.su2 * wb.su2).norm());
    });
    semi.sample([&](json& s) {
      const Contraction f = g.contraction(WehlerClass::III, false);
      const CommutantElement a = commutant_element(f, g.commutant(f)), b = commutant_element(f, g.commutant(f));
      s["contraction"] = io::to_json(f);
      s["g"] = io::to_json(a.map);
      s["h"] = io::to_json(b.map);
      const SemidirectIII law = semidirect_product(f.r(), to_semidirect(f.r(), a), to_semidirect(f.r(), b));
      return map_residual(from_semidirect(f, law).map, compose(a.map, b.map));
    });
  }
  return {coset.finish(), phi.finish(), semi.finish()};
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& p : properties)
    if (!p.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"polymap", "flows", "realstruct", "topology", "picard", "autgroup"};
  return names;
}

SuiteReport run_suite(const std::string& name, const Options& opt) {
  if (opt.samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be positive");
  Gen g(opt.seed);
  SuiteReport r{name, opt.seed, {}};
  if (name == "polymap") r.properties = polymap_suite(opt, g);
  else if (name == "flows") r.properties = flows_suite(opt, g);
  else if (name == "realstruct") r.properties = realstruct_suite(opt, g);
  else if (name == "topology") r.properties = topology_suite(opt, g);
  else if (name == "picard") r.properties = picard_suite(opt, g);
  else if (name == "autgroup") r.properties = autgroup_suite(opt, g);
  else throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  return r;
}

io::json to_json(const SuiteReport& r) {
  json props = json::array();
  for (const auto& p : r.properties) {
    json j{{"name", p.name},       {"samples", p.samples}, {"tolerance", p.tolerance},
           {"max_residual", p.max_residual}, {"pass", p.pass}};
    if (!p.pass) j["counterexample"] = p.counterexample;
    props.push_back(std::move(j));
  }
  return {{"suite", r.suite}, {"seed", r.seed}, {"pass", r.pass()}, {"properties", props}};
}

}  // namespace hopf::verify
