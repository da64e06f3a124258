#include "hopf/autgroup.hpp"

#include <sstream>

namespace hopf {

namespace {

constexpr double kParamTol = 1e-10;

bool close_scaled(const PolyMap& a, const PolyMap& b, double tol) {
  return maps_equal(a, b, scaled_tolerance(a, b, tol));
}

PolyMap build(const Contraction& f, const std::vector<Complex>& p) {
  auto need = [&](size_t n) {
    if (p.size() != n)
      throw Error(ErrorCode::InvalidArgument,
                  "class " + std::string(to_string(f.cls())) + " takes " + std::to_string(n) + " parameters");
  };
  switch (f.cls()) {
    case WehlerClass::IV: {
      need(4);
      Eigen::Matrix2cd m;
      m << p[0], p[1], p[2], p[3];
      return PolyMap::linear(m);
    }
    case WehlerClass::III: need(3); return PolyMap::triangular(p[0], p[2], f.r(), p[1]);
    case WehlerClass::IIa: need(2); return PolyMap::triangular(std::pow(p[0], f.r()), p[1], f.r(), p[0]);
    case WehlerClass::IIb: need(2); return PolyMap::triangular(p[0], p[1], 1, p[0]);
    case WehlerClass::IIc:
    case WehlerClass::IIcPrime: need(2); return PolyMap::diagonal(p[0], p[1]);
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "no commutant table for " + describe(f));
}

std::vector<Complex> read_params(const Contraction& f, const PolyMap& g) {
  const Complex pz = g.p().coeff({1, 0}), qw = g.q().coeff({0, 1});
  switch (f.cls()) {
    case WehlerClass::IV: {
      const Eigen::Matrix2cd m = g.linear_part();
      return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
    }
    case WehlerClass::III: return {pz, qw, g.p().coeff({0, f.r()})};
    case WehlerClass::IIa: return {qw, g.p().coeff({0, f.r()})};
    case WehlerClass::IIb: return {qw, g.p().coeff({0, 1})};
    case WehlerClass::IIc:
    case WehlerClass::IIcPrime: return {pz, qw};
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "no commutant table for " + describe(f));
}

// Scale parameter of g and the lower end of its fundamental annulus.
std::pair<double, double> scale_and_lower(const Contraction& f, const CommutantElement& g) {
  const auto& p = g.params;
  switch (f.cls()) {
    case WehlerClass::IV: return {std::abs(p[0] * p[3] - p[1] * p[2]), std::norm(f.alpha())};
    case WehlerClass::III: return {std::abs(p[1]), std::abs(f.delta())};
    case WehlerClass::IIa: return {std::abs(p[0]), std::abs(f.delta())};
    case WehlerClass::IIb: return {std::abs(p[0]), std::abs(f.alpha())};
    case WehlerClass::IIc: return {std::abs(p[1]), std::abs(f.delta())};
    case WehlerClass::IIcPrime: return {std::abs(p[0]), std::abs(f.alpha())};
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "no commutant table for " + describe(f));
}

void require_valid_spec(const Contraction& f, const RealStructureSpec& s) {
  const Existence ex = existence(f);
  if (!(s.parity == Parity::Even ? ex.even_exists : ex.odd_exists))
    throw Error(ErrorCode::NoSuchStructure, describe(f));
  const DeckPower dp = parity_of_lift(f, s.lift);
  if (dp.parity != s.parity) throw Error(ErrorCode::InvalidArgument, "lift parity does not match");
}

}  // namespace

CommutantElement commutant_element(const Contraction& f, const PolyMap& g) {
  if (g.anti()) throw Error(ErrorCode::NotCommuting, "commutant elements are holomorphic");
  const PolyMap fm = f.to_polymap();
  if (!close_scaled(compose(g, fm), compose(fm, g), 1e-9))
    throw Error(ErrorCode::NotCommuting, to_string(g) + " does not commute with " + describe(f));
  CommutantElement e{f.cls(), g, read_params(f, g)};
  if (!close_scaled(build(f, e.params), g, 1e-9))
    throw Error(ErrorCode::NotCommuting, to_string(g) + " does not have the commutant shape");
  if (scale_and_lower(f, e).first == 0.0) throw Error(ErrorCode::NotCommuting, "degenerate element");
  e.map.mark_automorphism();
  return e;
}

CommutantElement make_commutant(const Contraction& f, const std::vector<Complex>& params) {
  return commutant_element(f, build(f, params));
}

int canonical_shift(const Contraction& f, const CommutantElement& g) {
  const auto [s, lower] = scale_and_lower(f, g);
  double l = std::log(s) / std::log(lower);
  if (std::abs(l - std::round(l)) < 1e-9) l = std::round(l);
  return static_cast<int>(std::floor(1.0 - l));
}

CommutantElement canonical_rep(const Contraction& f, const CommutantElement& g) {
  const int k = canonical_shift(f, g);
  if (k == 0) return g;
  return commutant_element(f, compose(g.map, power(f.to_polymap(), k)));
}

bool same_coset(const Contraction& f, const CommutantElement& g1, const CommutantElement& g2, double tol) {
  return maps_equal(canonical_rep(f, g1).map, canonical_rep(f, g2).map, tol);
}

GroupDescriptor real_automorphism_group(const Contraction& f, const RealStructureSpec& s) {
  require_valid_spec(f, s);
  GroupDescriptor g;
  std::ostringstream gen;
  switch (f.cls()) {
    case WehlerClass::IV:
      if (s.parity == Parity::Odd && f.alpha().real() < 0.0) {
        g = {"Spin^c(3)", 4, {"S¹×_ℤ₂ SU(2)", "Aut(H_f, sigma_f) = Aut(H_f, s_f)"}};
      } else {
        g = {"GL(2,ℝ)/⟨αI₂⟩", 4, {}};
      }
      gen << "alpha=" << f.alpha().real();
      break;
    case WehlerClass::III:
      g = {"((ℝ*×ℝ*)/⟨(δ^r,δ)⟩)⋉ℝ", 3, {"rho_r(a,d)(b) = a d^-r b"}};
      gen << "delta=" << f.delta().real() << ", r=" << f.r();
      break;
    case WehlerClass::IIa:
      g = {"(ℝ*/⟨δ⟩)⋉ℝ", 2, {}};
      gen << "delta=" << f.delta().real() << ", r=" << f.r();
      break;
    case WehlerClass::IIb:
      g = {"(ℝ*/⟨α⟩)⋉ℝ", 2, {}};
      gen << "alpha=" << f.alpha().real();
      break;
    case WehlerClass::IIc:
      g = {"(ℝ*×ℝ*)/⟨(α,δ)⟩", 2, {}};
      gen << "alpha=" << f.alpha().real() << ", delta=" << f.delta().real();
      break;
    case WehlerClass::IIcPrime:
      g = {"ℂ*/⟨α⟩", 2, {"1-dimensional complex torus"}};
      gen << "alpha=" << f.alpha().real() << (f.alpha().imag() < 0 ? "" : "+") << f.alpha().imag() << "i";
      break;
    default: throw Error(ErrorCode::InvalidArgument, describe(f));
  }
  if (s.parity == Parity::Odd && g.presentation != "Spin^c(3)")
    g.notes.push_back("same as the even group: Aut(H_f, sigma_f) = Aut(H_f, s_f)");
  g.notes.insert(g.notes.begin(), gen.str());
  return g;
}

bool membership_even(const Contraction& f, const CommutantElement& g) {
  const CommutantElement e = commutant_element(f, g.map);
  double scale = 1.0;
  for (auto p : e.params) scale = std::max(scale, std::abs(p));
  if (f.cls() == WehlerClass::IIcPrime) return std::abs(e.params[1] - std::conj(e.params[0])) <= kParamTol * scale;
  for (auto p : e.params)
    if (std::abs(p.imag()) > kParamTol * scale) return false;
  return true;
}

SpincWitness spinc_witness(const Eigen::Matrix2cd& a, std::optional<Complex> alpha) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (std::abs(a(0, 0) - std::conj(a(1, 1))) > kParamTol * scale ||
      std::abs(a(0, 1) + std::conj(a(1, 0))) > kParamTol * scale)
    throw Error(ErrorCode::NotQuaternionicShape, "expected [[a, -conj b], [b, conj a]]");
  const double det = std::norm(a(0, 0)) + std::norm(a(1, 0));
  if (det == 0.0) throw Error(ErrorCode::NotQuaternionicShape, "(a, b) must be nonzero");
  SpincWitness w;
  w.circle = std::sqrt(det);
  w.su2 = a / w.circle;
  if (alpha) {
    const double la = std::log(std::abs(*alpha));
    if (!(std::abs(*alpha) > 0.0 && std::abs(*alpha) < 1.0))
      throw Error(ErrorCode::InvalidArgument, "alpha must satisfy 0 < |alpha| < 1");
    w.circle_point = std::polar(1.0, kPi * std::log(w.circle) / la);
  }
  return w;
}

Complex rho(int r, Complex a, Complex d, Complex b) { return a * std::pow(d, -r) * b; }

SemidirectIII to_semidirect(int r, const CommutantElement& g) {
  if (g.cls != WehlerClass::III) throw Error(ErrorCode::InvalidArgument, "semidirect form is for class III");
  return {g.params[0], g.params[1], g.params[2] * std::pow(g.params[1], -r)};
}

CommutantElement from_semidirect(const Contraction& f, const SemidirectIII& e) {
  return make_commutant(f, {e.a, e.d, e.x * std::pow(e.d, f.r())});
}

SemidirectIII semidirect_product(int r, const SemidirectIII& p, const SemidirectIII& q) {
  return {p.a * q.a, p.d * q.d, p.x + rho(r, p.a, p.d, q.x)};
}

}  // namespace hopf
