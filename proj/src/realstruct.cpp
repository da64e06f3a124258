#include "hopf/realstruct.hpp"

#include <algorithm>

#include "hopf/flows.hpp"

namespace hopf {

namespace {

constexpr double kIdentityTol = 1e-9;

double coefficient_scale(const PolyMap& m) {
  double s = 0.0;
  for (const auto* poly : {&m.p(), &m.q()})
    for (const auto& [e, c] : poly->terms()) s = std::max(s, std::abs(c));
  return s;
}

bool close_maps(const PolyMap& a, const PolyMap& b, double tol = kIdentityTol) {
  return maps_equal(a, b, scaled_tolerance(a, b, tol));
}

void require_anti(const PolyMap& phi) {
  if (!phi.anti()) throw Error(ErrorCode::NotCommuting, "lift must be anti-holomorphic");
}

void require_commuting(const PolyMap& f, const PolyMap& phi) {
  require_anti(phi);
  if (!close_maps(compose(phi, f), compose(f, phi)))
    throw Error(ErrorCode::NotCommuting, "lift does not commute with f: " + to_string(phi));
}

Complex unit_sqrt(Complex u) { return std::polar(1.0, std::arg(u) / 2.0); }

void require_unit(Complex x, const char* what) {
  if (std::abs(std::abs(x) - 1.0) > 1e-8)
    throw Error(ErrorCode::NotInvolution, std::string(what) + " must have modulus 1");
}

// Least-norm solution of b = u B - v conj(B) as a real 2x2 system.
Complex solve_lambda(Complex u, Complex v, Complex b) {
  Eigen::Matrix2d m;
  const Complex c1 = u - v;
  const Complex c2 = Complex(0, 1) * (u + v);
  m << c1.real(), c2.real(), c1.imag(), c2.imag();
  const Eigen::Vector2d rhs(b.real(), b.imag());
  const Eigen::Vector2d x = m.completeOrthogonalDecomposition().solve(rhs);
  const Complex sol{x(0), x(1)};
  const Complex back = u * sol - v * std::conj(sol);
  if (std::abs(back - b) > 1e-9 * std::max(1.0, std::abs(b)))
    throw Error(ErrorCode::NumericallySingular, "b is not in the image of the real-linear map");
  return sol;
}

// Columns l with M conj(l) = l, so that l c l^-1 = (Z -> M conj Z).
Eigen::Matrix2cd real_form_basis(const Eigen::Matrix2cd& m) {
  const Complex i{0, 1};
  std::vector<Eigen::Vector2cd> cands;
  for (Eigen::Vector2cd x : {Eigen::Vector2cd(1, 0), Eigen::Vector2cd(0, 1), Eigen::Vector2cd(i, 0),
                             Eigen::Vector2cd(0, i)})
    cands.push_back(0.5 * (x + m * x.conjugate()));
  Eigen::Matrix2cd best = Eigen::Matrix2cd::Identity();
  double best_det = -1.0;
  for (size_t a = 0; a < cands.size(); ++a)
    for (size_t b = a + 1; b < cands.size(); ++b) {
      Eigen::Matrix2cd l;
      l.col(0) = cands[a];
      l.col(1) = cands[b];
      const double d = std::abs(l.determinant());
      if (d > best_det) {
        best_det = d;
        best = l;
      }
    }
  if (best_det < 1e-12) throw Error(ErrorCode::NumericallySingular, "no real basis found");
  return best;
}

PolyMap standard_even_lift(const Contraction& f) {
  return f.cls() == WehlerClass::IIcPrime ? PolyMap::swap_conjugation() : PolyMap::conjugation();
}

void verify_conjugator(const PolyMap& psi, const PolyMap& model, const PolyMap& phi) {
  const PolyMap back = compose(psi, compose(model, invert(psi)));
  if (!close_maps(back, phi, 1e-8))
    throw Error(ErrorCode::NumericallySingular, "conjugator failed verification");
}

int r_of(const Contraction& f) {
  switch (f.cls()) {
    case WehlerClass::III:
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde: return f.r();
    default: return 1;
  }
}

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parity_from_string(std::string_view s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw Error(ErrorCode::SchemaError, "parity must be \"even\" or \"odd\"");
}

std::string_view to_string(CanonicalModel m) {
  switch (m) {
    case CanonicalModel::StandardC: return "StandardC";
    case CanonicalModel::StandardCPrime: return "StandardCPrime";
    case CanonicalModel::OddCF: return "OddCF";
    case CanonicalModel::OddCPrimeF: return "OddCPrimeF";
    case CanonicalModel::OddJF: return "OddJF";
  }
  return "?";
}

double scaled_tolerance(const PolyMap& a, const PolyMap& b, double tol) {
  return tol * std::max({1.0, coefficient_scale(a), coefficient_scale(b)});
}

DeckPower parity_of_lift(const Contraction& f, const PolyMap& lift) {
  const PolyMap fm = f.to_polymap();
  require_commuting(fm, lift);
  const PolyMap sq = compose(lift, lift);
  const auto [l1, l2] = f.diagonal();
  const double det = std::abs(sq.linear_part().determinant());
  if (!(det > 0.0)) throw Error(ErrorCode::NotDeckPower, "square of the lift is degenerate");
  const double est = std::log(det) / std::log(std::abs(l1 * l2));
  const long n = std::lround(est);
  if (std::abs(n) > kMaxDeckPower || std::abs(est - n) > 1e-6)
    throw Error(ErrorCode::NotDeckPower, "lift^2 is not a power f^n with |n| <= 8");
  const PolyMap fn = power(fm, static_cast<int>(n));
  if (!close_maps(sq, fn))
    throw Error(ErrorCode::NotDeckPower, "lift^2 differs from f^" + std::to_string(n));
  return {static_cast<int>(n), (n % 2 == 0) ? Parity::Even : Parity::Odd};
}

Existence existence(const Contraction& f) {
  const auto fl = structural_flags(f);
  Existence e;
  e.any_antiholomorphic = fl.real_coeffs || fl.is_iic_prime;
  e.even_exists = e.any_antiholomorphic;
  e.odd_exists = (fl.real_coeffs && fl.positive_diagonal) || fl.is_iic_prime ||
                 (f.cls() == WehlerClass::IV && is_real(f.alpha()));
  return e;
}

PolyMap canonical_square_root(const Contraction& f) {
  const auto fl = structural_flags(f);
  if (fl.is_iic_prime) {
    const Complex s = std::sqrt(f.alpha());
    return PolyMap::diagonal(s, std::conj(s)).mark_automorphism();
  }
  if (f.cls() == WehlerClass::IV && fl.real_coeffs && !fl.positive_diagonal) {
    const Complex s{0.0, std::sqrt(std::abs(f.alpha().real()))};
    return PolyMap::diagonal(s, s).mark_automorphism();
  }
  return kth_root(f, 2);
}

RealStructureSpec canonical_structure(const Contraction& f, Parity parity) {
  const Existence ex = existence(f);
  const bool prime = f.cls() == WehlerClass::IIcPrime;
  RealStructureSpec s;
  s.parity = parity;
  if (parity == Parity::Even) {
    if (!ex.even_exists) throw Error(ErrorCode::NoSuchStructure, "no even Real structure: " + describe(f));
    s.lift = standard_even_lift(f);
    s.deck_power = 0;
    s.model = prime ? CanonicalModel::StandardCPrime : CanonicalModel::StandardC;
    return s;
  }
  if (!ex.odd_exists) throw Error(ErrorCode::NoSuchStructure, "no odd Real structure: " + describe(f));
  const PolyMap root = canonical_square_root(f);
  s.deck_power = 1;
  if (prime) {
    s.lift = compose(PolyMap::swap_conjugation(), root);
    s.model = CanonicalModel::OddCPrimeF;
  } else if (structural_flags(f).positive_diagonal) {
    s.lift = compose(PolyMap::conjugation(), root);
    s.model = CanonicalModel::OddCF;
  } else {
    s.lift = compose(PolyMap::quaternionic(), root);
    s.model = CanonicalModel::OddJF;
  }
  return s;
}

RealStructureSpec make_real_structure(const Contraction& f, const PolyMap& lift) {
  const DeckPower dp = parity_of_lift(f, lift);
  RealStructureSpec s;
  s.lift = lift;
  s.deck_power = dp.n;
  s.parity = dp.parity;
  const bool prime = f.cls() == WehlerClass::IIcPrime;
  if (dp.parity == Parity::Even) {
    s.model = prime ? CanonicalModel::StandardCPrime : CanonicalModel::StandardC;
  } else if (prime) {
    s.model = CanonicalModel::OddCPrimeF;
  } else if (structural_flags(f).positive_diagonal) {
    s.model = CanonicalModel::OddCF;
  } else {
    s.model = CanonicalModel::OddJF;
  }
  return s;
}

RealStructureSpec reduce_lift(const Contraction& f, const RealStructureSpec& s) {
  const int k = s.deck_power >= 0 ? s.deck_power / 2 : -((1 - s.deck_power) / 2);
  if (k == 0) return s;
  RealStructureSpec out = s;
  out.lift = compose(s.lift, power(f.to_polymap(), -k));
  out.deck_power = s.deck_power - 2 * k;
  return out;
}

PolyMap normalize_even(const Contraction& f, const PolyMap& phi) {
  const PolyMap fm = f.to_polymap();
  require_anti(phi);
  if (!close_maps(compose(phi, phi), PolyMap::identity()))
    throw Error(ErrorCode::NotInvolution, "phi o phi != id");
  require_commuting(fm, phi);
  if (!existence(f).even_exists) throw Error(ErrorCode::NoSuchStructure, describe(f));

  PolyMap psi;
  switch (f.cls()) {
    case WehlerClass::IV: {
      if (!phi.is_linear()) throw Error(ErrorCode::NotCommuting, "IV lifts are anti-linear");
      psi = PolyMap::linear(real_form_basis(phi.linear_part()));
      break;
    }
    case WehlerClass::III: {
      const int r = f.r();
      const Complex a = phi.p().coeff({1, 0});
      const Complex b = phi.p().coeff({0, r});
      const Complex d = phi.q().coeff({0, 1});
      require_unit(a, "a");
      require_unit(d, "d");
      const Complex A = unit_sqrt(a);
      const Complex D = unit_sqrt(d);
      const Complex u = std::pow(std::conj(D), -r);
      const Complex v = A * A * u;
      psi = PolyMap::triangular(A, solve_lambda(u, v, b), r, D);
      break;
    }
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde:
    case WehlerClass::IIb:
    case WehlerClass::IIbTilde: {
      const int r = r_of(f);
      const Complex a = phi.q().coeff({0, 1});
      const Complex b = phi.p().coeff({0, r});
      require_unit(a, "a");
      const Complex A = unit_sqrt(a);
      const Complex u = std::pow(A, r);
      const Complex v = std::pow(A, 3 * r);
      psi = PolyMap::triangular(std::pow(A, r), solve_lambda(u, v, b), r, A);
      break;
    }
    case WehlerClass::IIc: {
      const Complex a = phi.p().coeff({1, 0});
      const Complex b = phi.q().coeff({0, 1});
      require_unit(a, "a");
      require_unit(b, "b");
      psi = PolyMap::diagonal(unit_sqrt(a), unit_sqrt(b));
      break;
    }
    case WehlerClass::IIcPrime: {
      const Complex a = phi.p().coeff({0, 1});
      if (a == Complex{}) throw Error(ErrorCode::NotCommuting, "II'c lifts have the shape (a wb, d zb)");
      psi = PolyMap::diagonal(a, 1.0);
      break;
    }
  }
  psi.mark_automorphism();
  verify_conjugator(psi, standard_even_lift(f), phi);
  return psi;
}

PolyMap normalize_odd(const Contraction& f, const PolyMap& phi) {
  const PolyMap fm = f.to_polymap();
  require_commuting(fm, phi);
  if (!close_maps(compose(phi, phi), fm)) throw Error(ErrorCode::NotOddSquare, "phi o phi != f");
  if (!existence(f).odd_exists) throw Error(ErrorCode::NoSuchStructure, describe(f));

  const RealStructureSpec can = canonical_structure(f, Parity::Odd);
  const PolyMap root = canonical_square_root(f);
  PolyMap psi;
  if (can.model == CanonicalModel::OddJF) {
    // a = phi o f^(-1/2) is anti-linear with a^2 = -id; its matrix is N.
    const Eigen::Matrix2cd m = phi.linear_part();
    const Complex s = root.p().coeff({1, 0});
    const Eigen::Matrix2cd n = m * std::conj(1.0 / s);
    if ((n * n.conjugate() + Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-9)
      throw Error(ErrorCode::NotOddSquare, "a o a != -id");
    Eigen::Matrix2cd l;
    l.col(0) = Eigen::Vector2cd(1, 0);
    l.col(1) = n.col(0);
    if (std::abs(l.determinant()) < 1e-12)
      throw Error(ErrorCode::NumericallySingular, "quaternionic basis is degenerate");
    psi = PolyMap::linear(l).mark_automorphism();
  } else {
    const PolyMap phi_even = compose(invert(root), phi);
    psi = normalize_even(f, phi_even);
  }
  verify_conjugator(psi, can.lift, phi);
  return psi;
}

PolyMap normalize(const Contraction& f, const RealStructureSpec& s) {
  const RealStructureSpec red = reduce_lift(f, s);
  return red.parity == Parity::Even ? normalize_even(f, red.lift) : normalize_odd(f, red.lift);
}

AntiholomorphicFamily list_antiholomorphic_family(const Contraction& f) {
  if (!existence(f).any_antiholomorphic)
    throw Error(ErrorCode::NoAntiholomorphic, "coefficients are neither real nor of type II'c");
  AntiholomorphicFamily fam;
  fam.cls = f.cls();
  fam.r = r_of(f);
  const std::string r = std::to_string(fam.r);
  switch (f.cls()) {
    case WehlerClass::IV:
      fam.parameters = {"a", "b", "c", "d"};
      fam.constraints = {"ad - bc != 0"};
      fam.shape = "(a zb + b wb, c zb + d wb)";
      break;
    case WehlerClass::III:
      fam.parameters = {"a", "d", "b"};
      fam.constraints = {"a != 0", "d != 0"};
      fam.shape = "(a zb + b wb^" + r + ", d wb)";
      break;
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde:
      fam.parameters = {"a", "b"};
      fam.constraints = {"a != 0"};
      fam.shape = "(a^" + r + " zb + b wb^" + r + ", a wb)";
      break;
    case WehlerClass::IIb:
    case WehlerClass::IIbTilde:
      fam.parameters = {"a", "b"};
      fam.constraints = {"a != 0"};
      fam.shape = "(a zb + b wb, a wb)";
      break;
    case WehlerClass::IIc:
      fam.parameters = {"a", "d"};
      fam.constraints = {"a != 0", "d != 0"};
      fam.shape = "(a zb, d wb)";
      break;
    case WehlerClass::IIcPrime:
      fam.parameters = {"a", "d"};
      fam.constraints = {"a != 0", "d != 0"};
      fam.shape = "(a wb, d zb)";
      break;
  }
  return fam;
}

PolyMap AntiholomorphicFamily::instantiate(const std::vector<Complex>& v) const {
  if (v.size() != parameters.size())
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(parameters.size()) + " parameters");
  auto nonzero = [](Complex x) {
    if (x == Complex{}) throw Error(ErrorCode::InvalidArgument, "parameter must be nonzero");
  };
  PolyMap m;
  switch (cls) {
    case WehlerClass::IV: {
      Eigen::Matrix2cd a;
      a << v[0], v[1], v[2], v[3];
      if (std::abs(a.determinant()) == 0.0) throw Error(ErrorCode::InvalidArgument, "singular matrix");
      m = PolyMap::linear(a, true);
      break;
    }
    case WehlerClass::III:
      nonzero(v[0]);
      nonzero(v[1]);
      m = PolyMap::triangular(v[0], v[2], r, v[1], true);
      break;
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde:
      nonzero(v[0]);
      m = PolyMap::triangular(std::pow(v[0], r), v[1], r, v[0], true);
      break;
    case WehlerClass::IIb:
    case WehlerClass::IIbTilde:
      nonzero(v[0]);
      m = PolyMap::triangular(v[0], v[1], 1, v[0], true);
      break;
    case WehlerClass::IIc:
      nonzero(v[0]);
      nonzero(v[1]);
      m = PolyMap::diagonal(v[0], v[1], true);
      break;
    case WehlerClass::IIcPrime:
      nonzero(v[0]);
      nonzero(v[1]);
      m = PolyMap(true, Polynomial::monomial({0, 1}, v[0]), Polynomial::monomial({1, 0}, v[1]));
      break;
  }
  return m.mark_automorphism();
}

}  // namespace hopf
