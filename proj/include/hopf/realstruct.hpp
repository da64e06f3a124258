#pragma once

#include <string>
#include <vector>

#include "hopf/contraction.hpp"

namespace hopf {

enum class Parity { Even, Odd };

/// Canonical lifts: c, c', c o f^(1/2), c' o f^(1/2), J o f^(1/2).
enum class CanonicalModel { StandardC, StandardCPrime, OddCF, OddCPrimeF, OddJF };

std::string_view to_string(Parity p);
std::string_view to_string(CanonicalModel m);
Parity parity_from_string(std::string_view s);

/// Largest |n| accepted in lift^2 = f^n.
inline constexpr int kMaxDeckPower = 8;

struct RealStructureSpec {
  PolyMap lift;
  Parity parity = Parity::Even;
  int deck_power = 0;
  CanonicalModel model = CanonicalModel::StandardC;
};

struct DeckPower {
  int n = 0;
  Parity parity = Parity::Even;
};

/// Unique n with lift^2 = f^n. Throws NotCommuting / NotDeckPower.
DeckPower parity_of_lift(const Contraction& f, const PolyMap& lift);

/// Wraps a user lift: checks it, computes the deck power and the model tag.
RealStructureSpec make_real_structure(const Contraction& f, const PolyMap& lift);

struct Existence {
  bool any_antiholomorphic = false;
  bool even_exists = false;
  bool odd_exists = false;
};

Existence existence(const Contraction& f);

/// The standard lift of the requested parity. Throws NoSuchStructure.
RealStructureSpec canonical_structure(const Contraction& f, Parity parity);

/// The square root of f used by the canonical odd lift.
PolyMap canonical_square_root(const Contraction& f);

/// psi in the commutant of f with psi o c o psi^-1 = phi (c' for IIcPrime).
PolyMap normalize_even(const Contraction& f, const PolyMap& phi);

/// psi in the commutant of f conjugating the canonical odd lift to phi.
PolyMap normalize_odd(const Contraction& f, const PolyMap& phi);

/// lift o f^-k with lift^2 in {id, f}.
RealStructureSpec reduce_lift(const Contraction& f, const RealStructureSpec& s);

/// Conjugator from the canonical lift of s's parity to (the reduced form of) s.
PolyMap normalize(const Contraction& f, const RealStructureSpec& s);

/// Parametric description of the anti-holomorphic maps commuting with f.
struct AntiholomorphicFamily {
  WehlerClass cls = WehlerClass::IV;
  std::vector<std::string> parameters;
  std::vector<std::string> constraints;
  std::string shape;

  /// Builds the member for the given parameter values (order of `parameters`).
  PolyMap instantiate(const std::vector<Complex>& values) const;

  int r = 1;
};

AntiholomorphicFamily list_antiholomorphic_family(const Contraction& f);

/// Tolerance used for map identities, scaled by the size of the coefficients.
double scaled_tolerance(const PolyMap& a, const PolyMap& b, double tol);

}  // namespace hopf
