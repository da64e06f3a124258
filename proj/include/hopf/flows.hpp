#pragma once

#include "hopf/contraction.hpp"

namespace hopf {

/// Throws NotRealCoefficients / NotPositiveDiagonal unless f admits the
/// real 1-parameter group f^t.
void require_flow_admissible(const Contraction& f);

/// The k-th root f^(1/k) from the root table (real coefficients, positive
/// diagonal). For IIa the off-diagonal coefficient is (1/k) d^(r(1-k)/k).
PolyMap kth_root(const Contraction& f, int k);

/// f^t as a polynomial map; f^0 = id, f^1 = f, f^(t+s) = f^t o f^s.
PolyMap flow(const Contraction& f, double t);

/// Pointwise f^t(Z) without building the polynomial map.
Point flow_point(const Contraction& f, double t, Point z);

/// Generator of the flow: d/dt f^t(Z) at t = 0.
Point flow_generator(const Contraction& f, Point z);

/// g = f o f for a real contraction with a negative diagonal coefficient,
/// expressed in the (possibly tilde) class whose normal form is exactly f o f.
Contraction square_for_negatives(const Contraction& f);

}  // namespace hopf
