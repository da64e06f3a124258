#include <gtest/gtest.h>

#include "hopf/flows.hpp"
#include "hopf/realstruct.hpp"
#include "support/samplers.hpp"

using namespace hopf;
using hopf::testing::Sampler;

namespace {
constexpr Complex I{0.0, 1.0};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

bool conjugates(const PolyMap& psi, const PolyMap& model, const PolyMap& phi, double tol = 1e-9) {
  return maps_equal(compose(psi, compose(model, invert(psi))), phi, tol);
}
}  // namespace

TEST(Parity, Examples) {
  const auto f = Contraction::iv(0.25);
  EXPECT_EQ(parity_of_lift(Contraction::iii(0.5, 2), PolyMap::conjugation()).n, 0);
  const auto odd = compose(PolyMap::conjugation(), PolyMap::diagonal(0.5, 0.5));
  const auto p1 = parity_of_lift(f, odd);
  EXPECT_EQ(p1.n, 1);
  EXPECT_EQ(p1.parity, Parity::Odd);
  const auto p3 = parity_of_lift(f, compose(odd, f.to_polymap()));
  EXPECT_EQ(p3.n, 3);
  EXPECT_EQ(p3.parity, Parity::Odd);
}

TEST(Parity, Errors) {
  const auto f = Contraction::iic(0.3, 0.5);
  EXPECT_EQ(code_of([&] { parity_of_lift(f, PolyMap::swap_conjugation()); }), ErrorCode::NotCommuting);
  EXPECT_EQ(code_of([&] { parity_of_lift(f, PolyMap::diagonal(0.3, 0.5)); }), ErrorCode::NotCommuting);
  // (0.5 zb, wb) commutes but its square diag(0.25, 1) is no power of f.
  EXPECT_EQ(code_of([&] { parity_of_lift(f, PolyMap::diagonal(0.5, 1.0, true)); }), ErrorCode::NotDeckPower);
}

TEST(Parity, ShiftByDeckPowers) {
  Sampler s(21);
  for (auto cls : hopf::testing::user_classes()) {
    const auto f = s.contraction(cls, true);
    const auto phi = s.even_lift(f);
    for (int k = -3; k <= 3; ++k) {
      const auto dp = parity_of_lift(f, compose(phi, power(f.to_polymap(), k)));
      EXPECT_EQ(dp.n, 2 * k) << describe(f);
    }
  }
}

TEST(Existence, Examples) {
  const auto a = existence(Contraction::iii(-0.5, 2));
  EXPECT_TRUE(a.any_antiholomorphic && a.even_exists && !a.odd_exists);
  const auto b = existence(Contraction::iv(-0.5));
  EXPECT_TRUE(b.any_antiholomorphic && b.even_exists && b.odd_exists);
  const auto c = existence(Contraction::iic({0.3, 0.1}, 0.5));
  EXPECT_FALSE(c.any_antiholomorphic || c.even_exists || c.odd_exists);
  EXPECT_FALSE(existence(Contraction::iv({0.3, 0.1})).any_antiholomorphic);
  EXPECT_TRUE(existence(Contraction::iic_prime({0.3, 0.4})).odd_exists);
}

TEST(Canonical, Examples) {
  const auto a = canonical_structure(Contraction::iv(0.25), Parity::Odd);
  EXPECT_TRUE(maps_equal(a.lift, PolyMap::diagonal(0.5, 0.5, true), 1e-15));
  EXPECT_EQ(a.model, CanonicalModel::OddCF);
  const auto b = canonical_structure(Contraction::iic_prime({0.3, 0.4}), Parity::Even);
  EXPECT_TRUE(maps_equal(b.lift, PolyMap::swap_conjugation(), 0.0));
  const auto c = canonical_structure(Contraction::iv(-0.25), Parity::Odd);
  const PolyMap want(true, Polynomial::monomial({0, 1}, 0.5 * I), Polynomial::monomial({1, 0}, -0.5 * I));
  EXPECT_TRUE(maps_equal(c.lift, want, 1e-15));
  EXPECT_EQ(c.model, CanonicalModel::OddJF);
  EXPECT_EQ(code_of([] { canonical_structure(Contraction::iii(-0.5, 2), Parity::Odd); }),
            ErrorCode::NoSuchStructure);
}

TEST(Canonical, OddLiftsSquareToF) {
  for (const auto& f : {Contraction::iv(0.3), Contraction::iv(-0.3), Contraction::iii(0.5, 3),
                        Contraction::iia(0.5, 2), Contraction::iib(0.4), Contraction::iic(0.3, 0.6),
                        Contraction::iic_prime({0.3, -0.5})}) {
    const auto s = canonical_structure(f, Parity::Odd);
    EXPECT_TRUE(maps_equal(compose(s.lift, s.lift), f.to_polymap(), 1e-12)) << describe(f);
    EXPECT_EQ(parity_of_lift(f, s.lift).n, 1);
  }
}

TEST(NormalizeEven, Examples) {
  EXPECT_TRUE(maps_equal(normalize_even(Contraction::iv(0.5), PolyMap::conjugation()), PolyMap::identity(),
                         1e-15));
  const auto f = Contraction::iii(0.5, 2);
  const auto phi = PolyMap::triangular(-1.0, 1.0, 2, 1.0, true);
  // The hand-derived conjugator (iz + 0.5 w^2, w) is one valid answer.
  EXPECT_TRUE(conjugates(PolyMap::triangular(I, 0.5, 2, 1.0), PolyMap::conjugation(), phi));
  EXPECT_TRUE(conjugates(normalize_even(f, phi), PolyMap::conjugation(), phi));

  const auto g = Contraction::iic(0.3, 0.5);
  const auto psi = normalize_even(g, PolyMap::diagonal(I, 1.0, true));
  EXPECT_TRUE(maps_equal(psi, PolyMap::diagonal(std::polar(1.0, kPi / 4), 1.0), 1e-14));
}

TEST(NormalizeEven, RandomLiftsAllClasses) {
  Sampler s(4);
  for (auto cls : hopf::testing::user_classes())
    for (int i = 0; i < 30; ++i) {
      const auto f = s.contraction(cls, i % 2 == 0);
      const auto phi = s.even_lift(f);
      const auto psi = normalize_even(f, phi);
      const auto model = cls == WehlerClass::IIcPrime ? PolyMap::swap_conjugation() : PolyMap::conjugation();
      EXPECT_TRUE(conjugates(psi, model, phi)) << describe(f) << " " << to_string(phi);
      EXPECT_TRUE(maps_equal(compose(psi, f.to_polymap()), compose(f.to_polymap(), psi), 1e-9));
    }
}

TEST(NormalizeEven, Errors) {
  const auto f = Contraction::iic(0.3, 0.5);
  EXPECT_EQ(code_of([&] { normalize_even(f, PolyMap::diagonal(2.0, 1.0, true)); }), ErrorCode::NotInvolution);
  EXPECT_EQ(code_of([&] { normalize_even(Contraction::iv(0.5), PolyMap::quaternionic()); }),
            ErrorCode::NotInvolution);
}

TEST(NormalizeOdd, Examples) {
  const auto f = Contraction::iv(0.25);
  const auto can = canonical_structure(f, Parity::Odd);
  EXPECT_TRUE(conjugates(normalize_odd(f, can.lift), can.lift, can.lift));

  const auto g = Contraction::iv(-0.25);
  const auto jf = canonical_structure(g, Parity::Odd).lift;
  EXPECT_TRUE(maps_equal(normalize_odd(g, jf), PolyMap::identity(), 1e-14));

  Eigen::Matrix2cd m;
  m << 1, 1, 0, 1;
  const auto psi0 = PolyMap::linear(m);
  const auto phi = compose(psi0, compose(jf, invert(psi0)));
  EXPECT_TRUE(conjugates(normalize_odd(g, phi), jf, phi, 1e-10));
}

TEST(NormalizeOdd, RandomPositiveAndPrime) {
  Sampler s(8);
  for (auto cls : hopf::testing::user_classes())
    for (int i = 0; i < 20; ++i) {
      const auto f = s.contraction(cls, true);
      // root o (random even lift) is an odd lift since the root commutes with it.
      const auto phi = compose(canonical_square_root(f), s.even_lift(f));
      const auto can = canonical_structure(f, Parity::Odd);
      const auto psi = normalize_odd(f, phi);
      EXPECT_TRUE(conjugates(psi, can.lift, phi)) << describe(f);
    }
}

TEST(NormalizeOdd, RandomQuaternionic) {
  Sampler s(9);
  for (int i = 0; i < 50; ++i) {
    const auto f = Contraction::iv(-s.modulus());
    const auto jf = canonical_structure(f, Parity::Odd).lift;
    const auto psi0 = s.commutant(f);
    const auto phi = compose(psi0, compose(jf, invert(psi0)));
    EXPECT_TRUE(conjugates(normalize_odd(f, phi), jf, phi));
  }
}

TEST(NormalizeOdd, NotOddSquare) {
  EXPECT_EQ(code_of([] { normalize_odd(Contraction::iv(0.25), PolyMap::conjugation()); }),
            ErrorCode::NotOddSquare);
}

TEST(Normalize, ReducesHigherDeckPowers) {
  const auto f = Contraction::iia(0.6, 2);
  Sampler s(3);
  const auto phi = compose(s.even_lift(f), power(f.to_polymap(), 2));
  const auto spec = make_real_structure(f, phi);
  EXPECT_EQ(spec.deck_power, 4);
  const auto red = reduce_lift(f, spec);
  EXPECT_EQ(red.deck_power, 0);
  EXPECT_TRUE(conjugates(normalize(f, spec), PolyMap::conjugation(), red.lift));
}

TEST(Family, Shapes) {
  const auto iv = list_antiholomorphic_family(Contraction::iv(0.5));
  EXPECT_EQ(iv.parameters.size(), 4u);
  const auto prime = list_antiholomorphic_family(Contraction::iic_prime({0.3, 0.4}));
  EXPECT_EQ(prime.shape, "(a wb, d zb)");
  const auto b = list_antiholomorphic_family(Contraction::iib(0.5));
  EXPECT_EQ(b.shape, "(a zb + b wb, a wb)");
  EXPECT_EQ(code_of([] { list_antiholomorphic_family(Contraction::iic({0.3, 0.1}, 0.5)); }),
            ErrorCode::NoAntiholomorphic);
}

TEST(Family, MembersCommuteWithF) {
  Sampler s(12);
  for (auto cls : hopf::testing::user_classes()) {
    const auto f = s.contraction(cls, false);
    const auto fam = list_antiholomorphic_family(f);
    for (int i = 0; i < 10; ++i) {
      std::vector<Complex> v;
      for (size_t k = 0; k < fam.parameters.size(); ++k) v.push_back(s.nonzero());
      const auto m = fam.instantiate(v);
      EXPECT_TRUE(maps_equal(compose(m, f.to_polymap()), compose(f.to_polymap(), m), 1e-10)) << describe(f);
    }
  }
}
