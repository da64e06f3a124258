#include <gtest/gtest.h>

#include "hopf/charts.hpp"
#include "hopf/flows.hpp"
#include "support/samplers.hpp"

using namespace hopf;
using hopf::testing::Sampler;

namespace {

// Seven (contraction, parity) cases, one per chart route.
std::vector<std::pair<Contraction, Parity>> route_cases() {
  return {
      {Contraction::iia(0.6, 2), Parity::Even},         // positive
      {Contraction::iic(0.5, -0.3), Parity::Even},      // one negative, on w
      {Contraction::iia(-0.7, 2), Parity::Even},        // one negative via IIaTilde
      {Contraction::iic(-0.3, 0.6), Parity::Even},      // one negative, on z
      {Contraction::iib(-0.5), Parity::Even},           // two negative
      {Contraction::iic_prime({0.3, 0.5}), Parity::Even},
      {Contraction::iii(0.6, 3), Parity::Odd},
      {Contraction::iic_prime({-0.4, 0.2}), Parity::Odd},
      {Contraction::iv(-0.4), Parity::Odd},
  };
}

double model_distance(const ModelPoint& a, const ModelPoint& b) { return distance(a, b); }

}  // namespace

TEST(Eta, TableExamples) {
  const auto a = eta_params(Contraction::iv(0.5));
  EXPECT_EQ(a.q, 1);
  EXPECT_DOUBLE_EQ(a.B, 1.0);
  EXPECT_NEAR(a.C, -1.3862943611198906, 1e-15);
  const auto b = eta_params(Contraction::iib_tilde(0.5, 1.0));
  EXPECT_NEAR(b.B, 1.0 / (0.25 * std::pow(std::log(2.0), 2)), 1e-12);
  EXPECT_NEAR(b.B, 8.3255, 1e-4);
  EXPECT_NEAR(b.C, std::log(0.5), 1e-15);
  const auto c = eta_params(Contraction::iic(0.3, 0.5));
  EXPECT_NEAR(c.C, 2.0 * std::log(0.5), 1e-15);
  EXPECT_THROW(eta_params(Contraction::iv(-0.5)), Error);
}

TEST(Eta, SigmaProjectExamples) {
  const Point a = sigma_project({1, 4.0, -1.0}, {0.0, 1.0});
  EXPECT_NEAR(std::abs(a.w - 0.5), 0.0, 1e-15);
  const Point b = sigma_project({1, 1.0, -1.0}, {3.0, 4.0});
  EXPECT_NEAR(distance(b, {0.6, 0.8}), 0.0, 1e-15);
  const Point c = sigma_project({2, 1.0, -1.0}, {0.0, 2.0});
  EXPECT_NEAR(distance(c, {0.0, 1.0}), 0.0, 1e-12);
  Sampler s(5);
  for (int i = 0; i < 200; ++i) {
    const EtaSpec spec{s.integer(1, 4), s.uniform(1.0, 20.0), -1.0};
    const Point z = s.point(s.uniform(0.01, 50.0));
    const Point y = sigma_project(spec, z);
    EXPECT_NEAR(eta(spec, y), 1.0, 1e-12);
    // Same ray: y = rho z with rho > 0.
    const double rho = norm(y) / norm(z);
    EXPECT_LT(distance(y, rho * z), 1e-12);
  }
}

TEST(BigF, InverseExample) {
  const auto fc = big_F_inverse(Contraction::iv(0.5), {2.0, 0.0});
  EXPECT_NEAR(fc.t, -1.0, 1e-12);
  EXPECT_LT(distance(fc.slice, {1.0, 0.0}), 1e-12);
  const Point z{0.6, 0.8};
  EXPECT_EQ(big_F(Contraction::iv(0.5), 0.0, z), z);
}

TEST(BigF, RoundTrip) {
  Sampler s(6);
  for (auto cls : hopf::testing::user_classes()) {
    if (cls == WehlerClass::IIcPrime) continue;
    const auto f = s.contraction(cls, true);
    const auto spec = eta_params(f);
    for (int i = 0; i < 100; ++i) {
      const Point z = sigma_project(spec, s.point());
      const double t = s.uniform(-4.0, 4.0);
      const auto fc = big_F_inverse(f, big_F(f, t, z));
      EXPECT_NEAR(fc.t, t, 1e-8) << describe(f);
      EXPECT_LT(distance(fc.slice, z), 1e-8) << describe(f);
    }
  }
}

TEST(Eta, DifferentialInequality) {
  Sampler s(7);
  for (auto cls : hopf::testing::user_classes()) {
    if (cls == WehlerClass::IIcPrime) continue;
    for (int k = 0; k < 5; ++k) {
      const auto f = s.contraction(cls, true);
      const auto spec = eta_params(f);
      for (int i = 0; i < 200; ++i) {
        const Point z = s.point(2.0);
        // Finite-difference oracle for the derivative along the flow.
        const double h = 1e-6;
        const double fd = (eta(spec, flow_point(f, h, z)) - eta(spec, flow_point(f, -h, z))) / (2 * h);
        const double d = eta_derivative(f, spec, z);
        EXPECT_NEAR(d, fd, 1e-5 * std::max(1.0, std::abs(d)));
        EXPECT_LE(d, spec.C * eta(spec, z) + 1e-9) << describe(f);
      }
    }
  }
  const auto iv = Contraction::iv(0.4);
  const auto spec = eta_params(iv);
  const Point z{{0.3, -0.2}, {1.1, 0.5}};
  EXPECT_NEAR(eta_derivative(iv, spec, z), spec.C * eta(spec, z), 1e-12);
}

TEST(Model, Involutions) {
  const auto a = model_involution(ModelInvolution::Tau, {1.0, {{0, 1}, 0.0}});
  EXPECT_LT(distance(a, ModelPoint{1.0, {{0, -1}, 0.0}}), 1e-15);
  const Complex i{0, 1};
  const auto b = model_involution(ModelInvolution::TauPrime, {i, {0.0, 1.0}});
  EXPECT_LT(distance(b, ModelPoint{i, {0.0, i}}), 1e-15);
  const auto c = model_involution(ModelInvolution::Mu0, {1.0, {1.0, 0.0}});
  EXPECT_LT(distance(c, ModelPoint{-1.0, {1.0, 0.0}}), 1e-15);
}

TEST(Model, CoverInvariance) {
  Sampler s(8);
  for (int i = 0; i < 500; ++i) {
    const ModelPoint p{s.unit(), sphere_normalize(s.point())};
    EXPECT_LT(distance(cover_prime(deck_prime(p)), cover_prime(p)), 1e-12);
    EXPECT_LT(distance(cover_double_prime(deck_double_prime(p)), cover_double_prime(p)), 1e-12);
  }
}

TEST(Model, SphereNormalizationCommutes) {
  Sampler s(9);
  for (int i = 0; i < 200; ++i) {
    const EtaSpec spec{s.integer(1, 3), s.uniform(1.0, 9.0), -1.0};
    const Point y = sigma_project(spec, s.point());
    const Point n = sphere_normalize(y);
    EXPECT_LT(distance(sphere_normalize(Point{y.z, -y.w}), Point{n.z, -n.w}), 1e-14);
    EXPECT_LT(distance(sphere_normalize(-1.0 * y), -1.0 * n), 1e-14);
    EXPECT_LT(distance(sphere_normalize(conj(y)), conj(n)), 1e-14);
  }
}

TEST(Model, BetaMap) {
  const auto [x1, y1] = beta_map(1.0, 0.0);
  EXPECT_EQ(x1, 1.0);
  EXPECT_EQ(y1, 0.0);
  const auto [x2, y2] = beta_map(0.0, 1.0);
  EXPECT_EQ(x2, -1.0);
  EXPECT_EQ(y2, 0.0);
}

TEST(Hopf, CanonicalRepresentatives) {
  Sampler s(10);
  for (int k = 0; k < 12; ++k) {
    const auto cls = hopf::testing::user_classes()[k % 6];
    const auto f = s.contraction(cls, k >= 6);
    const auto fm = f.to_polymap();
    for (int i = 0; i < 50; ++i) {
      const Point z = s.point(3.0);
      const Point a = canonical_representative(f, z);
      EXPECT_LT(distance(a, canonical_representative(f, fm(z))), 1e-8 * std::max(1.0, norm(a))) << describe(f);
      const double level = hopf_level(f, a);
      EXPECT_GE(level, -1e-9);
      EXPECT_LT(level, 1.0 + 1e-9);
      EXPECT_NEAR(hopf_level(f, fm(z)), hopf_level(f, z) + 1.0, 1e-8);
    }
  }
}

TEST(Flattening, ConjugationIdentities) {
  Sampler s(11);
  for (int k = 0; k < 5; ++k) {
    const auto f = s.contraction(WehlerClass::IIcPrime, true);
    const ChainMap l = flattening(f), li = flattening_inverse(f);
    const auto fa = Contraction::iv(std::abs(f.alpha()));
    const auto odd = canonical_structure(f, Parity::Odd).lift;
    for (int i = 0; i < 200; ++i) {
      const Point z = s.point(2.0);
      EXPECT_LT(distance(li.evaluate(l.evaluate(z)), z), 1e-12);
      EXPECT_LT(distance(li.evaluate(f.to_polymap()(l.evaluate(z))), fa.to_polymap()(z)), 1e-9);
      EXPECT_LT(distance(li.evaluate(PolyMap::swap_conjugation()(l.evaluate(z))), conj(z)), 1e-9);
      // l o (c o f_|a|^(1/2)) o l^-1 = c' o f^(1/2) with the principal root.
      const Point lhs = l.evaluate(conj(std::sqrt(std::abs(f.alpha())) * li.evaluate(z)));
      EXPECT_LT(distance(lhs, odd(z)), 1e-9 * std::max(1.0, norm(z)));
    }
  }
}

TEST(Chart, RoutesAndModels) {
  auto chart = [](const Contraction& f, Parity p) { return build_chart(f, canonical_structure(f, p)); };
  const auto a = chart(Contraction::iv(0.5), Parity::Even);
  EXPECT_EQ(a.model, ModelInvolution::Tau);
  EXPECT_EQ(a.route, CoverRoute::Direct);
  const auto b = chart(Contraction::iic(0.5, -0.5), Parity::Even);
  EXPECT_EQ(b.model, ModelInvolution::TauPrime);
  EXPECT_EQ(b.route, CoverRoute::ViaQPrime);
  const auto c = chart(Contraction::iv(-0.25), Parity::Odd);
  EXPECT_EQ(c.model, ModelInvolution::Mu0);
  EXPECT_EQ(c.route, CoverRoute::OddRoute);
  EXPECT_EQ(chart(Contraction::iv(-0.25), Parity::Even).route, CoverRoute::ViaQDoublePrime);
  EXPECT_EQ(chart(Contraction::iic_prime({0.3, 0.3}), Parity::Even).route, CoverRoute::ViaIIcPrimeFlattening);
}

TEST(Chart, EquivarianceOnAllRoutes) {
  Sampler s(12);
  for (const auto& [f, parity] : route_cases()) {
    const auto spec = canonical_structure(f, parity);
    const auto chart = build_chart(f, spec);
    const auto fm = f.to_polymap();
    for (int i = 0; i < 200; ++i) {
      const Point z = s.point(2.0);
      const ModelPoint m = chart.forward(z);
      EXPECT_NEAR(std::abs(m.zeta), 1.0, 1e-14);
      EXPECT_NEAR(norm(m.sphere), 1.0, 1e-14);
      EXPECT_LT(model_distance(chart.forward(spec.lift(z)), model_involution(chart.model, m)), 1e-8)
          << describe(f) << " " << to_string(parity);
      EXPECT_LT(model_distance(chart.forward(fm(z)), m), 1e-8) << describe(f);
      // backward lands on a representative of the same point of H_f.
      EXPECT_LT(model_distance(chart.forward(chart.backward(m)), m), 1e-8) << describe(f);
    }
  }
}

TEST(Chart, RandomLifts) {
  Sampler s(13);
  for (auto cls : hopf::testing::user_classes())
    for (int k = 0; k < 4; ++k) {
      const auto f = s.contraction(cls, k % 2 == 0);
      // k = 2 gives an odd lift: root o (even lift), f positive.
      const auto base = k == 2 ? compose(canonical_square_root(f), s.even_lift(f)) : s.even_lift(f);
      const auto lift = compose(base, power(f.to_polymap(), s.integer(-1, 1)));
      const auto spec = make_real_structure(f, lift);
      const auto chart = build_chart(f, spec);
      for (int i = 0; i < 100; ++i) {
        const Point z = s.point(2.0);
        EXPECT_LT(model_distance(chart.forward(lift(z)), model_involution(chart.model, chart.forward(z))), 1e-8)
            << describe(f) << " " << to_string(lift);
      }
    }
}

TEST(Chart, OddFreeness) {
  Sampler s(14);
  for (const auto& [f, parity] : route_cases()) {
    if (parity != Parity::Odd) continue;
    const auto lift = canonical_structure(f, parity).lift;
    for (int i = 0; i < 300; ++i) {
      const Point z = s.point(2.0);
      const Point a = canonical_representative(f, z), b = canonical_representative(f, lift(z));
      EXPECT_GT(distance(a, b), 1e-3);
    }
  }
}

TEST(Locus, Examples) {
  auto locus = [](const Contraction& f, Parity p) { return real_locus(f, canonical_structure(f, p)); };
  EXPECT_EQ(locus(Contraction::iv(0.5), Parity::Even).type, LocusType::Torus);
  EXPECT_EQ(locus(Contraction::iic(0.5, -0.5), Parity::Even).type, LocusType::KleinBottle);
  EXPECT_EQ(locus(Contraction::iv(-0.25), Parity::Odd).type, LocusType::Empty);
  const auto p = locus(Contraction::iic_prime({0.3, 0.4}), Parity::Even);
  EXPECT_EQ(p.type, LocusType::Torus);
  ASSERT_TRUE(p.elliptic_parameter);
  EXPECT_EQ(*p.elliptic_parameter, Complex(0.3, 0.4));
}

TEST(Locus, MatchesJacobianSign) {
  Sampler s(15);
  for (auto cls : hopf::testing::user_classes()) {
    if (cls == WehlerClass::IIcPrime) continue;
    for (int k = 0; k < 10; ++k) {
      const auto f = s.contraction(cls, false);
      const auto fm = f.to_polymap();
      // Determinant of the real Jacobian of f on R^2 at a point near 0.
      const double h = 1e-7, x = 1e-3, y = 1e-3;
      const Point fx = fm({x + h, y}) - fm({x - h, y}), fy = fm({x, y + h}) - fm({x, y - h});
      const double det = fx.z.real() * fy.w.real() - fx.w.real() * fy.z.real();
      const auto want = det > 0 ? LocusType::Torus : LocusType::KleinBottle;
      EXPECT_EQ(real_locus(f, canonical_structure(f, Parity::Even)).type, want) << describe(f);
    }
  }
}

TEST(Quotient, Descriptors) {
  const auto f = Contraction::iv(0.5);
  const auto q = quotient_descriptor(f, canonical_structure(f, Parity::Even));
  EXPECT_EQ(q.space, "S1xS3");
  EXPECT_EQ(q.locus_image, LocusType::Torus);
  EXPECT_TRUE(q.orientation_preserving);
  const auto g = Contraction::iv(-0.25);
  const auto o = quotient_descriptor(g, canonical_structure(g, Parity::Odd));
  EXPECT_TRUE(o.double_cover);
  EXPECT_EQ(o.deck_note, "double, anti-holomorphic deck");
  const auto h = Contraction::iic(0.5, -0.5);
  EXPECT_FALSE(quotient_descriptor(h, canonical_structure(h, Parity::Even)).orientation_preserving);
}
