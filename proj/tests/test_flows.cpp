#include <gtest/gtest.h>

#include <random>

#include "hopf/flows.hpp"

using namespace hopf;

namespace {

std::vector<Contraction> admissible() {
  return {Contraction::iv(0.5),           Contraction::iii(0.5, 2),
          Contraction::iia(0.8, 3),       Contraction::iib(0.7),
          Contraction::iic(0.3, 0.5),     Contraction::iia_tilde(0.5, 2, 0.7),
          Contraction::iib_tilde(0.5, 1.0)};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Roots, IVSquareRoot) {
  EXPECT_TRUE(maps_equal(kth_root(Contraction::iv(0.25), 2), PolyMap::diagonal(0.5, 0.5), 1e-15));
}

TEST(Roots, IIaSquareRoot) {
  // Table value (1/2) 0.25^(-1) = 2 for the off-diagonal coefficient.
  const auto root = kth_root(Contraction::iia(0.25, 2), 2);
  EXPECT_TRUE(maps_equal(root, PolyMap::triangular(0.25, 2.0, 2, 0.5), 1e-14));
  EXPECT_TRUE(maps_equal(compose(root, root), PolyMap::triangular(1.0 / 16, 1.0, 2, 0.25), 1e-14));
}

TEST(Roots, FirstRootIsF) {
  for (const auto& f : admissible()) EXPECT_TRUE(maps_equal(kth_root(f, 1), f.to_polymap(), 0.0));
}

TEST(Roots, ComposeBack) {
  for (const auto& f : admissible())
    for (int k = 2; k <= 6; ++k)
      EXPECT_TRUE(maps_equal(power(kth_root(f, k), k), f.to_polymap(), 1e-12)) << describe(f) << k;
}

TEST(Roots, Rejections) {
  EXPECT_EQ(code_of([] { kth_root(Contraction::iv(-0.5), 2); }), ErrorCode::NotPositiveDiagonal);
  EXPECT_EQ(code_of([] { kth_root(Contraction::iic_prime({0.3, 0.4}), 2); }),
            ErrorCode::NotRealCoefficients);
}

TEST(Flow, Table) {
  EXPECT_TRUE(maps_equal(flow(Contraction::iv(0.5), 2.0), PolyMap::diagonal(0.25, 0.25), 1e-15));
  EXPECT_TRUE(maps_equal(flow(Contraction::iib_tilde(0.5, 1.0), 2.0),
                         PolyMap::triangular(0.25, 1.0, 1, 0.25), 1e-15));
  EXPECT_TRUE(maps_equal(flow(Contraction::iic(0.3, 0.5), 0.5),
                         PolyMap::diagonal(std::sqrt(0.3), std::sqrt(0.5)), 1e-15));
}

TEST(Flow, EndpointsAndIntegers) {
  for (const auto& f : admissible()) {
    EXPECT_TRUE(maps_equal(flow(f, 0.0), PolyMap::identity(), 1e-12));
    EXPECT_TRUE(maps_equal(flow(f, 1.0), f.to_polymap(), 1e-12));
    for (int n = -2; n <= 3; ++n)
      EXPECT_TRUE(maps_equal(flow(f, n), power(f.to_polymap(), n), 1e-9)) << describe(f) << n;
  }
}

TEST(Flow, GroupLaw) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ts(-3, 3);
  const auto pool = admissible();
  for (int i = 0; i < 200; ++i) {
    const auto& f = pool[i % pool.size()];
    const double t = ts(rng), s = ts(rng);
    EXPECT_TRUE(maps_equal(flow(f, t + s), compose(flow(f, t), flow(f, s)), 1e-10));
  }
}

TEST(Flow, PointwiseAgreesWithMap) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const auto& f : admissible())
    for (int i = 0; i < 20; ++i) {
      const Point z{{u(rng), u(rng)}, {u(rng), u(rng)}};
      const double t = 2 * u(rng);
      EXPECT_LE(distance(flow_point(f, t, z), flow(f, t)(z)), 1e-13);
    }
}

TEST(Flow, GeneratorIsDerivative) {
  // Central finite difference oracle.
  const Point z{{0.3, -0.2}, {0.5, 0.4}};
  const double h = 1e-5;
  for (const auto& f : admissible()) {
    const Point fd = Complex(1.0 / (2 * h)) * (flow_point(f, h, z) - flow_point(f, -h, z));
    EXPECT_LE(distance(fd, flow_generator(f, z)), 1e-8) << describe(f);
  }
}

TEST(Flow, CommutesWithCommutant) {
  // Elements of the commutant of a III contraction: (a z + b w^r, d w) with a = d^r.
  const auto f = Contraction::iii(0.5, 2);
  const auto root = kth_root(f, 3);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 50; ++i) {
    const Complex d{u(rng), u(rng)};
    const auto g = PolyMap::triangular(d * d, Complex{u(rng), u(rng)}, 2, d);
    EXPECT_TRUE(maps_equal(compose(g, root), compose(root, g), 1e-10));
    EXPECT_TRUE(maps_equal(compose(PolyMap::conjugation(), root), compose(root, PolyMap::conjugation())));
  }
}

TEST(Square, Examples) {
  EXPECT_TRUE(same_contraction(square_for_negatives(Contraction::iv(-0.5)), Contraction::iv(0.25)));
  EXPECT_TRUE(same_contraction(square_for_negatives(Contraction::iia(-0.5, 2)),
                               Contraction::iia_tilde(0.25, 2, 0.5)));
  EXPECT_TRUE(same_contraction(square_for_negatives(Contraction::iic(0.3, -0.5)),
                               Contraction::iic(0.09, 0.25)));
}

TEST(Square, MatchesComposition) {
  for (const auto& f : {Contraction::iv(-0.5), Contraction::iii(-0.6, 3), Contraction::iia(-0.5, 2),
                        Contraction::iib(-0.7), Contraction::iic(0.5, -0.5), Contraction::iic(-0.4, 0.7),
                        Contraction::iic(-0.25, 0.5)}) {
    const auto g = square_for_negatives(f);
    EXPECT_TRUE(maps_equal(g.to_polymap(), power(f.to_polymap(), 2), 1e-12)) << describe(f);
    EXPECT_TRUE(structural_flags(g).positive_diagonal);
  }
  EXPECT_EQ(code_of([] { square_for_negatives(Contraction::iv(0.5)); }), ErrorCode::InvalidArgument);
}
