#include <gtest/gtest.h>

#include <random>

#include "hopf/polymap.hpp"

using namespace hopf;

namespace {

constexpr Complex I{0.0, 1.0};

void expect_point(Point got, Point want, double tol = 1e-14) {
  EXPECT_NEAR(std::abs(got.z - want.z), 0.0, tol) << got.z << " vs " << want.z;
  EXPECT_NEAR(std::abs(got.w - want.w), 0.0, tol) << got.w << " vs " << want.w;
}

Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng)};
}

PolyMap random_map(std::mt19937_64& rng, bool allow_anti = true) {
  std::uniform_int_distribution<int> pick(0, 2);
  const bool anti = allow_anti && pick(rng) == 0;
  switch (pick(rng)) {
    case 0: {
      Eigen::Matrix2cd m;
      m << random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng);
      return PolyMap::linear(m, anti);
    }
    case 1:
      return PolyMap::triangular(random_complex(rng), random_complex(rng), 2, random_complex(rng),
                                 anti);
    default:
      return PolyMap::diagonal(random_complex(rng), random_complex(rng), anti);
  }
}

}  // namespace

TEST(PolyMap, ConjugationEvaluates) {
  expect_point(PolyMap::conjugation()({{1, 2}, 3}), {{1, -2}, 3});
}

TEST(PolyMap, SwapConjugationEvaluates) {
  expect_point(PolyMap::swap_conjugation()({{1, 1}, 5}), {5, {1, -1}});
}

TEST(PolyMap, QuaternionicEvaluates) {
  // J(z, w) = (-conj w, conj z) at (1, i).
  expect_point(PolyMap::quaternionic()({1, I}), {I, 1});
}

TEST(PolyMap, ZeroInputRejected) {
  EXPECT_THROW(PolyMap::identity()({0, 0}), Error);
}

TEST(PolyMap, AutomorphismZeroImageRejected) {
  auto m = PolyMap::diagonal(1.0, 0.0);
  m.mark_automorphism();
  try {
    m({0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
}

TEST(PolyMap, ConjugationIsInvolution) {
  EXPECT_TRUE(maps_equal(compose(PolyMap::conjugation(), PolyMap::conjugation()), PolyMap::identity()));
}

TEST(PolyMap, OddCanonicalSquareIV) {
  const auto root = PolyMap::diagonal(0.5, 0.5);
  const auto phi = compose(PolyMap::conjugation(), root);
  EXPECT_TRUE(maps_equal(compose(phi, phi), PolyMap::diagonal(0.25, 0.25), 1e-15));
}

TEST(PolyMap, QuaternionicOddSquare) {
  const auto root = PolyMap::diagonal(0.5 * I, 0.5 * I);
  const auto phi = compose(PolyMap::quaternionic(), root);
  // Hand expansion: phi(z, w) = (i conj(w)/2, -i conj(z)/2).
  const PolyMap expected(true, Polynomial::monomial({0, 1}, 0.5 * I),
                         Polynomial::monomial({1, 0}, -0.5 * I));
  EXPECT_TRUE(maps_equal(phi, expected, 1e-15));
  EXPECT_TRUE(maps_equal(compose(phi, phi), PolyMap::diagonal(-0.25, -0.25), 1e-15));
}

TEST(PolyMap, InvertDiagonal) {
  EXPECT_TRUE(maps_equal(invert(PolyMap::diagonal(2, 4)), PolyMap::diagonal(0.5, 0.25), 1e-15));
}

TEST(PolyMap, InvertTriangular) {
  const auto m = PolyMap::triangular(I, 0.5, 2, 1.0);
  // Inverse solved by hand: z = -i (z' - 0.5 w'^2).
  const auto expected = PolyMap::triangular(-I, 0.5 * I, 2, 1.0);
  EXPECT_TRUE(maps_equal(invert(m), expected, 1e-15));
}

TEST(PolyMap, InvertLinearMatchesMatrixInverse) {
  Eigen::Matrix2cd l;
  l << 1.0, I, 1.0, -I;
  Eigen::Matrix2cd want;
  want << -I, -I, -1.0, 1.0;
  want /= -2.0 * I;
  EXPECT_TRUE(maps_equal(invert(PolyMap::linear(l)), PolyMap::linear(want), 1e-15));
}

TEST(PolyMap, InvertRejectsOtherShapes) {
  const PolyMap m(false, Polynomial::monomial({1, 0}, 1.0) + Polynomial::monomial({2, 0}, 1.0),
                  Polynomial::monomial({0, 1}, 1.0));
  try {
    invert(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvertibleShape);
  }
}

TEST(PolyMap, InvertIsTwoSidedOnRandomShapes) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_map(rng);
    const auto inv = invert(m);
    EXPECT_TRUE(maps_equal(compose(m, inv), PolyMap::identity(), 1e-8)) << to_string(m);
    EXPECT_TRUE(maps_equal(compose(inv, m), PolyMap::identity(), 1e-8)) << to_string(m);
  }
}

TEST(PolyMap, MapsEqualSupportDiffers) {
  EXPECT_FALSE(maps_equal(PolyMap::conjugation(), PolyMap::swap_conjugation()));
  EXPECT_TRUE(maps_equal(PolyMap::conjugation(), PolyMap::conjugation()));
}

TEST(PolyMap, EvaluationHomomorphism) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto g = random_map(rng);
    const auto h = random_map(rng);
    const Point z{random_complex(rng), random_complex(rng)};
    const Point direct = compose(g, h)(z);
    const Point nested = g(h(z));
    EXPECT_LE(distance(direct, nested), 1e-10 * std::max(1.0, norm(nested)));
  }
}

TEST(PolyMap, CompositionAssociative) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_map(rng), b = random_map(rng), c = random_map(rng);
    EXPECT_TRUE(maps_equal(compose(a, compose(b, c)), compose(compose(a, b), c), 1e-12));
  }
}

TEST(PolyMap, RealCoefficientsCommuteWithConjugation) {
  const auto f = PolyMap::triangular(0.25, 0.7, 2, 0.5);
  const auto c = PolyMap::conjugation();
  EXPECT_TRUE(maps_equal(compose(c, compose(f, c)), f, 1e-15));
}

TEST(PolyMap, DegreeOverflow) {
  const auto f = PolyMap::triangular(1.0, 1.0, 5, 1.0);
  const PolyMap sq(false, Polynomial::monomial({4, 0}, 1.0), Polynomial::monomial({0, 1}, 1.0));
  try {
    compose(sq, f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeOverflow);
  }
}

TEST(PolyMap, PowerMatchesRepeatedComposition) {
  const auto f = PolyMap::triangular(0.25, 1.0, 2, 0.5);
  EXPECT_TRUE(maps_equal(power(f, 3), compose(f, compose(f, f)), 1e-15));
  EXPECT_TRUE(maps_equal(compose(power(f, -2), power(f, 2)), PolyMap::identity(), 1e-10));
}
