#include <gtest/gtest.h>

#include <algorithm>

#include "hklat/cones.hpp"
#include "error_kind.hpp"
#include "support.hpp"

namespace hklat {
namespace {

using testing::kind_of;
using testing::Rng;

TEST(Classify, Examples) {
  const Lattice lat = diagonal_lattice({2, -2});
  const VectorQ h = vec({2, 1});
  auto c = classify(lat, h, vec({1, 1}));
  EXPECT_EQ(c.region, ConeRegion::kBoundary);
  EXPECT_EQ(c.pairing_sign, 1);
  EXPECT_TRUE(c.in_closed_component());
  EXPECT_EQ(classify(lat, h, h).region, ConeRegion::kPositiveInterior);
  EXPECT_EQ(classify(lat, h, vec({0, 1})).region, ConeRegion::kNegative);
  EXPECT_EQ(classify(lat, h, vec({-2, -1})).region, ConeRegion::kOppositeComponent);
  EXPECT_FALSE(classify(lat, h, vec({-1, -1})).in_closed_component());
  EXPECT_EQ(kind_of([&] { classify(lat, vec({0, 1}), h); }), ErrorKind::kNotPositive);
  EXPECT_EQ(kind_of([&] { classify(diagonal_lattice({1, 1}), vec({1, 0}), vec({0, 1})); }), ErrorKind::kSignature);
}

TEST(Classify, PositiveScaleInvariance) {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_isotropic_hyperbolic(rng, static_cast<std::size_t>(testing::uniform(rng, 2, 5)));
    const VectorQ v = testing::random_vector(rng, inst.lattice.rank(), 6);
    const Rational c(testing::uniform(rng, 1, 9), testing::uniform(rng, 1, 9));
    const auto a = classify(inst.lattice, inst.positive, v);
    const auto b = classify(inst.lattice, inst.positive, VectorQ(v * c));
    EXPECT_EQ(a.region, b.region);
    EXPECT_EQ(a.pairing_sign, b.pairing_sign);
  }
}

TEST(SampleBoundary, Examples) {
  const Lattice lat = diagonal_lattice({2, -2});
  EXPECT_EQ(sample_boundary(lat, vec({1, 1}), vec({1, 0})), vec({2, -2}));
  EXPECT_EQ(sample_boundary(lat, vec({1, 1}), vec({2, 1})), vec({2, -2}));
  EXPECT_EQ(kind_of([&] { sample_boundary(lat, vec({1, 0}), vec({2, 1})); }), ErrorKind::kPrecondition);
  EXPECT_EQ(kind_of([&] { sample_boundary(lat, vec({0, 0}), vec({2, 1})); }), ErrorKind::kPrecondition);
  EXPECT_EQ(kind_of([&] { sample_boundary(lat, vec({1, 1}), vec({0, 1})); }), ErrorKind::kPrecondition);
}

TEST(SampleBoundary, ZeroAndNotCollinear) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = testing::random_isotropic_hyperbolic(rng, static_cast<std::size_t>(testing::uniform(rng, 2, 6)));
    const VectorQ beta = testing::random_interior(rng, inst.lattice, inst.positive, 5);
    const VectorQ gamma = sample_boundary(inst.lattice, inst.isotropic, beta);
    EXPECT_EQ(quadratic(inst.lattice, gamma), 0);
    EXPECT_FALSE(collinear(gamma, inst.isotropic));
    // Same component as alpha and beta'.
    EXPECT_GE(bilinear(inst.lattice, gamma, inst.positive).sign(), 0);
  }
}

TEST(SampleStream, Contract) {
  const Lattice lat = diagonal_lattice({2, -2});
  const auto two = sample_boundary_stream(lat, vec({1, 1}), vec({2, 1}), 2, 0);
  ASSERT_EQ(two.size(), 2u);
  for (const auto& g : two) {
    EXPECT_EQ(quadratic(lat, g), 0);
    EXPECT_GT(bilinear(lat, g, vec({2, 1})), 0);
  }
  const auto ten = sample_boundary_stream(lat, vec({1, 1}), vec({2, 1}), 10, 99);
  EXPECT_TRUE(std::any_of(ten.begin(), ten.end(), [](const VectorQ& g) { return !collinear(g, vec({1, 1})); }));
  EXPECT_EQ(ten.front(), vec({1, -1}));
  EXPECT_EQ(kind_of([&] { sample_boundary_stream(lat, vec({1, 1}), vec({2, 1}), 0, 0); }), ErrorKind::kPrecondition);
}

TEST(SampleStream, DeterministicAndPairwiseDistinct) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing::random_isotropic_hyperbolic(rng, static_cast<std::size_t>(testing::uniform(rng, 3, 5)));
    const auto a = sample_boundary_stream(inst.lattice, inst.isotropic, inst.positive, 12, 5);
    const auto b = sample_boundary_stream(inst.lattice, inst.isotropic, inst.positive, 12, 5);
    EXPECT_EQ(a, b);
    BoundarySampler sampler(inst.lattice, inst.isotropic, inst.positive, 5);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(sampler.next(), a[i]);
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(collinear(a[i], a[j]));
    }
  }
}

TEST(BoundaryRay, WorkedInstance) {
  const Lattice lat = diagonal_lattice({2, -2});
  const auto poly = boundary_ray_polynomial(lat, vec({2, 1}), vec({0, 1}));
  EXPECT_EQ(poly[0], 6);
  EXPECT_EQ(poly[1], -16);
  EXPECT_EQ(poly[2], 8);
  const auto roots = boundary_ray(lat, vec({2, 1}), vec({0, 1}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].root, QuadExt(Rational(1, 2)));
  EXPECT_EQ(roots[0].point, (Vector<QuadExt>(2) << QuadExt(1), QuadExt(1)).finished());
  EXPECT_TRUE(roots[0].in_component);
  EXPECT_EQ(roots[1].root, QuadExt(Rational(3, 2)));
  EXPECT_FALSE(roots[1].in_component);
}

TEST(BoundaryRay, RootsVanishExactly) {
  // Here L - H is isotropic, so the quadratic degenerates to a linear one.
  const Lattice lat = diagonal_lattice({2, -2});
  const auto c = boundary_ray_polynomial(lat, vec({2, 1}), vec({1, 0}));
  EXPECT_EQ(c[2], 0);
  const auto roots = boundary_ray(lat, vec({2, 1}), vec({1, 0}));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].root, QuadExt(Rational(3, 2)));
  EXPECT_EQ(quadratic(lat, roots[0].point), QuadExt(0));
}

TEST(BoundaryRay, IrrationalRoots) {
  // q((1 - r), r, r) = 1 - 2r - r^2, roots -1 -+ sqrt 2.
  const Lattice lat = diagonal_lattice({1, -1, -1});
  const VectorQ H = vec({1, 0, 0}), L = vec({0, 1, 1});
  const auto roots = boundary_ray(lat, H, L);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].root, QuadExt(-1, -1, 2));
  EXPECT_EQ(roots[1].root, QuadExt(-1, 1, 2));
  const auto c = boundary_ray_polynomial(lat, H, L);
  for (const auto& r : roots) {
    EXPECT_EQ(QuadExt(c[0]) + QuadExt(c[1]) * r.root + QuadExt(c[2]) * r.root * r.root, QuadExt(0));
    EXPECT_EQ(quadratic(lat, r.point), QuadExt(0));
  }
  // The line crosses the cone of H, so both crossings bound H's component.
  EXPECT_TRUE(roots[0].in_component);
  EXPECT_TRUE(roots[1].in_component);
}

TEST(BoundaryRay, Errors) {
  const Lattice lat = diagonal_lattice({2, -2});
  EXPECT_EQ(kind_of([&] { boundary_ray(lat, vec({0, 1}), vec({1, 0})); }), ErrorKind::kNotPositive);
  EXPECT_EQ(kind_of([&] { boundary_ray(lat, vec({2, 1}), vec({4, 2})); }), ErrorKind::kPrecondition);
}

}  // namespace
}  // namespace hklat
