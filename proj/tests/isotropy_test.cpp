#include <gtest/gtest.h>

#include <algorithm>

#include "hklat/isotropy.hpp"
#include "hklat/number_theory.hpp"
#include "support.hpp"

namespace hklat {
namespace {

using testing::Rng;

int hilbert(long a, long b, long p) {
  return hilbert_symbol(Rational(a), Rational(b), p == 0 ? LocalPlace::infinity() : LocalPlace::prime(p));
}

TEST(Hilbert, Examples) {
  for (long p : {0, 2, 3, 5, 7, 11}) {
    EXPECT_EQ(hilbert(1, 13, p), 1);
    EXPECT_EQ(hilbert(2, -2, p), 1);
  }
  EXPECT_EQ(hilbert(2, 3, 3), -1);
  EXPECT_EQ(testing::hilbert_by_search(2, 3, 3), -1);
  EXPECT_EQ(hilbert(-1, -1, 0), -1);
  EXPECT_EQ(hilbert(-1, -1, 2), -1);
  EXPECT_THROW(hilbert_symbol(Rational(0), Rational(1), LocalPlace::infinity()), Error);
  EXPECT_THROW(LocalPlace::prime(9), Error);
}

TEST(Hilbert, AgreesWithLocalSearch) {
  std::vector<long> squarefree;
  for (long a = -30; a <= 30; ++a) {
    if (a != 0 && split_square(Integer(a)).first == 1) squarefree.push_back(a);
  }
  Rng rng(3);
  for (long p : {2, 3, 5}) {
    for (int trial = 0; trial < 40; ++trial) {
      const long a = squarefree[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(squarefree.size()) - 1))];
      const long b = squarefree[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(squarefree.size()) - 1))];
      EXPECT_EQ(hilbert(a, b, p), testing::hilbert_by_search(a, b, p)) << "(" << a << "," << b << ")_" << p;
    }
  }
}

TEST(Hilbert, SquareClassInvariance) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a(testing::uniform(rng, 1, 200) * (testing::uniform(rng, 0, 1) ? 1 : -1), testing::uniform(rng, 1, 50));
    const Rational b(testing::uniform(rng, 1, 200) * (testing::uniform(rng, 0, 1) ? 1 : -1), testing::uniform(rng, 1, 50));
    const Rational s(testing::uniform(rng, 1, 20), testing::uniform(rng, 1, 20));
    for (long p : {2, 3, 5, 7}) {
      const auto place = LocalPlace::prime(p);
      EXPECT_EQ(hilbert_symbol(a, b, place), hilbert_symbol(a * s * s, b, place));
      EXPECT_EQ(hilbert_symbol(a, b, place), hilbert_symbol(b, a, place));
      EXPECT_EQ(hilbert_symbol(a, -a, place), 1);
    }
  }
}

TEST(Isotropy, Examples) {
  EXPECT_TRUE(is_isotropic(diagonal_lattice({2, -2})));
  EXPECT_FALSE(is_isotropic(diagonal_lattice({1, -2})));
  EXPECT_TRUE(is_isotropic(diagonal_lattice({1, 1, 1, 1, -7})));
  EXPECT_FALSE(is_isotropic(diagonal_lattice({1, -3, -3})));
  EXPECT_TRUE(is_isotropic(Lattice(hyperbolic_plane())));
  EXPECT_THROW(is_isotropic_diagonal(std::vector<Rational>{1, 0}), Error);
}

TEST(FindIsotropic, Examples) {
  auto w = find_isotropic_vector(diagonal_lattice({2, -2})).witness;
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vector, vec({1, 1}));
  EXPECT_TRUE(w->reduced);

  w = find_isotropic_vector(diagonal_lattice({1, 1, 1, 1, -7})).witness;
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vector, vec({2, 1, 1, 1, 1}));

  const auto none = find_isotropic_vector(diagonal_lattice({1, -2}));
  EXPECT_FALSE(none.witness);
  EXPECT_FALSE(none.bound_used.empty());
}

// Independent check of the canonical order on diag(1,1,1,1,-7): all zeros of
// max-norm <= 2 with nonnegative coordinates, sorted colexicographically by
// the digit order 0, 1, 2 (signs are never needed first).
TEST(FindIsotropic, SmallestWitnessByEnumeration) {
  std::vector<std::vector<long>> zeros;
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long c = 0; c <= 2; ++c)
        for (long d = 0; d <= 2; ++d)
          for (long e = 1; e <= 2; ++e)
            if (a * a + b * b + c * c + d * d == 7 * e * e) zeros.push_back({a, b, c, d, e});
  ASSERT_FALSE(zeros.empty());
  const auto colex = [](const std::vector<long>& x, const std::vector<long>& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  };
  std::sort(zeros.begin(), zeros.end(), colex);
  EXPECT_EQ(zeros.front(), (std::vector<long>{2, 1, 1, 1, 1}));
}

TEST(FindIsotropic, WitnessesArePrimitiveZeros) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rank = static_cast<std::size_t>(testing::uniform(rng, 2, 6));
    const auto inst = testing::random_isotropic_hyperbolic(rng, rank, 5, 5);
    const auto search = find_isotropic_vector(inst.lattice);
    ASSERT_TRUE(search.witness);
    const VectorQ& v = search.witness->vector;
    EXPECT_EQ(quadratic(inst.lattice, v), 0);
    EXPECT_FALSE(is_zero_vector(v));
    EXPECT_TRUE(is_integral(v));
    EXPECT_EQ(primitive(v), v);  // gcd of coordinates is 1
  }
}

TEST(FindIsotropic, RationalGram) {
  MatrixQ g(2, 2);
  g << Rational(1, 2), Rational(0), Rational(0), Rational(-9, 2);
  const auto search = find_isotropic_vector(Lattice(g));
  ASSERT_TRUE(search.witness);
  EXPECT_EQ(search.witness->vector, vec({3, 1}));
}

}  // namespace
}  // namespace hklat
