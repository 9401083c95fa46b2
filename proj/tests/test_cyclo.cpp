#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "gradings/cyclo.hpp"
#include "gradings/error.hpp"

using namespace gradings;

namespace {

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

CycNum random_cyc(std::mt19937& rng, int conductor) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(conductor)));
  for (auto& x : c) x = Rational(num(rng)) / den(rng);
  return CycNum::from_coeffs(conductor, c);
}

Vec random_vec(std::mt19937& rng, std::size_t d, int conductor, double density = 0.5) {
  std::bernoulli_distribution nonzero(density);
  std::uniform_int_distribution<int> pick(-2, 2);
  std::uniform_int_distribution<int> power(0, conductor - 1);
  Vec v(d);
  for (auto& e : v) {
    if (nonzero(rng)) e = CycNum(pick(rng)) + CycNum::root_of_unity(conductor, power(rng));
  }
  return v;
}

}  // namespace

TEST(Zeta, SmallConductors) {
  EXPECT_EQ(zeta(1), CycNum(1));
  EXPECT_EQ(zeta(2), CycNum(-1));
  EXPECT_EQ(zeta(4).pow(2), CycNum(-1));
  EXPECT_THROW(zeta(0), GradingError);
}

TEST(Zeta, RootOfUnityLaw) {
  for (int n = 1; n <= 24; ++n) {
    const CycNum z = zeta(n);
    EXPECT_TRUE(z.pow(n).is_one()) << "n=" << n;
    for (int k = 1; k < n; ++k) EXPECT_FALSE(z.pow(k).is_one()) << "n=" << n << " k=" << k;
  }
}

TEST(CycNum, Examples) {
  // Phi_3 = x^2 + x + 1 forces x^2 = -x - 1.
  EXPECT_EQ(zeta(3) + zeta(3).pow(2), CycNum(-1));
  for (int n : {1, 2, 3, 5, 8, 12}) EXPECT_EQ(cyc_inv(zeta(n)), zeta(n).pow(n - 1));
  EXPECT_EQ(lift(CycNum(Rational(-1), 2), 4), zeta(4).pow(2));
  EXPECT_THROW(zeta(4).lift(6), GradingError);
  EXPECT_THROW(CycNum(0).inv(), GradingError);
}

TEST(CycNum, MixedConductorsLiftToLcm) {
  const CycNum s = zeta(4) + zeta(3);
  EXPECT_EQ(s.conductor(), 12);
  EXPECT_EQ(s - zeta(3), zeta(4));
  // zeta(6) = -zeta(3)^2.
  EXPECT_EQ(zeta(6), -zeta(3).pow(2));
  EXPECT_EQ(zeta(12).pow(3), zeta(4));
}

TEST(CyclotomicPoly, Examples) {
  EXPECT_EQ(cyclotomic_poly(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(6), (std::vector<std::int64_t>{1, -1, 1}));
}

TEST(CyclotomicPoly, ProductOverDivisorsIsXnMinusOne) {
  for (int n = 1; n <= 40; ++n) {
    std::vector<std::int64_t> prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = poly_mul(prod, cyclotomic_poly(d));
    std::vector<std::int64_t> expected(static_cast<std::size_t>(n) + 1, 0);
    expected[0] = -1;
    expected.back() = 1;
    EXPECT_EQ(prod, expected) << "n=" << n;
    int totient = 0;
    for (int k = 1; k <= n; ++k) totient += std::gcd(k, n) == 1;
    EXPECT_EQ(static_cast<int>(cyclotomic_poly(n).size()) - 1, totient);
  }
}

TEST(CycNum, FieldLaws) {
  std::mt19937 rng(17);
  for (int n : {1, 2, 3, 4, 6, 8, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      const CycNum a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inv()).is_one()) << "n=" << n << " a=" << a;
    }
  }
}

TEST(Rref, Examples) {
  const RrefResult id = rref(Mat::identity(4));
  EXPECT_EQ(id.reduced, Mat::identity(4));
  EXPECT_EQ(id.rank, 4u);

  const RrefResult z = rref(Mat(3, 3));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.reduced.is_zero());

  const Mat m{{CycNum(1), zeta(4)}, {zeta(4), CycNum(-1)}};
  const RrefResult r = rref(m);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.reduced, (Mat{{CycNum(1), zeta(4)}, {CycNum(0), CycNum(0)}}));
}

TEST(Rref, Idempotent) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 2 + trial % 7;
    std::vector<CycNum> e;
    for (std::size_t i = 0; i < rows; ++i) {
      const Vec v = random_vec(rng, cols, 8);
      e.insert(e.end(), v.begin(), v.end());
    }
    const RrefResult once = rref(Mat(rows, cols, e));
    const RrefResult twice = rref(once.reduced);
    EXPECT_EQ(once.reduced, twice.reduced);
    EXPECT_EQ(once.rank, twice.rank);
  }
}

TEST(Mat, InverseAndKron) {
  const Mat a{{CycNum(1), zeta(3)}, {CycNum(0), CycNum(2)}};
  EXPECT_EQ(a * a.inverse(), Mat::identity(2));
  EXPECT_THROW((Mat{{CycNum(1), CycNum(2)}, {CycNum(2), CycNum(4)}}).inverse(), GradingError);
  const Mat b{{CycNum(0), CycNum(1)}, {CycNum(1), CycNum(0)}};
  const Mat k = kron(a, b);
  // Block (0,1) of a (x) b is a_01 * b.
  EXPECT_EQ(k(0, 3), zeta(3));
  EXPECT_EQ(k(1, 2), zeta(3));
  EXPECT_EQ(k(0, 2), CycNum(0));
  EXPECT_EQ(k(3, 2), CycNum(2));
}

TEST(Subspace, Examples) {
  EXPECT_EQ(span(4, std::vector<Vec>{}).dim(), 0u);
  const Vec e1{CycNum(1), CycNum(0), CycNum(0)}, e2{CycNum(0), CycNum(1), CycNum(0)},
      e3{CycNum(0), CycNum(0), CycNum(1)};
  const Subspace v = span(3, std::vector<Vec>{e1, e2});
  EXPECT_EQ(subspace_sum(v, Subspace(3)), v);
  const Subspace w = span(3, std::vector<Vec>{e2, e3});
  EXPECT_EQ(subspace_intersect(v, w), span(3, std::vector<Vec>{e2}));
  EXPECT_TRUE(subspace_contains(v, e1));
  EXPECT_FALSE(subspace_contains(v, e3));
  EXPECT_THROW(subspace_sum(v, Subspace(4)), GradingError);
}

TEST(Subspace, DimensionFormula) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial) % 15;
    const int conductor = (trial % 3 == 0) ? 1 : (trial % 3 == 1 ? 4 : 3);
    std::vector<Vec> va, vb;
    // Share some vectors so intersections are nontrivial.
    const Vec shared = random_vec(rng, d, conductor, 0.8);
    va.push_back(shared);
    vb.push_back(shared);
    for (std::size_t k = 0; k < d / 3; ++k) va.push_back(random_vec(rng, d, conductor, 0.3));
    for (std::size_t k = 0; k < d / 2; ++k) vb.push_back(random_vec(rng, d, conductor, 0.3));
    const Subspace a = span(d, va), b = span(d, vb);
    EXPECT_EQ(a.dim() + b.dim(), subspace_sum(a, b).dim() + subspace_intersect(a, b).dim()) << "d=" << d;
    const Subspace both = subspace_intersect(a, b);
    for (const auto& v : both.basis()) {
      EXPECT_TRUE(a.contains(v));
      EXPECT_TRUE(b.contains(v));
    }
  }
}

TEST(Subspace, CanonicalForm) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 6;
    std::vector<Vec> basis;
    for (int k = 0; k < 3; ++k) basis.push_back(random_vec(rng, d, 6, 0.6));
    // Another spanning family: random combinations plus a redundant vector.
    std::vector<Vec> other;
    for (int k = 0; k < 4; ++k) {
      Vec v(d);
      for (const auto& b : basis) {
        const CycNum c = CycNum(coef(rng)) + zeta(6).pow(coef(rng));
        for (std::size_t i = 0; i < d; ++i) v[i] += c * b[i];
      }
      other.push_back(v);
    }
    const Subspace a = span(d, basis), b = span(d, other);
    if (b.dim() == a.dim()) EXPECT_EQ(a, b);
    else EXPECT_LT(b.dim(), a.dim());
  }
}

TEST(SolveInSpan, CoordinatesOrNothing) {
  const Vec e1{CycNum(1), CycNum(0)}, e2{zeta(3), CycNum(1)};
  const Vec target{CycNum(2) + zeta(3), CycNum(1)};
  const auto c = solve_in_span(std::vector<Vec>{e1, e2}, target);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], CycNum(2));
  EXPECT_EQ((*c)[1], CycNum(1));
  EXPECT_FALSE(solve_in_span(std::vector<Vec>{e1}, target).has_value());
}

TEST(Descend, SmallestContainingField) {
  EXPECT_EQ(descend(CycNum::zeta(4).pow(2)).conductor(), 1);
  EXPECT_EQ(descend(CycNum::zeta(4).pow(2)), CycNum(-1));
  const CycNum z6 = descend(CycNum::zeta(6));
  EXPECT_EQ(z6.conductor(), 3);
  EXPECT_EQ(z6, -CycNum::zeta(3).pow(2));
  EXPECT_EQ(descend(CycNum::zeta(12).pow(3)).conductor(), 4);
  const CycNum sqrt2 = CycNum::zeta(8) + CycNum::zeta(8).inv();
  EXPECT_EQ(descend(sqrt2).conductor(), 8);
  EXPECT_EQ(descend(CycNum(Rational(3, 5)).lift(10)).conductor(), 1);
  EXPECT_EQ(descend(CycNum::zeta(5).lift(10)).conductor(), 5);
  for (int n : {6, 8, 10, 12}) {
    for (long k = 0; k < n; ++k) {
      const CycNum x = CycNum::root_of_unity(n, k) + CycNum(2);
      const CycNum y = descend(x);
      EXPECT_EQ(y, x);
      EXPECT_EQ(n % y.conductor(), 0);
      const int order = n / static_cast<int>(std::gcd(static_cast<long>(n), k));
      const int expected = order % 4 == 2 ? order / 2 : order;
      EXPECT_EQ(y.conductor(), expected) << n << " " << k;
    }
  }
}
