#include <gtest/gtest.h>

#include "flowcat/field_matrix.hpp"
#include "flowcat/normal_forms.hpp"
#include "support/random_terms.hpp"

namespace flowcat {
namespace {

const Field Q = Field::rationals();

PolyMatrix M(std::initializer_list<std::initializer_list<const char*>> rows) { return PolyMatrix::from_strings(Q, rows); }

bool is_diagonal(const PolyMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && !d(i, j).is_zero()) return false;
  return true;
}

// Every certificate a Smith decomposition promises.
void ExpectSmithCertified(const PolyMatrix& m, const SmithDecomposition& sd) {
  const Field f = m.field();
  EXPECT_EQ(sd.V * sd.D * sd.U, m);
  EXPECT_EQ(sd.V * sd.V_inv, PolyMatrix::identity(f, m.rows()));
  EXPECT_EQ(sd.V_inv * sd.V, PolyMatrix::identity(f, m.rows()));
  EXPECT_EQ(sd.U * sd.U_inv, PolyMatrix::identity(f, m.cols()));
  EXPECT_EQ(sd.U_inv * sd.U, PolyMatrix::identity(f, m.cols()));
  EXPECT_TRUE(is_diagonal(sd.D));
  for (std::size_t i = 0; i < sd.rank; ++i) {
    EXPECT_FALSE(sd.diagonal(i).is_zero());
    EXPECT_EQ(normalize_associate(sd.diagonal(i)), sd.diagonal(i));
    if (i + 1 < sd.rank) EXPECT_TRUE(divides(sd.diagonal(i), sd.diagonal(i + 1)));
  }
  for (std::size_t i = sd.rank; i < std::min(m.rows(), m.cols()); ++i) EXPECT_TRUE(sd.diagonal(i).is_zero());
}

GTEST_TEST(PolyMatrixTest, PropStructure) {
  EXPECT_EQ(M({{"s"}}) * M({{"s^-1"}}), M({{"1"}}));
  EXPECT_EQ(direct_sum(M({{"s"}}), M({{"s+1"}})), M({{"s", "0"}, {"0", "s+1"}}));
  EXPECT_EQ(hstack(M({{"s+1"}}), M({{"-s-1"}})), M({{"s+1", "-s-1"}}));
  EXPECT_EQ(vstack(M({{"1"}}), M({{"0"}})), M({{"1"}, {"0"}}));
  const std::size_t swap[] = {1, 0};
  EXPECT_EQ(PolyMatrix::permutation(Q, swap), M({{"0", "1"}, {"1", "0"}}));
  EXPECT_THROW(M({{"1", "2"}}) * M({{"1", "2"}}), std::invalid_argument);
}

GTEST_TEST(PolyMatrixTest, EmptyShapesAreDistinct) {
  PolyMatrix a(Q, 0, 2), b(Q, 2, 0);
  EXPECT_FALSE(a == b);
  EXPECT_EQ((b * a).rows(), 2u);
  EXPECT_TRUE((b * a).is_zero());
  EXPECT_EQ((a * b).rows(), 0u);
  EXPECT_EQ(direct_sum(a, b).rows(), 2u);
  EXPECT_EQ(direct_sum(a, b).cols(), 2u);
}

GTEST_TEST(SmithTest, Examples) {
  SmithDecomposition id = smith_normal_form(PolyMatrix::identity(Q, 3));
  EXPECT_EQ(id.D, PolyMatrix::identity(Q, 3));

  // s is a unit, so it contributes nothing to the invariant factors.
  PolyMatrix m = M({{"s", "0"}, {"0", "s+1"}});
  SmithDecomposition sd = smith_normal_form(m);
  ExpectSmithCertified(m, sd);
  EXPECT_EQ(sd.D, M({{"1", "0"}, {"0", "s + 1"}}));

  PolyMatrix coprime = M({{"s+1", "0"}, {"0", "s+2"}});
  SmithDecomposition sc = smith_normal_form(coprime);
  ExpectSmithCertified(coprime, sc);
  EXPECT_EQ(sc.D, M({{"1", "0"}, {"0", "s^2 + 3*s + 2"}}));

  PolyMatrix row = M({{"s+1", "-s-1"}});
  SmithDecomposition sr = smith_normal_form(row);
  ExpectSmithCertified(row, sr);
  EXPECT_EQ(sr.D, M({{"s+1", "0"}}));
  EXPECT_EQ(sr.rank, 1u);

  for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {2, 0}}) {
    PolyMatrix e(Q, r, c);
    SmithDecomposition se = smith_normal_form(e);
    ExpectSmithCertified(e, se);
    EXPECT_EQ(se.rank, 0u);
  }
}

GTEST_TEST(SmithTest, RandomCertification) {
  testing::Rng rng(21);
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t r = 1 + iter % 5, c = 1 + (iter / 5) % 5;
    PolyMatrix m = testing::random_matrix(rng, iter % 3 ? Q : Field::prime(3), r, c, 4);
    ExpectSmithCertified(m, smith_normal_form(m));
  }
}

GTEST_TEST(EpiSplitMonoTest, Examples) {
  EpiSplitMono a = epi_splitmono_factor(M({{"1"}, {"0"}}));
  EXPECT_EQ(a.split_mono * a.epi, M({{"1"}, {"0"}}));
  EXPECT_EQ(a.epi.rows(), 1u);
  EXPECT_TRUE(is_epi(a.epi));
  EXPECT_TRUE(is_split_mono(a.split_mono));

  PolyMatrix inv = M({{"1", "s"}, {"0", "1"}});
  EpiSplitMono b = epi_splitmono_factor(inv);
  EXPECT_EQ(b.split_mono * b.epi, inv);
  EXPECT_TRUE(is_invertible(b.split_mono));

  PolyMatrix col = M({{"s+1"}, {"s+1"}});
  EpiSplitMono c = epi_splitmono_factor(col);
  EXPECT_EQ(c.split_mono * c.epi, col);
  EXPECT_EQ(hermite_normal_form(c.epi).H, M({{"s+1"}}));
  EXPECT_TRUE(is_split_mono(c.split_mono));
  std::optional<PolyMatrix> left = left_inverse(c.split_mono);
  ASSERT_TRUE(left.has_value());
  EXPECT_EQ(*left * c.split_mono, PolyMatrix::identity(Q, 1));
}

GTEST_TEST(EpiSplitMonoTest, RandomFactorizations) {
  testing::Rng rng(22);
  for (int iter = 0; iter < 60; ++iter) {
    PolyMatrix m = testing::random_matrix(rng, Q, 1 + iter % 4, 1 + (iter / 4) % 4, 3, 0.3);
    if (iter % 5 == 0 && m.rows() > 1) m = vstack(m, m.row_range(0, 1));  // force rank deficiency
    EpiSplitMono f = epi_splitmono_factor(m);
    EXPECT_EQ(f.split_mono * f.epi, m);
    EXPECT_TRUE(is_epi(f.epi));
    EXPECT_TRUE(is_split_mono(f.split_mono));
    EXPECT_EQ(f.epi.rows(), rank(m));
    // A second factorization of a left-equivalent matrix yields the same epi row module.
    PolyMatrix w = testing::random_unimodular(rng, Q, m.rows());
    EpiSplitMono g = epi_splitmono_factor(w * m);
    EXPECT_EQ(hermite_normal_form(f.epi).H, hermite_normal_form(g.epi).H);
  }
}

GTEST_TEST(KernelTest, Examples) {
  EXPECT_EQ(kernel_basis(M({{"s+1", "-s-1"}})), M({{"1"}, {"1"}}));
  EXPECT_EQ(kernel_basis(PolyMatrix::identity(Q, 2)).cols(), 0u);

  PolyMatrix m = M({{"s", "s^2"}});
  PolyMatrix k = kernel_basis(m);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((m * k).is_zero());
  // Completeness: [s; -1] factors through the basis.
  EXPECT_TRUE(solve_right(k, M({{"s"}, {"-1"}})).has_value());
  EXPECT_TRUE(solve_right(M({{"s"}, {"-1"}}), k).has_value());
}

GTEST_TEST(CokernelTest, Examples) {
  EXPECT_EQ(cokernel_free(PolyMatrix::identity(Q, 2)).rows(), 0u);
  EXPECT_EQ(cokernel_free(M({{"s+1"}})).rows(), 0u);
  PolyMatrix q = cokernel_free(M({{"1"}, {"1"}}));
  ASSERT_EQ(q.rows(), 1u);
  EXPECT_TRUE((q * M({{"1"}, {"1"}})).is_zero());
  EXPECT_TRUE(same_row_module(q, M({{"1", "-1"}})));
}

GTEST_TEST(KernelTest, RandomExactnessAndUniversality) {
  testing::Rng rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    PolyMatrix m = testing::random_matrix(rng, Q, 1 + iter % 3, 1 + (iter / 3) % 4, 2, 0.3);
    PolyMatrix k = kernel_basis(m);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(k.cols(), m.cols() - rank(m));
    EXPECT_TRUE(is_split_mono(k));
    // Any kernel element factors through k.
    if (k.cols() > 0) {
      PolyMatrix y = testing::random_matrix(rng, Q, k.cols(), 1, 2);
      EXPECT_TRUE(solve_right(k, k * y).has_value());
    }

    PolyMatrix q = cokernel_free(m);
    EXPECT_TRUE((q * m).is_zero());
    EXPECT_TRUE(is_epi(q));
    EXPECT_EQ(q.rows(), m.rows() - rank(m));
    if (q.rows() > 0) {
      PolyMatrix x = testing::random_matrix(rng, Q, 1, q.rows(), 2);
      std::optional<PolyMatrix> f = solve_left(q, x * q);
      ASSERT_TRUE(f.has_value());
      EXPECT_EQ(*f, x);  // unique, since q is epi
    }
  }
}

GTEST_TEST(SolveTest, Examples) {
  std::optional<PolyMatrix> x = solve_left(M({{"s+1"}}), M({{"s^2-1"}}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, M({{"s-1"}}));
  EXPECT_FALSE(solve_left(M({{"s+1"}}), M({{"1"}})).has_value());
  PolyMatrix n = M({{"s", "3"}, {"1", "s^-2"}});
  EXPECT_EQ(*solve_left(PolyMatrix::identity(Q, 2), n), n);
  EXPECT_THROW(solve_left(M({{"1", "2"}}), M({{"1"}})), std::invalid_argument);
  EXPECT_THROW(solve_right(M({{"1", "2"}}), M({{"1"}, {"2"}})), std::invalid_argument);
}

GTEST_TEST(SolveTest, RandomRoundTrips) {
  testing::Rng rng(24);
  for (int iter = 0; iter < 60; ++iter) {
    PolyMatrix m = testing::random_matrix(rng, Q, 2, 3, 2, 0.3);
    PolyMatrix x = testing::random_matrix(rng, Q, 2, 2, 2, 0.3);
    std::optional<PolyMatrix> got = solve_left(m, x * m);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got * m, x * m);
    PolyMatrix y = testing::random_matrix(rng, Q, 3, 1, 2, 0.3);
    std::optional<PolyMatrix> right = solve_right(m, m * y);
    ASSERT_TRUE(right.has_value());
    EXPECT_EQ(m * *right, m * y);
  }
}

GTEST_TEST(HermiteTest, Examples) {
  EXPECT_EQ(hermite_normal_form(M({{"s+1", "-s-1"}})).H, M({{"s+1", "-s-1"}}));
  EXPECT_EQ(hermite_normal_form(M({{"-2*s-2", "2*s+2"}})).H, M({{"s+1", "-s-1"}}));
  EXPECT_EQ(hermite_normal_form(PolyMatrix::identity(Q, 2)).H, PolyMatrix::identity(Q, 2));
  EXPECT_EQ(hermite_normal_form(M({{"0", "0"}})).H.rows(), 0u);
  HermiteForm h = hermite_normal_form(M({{"s", "1"}, {"s^2", "s"}, {"1", "s+1"}}));
  EXPECT_EQ(h.rank, 2u);
  EXPECT_EQ(h.T * h.T_inv, PolyMatrix::identity(Q, 3));
}

GTEST_TEST(HermiteTest, LeftEquivalenceInvariance) {
  testing::Rng rng(25);
  for (int iter = 0; iter < 80; ++iter) {
    const Field f = iter % 2 ? Q : Field::prime(5);
    PolyMatrix m = testing::random_matrix(rng, f, 1 + iter % 4, 1 + (iter / 4) % 4, 3, 0.3);
    HermiteForm h = hermite_normal_form(m);
    EXPECT_EQ(h.T * m, vstack(h.H, PolyMatrix(f, m.rows() - h.rank, m.cols())));
    EXPECT_EQ(h.T * h.T_inv, PolyMatrix::identity(f, m.rows()));
    PolyMatrix w = testing::random_unimodular(rng, f, m.rows());
    EXPECT_EQ(hermite_normal_form(w * m).H, h.H);
    EXPECT_TRUE(same_row_module(m, w * m));
  }
}

GTEST_TEST(EpiMonoTest, Predicates) {
  EXPECT_TRUE(is_epi(M({{"s+1"}})));
  EXPECT_FALSE(is_split_mono(M({{"s+1"}})));
  EXPECT_TRUE(is_epi(PolyMatrix::identity(Q, 2)));
  EXPECT_TRUE(is_split_mono(PolyMatrix::identity(Q, 2)));
  EXPECT_FALSE(is_epi(M({{"1"}, {"0"}})));
  EXPECT_TRUE(is_split_mono(M({{"1"}, {"0"}})));
  EXPECT_EQ(*left_inverse(M({{"1"}, {"0"}})) * M({{"1"}, {"0"}}), PolyMatrix::identity(Q, 1));
  EXPECT_TRUE(is_invertible(M({{"s"}})));
  EXPECT_FALSE(is_invertible(M({{"s+1"}})));
}

GTEST_TEST(EpiMonoTest, SplitMonosArePushoutStable) {
  testing::Rng rng(26);
  for (int iter = 0; iter < 40; ++iter) {
    // m: a -> b split mono (b x a), arbitrary x: a -> c (c x a).
    const std::size_t a = 1 + iter % 2, b = a + iter % 2, c = 1 + (iter / 2) % 3;
    PolyMatrix m = testing::random_unimodular(rng, Q, b).col_range(0, a);
    ASSERT_TRUE(is_split_mono(m));
    PolyMatrix x = testing::random_matrix(rng, Q, c, a, 2, 0.3);
    PolyMatrix q = cokernel_free(vstack(m, -x));
    PolyMatrix opposite = q.col_range(b, b + c);  // the leg out of x's codomain
    EXPECT_TRUE(is_split_mono(opposite));
  }
}

GTEST_TEST(FieldMatrixTest, EliminationAndSubspaces) {
  const Field z2 = Field::prime(2);
  // x0 + x1 = 0, x1 + x2 = 0: projecting out x1 gives x0 + x2 = 0.
  FieldMatrix m(Q, 0, 3);
  m.append_row({Q.one(), Q.one(), Q.zero()});
  m.append_row({Q.zero(), Q.one(), -Q.one()});
  FieldMatrix rest = eliminate_leading(FieldMatrix(m).select_cols(std::vector<std::size_t>{1, 0, 2}), 1);
  ASSERT_EQ(rest.rows(), 1u);
  EXPECT_EQ(rest(0, 0), Q.one());
  EXPECT_EQ(rest(0, 1), Q.one());

  Subspace s = Subspace::from_constraints(m);
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_TRUE(s.contains(FieldVector{Q.one(), -Q.one(), -Q.one()}));
  EXPECT_FALSE(s.contains(FieldVector{Q.one(), Q.one(), Q.one()}));
  EXPECT_EQ(Subspace::span_of(s.basis()), s);
  EXPECT_TRUE(s.is_subset_of(Subspace::whole(Q, 3)));

  std::optional<FieldVector> sol = solve_zero_free(m, FieldVector{Q.one(), Q.zero()});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(m.apply(*sol), (FieldVector{Q.one(), Q.zero()}));

  FieldMatrix bad(z2, 0, 1);
  bad.append_row({z2.one()});
  bad.append_row({z2.one()});
  EXPECT_FALSE(solve_zero_free(bad, FieldVector{z2.one(), z2.zero()}).has_value());
}

}  // namespace
}  // namespace flowcat
