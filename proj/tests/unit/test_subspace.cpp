#include <gtest/gtest.h>

#include "../support/oracles.hpp"

using namespace relcalc;
using namespace relcalc::test;

namespace {

Sub span(const Mat& m)
{
    return orthonormalize<double>(m);
}

} // namespace

TEST(Orthonormalize, ColinearInputGivesLine)
{
    const Sub s = span(cols({vec({1, 0}), vec({2, 0})}));
    ASSERT_EQ(s.dim(), 1);
    EXPECT_TRUE(equal(s, span(cols({vec({1, 0})}))));
}

TEST(Orthonormalize, EmptyListIsZeroSubspace)
{
    const std::vector<Vec> none;
    const Sub s = orthonormalize<double>(std::span<const Vec>(none), 3);
    EXPECT_EQ(s.dim(), 0);
    EXPECT_EQ(s.ambient_dim(), 3);
    EXPECT_TRUE(s.is_zero());
}

TEST(Orthonormalize, NearlyColinearBelowToleranceIsOneDimensional)
{
    const Mat m = cols({vec({1, 0}), vec({1, 1e-14})});
    Eigen::JacobiSVD<Mat> svd(m);
    ASSERT_LT(svd.singularValues()(1), 1e-10 * svd.singularValues()(0));
    EXPECT_EQ(span(m).dim(), 1);
}

TEST(Orthonormalize, BasisIsOrthonormal)
{
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Sub s = span(rng.gaussian_matrix(6, 4));
        const Mat gram = s.basis().adjoint() * s.basis();
        EXPECT_LT((gram - Mat::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Orthonormalize, RejectsNonFiniteAndBadLengths)
{
    Mat m = Mat::Zero(2, 1);
    m(0, 0) = Cx(std::numeric_limits<double>::quiet_NaN(), 0);
    EXPECT_THROW(span(m), PreconditionError);
    const std::vector<Vec> uneven{vec({1, 0}), vec({1, 0, 0})};
    EXPECT_THROW(orthonormalize<double>(std::span<const Vec>(uneven), 2), DimensionMismatch);
}

TEST(Orthonormalize, SpanStable)
{
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Sub s = span(rng.gaussian_matrix(5, rng.uniform_int(1, 5)));
        EXPECT_TRUE(equal(s, span(s.basis())));
    }
}

TEST(Subspace, FromOrthonormalChecksGram)
{
    EXPECT_THROW(Sub::from_orthonormal(cols({vec({1, 1})})), PreconditionError);
    EXPECT_THROW(Sub::from_orthonormal(Mat(0, 0)), PreconditionError);
    EXPECT_NO_THROW(Sub::from_orthonormal(cols({vec({1, 0})})));
}

TEST(TolerancePolicy, ValidatesRange)
{
    EXPECT_THROW((TolerancePolicy{0.0, 1e-8}.validate()), PreconditionError);
    EXPECT_THROW((TolerancePolicy{1e-10, 0.5}.validate()), PreconditionError);
    EXPECT_NO_THROW((TolerancePolicy{1e-12, 1e-6}.validate()));
}

TEST(Complement, StandardExamples)
{
    EXPECT_TRUE(equal(complement(span(cols({unit(2, 0)}))), span(cols({unit(2, 1)}))));
    EXPECT_EQ(complement(Sub::zero(3)).dim(), 3);
    const Cx i(0, 1);
    const Sub c = complement(span(cols({vec({1, i})})));
    ASSERT_EQ(c.dim(), 1);
    // <(1, i), (1, -i)> = 1 + i * conj(-i) = 1 + i * i = 0.
    EXPECT_NEAR(std::abs(inner<double>(vec({1, i}), vec({1, -i}))), 0.0, 1e-15);
    EXPECT_NEAR(max_sine(c.basis(), vec({1, -i}) / std::sqrt(2.0)), 0.0, 1e-12);
}

TEST(Complement, InvolutionAndDimensionLaw)
{
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Index m = rng.uniform_int(1, 7);
        const Sub a = span(rng.gaussian_matrix(m, rng.uniform_int(0, m)));
        const Sub c = complement(a);
        EXPECT_EQ(a.dim() + c.dim(), m);
        EXPECT_TRUE(equal(complement(c), a));
        if (a.dim() > 0 && c.dim() > 0)
            EXPECT_LT((a.basis().adjoint() * c.basis()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Intersect, StandardExamples)
{
    const Sub a = span(cols({unit(3, 0), unit(3, 1)}));
    const Sub b = span(cols({unit(3, 1), unit(3, 2)}));
    EXPECT_TRUE(equal(intersect(a, b), span(cols({unit(3, 1)}))));
    EXPECT_TRUE(equal(intersect(a, a), a));
}

TEST(Intersect, RandomThreeDimensionalInFiveIsLine)
{
    Rng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const Sub a = span(rng.gaussian_matrix(5, 3));
        const Sub b = span(rng.gaussian_matrix(5, 3));
        Mat both(5, 6);
        both << a.basis(), b.basis();
        Eigen::JacobiSVD<Mat> svd(both);
        const Index rank_sum = numerical_rank(svd, 1e-10);
        EXPECT_EQ(intersect(a, b).dim(), 3 + 3 - rank_sum);
        EXPECT_EQ(intersect(a, b).dim(), 1);
    }
}

TEST(Intersect, AgreesWithNullSpaceOracle)
{
    Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        const Index m = rng.uniform_int(2, 7);
        // Build overlapping subspaces from a shared random core.
        const Index shared = rng.uniform_int(0, m / 2);
        const Mat core = rng.gaussian_matrix(m, shared);
        const Index ea = rng.uniform_int(0, m - shared);
        const Index eb = rng.uniform_int(0, m - shared);
        Mat ma(m, shared + ea), mb(m, shared + eb);
        ma << core, rng.gaussian_matrix(m, ea);
        mb << core, rng.gaussian_matrix(m, eb);
        const Sub a = span(ma);
        const Sub b = span(mb);
        const Mat oracle = intersect_basis(a.basis(), b.basis());
        const Sub got = intersect(a, b);
        ASSERT_EQ(got.dim(), oracle.cols()) << "trial " << trial;
        EXPECT_LT(max_sine(got.basis(), oracle), 1e-8);
    }
}

TEST(Intersect, SumIntersectDimensionFormula)
{
    Rng rng(16);
    for (int trial = 0; trial < 500; ++trial) {
        const Index m = rng.uniform_int(1, 7);
        const Index shared = rng.uniform_int(0, m);
        const Mat core = rng.gaussian_matrix(m, shared);
        Mat ma(m, shared + 1), mb(m, shared + 1);
        ma << core, rng.gaussian_matrix(m, 1);
        mb << core, rng.gaussian_matrix(m, 1);
        const Sub a = span(ma);
        const Sub b = span(mb);
        EXPECT_EQ(sum(a, b).dim() + intersect(a, b).dim(), a.dim() + b.dim()) << "trial " << trial;
    }
}

TEST(Project, StandardExamples)
{
    const Vec p = project(span(cols({unit(2, 0)})), vec({3, 4}));
    EXPECT_NEAR((p - vec({3, 0})).norm(), 0.0, 1e-15);
    EXPECT_EQ(project(Sub::zero(2), vec({3, 4})).norm(), 0.0);
    const Vec q = project(span(cols({vec({1, 1})})), vec({1, 0}));
    EXPECT_NEAR((q - vec({0.5, 0.5})).norm(), 0.0, 1e-15);
    EXPECT_THROW(project(Sub::zero(2), vec({1, 2, 3})), DimensionMismatch);
}

TEST(Project, Idempotent)
{
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const Index m = rng.uniform_int(1, 7);
        const Sub a = span(rng.gaussian_matrix(m, rng.uniform_int(0, m)));
        const Vec v = rng.gaussian_matrix(m, 1);
        const Vec p = project(a, v);
        EXPECT_LT((project(a, p) - p).norm(), 1e-12);
    }
}

TEST(Compare, StandardExamples)
{
    const Sub e1 = span(cols({unit(2, 0)}));
    const Sub plane = Sub::full(2);
    EXPECT_EQ(compare(e1, plane).ordering, Ordering::a_subset_b);
    EXPECT_EQ(compare(plane, e1).ordering, Ordering::b_subset_a);
    const auto self = compare(e1, e1);
    EXPECT_EQ(self.ordering, Ordering::equal);
    EXPECT_EQ(self.max_angle, 0.0);
    const auto close = compare(e1, span(cols({vec({1, 1e-12})})));
    EXPECT_EQ(close.ordering, Ordering::equal);
    EXPECT_NEAR(close.max_angle, 1e-12, 1e-15);
    EXPECT_EQ(compare(e1, span(cols({unit(2, 1)}))).ordering, Ordering::incomparable);
    EXPECT_STREQ(to_string(Ordering::a_subset_b), "A_subset_B");
}

TEST(Compare, ZeroSubspaceIsContainedEverywhere)
{
    const Sub z = Sub::zero(3);
    EXPECT_EQ(compare(z, Sub::full(3)).ordering, Ordering::a_subset_b);
    EXPECT_EQ(compare(z, z).ordering, Ordering::equal);
    EXPECT_THROW(compare(z, Sub::zero(2)), DimensionMismatch);
}

TEST(Compare, MaxAngleMatchesOracle)
{
    Rng rng(18);
    for (int trial = 0; trial < 100; ++trial) {
        const Sub a = span(rng.gaussian_matrix(5, 2));
        const Sub b = span(rng.gaussian_matrix(5, 2));
        EXPECT_NEAR(std::sin(compare(a, b).max_angle), max_sine(a.basis(), b.basis()), 1e-10);
    }
}
