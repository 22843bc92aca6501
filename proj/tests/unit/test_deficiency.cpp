#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "relcalc/harness/generators.hpp"

using namespace relcalc;
using namespace relcalc::test;

namespace {

const Cx I(0, 1);

/// n - rank of {f - λx : (x, f) ∈ T}, straight from the graph basis.
Index oracle_index(const Rel& t, Cx lambda)
{
    const Index n = t.space_dim();
    if (t.dim() == 0)
        return n;
    const Mat b = t.graph().basis();
    const Mat moved = b.bottomRows(n) - lambda * b.topRows(n);
    Eigen::JacobiSVD<Mat> svd(moved);
    const auto& s = svd.singularValues();
    Index r = 0;
    while (r < s.size() && s(r) > 1e-10)
        ++r;
    return n - r;
}

} // namespace

TEST(DeficiencyIndex, Examples)
{
    Rng rng(61);
    EXPECT_EQ(deficiency_index(Rel::graph_of(rng.hermitian(4)), I).index, 0);
    const Rel partial = Rel::from_graph_vectors(2, cols({pair(unit(2, 0), unit(2, 0))}));
    const auto rec = deficiency_index(partial, I);
    EXPECT_EQ(rec.index, 1);
    EXPECT_EQ(rec.space.dim(), 1);
    EXPECT_EQ(deficiency_index(Rel::zero(2), Cx(0.3, -2)).index, 2);
}

TEST(DeficiencyIndex, EqualsCodimensionOfRange)
{
    Rng rng(62);
    for (int trial = 0; trial < 200; ++trial) {
        const Rel t = random_relation(rng, rng.uniform_int(1, 6));
        const Cx lambda = rng.gaussian();
        const Index idx = deficiency_index(t, lambda).index;
        EXPECT_EQ(idx, t.space_dim() - components(shift(t, lambda)).range.dim());
        EXPECT_EQ(idx, oracle_index(t, lambda));
    }
}

TEST(DeficiencyPair, Examples)
{
    Rng rng(63);
    const auto sa = deficiency_pair(Rel::graph_of(rng.hermitian(3)));
    EXPECT_EQ(sa.plus, 0);
    EXPECT_EQ(sa.minus, 0);
    const auto partial = deficiency_pair(Rel::from_graph_vectors(2, cols({pair(unit(2, 0), unit(2, 0))})));
    EXPECT_EQ(partial.plus, 1);
    EXPECT_EQ(partial.minus, 1);
    EXPECT_TRUE(partial.half_plane_constant);
    Mat a = Mat::Zero(2, 2);
    a(0, 1) = 1;
    EXPECT_THROW(deficiency_pair(Rel::graph_of(a)), PreconditionError);
}

TEST(DeficiencyPair, HermitianIndicesEqualCodimensionOfGraph)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        harness::InstanceSpec spec;
        spec.seed = seed;
        spec.n = rng.uniform_int(1, 6);
        spec.dim_mul = rng.uniform_int(0, spec.n);
        spec.dim_dom = rng.uniform_int(0, spec.n - spec.dim_mul);
        const Rel t = harness::gen_hermitian(spec);
        const auto dp = deficiency_pair(t);
        const Index expected = spec.n - t.dim();
        EXPECT_EQ(dp.plus, expected);
        EXPECT_EQ(dp.minus, expected);
        EXPECT_TRUE(dp.half_plane_constant);
        for (int k = 0; k < 3; ++k) {
            const Cx lambda(rng.uniform(-3, 3), rng.uniform(0.1, 3));
            EXPECT_EQ(oracle_index(t, lambda), expected);
            EXPECT_EQ(oracle_index(t, std::conj(lambda)), expected);
        }
    }
}

TEST(DeficiencyIndex, ShiftConsistency)
{
    Rng rng(64);
    for (int trial = 0; trial < 100; ++trial) {
        const Rel t = random_relation(rng, rng.uniform_int(1, 5));
        const Cx lambda = rng.gaussian();
        const double mu = rng.uniform(-2, 2);
        EXPECT_EQ(deficiency_index(t, lambda).index, deficiency_index(shift(t, Cx(mu)), lambda - mu).index);
    }
}

TEST(LowerBound, Examples)
{
    EXPECT_NEAR(lower_bound_constant(Rel::graph_of(diag({2, 3}))), 2.0, 1e-14);
    EXPECT_NEAR(lower_bound_constant(Rel::graph_of(diag({0, 3}))), 0.0, 1e-14);
    EXPECT_TRUE(std::isinf(lower_bound_constant(Rel::pure_multivalued(3))));
}

TEST(LowerBound, IsInfimumOverSampledDomain)
{
    Rng rng(65);
    for (int trial = 0; trial < 100; ++trial) {
        const Rel t = random_relation(rng, rng.uniform_int(1, 5));
        const double c = lower_bound_constant(t);
        const Sub dom = domain_of(t);
        if (dom.dim() == 0) {
            EXPECT_TRUE(std::isinf(c));
            continue;
        }
        double best = infinity<double>();
        for (int k = 0; k < 200; ++k) {
            const Vec x = dom.basis() * rng.unit_vector(dom.dim());
            const double r = relation_norm_at(t, x);
            EXPECT_GE(r, c - 1e-10);
            best = std::min(best, r);
        }
        EXPECT_GE(best, c - 1e-10);
    }
}
