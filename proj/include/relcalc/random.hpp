#pragma once

#include "relcalc/linalg.hpp"

#include <cstdint>
#include <random>

namespace relcalc {

/// SplitMix64 finaliser; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index = 0)
{
    return splitmix64(splitmix64(master ^ splitmix64(stream)) + index);
}

/// Seeded source of complex Gaussian vectors and matrices.
class Rng {
public:
    explicit Rng(std::uint64_t seed)
        : engine_(seed)
    {
    }

    std::mt19937_64& engine() { return engine_; }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

    /// Uniform integer in [lo, hi].
    Index uniform_int(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(engine_); }

    bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

    template <typename Real = double>
    Complex<Real> gaussian()
    {
        std::normal_distribution<double> nd(0.0, 1.0);
        const double re = nd(engine_);
        const double im = nd(engine_);
        return {Real(re), Real(im)};
    }

    template <typename Real = double>
    MatrixX<Real> gaussian_matrix(Index rows, Index cols)
    {
        MatrixX<Real> m(rows, cols);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i)
                m(i, j) = gaussian<Real>();
        return m;
    }

    template <typename Real = double>
    VectorX<Real> unit_vector(Index n)
    {
        VectorX<Real> v = gaussian_matrix<Real>(n, 1);
        return v / v.norm();
    }

    /// (G + G^H) / 2 with complex Gaussian G.
    template <typename Real = double>
    MatrixX<Real> hermitian(Index n)
    {
        const MatrixX<Real> g = gaussian_matrix<Real>(n, n);
        return (g + g.adjoint()) / Real(2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace relcalc
