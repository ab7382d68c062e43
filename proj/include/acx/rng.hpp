#pragma once
#include <random>

#include "acx/matrix.hpp"
#include "acx/perm.hpp"

namespace acx {

// Deterministic sampling. mt19937_64 output is pinned by the standard, and
// all bounded draws go through our own rejection sampling instead of
// std::uniform_int_distribution (whose mapping is implementation-defined),
// so a fixed seed reproduces the same stream on any platform.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(uint64_t seed) : eng(seed) {}

    uint64_t raw() { return eng(); }

    // uniform integer in [lo, hi]
    long integer(long lo, long hi);

    // rational with |numerator| <= numBound, 1 <= denominator <= denBound
    Rat rational(long numBound = 20, long denBound = 20);
    Rat nonzero_rational(long numBound = 20, long denBound = 20);

    RatVec vec(int n, long numBound = 20, long denBound = 20);
    RatVec distinct_vec(int n, long numBound = 20, long denBound = 20); // pairwise distinct
    RatMat mat(int rows, int cols, long numBound = 20, long denBound = 20);
    RatMat invertible(int n, long numBound = 5, long denBound = 3);
    Perm perm(int n);
};

} // namespace acx
