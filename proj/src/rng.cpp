#include "acx/rng.hpp"

#include "acx/linalg.hpp"

namespace acx {

long Rng::integer(long lo, long hi) {
    if (lo > hi) throw MalformedInput("empty integer range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t v;
    do {
        v = eng();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
}

Rat Rng::rational(long numBound, long denBound) {
    Rat r(integer(-numBound, numBound), integer(1, denBound));
    r.canonicalize();
    return r;
}

Rat Rng::nonzero_rational(long numBound, long denBound) {
    for (;;) {
        Rat r = rational(numBound, denBound);
        if (r != 0) return r;
    }
}

RatVec Rng::vec(int n, long numBound, long denBound) {
    RatVec v(n);
    for (auto& x : v) x = rational(numBound, denBound);
    return v;
}

RatVec Rng::distinct_vec(int n, long numBound, long denBound) {
    RatVec v;
    while (static_cast<int>(v.size()) < n) {
        Rat r = rational(numBound, denBound);
        bool dup = false;
        for (const auto& x : v) dup = dup || (x == r);
        if (!dup) v.push_back(r);
    }
    return v;
}

RatMat Rng::mat(int rows, int cols, long numBound, long denBound) {
    RatMat m(rows, cols);
    for (auto& x : m.a) x = rational(numBound, denBound);
    return m;
}

RatMat Rng::invertible(int n, long numBound, long denBound) {
    for (;;) {
        RatMat m = mat(n, n, numBound, denBound);
        if (det(m) != 0) return m;
    }
}

Perm Rng::perm(int n) {
    Perm p(n);
    for (int k = n - 1; k > 0; --k) {
        long j = integer(0, k);
        std::swap(p.img[k], p.img[j]);
    }
    return p;
}

} // namespace acx
