#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acx/quiver.hpp"

using namespace acx;

namespace {
std::vector<Rat> zeros(int n) { return std::vector<Rat>(n, Rat(0)); }
}

TEST_CASE("two-vertex path quiver: forms and roots") {
    Quiver q;
    q.vertices = 2;
    q.edges = {{0, 1}};
    // Ringel form q(a) = a0^2 + a1^2 - a0*a1
    CHECK(tits_q(q, {1, 0}) == 1);
    CHECK(tits_q(q, {1, 1}) == 1);
    CHECK(tits_q(q, {2, 1}) == 3);
    CHECK(tits_p(q, {1, 1}) == 0);
    CHECK(sym_pairing(q, {1, 0}, {0, 1}) == -1);
    CHECK(sym_pairing(q, {1, 0}, {1, 0}) == 2);

    CHECK(classify_root(q, {1, 0}) == RootType::Real);
    CHECK(classify_root(q, {1, 1}) == RootType::Real);
    CHECK(classify_root(q, {2, 1}) == RootType::NotRoot);
    CHECK_THROWS_AS(classify_root(q, {0, 0}), MalformedInput);

    auto roots = positive_roots(q, {3, 3});
    REQUIRE(roots.size() == 3); // (0,1), (1,0), (1,1)
    CHECK(roots[0].coords == DimVec{0, 1});
    CHECK(roots[1].coords == DimVec{1, 0});
    CHECK(roots[2].coords == DimVec{1, 1});
    for (const auto& r : roots) CHECK(r.type == RootType::Real);
}

TEST_CASE("loop vertex: isotropic root, no reflection, fundamental region") {
    AffineQuiver aj = affine_jordan();
    CHECK(aj.q.vertices == 1);
    CHECK(tits_q(aj.q, {1}) == 0);
    CHECK(tits_q(aj.q, {5}) == 0);
    CHECK(tits_p(aj.q, {1}) == 1);
    CHECK(classify_root(aj.q, {1}) == RootType::Imaginary);
    CHECK(classify_root(aj.q, {4}) == RootType::Imaginary); // every multiple

    AffineQuiver a1 = affine_cycle(2);
    CHECK(tits_q(a1.q, a1.delta) == 0);
    CHECK(classify_root(a1.q, {1, 1}) == RootType::Imaginary);
    CHECK(classify_root(a1.q, {2, 2}) == RootType::Imaginary);
    CHECK(classify_root(a1.q, {1, 0}) == RootType::Real);
    CHECK(classify_root(a1.q, {2, 0}) == RootType::NotRoot);
    // disconnected support is never a root
    AffineQuiver a2 = affine_cycle(3);
    CHECK(classify_root(a2.q, {1, 0, 1}) == RootType::Real); // support connected via edge (2,0)
    Quiver two;
    two.vertices = 2; // no edges
    CHECK(classify_root(two, {1, 1}) == RootType::NotRoot);

    AffineQuiver d4 = affine_d4();
    CHECK(d4.delta == DimVec{1, 1, 1, 1, 2});
    CHECK(tits_q(d4.q, d4.delta) == 0);
}

TEST_CASE("framing validates the extending vertex") {
    CHECK_THROWS_AS(frame_affine(affine_d4(), 4, 1), MalformedInput); // center has delta 2
    CHECK_NOTHROW(frame_affine(affine_d4(), 0, 1));
    CHECK_THROWS_AS(frame_affine(affine_jordan(), 1, 1), MalformedInput); // out of range
    CHECK_THROWS_AS(frame_affine(affine_jordan(), 0, -1), MalformedInput);

    FramedQuiver f = frame_affine(affine_jordan(), 0, 2);
    CHECK(f.framed.vertices == 2);
    CHECK(f.alpha == DimVec{2, 1});
    CHECK(f.frameVertex == 1);
    CHECK(lambda_admissible(f, zeros(2)));
    CHECK(!lambda_admissible(f, {Rat(1), Rat(0)}));
}

TEST_CASE("decompositions at lambda = 0 on the framed one-loop quiver, n = 2") {
    FramedQuiver f = frame_affine(affine_jordan(), 0, 2);
    CHECK(tits_p(f.framed, f.alpha) == 2);
    auto dec = sigma_prime_decomps(f.framed, zeros(2), f.alpha);
    // exactly the trivial one, (1,1)+(1,0), and (1,0)+(1,0)+(0,1)
    REQUIRE(dec.size() == 3);
    CHECK(dec[0] == std::vector<DimVec>{{1, 0}, {1, 0}, {0, 1}});
    CHECK(dec[1] == std::vector<DimVec>{{1, 1}, {1, 0}});
    CHECK(dec[2] == std::vector<DimVec>{{2, 1}});
}

TEST_CASE("a decomposition exceeding p(alpha) is reported, not counted") {
    // unframed loop vertex: p((2)) = 1 but (1)+(1) sums to 2
    AffineQuiver aj = affine_jordan();
    CHECK_THROWS_AS(sigma_prime_decomps(aj.q, zeros(1), DimVec{2}), NotSigmaPrime);
}

TEST_CASE("component counts are n + 1") {
    for (int n = 1; n <= 4; ++n) {
        FramedQuiver f = frame_affine(affine_jordan(), 0, n);
        CHECK(component_count(f.framed, zeros(2), f.alpha) == n + 1);
    }
    for (int n = 1; n <= 3; ++n) {
        FramedQuiver f = frame_affine(affine_cycle(2), 0, n);
        CHECK(component_count(f.framed, zeros(3), f.alpha) == n + 1);
    }
}

TEST_CASE("expected dimension matches n^2 |delta|^2 + 2n") {
    std::vector<AffineQuiver> fams = {affine_jordan(), affine_cycle(2), affine_cycle(3),
                                      affine_d4()};
    for (const auto& aq : fams) {
        long d2 = 0;
        for (int v : aq.delta) d2 += (long)v * v;
        for (int n = 1; n <= 3; ++n) {
            FramedQuiver f = frame_affine(aq, 0, n);
            CHECK(expected_dim(f.framed, f.alpha) == (long)n * n * d2 + 2L * n);
        }
    }
}

TEST_CASE("search caps are honored") {
    FramedQuiver f = frame_affine(affine_jordan(), 0, 3);
    DecompLimits tiny;
    tiny.maxCandidates = 1;
    CHECK_THROWS_AS(sigma_prime_decomps(f.framed, zeros(2), f.alpha, tiny), BoundExceeded);
}
