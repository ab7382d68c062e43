#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acx/altpoly.hpp"

using namespace acx;

namespace {
WedgeLabel label(std::vector<std::pair<int, int>> pairs) {
    WedgeLabel l;
    l.pairs = std::move(pairs);
    return l;
}
} // namespace

TEST_CASE("alternants in two points") {
    CHECK(mpoly_str(alternant(label({{1, 0}, {0, 0}}))) == "x1 + -x2");
    CHECK(mpoly_str(alternant(label({{0, 1}, {0, 0}}))) == "y1 + -y2");
    CHECK(mpoly_str(alternant(label({{1, 0}, {0, 1}}))) == "x1*y2 + -x2*y1");

    MPoly a = alternant(label({{1, 1}, {0, 0}}));
    auto vars = a.vars;
    MPoly x1y1 = MPoly::variable(vars, 0) * MPoly::variable(vars, 2);
    MPoly x2y2 = MPoly::variable(vars, 1) * MPoly::variable(vars, 3);
    CHECK(a == x1y1 - x2y2);
}

TEST_CASE("labels are canonical and validated") {
    WedgeLabel bad = label({{0, 0}, {1, 0}}); // ascending: not canonical
    CHECK_THROWS_AS(bad.validate(), MalformedInput);
    bad.canonicalize();
    CHECK_NOTHROW(bad.validate());
    CHECK(bad.bidegree() == std::pair<int, int>{1, 0});

    WedgeLabel dup = label({{1, 0}, {1, 0}});
    CHECK_THROWS_AS(dup.validate(), MalformedInput);
    WedgeLabel neg = label({{1, -1}, {0, 0}});
    CHECK_THROWS_AS(neg.validate(), MalformedInput);
}

TEST_CASE("diagonal action: alternants flip sign, products are invariant-ish") {
    MPoly a = alternant(label({{2, 0}, {0, 1}}));
    Perm s = Perm::transposition(2, 0, 1);
    CHECK(diagonal_permute(a, s) == -a);
    CHECK(is_alternating(a));
    CHECK(is_alternating(a * a * a)); // odd power stays alternating
    CHECK(!is_alternating(a * a));    // even power is symmetric, not alternating
    MPoly x1 = MPoly::variable(a.vars, 0);
    CHECK(!is_alternating(x1));
    CHECK(diagonal_permute(x1 * x1, s) == MPoly::variable(a.vars, 1, 2));
}

TEST_CASE("dimension of the alternating piece") {
    CHECK(a_dim(2, 0, 0) == 0); // no alternating constants
    CHECK(a_dim(2, 1, 0) == 1);
    CHECK(a_dim(2, 2, 0) == 1); // only {(2,0),(0,0)}
    CHECK(a_dim(2, 1, 1) == 2); // {(1,1),(0,0)} and {(1,0),(0,1)}
    CHECK(a_dim(1, 3, 5) == 1); // single point: every monomial
    auto basis = a_basis(2, 1, 1);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].bidegree() == std::pair<int, int>{1, 1});
    for (const auto& l : basis) CHECK_NOTHROW(l.validate());
}

TEST_CASE("k-fold products: k = 1 reduces to the alternating piece") {
    for (int dx = 0; dx <= 3; ++dx)
        for (int dy = 0; dy <= 3; ++dy) CHECK(ak_dim(2, 1, dx, dy) == a_dim(2, dx, dy));
}

TEST_CASE("k-fold products: small frozen dimensions") {
    // (x1-x2)^2 spans the (2,0) piece of squares
    CHECK(ak_dim(2, 2, 2, 0) == 1);
    CHECK(ak_dim(2, 2, 1, 0) == 0); // odd total degree cannot be a product of two
    CHECK(ak_dim(2, 2, 1, 1) == 1); // (x1-x2)(y1-y2)
    // hand count: ten products reduce to 4 of the 5 invariant monomials
    CHECK(ak_dim(2, 2, 2, 2) == 4);
    for (const auto& f : ak_basis(2, 2, 2, 2)) CHECK(!is_alternating(f));
    for (const auto& f : ak_basis(2, 3, 3, 0)) CHECK(is_alternating(f));
}

TEST_CASE("bidegree bound is enforced") {
    CHECK_THROWS_AS(a_dim(2, 25, 0), BoundExceeded);
    CHECK_THROWS_AS(ak_dim(2, 2, 0, 25), BoundExceeded);
}

TEST_CASE("elementary symmetric polynomials in y") {
    MPoly e1 = elementary_symmetric_y(2, 1);
    MPoly y1 = MPoly::variable(e1.vars, 2), y2 = MPoly::variable(e1.vars, 3);
    CHECK(e1 == y1 + y2);
    CHECK(elementary_symmetric_y(2, 2) == y1 * y2);
    CHECK(elementary_symmetric_y(2, 0) == MPoly::constant(e1.vars, rat(1)));
    Perm s = Perm::transposition(2, 0, 1);
    CHECK(diagonal_permute(e1, s) == e1);
}

TEST_CASE("freeness certificate for two points") {
    FreenessReport r = freeness_certificate(2, 1, 4, 4);
    CHECK(r.certified);
    CHECK(r.witness.empty());
    CHECK(r.generators.size() == 15);
    // generator bidegrees are within the bound and sorted
    for (size_t t = 1; t < r.generators.size(); ++t) {
        auto a = r.generators[t - 1], b = r.generators[t];
        CHECK((a.first + a.second < b.first + b.second ||
               (a.first + a.second == b.first + b.second && a <= b)));
    }

    FreenessReport r2 = freeness_certificate(2, 2, 3, 3);
    CHECK(r2.certified);
}

TEST_CASE("hilbert table agrees with the piecewise dimension") {
    auto table = hilbert_table(2, 2, 3, 3);
    for (const auto& [bd, dim] : table) CHECK(dim == ak_dim(2, 2, bd.first, bd.second));
    CHECK(table.at({2, 0}) == 1);
    CHECK(table.at({0, 0}) == 0);
}

TEST_CASE("wedge matrix polynomials express the alternant as a determinant recipe") {
    WedgeLabel l = label({{2, 1}, {1, 0}});
    auto fs = wedge_matrix_polys(l);
    REQUIRE(fs.size() == 2);
    // each entry is the monomial x^p y^q in the two bridge variables
    CHECK(fs[0].vars == std::vector<std::string>{"x", "y"});
    CHECK(fs[0].total_degree() == 3);
    CHECK(fs[1].total_degree() == 1);
}
