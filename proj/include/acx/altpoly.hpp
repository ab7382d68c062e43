#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acx/mpoly.hpp"

namespace acx {

// basis label for the alternating polynomials in 2n diagonal variables:
// n pairwise-distinct exponent pairs (p_t, q_t), canonically sorted descending
struct WedgeLabel {
    std::vector<std::pair<int, int>> pairs;

    int n() const { return static_cast<int>(pairs.size()); }
    void canonicalize();  // sort descending
    void validate() const; // distinct, nonnegative
    std::pair<int, int> bidegree() const; // (Σp, Σq)

    friend bool operator<(const WedgeLabel& l, const WedgeLabel& r) { return l.pairs < r.pairs; }
    friend bool operator==(const WedgeLabel& l, const WedgeLabel& r) { return l.pairs == r.pairs; }
};

// det(x_j^{p_t} y_j^{q_t})_{t,j} in variables x1..xn,y1..yn
MPoly alternant(const WedgeLabel& label);

// the S_n-diagonal action (x and y permuted together)
MPoly diagonal_permute(const MPoly& f, const Perm& w);
bool is_alternating(const MPoly& f);

// all labels of exact total bidegree (dx, dy); their alternants form a basis
// of the bidegree piece of the alternating polynomials
std::vector<WedgeLabel> a_basis(int n, int dx, int dy);
long a_dim(int n, int dx, int dy);

// independent k-fold products of alternants spanning the (dx, dy) piece of A^k
std::vector<MPoly> ak_basis(int n, int k, int dx, int dy);
long ak_dim(int n, int k, int dx, int dy);

// monomials of exact bidegree (dx, dy) in 2n variables, deterministic order
std::vector<std::vector<int>> monomials_of_bidegree(int n, int dx, int dy);

// r-th elementary symmetric polynomial in y1..yn, as an element of C[x,y]
MPoly elementary_symmetric_y(int n, int r);

struct FreenessReport {
    int n = 0;
    int k = 0;
    int boundX = 0;
    int boundY = 0;
    // bidegrees of the lifted module generators, with multiplicity, sorted
    std::vector<std::pair<int, int>> generators;
    bool certified = false;
    std::string witness; // empty when certified; otherwise an explicit relation
};

// certifies, for every bidegree ≤ bound, that products generator·e^μ(y) are
// linearly independent and span A^k — i.e. A^k looks free over the symmetric
// y-polynomials up to the bound
FreenessReport freeness_certificate(int n, int k, int boundX, int boundY);

// dimension table of A^k for all bidegrees ≤ bound
std::map<std::pair<int, int>, long> hilbert_table(int n, int k, int boundX, int boundY);

// the label's monomials x^p y^q as two-variable polynomials (the matrix-poly
// lift consumed by psi/phi)
std::vector<MPoly> wedge_matrix_polys(const WedgeLabel& label);

} // namespace acx
