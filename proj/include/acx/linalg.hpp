#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "acx/matrix.hpp"

namespace acx {

// ---- univariate polynomials over Q (dense, p[k] multiplies t^k) ----------
// Used for characteristic polynomials; invariant: no trailing zeros.
using UPoly = std::vector<Rat>;

void upoly_trim(UPoly& p);
int upoly_degree(const UPoly& p); // -1 for zero
Rat upoly_eval(const UPoly& p, const Rat& at);
UPoly upoly_deriv(const UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
void upoly_divmod(const UPoly& n, const UPoly& d, UPoly& q, UPoly& r);
UPoly upoly_gcd(UPoly a, UPoly b); // monic
bool upoly_squarefree(const UPoly& p);

// ---- exact Gaussian elimination ------------------------------------------
struct RankKernel {
    int rank = 0;
    RatMat rref;                  // reduced row echelon form
    std::vector<int> pivot_cols;
    std::vector<RatVec> kernel;   // canonical basis: one vector per free column
};

RankKernel rank_kernel(const RatMat& m);
int rank_of(const RatMat& m);
Rat det(const RatMat& m);
std::optional<RatMat> inverse(const RatMat& m);
// Particular solution of A x = b with free variables set to 0, if consistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// Incrementally maintained row span in reduced echelon form. add() returns
// true iff the vector enlarged the span. Deterministic: pivots are the first
// nonzero coordinates after reduction.
struct EchelonSpan {
    int cols = 0;
    std::vector<RatVec> rows;  // reduced, pivot coefficient 1
    std::vector<int> lead;     // pivot column of each row, strictly increasing order not required

    explicit EchelonSpan(int c) : cols(c) {}
    int dim() const { return static_cast<int>(rows.size()); }
    RatVec reduce(RatVec v) const;
    bool contains(const RatVec& v) const { return vec_is_zero(reduce(v)); }
    bool add(const RatVec& v);
};

// ---- spectra ---------------------------------------------------------------
UPoly charpoly(const RatMat& m); // monic, exact (Faddeev-LeVerrier)
bool has_distinct_eigenvalues(const RatMat& m);

// Eigenvalues with algebraic multiplicities, sorted ascending. Throws
// NonRationalSpectrum if the characteristic polynomial has an irreducible
// factor of degree >= 2, BoundExceeded if integer factoring gives up.
std::vector<std::pair<Rat, int>> rational_spectrum(const RatMat& m);
std::vector<std::pair<Rat, int>> rational_roots_monic(const UPoly& p);

} // namespace acx
