#pragma once
#include <string>
#include <utility>
#include <vector>

#include "acx/linalg.hpp"
#include "acx/mpoly.hpp"

namespace acx {

// A quadruple (X, Y, i, j): X, Y in gl_n, i a column vector, j a row vector.
// The almost-commuting locus is moment(q) == 0 where
//   moment(X, Y, i, j) = [X, Y] + i⊗j.
struct Quad {
    int n = 0;
    RatMat X, Y;
    RatVec i; // column
    RatVec j; // row

    void validate() const; // shape check, throws MalformedInput
};

RatMat moment(const Quad& q);
bool on_variety(const Quad& q);
Quad conjugate(const RatMat& g, const RatMat& gInv, const Quad& q); // (gXg⁻¹, gYg⁻¹, gi, jg⁻¹)

// Smallest subspace containing i and closed under X and Y (breadth-first
// closure); the returned vectors are the independent images in discovery
// order, so the result is deterministic. i == 0 gives the empty basis.
std::vector<RatVec> cyclic_subspace(const RatMat& X, const RatMat& Y, const RatVec& i);
// Row-vector version: smallest subspace containing j closed under right
// multiplication by X and Y.
std::vector<RatVec> co_cyclic_subspace(const RatVec& j, const RatMat& X, const RatMat& Y);

// True iff j annihilates the closure of i (it always does on the variety;
// the function verifies it). Throws NotOnVariety off the variety.
bool pairing_vanishes(const Quad& q);

// Canonical representatives on the distinct-Y locus:
//   Y = diag(y) (y pairwise distinct), i = (0..0,1..1) with n-k'' ones,
//   j = (1..1,0..0) with k' ones, X_rr = x_r,
//   X_rs = 1/(y_r - y_s) for r > k'' and s <= k', all other entries 0.
// Requires 0 <= k' <= k'' <= n.
struct NormalFormParams {
    RatVec x, y;
    int kPrime = 0, kDoublePrime = 0;
};
Quad normal_form(const NormalFormParams& p);

// Classification over the distinct-Y-spectrum locus. A point with
// dim C[X,Y]i + dim jC[X,Y] == n lies on the component labeled by
// k = dim jC[X,Y]; a strict deficit identifies the thin locus with the
// dimension pair (a, b); an excess is impossible and reported as
// InternalInconsistency.
struct Classification {
    bool component = false; // true: irreducible-component point, k valid
    int k = -1;
    int dimCyclic = 0;   // a = dim C[X,Y]i
    int dimCoCyclic = 0; // b = dim jC[X,Y]
};
Classification classify_generic(const Quad& q); // NotOnVariety / NonGeneric

bool is_nil_point(const Quad& q); // on variety and Y nilpotent

// Single-Jordan-block solution family: X = J_n(z) (ones on the
// superdiagonal), i = (1,..,1,0,..,0) with m ones, j = (0,..,0,j_{m+1},..,j_n).
// Y is upper triangular, its first row is free, and the remaining rows are
// forced by Y_{r,s} = Y_{r-1,s-1} - i_{r-1} j_s. jTail supplies
// (j_{m+1},..,j_n), firstRow supplies (Y_{1,1},..,Y_{1,n}).
Quad jordan_block_solve(const Rat& z, int n, int m, const RatVec& jTail, const RatVec& firstRow);

bool is_regular(const RatMat& X); // centralizer dimension == n

// Stratum data of a pair (X, i): one entry per eigenvalue (ascending), with
// the block size (= algebraic multiplicity) and the height of i's component
// in that generalized eigenspace (smallest h with (X-z)^h i_z = 0).
struct BlockInfo {
    Rat eigenvalue;
    int size = 0;
    int geomMult = 0;
    int iHeight = 0;
};
struct StratumLabel {
    std::vector<BlockInfo> blocks;
    bool regular = false;
    bool relevant = false; // regular and every i-component zero or cyclic
};
StratumLabel stratum(const RatMat& X, const RatVec& i); // NonRationalSpectrum
bool is_relevant(const RatMat& X, const RatVec& i);

// Solution space of the linear system
//   [X, Y] + i⊗j = 0,  Tr(P_z Y) = 0 for every generalized eigenprojector P_z
// in the unknowns (Y, j). Basis vectors are returned as matrix/vector pairs;
// i = 0 is allowed (the system degenerates to [X,Y] = 0 with j free).
struct ConormalSpace {
    int n = 0;
    int paramDim = 0;
    std::vector<RatMat> Ybasis;
    std::vector<RatVec> jbasis;
};
ConormalSpace conormal_space(const RatMat& X, const RatVec& i);

// True iff every Y in the space is nilpotent, decided symbolically:
// Tr(Y(t)^m) must vanish identically in the parameters for m = 1..n.
bool all_Y_nilpotent(const ConormalSpace& cs);

// Simultaneous triangularization of a pair with rank([X,Y]) <= 1 and rational
// spectra: returns g with g X g⁻¹ and g Y g⁻¹ upper triangular. The flag is
// built from common eigenvectors, preferring eigenvalues of Y in ascending
// order (then of X), with the canonical first kernel vector as tie-break.
struct Triangularization {
    RatMat g, gInv, Xup, Yup;
};
Triangularization simultaneous_triangularize(const RatMat& X, const RatMat& Y);

// Paired diagonals after simultaneous triangularization, sorted
// lexicographically — the induced point of C^{2n}/S_n.
std::vector<std::pair<Rat, Rat>> spec_pairs(const RatMat& X, const RatMat& Y);

// (x, y) ↦ (diag x, diag y, (1,..,1), 0); lands on the variety.
Quad epsilon(const RatVec& x, const RatVec& y);

// Semi-invariants attached to an n-tuple fs of two-variable polynomials
// (variables "x","y"; monomials lift as x^p y^q ↦ X^p Y^q):
//   psi = det[f_1(X,Y)i | ... | f_n(X,Y)i]   (weight det)
//   phi = det of the rows j·f_t(X,Y)         (weight det⁻¹)
Rat psi(const std::vector<MPoly>& fs, const Quad& q);
Rat phi(const std::vector<MPoly>& fs, const Quad& q);

// Trace of a word over the alphabet {X, Y, Z}; zAsOuter chooses Z = i⊗j,
// otherwise Z = -[X, Y]. The two agree on the variety.
Rat trace_word(const std::string& word, const Quad& q, bool zAsOuter = true);

// Differential rank of (g, x, y) ↦ g·normal_form(x, y, k, k)·g⁻¹ at the
// identity; equals n² + 2n exactly when the parametrization is submersive
// onto the component.
int parametrization_jacobian_rank(const RatVec& x, const RatVec& y, int k);

// Dimension of {A : [A,X] = [A,Y] = 0, Ai = 0, jA = 0}; 0 means the
// isotropy of the basepoint is trivial.
int stabilizer_dim(const Quad& q);

} // namespace acx
