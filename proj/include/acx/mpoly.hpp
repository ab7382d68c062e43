#pragma once
#include <map>
#include <string>
#include <vector>

#include "acx/cpoly.hpp"
#include "acx/matrix.hpp"
#include "acx/perm.hpp"

namespace acx {

// Graded lexicographic order, leading term first: higher total degree wins,
// ties broken by lexicographically larger exponent vector. This is the one
// canonical term order of the library; serialization iterates map order, so
// equal polynomials serialize byte-identically.
struct GrlexGreater {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int v : a) da += v;
        for (int v : b) db += v;
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial over Q[c] (pure-rational polynomials are the
// c-degree-0 case). Invariants: fixed variable list, no zero coefficients, all
// exponent vectors of size vars.size() with entries >= 0.
struct MPoly {
    std::vector<std::string> vars;
    std::map<std::vector<int>, CPoly, GrlexGreater> terms;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vs) : vars(std::move(vs)) {}

    static MPoly constant(std::vector<std::string> vars, const CPoly& c);
    static MPoly constant(std::vector<std::string> vars, const Rat& r) {
        return constant(std::move(vars), CPoly(r));
    }
    static MPoly variable(std::vector<std::string> vars, int index, int power = 1);
    static MPoly monomial(std::vector<std::string> vars, std::vector<int> exps, const CPoly& c);

    int nvars() const { return static_cast<int>(vars.size()); }
    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    int total_degree() const; // -1 for zero
    int degree_in(int var) const;
    bool depends_on_c() const;

    void add_term(const std::vector<int>& e, const CPoly& c); // merges, drops zeros

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& l, const MPoly& r);
    friend MPoly operator-(const MPoly& l, const MPoly& r);
    friend MPoly operator*(const MPoly& l, const MPoly& r);
    friend bool operator==(const MPoly& l, const MPoly& r) {
        return l.vars == r.vars && l.terms == r.terms;
    }
    friend bool operator!=(const MPoly& l, const MPoly& r) { return !(l == r); }
};

MPoly mpoly_scale(const MPoly& p, const CPoly& s);
MPoly mpoly_pow(const MPoly& p, int e);

// Full evaluation: every variable gets a rational value; c survives.
CPoly mpoly_eval(const MPoly& p, const RatVec& at);
Rat mpoly_eval_rat(const MPoly& p, const RatVec& at); // requires c-free

// Relabel variables by a bijection `mapping` of index positions:
// x_{mapping[k]} takes the exponent x_k had. Variable names are unchanged
// (same ring); this is the S_n action when mapping permutes equal blocks.
MPoly mpoly_permute_vars(const MPoly& p, const std::vector<int>& mapping);

MPoly mpoly_derivative(const MPoly& p, int var);

// Exact division: returns q with q*d == n, throws NotDivisible otherwise.
MPoly mpoly_exact_divide(const MPoly& n, const MPoly& d);

// Univariate bridge (e.g. characteristic polynomials as MPoly in "t").
MPoly mpoly_from_upoly(const std::string& var, const std::vector<Rat>& coeffs);

std::string mpoly_str(const MPoly& p); // human-readable, canonical order

// Standard variable lists.
std::vector<std::string> xvars(int n);                  // x1..xn
std::vector<std::string> xyvars(int n);                 // x1..xn,y1..yn
std::vector<std::string> tvars(int k);                  // t1..tk

// Matrices of polynomials (for symbolic conormal-space elements).
using MPolyMat = std::vector<std::vector<MPoly>>;
MPolyMat mpmat_mul(const MPolyMat& a, const MPolyMat& b);
MPoly mpmat_trace(const MPolyMat& a);

} // namespace acx
