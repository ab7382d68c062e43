#pragma once

#include <map>
#include <vector>

#include "acx/cpoly.hpp"
#include "acx/mpoly.hpp"
#include "acx/perm.hpp"

namespace acx {

// PBW monomial x^a · w · y^b
struct PbwKey {
    std::vector<int> x;
    Perm w;
    std::vector<int> y;

    friend bool operator<(const PbwKey& l, const PbwKey& r) {
        if (l.x != r.x) return l.x < r.x;
        if (l.w != r.w) return l.w < r.w;
        return l.y < r.y;
    }
    friend bool operator==(const PbwKey& l, const PbwKey& r) {
        return l.x == r.x && l.w == r.w && l.y == r.y;
    }
};

// element of the type-A rational Cherednik algebra, stored strictly in PBW
// normal form with coefficients in Q[c]; the defining relations are
//   w x_k = x_{w(k)} w,  [y_i, x_j] = c·s_ij (i≠j),
//   [y_k, x_k] = 1 − c·Σ_{i≠k} s_ik
struct HElem {
    int n = 0;
    std::map<PbwKey, CPoly> terms;

    void add_term(const PbwKey& k, const CPoly& c);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const HElem& l, const HElem& r) {
        return l.n == r.n && l.terms == r.terms;
    }
    friend bool operator!=(const HElem& l, const HElem& r) { return !(l == r); }
};

HElem h_zero(int n);
HElem h_one(int n);
HElem h_x(int n, int i); // 0-based
HElem h_y(int n, int i);
HElem h_w(const Perm& w);
HElem h_term(int n, std::vector<int> xExp, Perm w, std::vector<int> yExp, CPoly coef);
HElem h_symmetrizer(int n); // e = (1/n!) Σ_w w

HElem h_add(const HElem& a, const HElem& b);
HElem h_sub(const HElem& a, const HElem& b);
HElem h_neg(const HElem& a);
HElem h_scale(const HElem& a, const CPoly& s);
HElem h_mul(const HElem& a, const HElem& b);

// PBW form of y^b x^a (the whole normal-ordering engine)
HElem normal_order_y_x(int n, const std::vector<int>& b, const std::vector<int>& a);

// induced-module action on C[x1..xn]: x_i multiplies, w permutes variables,
// y_i acts by the recursion y_i(1) = 0, y_i(x_j f) = x_j (y_i f) + [y_i,x_j] f
MPoly act_poly(const HElem& h, const MPoly& f);

// closed form ∂f/∂x_i − c·Σ_{j≠i} (f − s_ij f)/(x_i − x_j); agrees with
// act_poly(y_i, f) identically
MPoly dunkl(int i, const MPoly& f); // 0-based

MPoly symmetrize(const MPoly& f); // (1/n!) Σ_w w·f
bool is_symmetric(const MPoly& f);

// action of a spherical element: input and output must be symmetric
MPoly spherical_act(const HElem& u, const MPoly& f);

// x ↦ y, y ↦ −x, w ↦ w; an order-4 algebra automorphism
HElem fourier(const HElem& h);

// dimension of the span of all normal-ordered products y^b·w·x^a with
// |a|+|b| ≤ d, counted against the PBW monomials of the same filtration
long pbw_count(int n, int d);

std::string h_str(const HElem& h);

} // namespace acx
