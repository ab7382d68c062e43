#pragma once
#include <string>
#include <vector>

#include "acx/rational.hpp"

namespace acx {

// Univariate polynomial in the formal parameter c over Q. This is the
// coefficient domain for everything that must stay exact "identically in c"
// (rational coefficients are just degree 0). Invariant: no trailing zero
// coefficients, so degree() is honest and equality is coefficient equality.
struct CPoly {
    std::vector<Rat> a; // a[k] multiplies c^k

    CPoly() = default;
    explicit CPoly(const Rat& r) { if (r != 0) a.push_back(r); }
    explicit CPoly(long v) { if (v != 0) a.push_back(Rat(v)); }

    static CPoly c();                 // the variable itself
    static CPoly zero() { return CPoly(); }
    static CPoly one() { return CPoly(1); }

    bool is_zero() const { return a.empty(); }
    bool is_constant() const { return a.size() <= 1; }
    int degree() const { return static_cast<int>(a.size()) - 1; } // -1 for zero
    void trim();

    const Rat& constant_term() const; // valid on constants (incl. zero)
    Rat eval(const Rat& at) const;

    CPoly operator-() const;
    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly l, const CPoly& r) { l += r; return l; }
    friend CPoly operator-(CPoly l, const CPoly& r) { l -= r; return l; }
    friend CPoly operator*(const CPoly& l, const CPoly& r);
    friend bool operator==(const CPoly& l, const CPoly& r) { return l.a == r.a; }
    friend bool operator!=(const CPoly& l, const CPoly& r) { return !(l == r); }
    bool operator<(const CPoly& o) const { return cmp(*this, o) < 0; } // arbitrary total order
    static int cmp(const CPoly& l, const CPoly& r);
};

CPoly cpoly_scale(const CPoly& p, const Rat& s);

// Euclidean tools (used by the fraction-free rank computation over Q[c]).
// divmod requires d != 0; exact_divide throws NotDivisible on a remainder.
void cpoly_divmod(const CPoly& n, const CPoly& d, CPoly& q, CPoly& r);
CPoly cpoly_gcd(CPoly x, CPoly y); // monic gcd, gcd(0,0) = 0
CPoly cpoly_exact_divide(const CPoly& n, const CPoly& d);

// Canonical text form, e.g. "3/2*c^2-c+1"; round-trips through cpoly_parse.
// Constants print as plain rationals so pure-rational coefficients keep the
// "p/q" wire format.
std::string cpoly_str(const CPoly& p);
CPoly cpoly_parse(const std::string& s);

} // namespace acx
