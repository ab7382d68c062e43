#pragma once
#include <vector>

#include "acx/errors.hpp"

namespace acx {

// Permutation of {0, .., n-1}, stored as the image table img[k] = w(k).
//
// COMPOSITION CONVENTION (the single place it is fixed): perm_mul(a, b) is
// the function composition a∘b, i.e. "apply b first, then a". This matches
// left-module semantics: permutations act on the left on polynomials and on
// exponent vectors, and (a·b)·f == a·(b·f) holds with this definition. The
// rewriting rules of the rational Cherednik algebra (w·x_k = x_{w(k)}·w and
// the commutators below) are only consistent with this convention, so every
// other file uses perm_mul / Perm::of and never composes by hand.
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(int n) : img(n) { for (int k = 0; k < n; ++k) img[k] = k; }

    int n() const { return static_cast<int>(img.size()); }
    int of(int k) const { return img[k]; }
    bool is_identity() const;

    static Perm identity(int n) { return Perm(n); }
    static Perm transposition(int n, int a, int b);

    Perm inverse() const;
    int sign() const;

    // Left action on exponent vectors: (w·e)[w(k)] = e[k], so that the
    // monomial x^e is mapped to x^{w·e} and w·x_k = x_{w(k)}.
    std::vector<int> act_on_exponents(const std::vector<int>& e) const;

    friend bool operator==(const Perm& l, const Perm& r) { return l.img == r.img; }
    friend bool operator!=(const Perm& l, const Perm& r) { return !(l == r); }
    friend bool operator<(const Perm& l, const Perm& r) { return l.img < r.img; }
};

Perm perm_mul(const Perm& a, const Perm& b); // a∘b: apply b, then a

// All n! permutations in lexicographic image order (identity first).
std::vector<Perm> all_perms(int n);

} // namespace acx
