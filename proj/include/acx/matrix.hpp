#pragma once
#include <initializer_list>
#include <vector>

#include "acx/rational.hpp"

namespace acx {

using RatVec = std::vector<Rat>;

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& s, const RatVec& v);
bool vec_is_zero(const RatVec& v);
RatVec zero_vec(int n);

// Dense exact rational matrix, row-major.
struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}
    RatMat(std::initializer_list<std::initializer_list<Rat>> init);

    Rat& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool is_zero() const;
    bool is_square() const { return rows == cols; }
    bool is_upper_triangular() const;

    static RatMat identity(int n);
    RatMat transpose() const;
    Rat trace() const;

    friend RatMat operator+(const RatMat& l, const RatMat& r);
    friend RatMat operator-(const RatMat& l, const RatMat& r);
    friend RatMat operator*(const RatMat& l, const RatMat& r);
    friend RatMat operator*(const Rat& s, const RatMat& m);
    friend RatVec operator*(const RatMat& m, const RatVec& v);
    friend bool operator==(const RatMat& l, const RatMat& r);
    friend bool operator!=(const RatMat& l, const RatMat& r) { return !(l == r); }
};

RatMat mat_pow(const RatMat& m, int e);
RatMat commutator(const RatMat& x, const RatMat& y);
RatMat outer(const RatVec& col, const RatVec& row); // col ⊗ row
RatVec row_times_mat(const RatVec& row, const RatMat& m);
RatMat diag(const RatVec& d);

} // namespace acx
