#include "acx/matrix.hpp"

namespace acx {

RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw MalformedInput("vector size mismatch");
    RatVec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw MalformedInput("vector size mismatch");
    RatVec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

RatVec vec_scale(const Rat& s, const RatVec& v) {
    RatVec r(v.size());
    for (size_t k = 0; k < v.size(); ++k) r[k] = s * v[k];
    return r;
}

bool vec_is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

RatVec zero_vec(int n) { return RatVec(static_cast<size_t>(n), Rat(0)); }

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows = static_cast<int>(init.size());
    cols = rows ? static_cast<int>(init.begin()->size()) : 0;
    a.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols) throw MalformedInput("ragged matrix literal");
        for (const auto& v : row) a.push_back(v);
    }
}

bool RatMat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

bool RatMat::is_upper_triangular() const {
    for (int r = 1; r < rows; ++r)
        for (int c = 0; c < r && c < cols; ++c)
            if ((*this)(r, c) != 0) return false;
    return true;
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

RatMat RatMat::transpose() const {
    RatMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Rat RatMat::trace() const {
    if (!is_square()) throw MalformedInput("trace of non-square matrix");
    Rat t(0);
    for (int k = 0; k < rows; ++k) t += (*this)(k, k);
    return t;
}

RatMat operator+(const RatMat& l, const RatMat& r) {
    if (l.rows != r.rows || l.cols != r.cols) throw MalformedInput("matrix shape mismatch in +");
    RatMat m(l.rows, l.cols);
    for (size_t k = 0; k < l.a.size(); ++k) m.a[k] = l.a[k] + r.a[k];
    return m;
}

RatMat operator-(const RatMat& l, const RatMat& r) {
    if (l.rows != r.rows || l.cols != r.cols) throw MalformedInput("matrix shape mismatch in -");
    RatMat m(l.rows, l.cols);
    for (size_t k = 0; k < l.a.size(); ++k) m.a[k] = l.a[k] - r.a[k];
    return m;
}

RatMat operator*(const RatMat& l, const RatMat& r) {
    if (l.cols != r.rows) throw MalformedInput("matrix shape mismatch in *");
    RatMat m(l.rows, r.cols);
    for (int i = 0; i < l.rows; ++i)
        for (int k = 0; k < l.cols; ++k) {
            const Rat& lv = l(i, k);
            if (lv == 0) continue;
            for (int j = 0; j < r.cols; ++j) {
                if (r(k, j) == 0) continue;
                m(i, j) += lv * r(k, j);
            }
        }
    return m;
}

RatMat operator*(const Rat& s, const RatMat& m) {
    RatMat r = m;
    for (auto& x : r.a) x *= s;
    return r;
}

RatVec operator*(const RatMat& m, const RatVec& v) {
    if (m.cols != static_cast<int>(v.size())) throw MalformedInput("matrix/vector shape mismatch");
    RatVec r(m.rows, Rat(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m(i, j) != 0 && v[j] != 0) r[i] += m(i, j) * v[j];
    return r;
}

bool operator==(const RatMat& l, const RatMat& r) {
    return l.rows == r.rows && l.cols == r.cols && l.a == r.a;
}

RatMat mat_pow(const RatMat& m, int e) {
    if (!m.is_square()) throw MalformedInput("power of non-square matrix");
    if (e < 0) throw MalformedInput("negative matrix power");
    RatMat acc = RatMat::identity(m.rows);
    for (int k = 0; k < e; ++k) acc = acc * m;
    return acc;
}

RatMat commutator(const RatMat& x, const RatMat& y) { return x * y - y * x; }

RatMat outer(const RatVec& col, const RatVec& row) {
    RatMat m(static_cast<int>(col.size()), static_cast<int>(row.size()));
    for (int r = 0; r < m.rows; ++r) {
        if (col[r] == 0) continue;
        for (int c = 0; c < m.cols; ++c) m(r, c) = col[r] * row[c];
    }
    return m;
}

RatVec row_times_mat(const RatVec& row, const RatMat& m) {
    if (static_cast<int>(row.size()) != m.rows) throw MalformedInput("row/matrix shape mismatch");
    RatVec r(m.cols, Rat(0));
    for (int i = 0; i < m.rows; ++i) {
        if (row[i] == 0) continue;
        for (int j = 0; j < m.cols; ++j)
            if (m(i, j) != 0) r[j] += row[i] * m(i, j);
    }
    return r;
}

RatMat diag(const RatVec& d) {
    RatMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t k = 0; k < d.size(); ++k) m(static_cast<int>(k), static_cast<int>(k)) = d[k];
    return m;
}

} // namespace acx
