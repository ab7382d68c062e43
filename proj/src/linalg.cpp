#include "acx/linalg.hpp"

#include <algorithm>

#include "acx/errors.hpp"

namespace acx {

void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int upoly_degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Rat upoly_eval(const UPoly& p, const Rat& at) {
    Rat acc(0);
    for (size_t k = p.size(); k-- > 0;) acc = acc * at + p[k];
    return acc;
}

UPoly upoly_deriv(const UPoly& p) {
    UPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(Rat(static_cast<long>(k)) * p[k]);
    upoly_trim(d);
    return d;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    upoly_trim(r);
    return r;
}

void upoly_divmod(const UPoly& n, const UPoly& d, UPoly& q, UPoly& r) {
    if (d.empty()) throw MalformedInput("upoly division by zero");
    q.clear();
    r = n;
    upoly_trim(r);
    int dd = upoly_degree(d);
    while (upoly_degree(r) >= dd) {
        int shift = upoly_degree(r) - dd;
        Rat coef = r.back() / d.back();
        if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, Rat(0));
        q[shift] += coef;
        for (int k = 0; k <= dd; ++k) r[k + shift] -= coef * d[k];
        upoly_trim(r);
    }
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        UPoly q, r;
        upoly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        // monic normalization keeps coefficient growth in check
        if (!b.empty() && b.back() != 1) {
            Rat inv = 1 / b.back();
            for (auto& v : b) v *= inv;
        }
    }
    if (!a.empty() && a.back() != 1) {
        Rat inv = 1 / a.back();
        for (auto& v : a) v *= inv;
    }
    return a;
}

bool upoly_squarefree(const UPoly& p) {
    UPoly g = upoly_gcd(p, upoly_deriv(p));
    return upoly_degree(g) <= 0;
}

// ---- elimination -----------------------------------------------------------

RankKernel rank_kernel(const RatMat& m) {
    RankKernel out;
    out.rref = m;
    RatMat& a = out.rref;
    int r = 0;
    for (int c = 0; c < a.cols && r < a.rows; ++c) {
        int piv = -1;
        for (int k = r; k < a.rows; ++k)
            if (a(k, c) != 0) { piv = k; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols; ++j) std::swap(a(piv, j), a(r, j));
        Rat inv = 1 / a(r, c);
        for (int j = c; j < a.cols; ++j) a(r, j) *= inv;
        for (int k = 0; k < a.rows; ++k) {
            if (k == r || a(k, c) == 0) continue;
            Rat f = a(k, c);
            for (int j = c; j < a.cols; ++j) a(k, j) -= f * a(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    // canonical kernel basis: one vector per free column
    std::vector<bool> is_pivot(a.cols, false);
    for (int c : out.pivot_cols) is_pivot[c] = true;
    for (int c = 0; c < a.cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(a.cols, Rat(0));
        v[c] = 1;
        for (int k = 0; k < out.rank; ++k) v[out.pivot_cols[k]] = -a(k, c);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

int rank_of(const RatMat& m) { return rank_kernel(m).rank; }

Rat det(const RatMat& m) {
    if (!m.is_square()) throw MalformedInput("det of non-square matrix");
    RatMat a = m;
    Rat d(1);
    for (int c = 0; c < a.cols; ++c) {
        int piv = -1;
        for (int k = c; k < a.rows; ++k)
            if (a(k, c) != 0) { piv = k; break; }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            for (int j = 0; j < a.cols; ++j) std::swap(a(piv, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        Rat inv = 1 / a(c, c);
        for (int k = c + 1; k < a.rows; ++k) {
            if (a(k, c) == 0) continue;
            Rat f = a(k, c) * inv;
            for (int j = c; j < a.cols; ++j) a(k, j) -= f * a(c, j);
        }
    }
    return d;
}

std::optional<RatMat> inverse(const RatMat& m) {
    if (!m.is_square()) throw MalformedInput("inverse of non-square matrix");
    int n = m.rows;
    RatMat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RankKernel rk = rank_kernel(aug);
    // invertible iff every pivot lies in the left block, i.e. it reduced to I
    if (n > 0 && (static_cast<int>(rk.pivot_cols.size()) < n || rk.pivot_cols[n - 1] != n - 1))
        return std::nullopt;
    RatMat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv(r, c) = rk.rref(r, n + c);
    return inv;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    if (a.rows != static_cast<int>(b.size())) throw MalformedInput("solve: shape mismatch");
    RatMat aug(a.rows, a.cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug(r, c) = a(r, c);
        aug(r, a.cols) = b[r];
    }
    RankKernel rk = rank_kernel(aug);
    for (int c : rk.pivot_cols)
        if (c == a.cols) return std::nullopt; // inconsistent
    RatVec x(a.cols, Rat(0));
    for (int k = 0; k < rk.rank; ++k) x[rk.pivot_cols[k]] = rk.rref(k, a.cols);
    return x;
}

RatVec EchelonSpan::reduce(RatVec v) const {
    if (static_cast<int>(v.size()) != cols) throw MalformedInput("span: size mismatch");
    for (size_t k = 0; k < rows.size(); ++k) {
        const Rat& f = v[lead[k]];
        if (f == 0) continue;
        Rat fac = f; // copy; v is modified below
        for (int j = 0; j < cols; ++j)
            if (rows[k][j] != 0) v[j] -= fac * rows[k][j];
    }
    return v;
}

bool EchelonSpan::add(const RatVec& v) {
    RatVec r = reduce(v);
    int p = -1;
    for (int j = 0; j < cols; ++j)
        if (r[j] != 0) { p = j; break; }
    if (p < 0) return false;
    Rat inv = 1 / r[p];
    for (int j = 0; j < cols; ++j) r[j] *= inv;
    // back-substitute into existing rows so reduce() stays a full reduction
    for (size_t k = 0; k < rows.size(); ++k) {
        const Rat f = rows[k][p];
        if (f == 0) continue;
        for (int j = 0; j < cols; ++j)
            if (r[j] != 0) rows[k][j] -= f * r[j];
    }
    rows.push_back(std::move(r));
    lead.push_back(p);
    return true;
}

// ---- spectra ---------------------------------------------------------------

UPoly charpoly(const RatMat& a) {
    if (!a.is_square()) throw MalformedInput("charpoly of non-square matrix");
    int n = a.rows;
    UPoly c(n + 1, Rat(0));
    c[n] = 1;
    RatMat m(n, n); // starts at zero
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        for (int d = 0; d < n; ++d) m(d, d) += c[n - k + 1];
        Rat tr = (a * m).trace();
        c[n - k] = -tr / k;
    }
    return c;
}

bool has_distinct_eigenvalues(const RatMat& m) { return upoly_squarefree(charpoly(m)); }

namespace {

// Trial-division factorization; throws BoundExceeded on huge prime factors
// rather than silently looping.
std::vector<std::pair<Int, int>> factor_int(Int v) {
    std::vector<std::pair<Int, int>> fs;
    if (v < 0) v = -v;
    if (v <= 1) return fs;
    long steps = 0;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (v % p == 0) { v /= p; ++e; }
        if (e) fs.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    Int d = 5;
    while (d * d <= v) {
        if (++steps > 4000000) throw BoundExceeded("integer too hard to factor for root extraction");
        strip(d);
        strip(d + 2);
        d += 6;
    }
    if (v > 1) fs.emplace_back(v, 1);
    return fs;
}

void divisors_rec(const std::vector<std::pair<Int, int>>& fs, size_t k, const Int& cur,
                  const Int& cap, std::vector<Int>& out) {
    if (k == fs.size()) {
        out.push_back(cur);
        return;
    }
    Int v = cur;
    for (int e = 0; e <= fs[k].second; ++e) {
        if (v > cap) break;
        divisors_rec(fs, k + 1, v, cap, out);
        v *= fs[k].first;
    }
}

// divisors of |v| that are <= cap, ascending
std::vector<Int> bounded_divisors(const Int& v, const Int& cap) {
    std::vector<Int> out;
    divisors_rec(factor_int(v), 0, Int(1), cap, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<std::pair<Rat, int>> rational_roots_monic(const UPoly& p) {
    if (p.empty() || p.back() != 1) throw MalformedInput("rational_roots_monic wants a monic polynomial");
    int n = upoly_degree(p);
    // substitute t = u/D with D = lcm of denominators: q(u) = D^n p(u/D) is
    // monic with integer coefficients, so its rational roots are integers.
    Int D(1);
    for (const auto& c : p) D = lcm(D, c.get_den());
    std::vector<Int> q(n + 1);
    Int Dk(1);
    for (int k = n; k >= 0; --k) {
        Rat scaled = p[k] * Rat(Dk);
        q[k] = scaled.get_num(); // exact: den divides D^{n-k}
        Dk *= D;
    }

    std::vector<std::pair<Rat, int>> roots;
    // strip u^v
    int v = 0;
    while (v <= n && q[v] == 0) ++v;
    if (v > 0) {
        roots.emplace_back(Rat(0), v);
        q.erase(q.begin(), q.begin() + v);
        n -= v;
    }
    if (n > 0) {
        Int bound(1); // Cauchy bound for monic: 1 + max |a_k|
        for (int k = 0; k < n; ++k) bound = std::max(bound, Int(abs(q[k])));
        bound += 1;
        auto horner = [&](const std::vector<Int>& f, const Int& at) {
            Int acc = 0;
            for (size_t k = f.size(); k-- > 0;) acc = acc * at + f[k];
            return acc;
        };
        for (const Int& d : bounded_divisors(q[0], bound)) {
            for (int sign = 0; sign < 2; ++sign) {
                Int r = sign ? -d : d;
                int mult = 0;
                while (static_cast<int>(q.size()) > 1 && horner(q, r) == 0) {
                    // synthetic division by (u - r): stays monic integer
                    std::vector<Int> nq(q.size() - 1);
                    Int carry = q.back();
                    for (size_t k = q.size() - 1; k-- > 0;) {
                        nq[k] = carry;
                        carry = q[k] + carry * r;
                    }
                    q = std::move(nq);
                    ++mult;
                }
                if (mult) {
                    Rat root(r, D);
                    root.canonicalize();
                    roots.emplace_back(root, mult);
                }
            }
        }
        if (q.size() > 1) throw NonRationalSpectrum("characteristic polynomial has an irrational root");
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::vector<std::pair<Rat, int>> rational_spectrum(const RatMat& m) {
    return rational_roots_monic(charpoly(m));
}

} // namespace acx
