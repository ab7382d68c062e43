#include "acx/variety.hpp"

#include <algorithm>
#include <deque>

#include "acx/errors.hpp"

namespace acx {

void Quad::validate() const {
    if (n < 0) throw MalformedInput("negative size");
    if (X.rows != n || X.cols != n || Y.rows != n || Y.cols != n)
        throw MalformedInput("X/Y must be n x n");
    if (static_cast<int>(i.size()) != n || static_cast<int>(j.size()) != n)
        throw MalformedInput("i/j must have length n");
}

RatMat moment(const Quad& q) {
    q.validate();
    return commutator(q.X, q.Y) + outer(q.i, q.j);
}

bool on_variety(const Quad& q) { return moment(q).is_zero(); }

Quad conjugate(const RatMat& g, const RatMat& gInv, const Quad& q) {
    Quad r;
    r.n = q.n;
    r.X = g * q.X * gInv;
    r.Y = g * q.Y * gInv;
    r.i = g * q.i;
    r.j = row_times_mat(q.j, gInv);
    return r;
}

std::vector<RatVec> cyclic_subspace(const RatMat& X, const RatMat& Y, const RatVec& i) {
    int n = X.rows;
    EchelonSpan span(n);
    std::vector<RatVec> basis;
    std::deque<RatVec> queue;
    if (span.add(i)) {
        basis.push_back(i);
        queue.push_back(i);
    }
    while (!queue.empty()) {
        RatVec v = queue.front();
        queue.pop_front();
        for (const RatMat* M : {&X, &Y}) {
            RatVec u = (*M) * v;
            if (span.add(u)) {
                basis.push_back(u);
                queue.push_back(u);
            }
        }
    }
    return basis;
}

std::vector<RatVec> co_cyclic_subspace(const RatVec& j, const RatMat& X, const RatMat& Y) {
    int n = X.rows;
    EchelonSpan span(n);
    std::vector<RatVec> basis;
    std::deque<RatVec> queue;
    if (span.add(j)) {
        basis.push_back(j);
        queue.push_back(j);
    }
    while (!queue.empty()) {
        RatVec v = queue.front();
        queue.pop_front();
        for (const RatMat* M : {&X, &Y}) {
            RatVec u = row_times_mat(v, *M);
            if (span.add(u)) {
                basis.push_back(u);
                queue.push_back(u);
            }
        }
    }
    return basis;
}

bool pairing_vanishes(const Quad& q) {
    if (!on_variety(q)) throw NotOnVariety("pairing check needs [X,Y] + i*j = 0");
    for (const RatVec& v : cyclic_subspace(q.X, q.Y, q.i)) {
        Rat dot(0);
        for (int k = 0; k < q.n; ++k) dot += q.j[k] * v[k];
        if (dot != 0) return false;
    }
    return true;
}

Quad normal_form(const NormalFormParams& p) {
    int n = static_cast<int>(p.y.size());
    if (static_cast<int>(p.x.size()) != n) throw MalformedInput("x and y must have equal length");
    if (!(0 <= p.kPrime && p.kPrime <= p.kDoublePrime && p.kDoublePrime <= n))
        throw MalformedInput("need 0 <= k' <= k'' <= n");
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            if (p.y[r] == p.y[s]) throw MalformedInput("y entries must be pairwise distinct");
    Quad q;
    q.n = n;
    q.Y = diag(p.y);
    q.X = RatMat(n, n);
    q.i = zero_vec(n);
    q.j = zero_vec(n);
    for (int r = 0; r < n; ++r) q.X(r, r) = p.x[r];
    // 1-based statement: X_rs = 1/(y_r - y_s) for r > k'' and s <= k'
    for (int r = p.kDoublePrime; r < n; ++r)
        for (int s = 0; s < p.kPrime; ++s) q.X(r, s) = 1 / (p.y[r] - p.y[s]);
    for (int r = p.kDoublePrime; r < n; ++r) q.i[r] = 1;
    for (int s = 0; s < p.kPrime; ++s) q.j[s] = 1;
    return q;
}

Classification classify_generic(const Quad& q) {
    if (!on_variety(q)) throw NotOnVariety("classification needs [X,Y] + i*j = 0");
    if (!has_distinct_eigenvalues(q.Y)) throw NonGeneric("Y must have distinct eigenvalues");
    Classification c;
    c.dimCyclic = static_cast<int>(cyclic_subspace(q.X, q.Y, q.i).size());
    c.dimCoCyclic = static_cast<int>(co_cyclic_subspace(q.j, q.X, q.Y).size());
    int total = c.dimCyclic + c.dimCoCyclic;
    if (total > q.n)
        throw InternalInconsistency("dim C[X,Y]i + dim jC[X,Y] exceeds n on the variety");
    c.component = (total == q.n);
    c.k = c.component ? c.dimCoCyclic : -1;
    return c;
}

bool is_nil_point(const Quad& q) {
    return on_variety(q) && mat_pow(q.Y, q.n).is_zero();
}

Quad jordan_block_solve(const Rat& z, int n, int m, const RatVec& jTail, const RatVec& firstRow) {
    if (m < 0 || m > n) throw MalformedInput("need 0 <= m <= n");
    if (static_cast<int>(jTail.size()) != n - m) throw MalformedInput("jTail must have length n-m");
    if (static_cast<int>(firstRow.size()) != n) throw MalformedInput("firstRow must have length n");
    Quad q;
    q.n = n;
    q.X = RatMat(n, n);
    for (int r = 0; r < n; ++r) {
        q.X(r, r) = z;
        if (r + 1 < n) q.X(r, r + 1) = 1;
    }
    q.i = zero_vec(n);
    for (int r = 0; r < m; ++r) q.i[r] = 1;
    q.j = zero_vec(n);
    for (int s = m; s < n; ++s) q.j[s] = jTail[s - m];
    q.Y = RatMat(n, n);
    for (int s = 0; s < n; ++s) q.Y(0, s) = firstRow[s];
    // forced recursion Y_{r,s} = Y_{r-1,s-1} - i_{r-1} j_s (column 0 of the
    // previous row reads as 0)
    for (int r = 1; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            Rat prev = (s == 0) ? Rat(0) : q.Y(r - 1, s - 1);
            q.Y(r, s) = prev - q.i[r - 1] * q.j[s];
        }
    return q;
}

namespace {

// vec(M) row-major
RatVec flatten(const RatMat& m) { return m.a; }

// linear map A ↦ [A, X] as an n²×n² matrix acting on vec(A)
RatMat ad_matrix(const RatMat& X) {
    int n = X.rows;
    RatMat L(n * n, n * n);
    // [A,X]_{rs} = sum_k A_{rk} X_{ks} - X_{rk} A_{ks}
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int k = 0; k < n; ++k) {
                L(r * n + s, r * n + k) += X(k, s);
                L(r * n + s, k * n + s) -= X(r, k);
            }
    return L;
}

} // namespace

bool is_regular(const RatMat& X) {
    if (!X.is_square()) throw MalformedInput("is_regular wants a square matrix");
    RankKernel rk = rank_kernel(ad_matrix(X));
    return static_cast<int>(rk.kernel.size()) == X.rows;
}

namespace {

struct EigenDecomp {
    std::vector<std::pair<Rat, int>> spec; // ascending (eigenvalue, multiplicity)
    RatMat B;                              // columns: concatenated generalized eigenbases
    RatMat Binv;
    std::vector<int> offset;               // column offset of each block in B
};

EigenDecomp eigen_decompose(const RatMat& X) {
    EigenDecomp d;
    d.spec = rational_spectrum(X);
    int n = X.rows;
    d.B = RatMat(n, n);
    int col = 0;
    for (const auto& [z, mult] : d.spec) {
        d.offset.push_back(col);
        RatMat shifted = X;
        for (int k = 0; k < n; ++k) shifted(k, k) -= z;
        RankKernel rk = rank_kernel(mat_pow(shifted, mult));
        if (static_cast<int>(rk.kernel.size()) != mult)
            throw InternalInconsistency("generalized eigenspace dimension mismatch");
        for (const RatVec& v : rk.kernel) {
            for (int r = 0; r < n; ++r) d.B(r, col) = v[r];
            ++col;
        }
    }
    if (col != n) throw InternalInconsistency("eigen-decomposition incomplete");
    auto inv = inverse(d.B);
    if (!inv) throw InternalInconsistency("eigenbasis not invertible");
    d.Binv = *inv;
    return d;
}

} // namespace

StratumLabel stratum(const RatMat& X, const RatVec& i) {
    if (!X.is_square() || X.rows != static_cast<int>(i.size()))
        throw MalformedInput("stratum: shape mismatch");
    EigenDecomp d = eigen_decompose(X);
    int n = X.rows;
    RatVec coords = d.Binv * i;
    StratumLabel out;
    out.regular = true;
    out.relevant = true;
    for (size_t t = 0; t < d.spec.size(); ++t) {
        const auto& [z, mult] = d.spec[t];
        BlockInfo b;
        b.eigenvalue = z;
        b.size = mult;
        RatMat shifted = X;
        for (int k = 0; k < n; ++k) shifted(k, k) -= z;
        b.geomMult = n - rank_of(shifted);
        if (b.geomMult != 1) out.regular = false;
        // component of i in this generalized eigenspace
        RatVec iz = zero_vec(n);
        for (int c = 0; c < mult; ++c) {
            int col = d.offset[t] + c;
            if (coords[col] == 0) continue;
            for (int r = 0; r < n; ++r) iz[r] += coords[col] * d.B(r, col);
        }
        int h = 0;
        RatVec w = iz;
        while (!vec_is_zero(w)) {
            w = shifted * w;
            ++h;
            if (h > mult) throw InternalInconsistency("i-component height exceeds block size");
        }
        b.iHeight = h;
        if (h != 0 && h != mult) out.relevant = false;
        out.blocks.push_back(std::move(b));
    }
    if (!out.regular) out.relevant = false;
    return out;
}

bool is_relevant(const RatMat& X, const RatVec& i) { return stratum(X, i).relevant; }

ConormalSpace conormal_space(const RatMat& X, const RatVec& i) {
    if (!X.is_square() || X.rows != static_cast<int>(i.size()))
        throw MalformedInput("conormal_space: shape mismatch");
    int n = X.rows;
    EigenDecomp d = eigen_decompose(X);
    int l = static_cast<int>(d.spec.size());
    // unknowns: vec(Y) (n²) then j (n)
    RatMat sys(n * n + l, n * n + n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            int row = r * n + s;
            // [X,Y]_{rs} = sum_k X_{rk} Y_{ks} - Y_{rk} X_{ks}
            for (int k = 0; k < n; ++k) {
                sys(row, k * n + s) += X(r, k);
                sys(row, r * n + k) -= X(k, s);
            }
            sys(row, n * n + s) += i[r]; // (i⊗j)_{rs} = i_r j_s
        }
    for (int t = 0; t < l; ++t) {
        // projector P_t = B D_t B⁻¹; Tr(P Y) = sum_{r,k} P_{rk} Y_{kr}
        RatMat D(n, n);
        for (int c = 0; c < d.spec[t].second; ++c) D(d.offset[t] + c, d.offset[t] + c) = 1;
        RatMat P = d.B * D * d.Binv;
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) sys(n * n + t, k * n + r) += P(r, k);
    }
    RankKernel rk = rank_kernel(sys);
    ConormalSpace cs;
    cs.n = n;
    cs.paramDim = static_cast<int>(rk.kernel.size());
    for (const RatVec& v : rk.kernel) {
        RatMat Y(n, n);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) Y(r, s) = v[r * n + s];
        RatVec j(v.begin() + n * n, v.end());
        cs.Ybasis.push_back(std::move(Y));
        cs.jbasis.push_back(std::move(j));
    }
    return cs;
}

bool all_Y_nilpotent(const ConormalSpace& cs) {
    if (cs.paramDim == 0) return true; // only Y = 0
    auto vars = tvars(cs.paramDim);
    MPolyMat Ygen(cs.n, std::vector<MPoly>(cs.n, MPoly(vars)));
    for (int p = 0; p < cs.paramDim; ++p)
        for (int r = 0; r < cs.n; ++r)
            for (int s = 0; s < cs.n; ++s) {
                const Rat& coef = cs.Ybasis[p](r, s);
                if (coef != 0) Ygen[r][s].add_term(MPoly::variable(vars, p).terms.begin()->first, CPoly(coef));
            }
    MPolyMat power = Ygen;
    for (int m = 1; m <= cs.n; ++m) {
        if (!mpmat_trace(power).is_zero()) return false;
        if (m < cs.n) power = mpmat_mul(power, Ygen);
    }
    return true;
}

Triangularization simultaneous_triangularize(const RatMat& X, const RatMat& Y) {
    if (!X.is_square() || !Y.is_square() || X.rows != Y.rows)
        throw MalformedInput("triangularize: shape mismatch");
    int n = X.rows;
    RatMat U = RatMat::identity(n);
    RatMat Uinv = RatMat::identity(n);
    RatMat Xf = X, Yf = Y;
    for (int d = 0; d + 1 < n; ++d) {
        int m = n - d;
        RatMat Xc(m, m), Yc(m, m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                Xc(r, c) = Xf(d + r, d + c);
                Yc(r, c) = Yf(d + r, d + c);
            }
        auto specY = rational_spectrum(Yc);
        auto specX = rational_spectrum(Xc);
        RatVec v;
        bool found = false;
        for (const auto& [lam, lm] : specY) {
            for (const auto& [mu, mm] : specX) {
                RatMat stacked(2 * m, m);
                for (int r = 0; r < m; ++r)
                    for (int c = 0; c < m; ++c) {
                        stacked(r, c) = Yc(r, c) - (r == c ? lam : Rat(0));
                        stacked(m + r, c) = Xc(r, c) - (r == c ? mu : Rat(0));
                    }
                RankKernel rk = rank_kernel(stacked);
                if (!rk.kernel.empty()) {
                    v = rk.kernel[0];
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) throw NoCommonFlag("no common eigenvector at stage " + std::to_string(d));
        int p = 0;
        while (v[p] == 0) ++p;
        Rat inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        // basis of the active block: v first, then the standard vectors
        // except e_p (so the change of basis is unimodular up to sign)
        RatMat B = RatMat::identity(n);
        RatMat Binv = RatMat::identity(n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                B(d + r, d + c) = 0;
                Binv(d + r, d + c) = 0;
            }
        for (int r = 0; r < m; ++r) B(d + r, d + 0) = v[r];
        int col = 1;
        for (int k = 0; k < m; ++k) {
            if (k == p) continue;
            B(d + k, d + col) = 1;
            ++col;
        }
        // inverse of [v | e_{k≠p}]: row p reads off the v-coordinate
        Binv(d + 0, d + p) = 1 / v[p]; // = 1 after normalization
        col = 1;
        for (int k = 0; k < m; ++k) {
            if (k == p) continue;
            Binv(d + col, d + k) = 1;
            Binv(d + col, d + p) = -v[k] / v[p];
            ++col;
        }
        Xf = Binv * Xf * B;
        Yf = Binv * Yf * B;
        U = U * B;
        Uinv = Binv * Uinv;
    }
    Triangularization t;
    t.g = Uinv;
    t.gInv = U;
    t.Xup = Xf;
    t.Yup = Yf;
    if (!t.Xup.is_upper_triangular() || !t.Yup.is_upper_triangular())
        throw NoCommonFlag("flag does not triangularize the pair");
    return t;
}

std::vector<std::pair<Rat, Rat>> spec_pairs(const RatMat& X, const RatMat& Y) {
    Triangularization t = simultaneous_triangularize(X, Y);
    std::vector<std::pair<Rat, Rat>> out;
    for (int k = 0; k < X.rows; ++k) out.emplace_back(t.Xup(k, k), t.Yup(k, k));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

Quad epsilon(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw MalformedInput("epsilon: size mismatch");
    Quad q;
    q.n = static_cast<int>(x.size());
    q.X = diag(x);
    q.Y = diag(y);
    q.i = RatVec(q.n, Rat(1));
    q.j = zero_vec(q.n);
    return q;
}

namespace {

// f(X, Y) with the fixed monomial lift x^p y^q ↦ X^p Y^q
RatMat eval_matrix_poly(const MPoly& f, const RatMat& X, const RatMat& Y) {
    if (f.vars != std::vector<std::string>{"x", "y"})
        throw MalformedInput("matrix polynomial must have variables x, y");
    if (f.depends_on_c()) throw MalformedInput("matrix polynomial must have rational coefficients");
    int n = X.rows;
    int dx = std::max(f.degree_in(0), 0), dy = std::max(f.degree_in(1), 0);
    std::vector<RatMat> Xp{RatMat::identity(n)}, Yp{RatMat::identity(n)};
    for (int k = 1; k <= dx; ++k) Xp.push_back(Xp.back() * X);
    for (int k = 1; k <= dy; ++k) Yp.push_back(Yp.back() * Y);
    RatMat acc(n, n);
    for (const auto& [e, c] : f.terms) acc = acc + c.constant_term() * (Xp[e[0]] * Yp[e[1]]);
    return acc;
}

} // namespace

Rat psi(const std::vector<MPoly>& fs, const Quad& q) {
    q.validate();
    if (static_cast<int>(fs.size()) != q.n) throw MalformedInput("psi needs n polynomials");
    RatMat cols(q.n, q.n);
    for (int t = 0; t < q.n; ++t) {
        RatVec v = eval_matrix_poly(fs[t], q.X, q.Y) * q.i;
        for (int r = 0; r < q.n; ++r) cols(r, t) = v[r];
    }
    return det(cols);
}

Rat phi(const std::vector<MPoly>& fs, const Quad& q) {
    q.validate();
    if (static_cast<int>(fs.size()) != q.n) throw MalformedInput("phi needs n polynomials");
    RatMat rows(q.n, q.n);
    for (int t = 0; t < q.n; ++t) {
        RatVec v = row_times_mat(q.j, eval_matrix_poly(fs[t], q.X, q.Y));
        for (int s = 0; s < q.n; ++s) rows(t, s) = v[s];
    }
    return det(rows);
}

Rat trace_word(const std::string& word, const Quad& q, bool zAsOuter) {
    q.validate();
    RatMat Z = zAsOuter ? outer(q.i, q.j) : Rat(-1) * commutator(q.X, q.Y);
    RatMat acc = RatMat::identity(q.n);
    for (char ch : word) {
        switch (ch) {
            case 'X': acc = acc * q.X; break;
            case 'Y': acc = acc * q.Y; break;
            case 'Z': acc = acc * Z; break;
            default: throw MalformedInput("word may only contain X, Y, Z");
        }
    }
    return acc.trace();
}

int parametrization_jacobian_rank(const RatVec& x, const RatVec& y, int k) {
    int n = static_cast<int>(x.size());
    NormalFormParams p{x, y, k, k};
    Quad q = normal_form(p);
    int tangentLen = 2 * n * n + 2 * n;
    RatMat jac(tangentLen, n * n + 2 * n);
    int col = 0;
    auto put = [&](const RatMat& dX, const RatMat& dY, const RatVec& di, const RatVec& dj) {
        int row = 0;
        for (const auto& v : dX.a) jac(row++, col) = v;
        for (const auto& v : dY.a) jac(row++, col) = v;
        for (const auto& v : di) jac(row++, col) = v;
        for (const auto& v : dj) jac(row++, col) = v;
        ++col;
    };
    // conjugation directions: d/dt (1+tA)·q·(1-tA)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            RatMat A(n, n);
            A(a, b) = 1;
            put(commutator(A, q.X), commutator(A, q.Y), A * q.i,
                vec_scale(Rat(-1), row_times_mat(q.j, A)));
        }
    RatMat zero(n, n);
    // x_r directions
    for (int r = 0; r < n; ++r) {
        RatMat dX(n, n);
        dX(r, r) = 1;
        put(dX, zero, zero_vec(n), zero_vec(n));
    }
    // y_r directions: d/dy_r of X_{ab} = 1/(y_a - y_b) over a > k'' = k, b <= k' = k,
    // plus dY = E_rr
    for (int r = 0; r < n; ++r) {
        RatMat dX(n, n);
        for (int a = k; a < n; ++a)
            for (int b = 0; b < k; ++b) {
                Rat delta = Rat((r == a) ? 1 : 0) - Rat((r == b) ? 1 : 0);
                if (delta != 0) {
                    Rat diff = y[a] - y[b];
                    dX(a, b) = -delta / (diff * diff);
                }
            }
        RatMat dY(n, n);
        dY(r, r) = 1;
        put(dX, dY, zero_vec(n), zero_vec(n));
    }
    return rank_of(jac);
}

int stabilizer_dim(const Quad& q) {
    q.validate();
    int n = q.n;
    RatMat sys(2 * n * n + 2 * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int col = a * n + b;
            RatMat A(n, n);
            A(a, b) = 1;
            RatMat cx = commutator(A, q.X), cy = commutator(A, q.Y);
            RatVec ai = A * q.i, ja = row_times_mat(q.j, A);
            int row = 0;
            for (const auto& v : cx.a) sys(row++, col) = v;
            for (const auto& v : cy.a) sys(row++, col) = v;
            for (const auto& v : ai) sys(row++, col) = v;
            for (const auto& v : ja) sys(row++, col) = v;
        }
    return static_cast<int>(rank_kernel(sys).kernel.size());
}

} // namespace acx
