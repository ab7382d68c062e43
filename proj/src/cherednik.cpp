#include "acx/cherednik.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "acx/errors.hpp"

namespace acx {

void HElem::add_term(const PbwKey& k, const CPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

HElem h_zero(int n) { return HElem{n, {}}; }

HElem h_one(int n) {
    HElem h{n, {}};
    h.add_term({std::vector<int>(n, 0), Perm::identity(n), std::vector<int>(n, 0)}, CPoly::one());
    return h;
}

HElem h_x(int n, int i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    return h_term(n, e, Perm::identity(n), std::vector<int>(n, 0), CPoly::one());
}

HElem h_y(int n, int i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    return h_term(n, std::vector<int>(n, 0), Perm::identity(n), e, CPoly::one());
}

HElem h_w(const Perm& w) {
    int n = w.n();
    return h_term(n, std::vector<int>(n, 0), w, std::vector<int>(n, 0), CPoly::one());
}

HElem h_term(int n, std::vector<int> xExp, Perm w, std::vector<int> yExp, CPoly coef) {
    if (static_cast<int>(xExp.size()) != n || static_cast<int>(yExp.size()) != n || w.n() != n)
        throw MalformedInput("PBW term shape mismatch");
    HElem h{n, {}};
    h.add_term({std::move(xExp), std::move(w), std::move(yExp)}, coef);
    return h;
}

HElem h_symmetrizer(int n) {
    HElem h{n, {}};
    auto perms = all_perms(n);
    Rat inv = Rat(1) / Rat(static_cast<long>(perms.size()));
    for (const Perm& w : perms)
        h.add_term({std::vector<int>(n, 0), w, std::vector<int>(n, 0)}, CPoly(inv));
    return h;
}

HElem h_add(const HElem& a, const HElem& b) {
    if (a.n != b.n) throw MalformedInput("rank mismatch");
    HElem out = a;
    for (const auto& [k, c] : b.terms) out.add_term(k, c);
    return out;
}

HElem h_sub(const HElem& a, const HElem& b) { return h_add(a, h_neg(b)); }

HElem h_neg(const HElem& a) {
    HElem out{a.n, {}};
    for (const auto& [k, c] : a.terms) out.terms.emplace(k, -c);
    return out;
}

HElem h_scale(const HElem& a, const CPoly& s) {
    HElem out{a.n, {}};
    if (s.is_zero()) return out;
    for (const auto& [k, c] : a.terms) out.add_term(k, c * s);
    return out;
}

namespace {

std::vector<int> unit(int n, int i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    return e;
}

// memoized PBW form of y_i x^α
const HElem& core_y_monomial(int i, const std::vector<int>& alpha) {
    thread_local std::map<std::pair<int, std::vector<int>>, HElem> cache;
    auto key = std::make_pair(i, alpha);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int n = static_cast<int>(alpha.size());
    HElem out{n, {}};
    int j = -1;
    for (int k = 0; k < n; ++k)
        if (alpha[k] > 0) {
            j = k;
            break;
        }
    if (j < 0) {
        out.add_term({std::vector<int>(n, 0), Perm::identity(n), unit(n, i)}, CPoly::one());
    } else {
        std::vector<int> rest = alpha;
        --rest[j];
        // y_i x^α = x_j (y_i x^rest) + [y_i, x_j] x^rest
        for (const auto& [k, c] : core_y_monomial(i, rest).terms) {
            PbwKey bumped = k;
            ++bumped.x[j];
            out.add_term(bumped, c);
        }
        std::vector<int> none(n, 0);
        if (j != i) {
            Perm s = Perm::transposition(n, i, j);
            out.add_term({s.act_on_exponents(rest), s, none}, CPoly::c());
        } else {
            out.add_term({rest, Perm::identity(n), none}, CPoly::one());
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                Perm s = Perm::transposition(n, i, k);
                out.add_term({s.act_on_exponents(rest), s, none}, -CPoly::c());
            }
        }
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

// y_i · h for h already in PBW form
HElem y_left_mul(int i, const HElem& h) {
    HElem out{h.n, {}};
    for (const auto& [k, c] : h.terms) {
        Perm uinv = k.w.inverse();
        for (const auto& [ck, cc] : core_y_monomial(i, k.x).terms) {
            // (x^γ v y^δ) · u y^β = x^γ (v∘u) y^{u⁻¹·δ + β}
            std::vector<int> yE = uinv.act_on_exponents(ck.y);
            for (int t = 0; t < h.n; ++t) yE[t] += k.y[t];
            out.add_term({ck.x, perm_mul(ck.w, k.w), std::move(yE)}, c * cc);
        }
    }
    return out;
}

} // namespace

HElem normal_order_y_x(int n, const std::vector<int>& b, const std::vector<int>& a) {
    HElem out = h_term(n, a, Perm::identity(n), std::vector<int>(n, 0), CPoly::one());
    for (int i = n - 1; i >= 0; --i)
        for (int rep = 0; rep < b[i]; ++rep) out = y_left_mul(i, out);
    return out;
}

HElem h_mul(const HElem& a, const HElem& b) {
    if (a.n != b.n) throw MalformedInput("rank mismatch");
    int n = a.n;
    HElem out{n, {}};
    for (const auto& [kb, cb] : b.terms) {
        Perm w2inv = kb.w.inverse();
        for (const auto& [ka, ca] : a.terms) {
            CPoly c = ca * cb;
            // x^{a1} w1 y^{b1} · x^{a2} w2 y^{b2}
            //   = Σ x^{a1 + w1·α} (w1∘u∘w2) y^{w2⁻¹·β + b2}
            // over the PBW terms x^α u y^β of y^{b1} x^{a2}
            for (const auto& [km, cm] : normal_order_y_x(n, ka.y, kb.x).terms) {
                std::vector<int> xE = ka.w.act_on_exponents(km.x);
                for (int t = 0; t < n; ++t) xE[t] += ka.x[t];
                std::vector<int> yE = w2inv.act_on_exponents(km.y);
                for (int t = 0; t < n; ++t) yE[t] += kb.y[t];
                out.add_term({std::move(xE), perm_mul(perm_mul(ka.w, km.w), kb.w), std::move(yE)},
                             c * cm);
            }
        }
    }
    return out;
}

namespace {

void check_poly_vars(int n, const MPoly& f) {
    if (f.vars != xvars(n)) throw MalformedInput("polynomial must live in x1..xn");
}

// memoized y_i(x^α) in the induced module
const MPoly& y_act_monomial(int i, const std::vector<int>& alpha) {
    thread_local std::map<std::pair<int, std::vector<int>>, MPoly> cache;
    auto key = std::make_pair(i, alpha);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int n = static_cast<int>(alpha.size());
    auto vars = xvars(n);
    MPoly out(vars);
    int j = -1;
    for (int k = 0; k < n; ++k)
        if (alpha[k] > 0) {
            j = k;
            break;
        }
    if (j >= 0) {
        std::vector<int> rest = alpha;
        --rest[j];
        out = MPoly::variable(vars, j) * y_act_monomial(i, rest);
        if (j != i) {
            Perm s = Perm::transposition(n, i, j);
            out.add_term(s.act_on_exponents(rest), CPoly::c());
        } else {
            out.add_term(rest, CPoly::one());
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                Perm s = Perm::transposition(n, i, k);
                out.add_term(s.act_on_exponents(rest), -CPoly::c());
            }
        }
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

MPoly y_act(int i, const MPoly& f) {
    MPoly out(f.vars);
    for (const auto& [e, c] : f.terms) out = out + mpoly_scale(y_act_monomial(i, e), c);
    return out;
}

} // namespace

MPoly act_poly(const HElem& h, const MPoly& f) {
    check_poly_vars(h.n, f);
    MPoly out(f.vars);
    for (const auto& [k, c] : h.terms) {
        MPoly g = f;
        for (int i = 0; i < h.n; ++i)
            for (int rep = 0; rep < k.y[i]; ++rep) g = y_act(i, g);
        g = mpoly_permute_vars(g, k.w.img);
        g = g * MPoly::monomial(f.vars, k.x, CPoly::one());
        out = out + mpoly_scale(g, c);
    }
    return out;
}

MPoly dunkl(int i, const MPoly& f) {
    int n = f.nvars();
    check_poly_vars(n, f);
    if (i < 0 || i >= n) throw MalformedInput("dunkl index out of range");
    MPoly out = mpoly_derivative(f, i);
    MPoly diff(f.vars);
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Perm s = Perm::transposition(n, i, j);
        MPoly num = f - mpoly_permute_vars(f, s.img);
        if (num.is_zero()) continue;
        MPoly den = MPoly::variable(f.vars, i) - MPoly::variable(f.vars, j);
        diff = diff + mpoly_exact_divide(num, den);
    }
    return out - mpoly_scale(diff, CPoly::c());
}

MPoly symmetrize(const MPoly& f) {
    int n = f.nvars();
    MPoly out(f.vars);
    auto perms = all_perms(n);
    for (const Perm& w : perms) out = out + mpoly_permute_vars(f, w.img);
    return mpoly_scale(out, CPoly(Rat(1) / Rat(static_cast<long>(perms.size()))));
}

bool is_symmetric(const MPoly& f) {
    int n = f.nvars();
    for (int k = 0; k + 1 < n; ++k) {
        Perm s = Perm::transposition(n, k, k + 1);
        if (!(mpoly_permute_vars(f, s.img) == f)) return false;
    }
    return true;
}

MPoly spherical_act(const HElem& u, const MPoly& f) {
    if (!is_symmetric(f)) throw NotSymmetric("spherical action input is not symmetric");
    MPoly g = act_poly(u, f);
    if (!is_symmetric(g)) throw NotSymmetric("spherical action output is not symmetric");
    return g;
}

HElem fourier(const HElem& h) {
    HElem out{h.n, {}};
    for (const auto& [k, c] : h.terms) {
        // x^a w y^b ↦ y^a w (−x)^b = (−1)^{|b|} · w · y^{w⁻¹·a} x^b
        int deg = std::accumulate(k.y.begin(), k.y.end(), 0);
        CPoly s = (deg % 2 == 0) ? c : -c;
        for (const auto& [km, cm] : normal_order_y_x(h.n, k.w.inverse().act_on_exponents(k.x), k.y).terms)
            out.add_term({k.w.act_on_exponents(km.x), perm_mul(k.w, km.w), km.y}, s * cm);
    }
    return out;
}

namespace {

void exponent_pairs(int slots, int maxTotal, std::vector<int>& cur, int pos,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (pos == slots) {
        emit(cur);
        return;
    }
    int used = std::accumulate(cur.begin(), cur.begin() + pos, 0);
    for (int v = 0; v <= maxTotal - used; ++v) {
        cur[pos] = v;
        exponent_pairs(slots, maxTotal, cur, pos + 1, emit);
    }
    cur[pos] = 0;
}

} // namespace

long pbw_count(int n, int d) {
    if (n < 1 || d < 0) throw MalformedInput("pbw_count wants n >= 1, d >= 0");
    auto perms = all_perms(n);
    std::set<PbwKey> seen;
    long rank = 0;
    std::vector<int> cur(2 * n, 0);
    // products x^a · y^e · w: exact single PBW terms, one per basis monomial
    exponent_pairs(2 * n, d, cur, 0, [&](const std::vector<int>& ae) {
        std::vector<int> a(ae.begin(), ae.begin() + n), e(ae.begin() + n, ae.end());
        HElem hx = h_term(n, a, Perm::identity(n), std::vector<int>(n, 0), CPoly::one());
        HElem hy = h_term(n, std::vector<int>(n, 0), Perm::identity(n), e, CPoly::one());
        for (const Perm& w : perms) {
            HElem prod = h_mul(hx, h_mul(hy, h_w(w)));
            if (prod.terms.size() != 1)
                throw InternalInconsistency("x^a y^e w did not normal-order to one term");
            if (seen.insert(prod.terms.begin()->first).second) ++rank;
        }
    });
    // opposite order y^b · w · x^a: spans the same filtration piece, so every
    // support key must already be counted — a fresh key would mean the product
    // escaped the degree-d filtration
    exponent_pairs(2 * n, d, cur, 0, [&](const std::vector<int>& ba) {
        std::vector<int> b(ba.begin(), ba.begin() + n), a(ba.begin() + n, ba.end());
        HElem hy = h_term(n, std::vector<int>(n, 0), Perm::identity(n), b, CPoly::one());
        HElem hx = h_term(n, a, Perm::identity(n), std::vector<int>(n, 0), CPoly::one());
        for (const Perm& w : perms) {
            HElem prod = h_mul(h_mul(hy, h_w(w)), hx);
            for (const auto& [k, c] : prod.terms)
                if (seen.insert(k).second) ++rank;
        }
    });
    return rank;
}

std::string h_str(const HElem& h) {
    if (h.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : h.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << cpoly_str(c) << ")";
        for (int t = 0; t < h.n; ++t)
            if (k.x[t] > 0) {
                os << "*x" << t + 1;
                if (k.x[t] > 1) os << "^" << k.x[t];
            }
        if (!k.w.is_identity()) {
            os << "*[";
            for (int t = 0; t < h.n; ++t) os << (t ? " " : "") << k.w.of(t) + 1;
            os << "]";
        }
        for (int t = 0; t < h.n; ++t)
            if (k.y[t] > 0) {
                os << "*y" << t + 1;
                if (k.y[t] > 1) os << "^" << k.y[t];
            }
    }
    return os.str();
}

} // namespace acx
