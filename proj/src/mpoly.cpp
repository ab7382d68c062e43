#include "acx/mpoly.hpp"

#include <algorithm>

#include "acx/errors.hpp"

namespace acx {

namespace {
void check_same_ring(const MPoly& l, const MPoly& r) {
    if (l.vars != r.vars) throw MalformedInput("polynomial ring mismatch");
}
} // namespace

MPoly MPoly::constant(std::vector<std::string> vars, const CPoly& c) {
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.terms.emplace(std::vector<int>(p.vars.size(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, int index, int power) {
    MPoly p(std::move(vars));
    if (index < 0 || index >= p.nvars()) throw MalformedInput("variable index out of range");
    if (power < 0) throw MalformedInput("negative exponent");
    std::vector<int> e(p.vars.size(), 0);
    e[index] = power;
    p.terms.emplace(std::move(e), CPoly::one());
    return p;
}

MPoly MPoly::monomial(std::vector<std::string> vars, std::vector<int> exps, const CPoly& c) {
    MPoly p(std::move(vars));
    if (exps.size() != p.vars.size()) throw MalformedInput("exponent vector size mismatch");
    for (int v : exps)
        if (v < 0) throw MalformedInput("negative exponent");
    if (!c.is_zero()) p.terms.emplace(std::move(exps), c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    for (int v : terms.begin()->first)
        if (v != 0) return false;
    return true;
}

int MPoly::total_degree() const {
    if (terms.empty()) return -1;
    // leading term has maximal total degree under grlex
    int d = 0;
    for (int v : terms.begin()->first) d += v;
    return d;
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[var]);
    return terms.empty() ? -1 : d;
}

bool MPoly::depends_on_c() const {
    for (const auto& [e, c] : terms)
        if (!c.is_constant()) return true;
    return false;
}

void MPoly::add_term(const std::vector<int>& e, const CPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(vars);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

MPoly operator+(const MPoly& l, const MPoly& r) {
    check_same_ring(l, r);
    MPoly out = l;
    for (const auto& [e, c] : r.terms) out.add_term(e, c);
    return out;
}

MPoly operator-(const MPoly& l, const MPoly& r) {
    check_same_ring(l, r);
    MPoly out = l;
    for (const auto& [e, c] : r.terms) out.add_term(e, -c);
    return out;
}

MPoly operator*(const MPoly& l, const MPoly& r) {
    check_same_ring(l, r);
    MPoly out(l.vars);
    std::vector<int> e(l.vars.size());
    for (const auto& [el, cl] : l.terms)
        for (const auto& [er, cr] : r.terms) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = el[k] + er[k];
            out.add_term(e, cl * cr);
        }
    return out;
}

MPoly mpoly_scale(const MPoly& p, const CPoly& s) {
    MPoly out(p.vars);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : p.terms) out.terms.emplace(e, c * s);
    return out;
}

MPoly mpoly_pow(const MPoly& p, int e) {
    if (e < 0) throw MalformedInput("negative polynomial power");
    MPoly acc = MPoly::constant(p.vars, Rat(1));
    for (int k = 0; k < e; ++k) acc = acc * p;
    return acc;
}

CPoly mpoly_eval(const MPoly& p, const RatVec& at) {
    if (at.size() != p.vars.size()) throw MalformedInput("evaluation point size mismatch");
    CPoly acc;
    for (const auto& [e, c] : p.terms) {
        Rat m(1);
        for (size_t k = 0; k < e.size(); ++k)
            for (int t = 0; t < e[k]; ++t) m *= at[k];
        acc += cpoly_scale(c, m);
    }
    return acc;
}

Rat mpoly_eval_rat(const MPoly& p, const RatVec& at) {
    CPoly v = mpoly_eval(p, at);
    if (!v.is_constant()) throw MalformedInput("polynomial still depends on c");
    return v.constant_term();
}

MPoly mpoly_permute_vars(const MPoly& p, const std::vector<int>& mapping) {
    if (mapping.size() != p.vars.size()) throw MalformedInput("variable mapping size mismatch");
    MPoly out(p.vars);
    std::vector<int> e(p.vars.size());
    for (const auto& [el, c] : p.terms) {
        for (size_t k = 0; k < e.size(); ++k) e[mapping[k]] = el[k];
        out.add_term(e, c);
    }
    return out;
}

MPoly mpoly_derivative(const MPoly& p, int var) {
    if (var < 0 || var >= p.nvars()) throw MalformedInput("derivative variable out of range");
    MPoly out(p.vars);
    for (const auto& [e, c] : p.terms) {
        if (e[var] == 0) continue;
        std::vector<int> ne = e;
        ne[var] -= 1;
        out.add_term(ne, cpoly_scale(c, Rat(e[var])));
    }
    return out;
}

MPoly mpoly_exact_divide(const MPoly& n, const MPoly& d) {
    check_same_ring(n, d);
    if (d.is_zero()) throw MalformedInput("polynomial division by zero");
    MPoly q(n.vars);
    MPoly r = n;
    const auto& dlead = *d.terms.begin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms.begin();
        std::vector<int> e(r.vars.size());
        for (size_t k = 0; k < e.size(); ++k) {
            e[k] = rlead.first[k] - dlead.first[k];
            // if n is a multiple of d, every intermediate remainder is too,
            // so its leading term must be divisible by d's leading term
            if (e[k] < 0) throw NotDivisible("leading monomial not divisible");
        }
        if (!dlead.second.is_constant())
            throw MalformedInput("divisor with non-constant c-coefficient unsupported");
        CPoly coef = cpoly_scale(rlead.second, 1 / dlead.second.constant_term());
        MPoly t = MPoly::monomial(r.vars, e, coef);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

MPoly mpoly_from_upoly(const std::string& var, const std::vector<Rat>& coeffs) {
    MPoly p({var});
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) p.terms.emplace(std::vector<int>{static_cast<int>(k)}, CPoly(coeffs[k]));
    return p;
}

std::string mpoly_str(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms) {
        std::string mono;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.vars[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string cs = cpoly_str(c);
        bool wrap = !c.is_constant() || (c.is_constant() && cs[0] == '-' && !out.empty());
        if (!out.empty()) out += " + ";
        if (mono.empty()) {
            out += wrap && !c.is_constant() ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            out += mono;
        } else if (cs == "-1") {
            out += "-" + mono;
        } else if (!c.is_constant()) {
            out += "(" + cs + ")*" + mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

std::vector<std::string> xvars(int n) {
    std::vector<std::string> v;
    for (int k = 1; k <= n; ++k) v.push_back("x" + std::to_string(k));
    return v;
}

std::vector<std::string> xyvars(int n) {
    std::vector<std::string> v = xvars(n);
    for (int k = 1; k <= n; ++k) v.push_back("y" + std::to_string(k));
    return v;
}

std::vector<std::string> tvars(int k) {
    std::vector<std::string> v;
    for (int i = 1; i <= k; ++i) v.push_back("t" + std::to_string(i));
    return v;
}

MPolyMat mpmat_mul(const MPolyMat& a, const MPolyMat& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    if (n == 0 || inner == 0 || a[0].size() != inner) throw MalformedInput("mpmat shape mismatch");
    MPolyMat out(n, std::vector<MPoly>(m, MPoly(a[0][0].vars)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
            }
        }
    return out;
}

MPoly mpmat_trace(const MPolyMat& a) {
    if (a.empty() || a.size() != a[0].size()) throw MalformedInput("trace of non-square mpmat");
    MPoly t(a[0][0].vars);
    for (size_t k = 0; k < a.size(); ++k) t = t + a[k][k];
    return t;
}

} // namespace acx
