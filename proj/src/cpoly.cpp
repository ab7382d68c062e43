#include "acx/cpoly.hpp"

#include <cctype>

namespace acx {

CPoly CPoly::c() {
    CPoly p;
    p.a = {Rat(0), Rat(1)};
    return p;
}

void CPoly::trim() {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

const Rat& CPoly::constant_term() const {
    static const Rat zero(0);
    return a.empty() ? zero : a[0];
}

Rat CPoly::eval(const Rat& at) const {
    Rat acc(0);
    for (size_t k = a.size(); k-- > 0;) acc = acc * at + a[k];
    return acc;
}

CPoly CPoly::operator-() const {
    CPoly r = *this;
    for (auto& x : r.a) x = -x;
    return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    if (a.size() < o.a.size()) a.resize(o.a.size(), Rat(0));
    for (size_t k = 0; k < o.a.size(); ++k) a[k] += o.a[k];
    trim();
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    if (a.size() < o.a.size()) a.resize(o.a.size(), Rat(0));
    for (size_t k = 0; k < o.a.size(); ++k) a[k] -= o.a[k];
    trim();
    return *this;
}

CPoly operator*(const CPoly& l, const CPoly& r) {
    CPoly out;
    if (l.is_zero() || r.is_zero()) return out;
    out.a.assign(l.a.size() + r.a.size() - 1, Rat(0));
    for (size_t i = 0; i < l.a.size(); ++i) {
        if (l.a[i] == 0) continue;
        for (size_t j = 0; j < r.a.size(); ++j) out.a[i + j] += l.a[i] * r.a[j];
    }
    out.trim();
    return out;
}

int CPoly::cmp(const CPoly& l, const CPoly& r) {
    if (l.a.size() != r.a.size()) return l.a.size() < r.a.size() ? -1 : 1;
    for (size_t k = l.a.size(); k-- > 0;) {
        int c = ::cmp(l.a[k], r.a[k]);
        if (c != 0) return c;
    }
    return 0;
}

CPoly cpoly_scale(const CPoly& p, const Rat& s) {
    if (s == 0) return CPoly();
    CPoly r = p;
    for (auto& x : r.a) x *= s;
    return r;
}

void cpoly_divmod(const CPoly& n, const CPoly& d, CPoly& q, CPoly& r) {
    if (d.is_zero()) throw MalformedInput("cpoly division by zero");
    q = CPoly();
    r = n;
    int dd = d.degree();
    const Rat& lead = d.a.back();
    while (!r.is_zero() && r.degree() >= dd) {
        int shift = r.degree() - dd;
        Rat coef = r.a.back() / lead;
        if ((int)q.a.size() < shift + 1) q.a.resize(shift + 1, Rat(0));
        q.a[shift] += coef;
        for (int k = 0; k <= dd; ++k) r.a[k + shift] -= coef * d.a[k];
        r.trim();
    }
    q.trim();
}

CPoly cpoly_gcd(CPoly x, CPoly y) {
    while (!y.is_zero()) {
        CPoly q, r;
        cpoly_divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (!x.is_zero() && x.a.back() != 1) { // monic normalization
        Rat inv = 1 / x.a.back();
        for (auto& v : x.a) v *= inv;
    }
    return x;
}

CPoly cpoly_exact_divide(const CPoly& n, const CPoly& d) {
    CPoly q, r;
    cpoly_divmod(n, d, q, r);
    if (!r.is_zero()) throw NotDivisible("cpoly exact division has remainder");
    return q;
}

std::string cpoly_str(const CPoly& p) {
    if (p.is_zero()) return "0";
    if (p.is_constant()) return rat_str(p.a[0]);
    std::string out;
    for (size_t k = p.a.size(); k-- > 0;) {
        const Rat& co = p.a[k];
        if (co == 0) continue;
        Rat mag = abs(co);
        if (out.empty()) {
            if (co < 0) out += "-";
        } else {
            out += (co < 0) ? "-" : "+";
        }
        bool unit = (mag == 1) && k > 0;
        if (!unit) out += rat_str(mag);
        if (k > 0) {
            if (!unit) out += "*";
            out += "c";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

// Parses one term of the canonical form: [rat][*][c[^k]].
size_t parse_term(const std::string& s, size_t pos, bool neg, CPoly& acc) {
    size_t start = pos;
    std::string num;
    while (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '/')) num += s[pos++];
    Rat coef = num.empty() ? Rat(1) : rat_parse(num);
    if (neg) coef = -coef;
    if (pos < s.size() && s[pos] == '*') ++pos;
    int exp = 0;
    if (pos < s.size() && s[pos] == 'c') {
        ++pos;
        exp = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::string e;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) e += s[pos++];
            if (e.empty()) throw MalformedInput("bad exponent in '" + s + "'");
            exp = std::stoi(e);
        }
    } else if (num.empty()) {
        throw MalformedInput("bad term at offset " + std::to_string(start) + " in '" + s + "'");
    }
    CPoly t;
    t.a.assign(exp + 1, Rat(0));
    t.a[exp] = coef;
    t.trim();
    acc += t;
    return pos;
}

} // namespace

CPoly cpoly_parse(const std::string& s) {
    if (s.empty()) throw MalformedInput("empty coefficient literal");
    CPoly acc;
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '-') { neg = true; ++pos; }
    pos = parse_term(s, pos, neg, acc);
    while (pos < s.size()) {
        if (s[pos] != '+' && s[pos] != '-') throw MalformedInput("bad separator in '" + s + "'");
        neg = (s[pos] == '-');
        pos = parse_term(s, pos + 1, neg, acc);
    }
    return acc;
}

} // namespace acx
