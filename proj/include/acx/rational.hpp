#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

#include "acx/errors.hpp"

namespace acx {

// Exact arbitrary-precision rational. mpq_class is kept canonical (lowest
// terms, positive denominator) as long as values are built through the
// helpers below or ordinary arithmetic, which is exactly the invariant the
// rest of the library assumes.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw MalformedInput("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Wire format: "p" or "p/q" with q > 0 after canonicalization.
inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw MalformedInput("empty rational literal");
    for (size_t k = 0; k < s.size(); ++k) {
        char ch = s[k];
        bool ok = (ch >= '0' && ch <= '9') || ch == '/' || (ch == '-' && k == 0);
        if (!ok) throw MalformedInput("bad rational literal '" + s + "'");
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw MalformedInput("bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw MalformedInput("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline int rat_sign(const Rat& r) { return sgn(r); }

} // namespace acx
