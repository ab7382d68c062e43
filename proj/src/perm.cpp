#include "acx/perm.hpp"

#include <algorithm>
#include <numeric>

namespace acx {

bool Perm::is_identity() const {
    for (int k = 0; k < n(); ++k)
        if (img[k] != k) return false;
    return true;
}

Perm Perm::transposition(int n, int a, int b) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw MalformedInput("transposition index out of range");
    Perm p(n);
    std::swap(p.img[a], p.img[b]);
    return p;
}

Perm Perm::inverse() const {
    Perm r(n());
    for (int k = 0; k < n(); ++k) r.img[img[k]] = k;
    return r;
}

int Perm::sign() const {
    std::vector<bool> seen(img.size(), false);
    int sign = 1;
    for (int k = 0; k < n(); ++k) {
        if (seen[k]) continue;
        int len = 0;
        for (int j = k; !seen[j]; j = img[j]) { seen[j] = true; ++len; }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<int> Perm::act_on_exponents(const std::vector<int>& e) const {
    if (static_cast<int>(e.size()) != n()) throw MalformedInput("exponent vector size mismatch");
    std::vector<int> out(e.size());
    for (int k = 0; k < n(); ++k) out[img[k]] = e[k];
    return out;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    if (a.n() != b.n()) throw MalformedInput("permutation size mismatch");
    Perm r(a.n());
    for (int k = 0; k < a.n(); ++k) r.img[k] = a.img[b.img[k]];
    return r;
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Perm> out;
    do {
        Perm p(n);
        p.img = idx;
        out.push_back(p);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

} // namespace acx
