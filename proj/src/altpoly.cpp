#include "acx/altpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "acx/errors.hpp"
#include "acx/linalg.hpp"
#include "acx/perm.hpp"

namespace acx {

namespace {

constexpr int kMaxBidegree = 24;

void check_bidegree(int dx, int dy) {
    if (dx < 0 || dy < 0) throw MalformedInput("bidegree must be nonnegative");
    if (dx > kMaxBidegree || dy > kMaxBidegree)
        throw BoundExceeded("bidegree exceeds the built-in enumeration limit");
}

} // namespace

void WedgeLabel::canonicalize() { std::sort(pairs.rbegin(), pairs.rend()); }

void WedgeLabel::validate() const {
    if (pairs.empty()) throw MalformedInput("empty label");
    for (const auto& [p, q] : pairs)
        if (p < 0 || q < 0) throw MalformedInput("label exponents must be nonnegative");
    for (size_t t = 0; t + 1 < pairs.size(); ++t) {
        if (pairs[t] == pairs[t + 1]) throw MalformedInput("label pairs must be distinct");
        if (pairs[t] < pairs[t + 1]) throw MalformedInput("label pairs must be sorted descending");
    }
}

std::pair<int, int> WedgeLabel::bidegree() const {
    int dx = 0, dy = 0;
    for (const auto& [p, q] : pairs) {
        dx += p;
        dy += q;
    }
    return {dx, dy};
}

MPoly alternant(const WedgeLabel& label) {
    label.validate();
    int n = label.n();
    MPoly out(xyvars(n));
    for (const Perm& s : all_perms(n)) {
        std::vector<int> e(2 * n, 0);
        for (int t = 0; t < n; ++t) {
            e[s.of(t)] = label.pairs[t].first;
            e[n + s.of(t)] = label.pairs[t].second;
        }
        out.add_term(e, CPoly(Rat(s.sign())));
    }
    return out;
}

MPoly diagonal_permute(const MPoly& f, const Perm& w) {
    int n2 = f.nvars();
    if (n2 % 2 != 0 || w.n() != n2 / 2) throw MalformedInput("diagonal action shape mismatch");
    int n = n2 / 2;
    std::vector<int> mapping(n2);
    for (int t = 0; t < n; ++t) {
        mapping[t] = w.of(t);
        mapping[n + t] = n + w.of(t);
    }
    return mpoly_permute_vars(f, mapping);
}

bool is_alternating(const MPoly& f) {
    int n = f.nvars() / 2;
    for (int t = 0; t + 1 < n; ++t) {
        Perm s = Perm::transposition(n, t, t + 1);
        if (!(diagonal_permute(f, s) == mpoly_scale(f, CPoly(Rat(-1))))) return false;
    }
    return true;
}

std::vector<WedgeLabel> a_basis(int n, int dx, int dy) {
    if (n < 1) throw MalformedInput("need n >= 1");
    check_bidegree(dx, dy);
    // pair pool in descending lex order; labels are strictly decreasing chains
    std::vector<std::pair<int, int>> pool;
    for (int p = dx; p >= 0; --p)
        for (int q = dy; q >= 0; --q) pool.emplace_back(p, q);
    std::vector<WedgeLabel> out;
    WedgeLabel cur;
    std::function<void(size_t, int, int, int)> rec = [&](size_t start, int left, int rdx, int rdy) {
        if (left == 0) {
            if (rdx == 0 && rdy == 0) out.push_back(cur);
            return;
        }
        for (size_t t = start; t < pool.size(); ++t) {
            if (pool[t].first > rdx || pool[t].second > rdy) continue;
            cur.pairs.push_back(pool[t]);
            rec(t + 1, left - 1, rdx - pool[t].first, rdy - pool[t].second);
            cur.pairs.pop_back();
        }
    };
    rec(0, n, dx, dy);
    std::sort(out.begin(), out.end());
    return out;
}

long a_dim(int n, int dx, int dy) { return static_cast<long>(a_basis(n, dx, dy).size()); }

std::vector<std::vector<int>> monomials_of_bidegree(int n, int dx, int dy) {
    check_bidegree(dx, dy);
    std::vector<std::vector<int>> xs, ys;
    std::vector<int> cur(n, 0);
    std::function<void(int, int, std::vector<std::vector<int>>&)> rec =
        [&](int pos, int left, std::vector<std::vector<int>>& sink) {
            if (pos == n - 1) {
                cur[pos] = left;
                sink.push_back(cur);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[pos] = v;
                rec(pos + 1, left - v, sink);
            }
        };
    rec(0, dx, xs);
    rec(0, dy, ys);
    std::vector<std::vector<int>> out;
    out.reserve(xs.size() * ys.size());
    for (const auto& ex : xs)
        for (const auto& ey : ys) {
            std::vector<int> e = ex;
            e.insert(e.end(), ey.begin(), ey.end());
            out.push_back(std::move(e));
        }
    return out;
}

MPoly elementary_symmetric_y(int n, int r) {
    if (r < 0 || r > n) throw MalformedInput("elementary symmetric index out of range");
    MPoly out(xyvars(n));
    std::vector<int> idx(r);
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
            std::vector<int> e(2 * n, 0);
            for (int t = 0; t < r; ++t) e[n + idx[t]] = 1;
            out.add_term(e, CPoly::one());
            return;
        }
        for (int v = start; v <= n - left; ++v) {
            idx[r - left] = v;
            rec(v + 1, left - 1);
        }
    };
    rec(0, r);
    return out;
}

namespace {

struct AkPiece {
    std::vector<std::vector<int>> monos;
    std::map<std::vector<int>, int> colOf;
    EchelonSpan span{0};
    std::vector<MPoly> basis; // the independent k-fold products, discovery order
};

RatVec piece_coords(const AkPiece& piece, const MPoly& f) {
    RatVec v = zero_vec(static_cast<int>(piece.monos.size()));
    for (const auto& [e, c] : f.terms) {
        auto it = piece.colOf.find(e);
        if (it == piece.colOf.end())
            throw InternalInconsistency("monomial escaped its bidegree piece");
        v[it->second] = c.constant_term();
    }
    return v;
}

const AkPiece& ak_piece(int n, int k, int dx, int dy) {
    if (n < 1 || k < 1) throw MalformedInput("need n >= 1 and k >= 1");
    check_bidegree(dx, dy);
    thread_local std::map<std::tuple<int, int, int, int>, AkPiece> cache;
    auto key = std::make_tuple(n, k, dx, dy);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    AkPiece piece;
    piece.monos = monomials_of_bidegree(n, dx, dy);
    for (size_t t = 0; t < piece.monos.size(); ++t)
        piece.colOf.emplace(piece.monos[t], static_cast<int>(t));
    piece.span = EchelonSpan(static_cast<int>(piece.monos.size()));

    // factor pool: alternants of every sub-bidegree, deterministic order
    std::vector<std::pair<std::pair<int, int>, MPoly>> pool;
    for (int sx = 0; sx <= dx; ++sx)
        for (int sy = 0; sy <= dy; ++sy)
            for (const WedgeLabel& lab : a_basis(n, sx, sy))
                pool.emplace_back(std::make_pair(sx, sy), alternant(lab));

    MPoly one = MPoly::constant(xyvars(n), Rat(1));
    std::function<void(size_t, int, int, int, const MPoly&)> rec =
        [&](size_t start, int left, int rdx, int rdy, const MPoly& prod) {
            if (left == 0) {
                if (rdx != 0 || rdy != 0) return;
                if (piece.span.add(piece_coords(piece, prod))) piece.basis.push_back(prod);
                return;
            }
            for (size_t t = start; t < pool.size(); ++t) {
                const auto& [bd, alt] = pool[t];
                if (bd.first > rdx || bd.second > rdy) continue;
                rec(t, left - 1, rdx - bd.first, rdy - bd.second, prod * alt);
            }
        };
    rec(0, k, dx, dy, one);
    return cache.emplace(std::move(key), std::move(piece)).first->second;
}

} // namespace

std::vector<MPoly> ak_basis(int n, int k, int dx, int dy) { return ak_piece(n, k, dx, dy).basis; }

long ak_dim(int n, int k, int dx, int dy) { return ak_piece(n, k, dx, dy).span.dim(); }

namespace {

// all μ ≥ 0 with Σ r·μ_r = target (μ_r multiplies e_r(y))
std::vector<std::vector<int>> weighted_partitions(int n, int target) {
    std::vector<std::vector<int>> out;
    std::vector<int> mu(n, 0);
    std::function<void(int, int)> rec = [&](int r, int left) {
        if (r == n) {
            if (left == 0) out.push_back(mu);
            return;
        }
        for (int v = 0; v * (r + 1) <= left; ++v) {
            mu[r] = v;
            rec(r + 1, left - v * (r + 1));
        }
        mu[r] = 0;
    };
    rec(0, target);
    return out;
}

std::string mu_str(const std::vector<int>& mu) {
    std::ostringstream os;
    bool any = false;
    for (size_t r = 0; r < mu.size(); ++r)
        if (mu[r] > 0) {
            if (any) os << "*";
            any = true;
            os << "e" << r + 1 << "(y)";
            if (mu[r] > 1) os << "^" << mu[r];
        }
    return any ? os.str() : "1";
}

} // namespace

FreenessReport freeness_certificate(int n, int k, int boundX, int boundY) {
    if (n < 1 || k < 1) throw MalformedInput("need n >= 1 and k >= 1");
    check_bidegree(boundX, boundY);
    FreenessReport report;
    report.n = n;
    report.k = k;
    report.boundX = boundX;
    report.boundY = boundY;
    report.certified = true;

    std::vector<MPoly> esym;
    for (int r = 0; r <= n; ++r) esym.push_back(elementary_symmetric_y(n, r));

    // lift generators: a basis of A^k / m·A^k per bidegree, in increasing order
    struct Gen {
        int dx, dy;
        MPoly poly;
    };
    std::vector<Gen> gens;
    for (int total = 0; total <= boundX + boundY; ++total) {
        for (int dx = std::max(0, total - boundY); dx <= std::min(total, boundX); ++dx) {
            int dy = total - dx;
            const auto& piece = ak_piece(n, k, dx, dy);
            if (piece.basis.empty()) continue;
            EchelonSpan mspan(static_cast<int>(piece.monos.size()));
            for (int r = 1; r <= n; ++r) {
                if (dy - r < 0) continue;
                for (const MPoly& b : ak_basis(n, k, dx, dy - r))
                    mspan.add(piece_coords(piece, b * esym[r]));
            }
            for (const MPoly& p : piece.basis)
                if (mspan.add(piece_coords(piece, p))) gens.push_back({dx, dy, p});
        }
    }
    for (const Gen& g : gens) report.generators.emplace_back(g.dx, g.dy);

    // audit: generator·e^μ products are independent and span every piece
    for (int dx = 0; dx <= boundX && report.certified; ++dx) {
        for (int dy = 0; dy <= boundY && report.certified; ++dy) {
            const auto& piece = ak_piece(n, k, dx, dy);
            EchelonSpan span(static_cast<int>(piece.monos.size()));
            std::vector<RatVec> prev;
            std::vector<std::string> names;
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                const Gen& g = gens[gi];
                if (g.dx != dx || g.dy > dy) continue;
                for (const auto& mu : weighted_partitions(n, dy - g.dy)) {
                    MPoly prod = g.poly;
                    for (int r = 1; r <= n; ++r)
                        for (int rep = 0; rep < mu[r - 1]; ++rep) prod = prod * esym[r];
                    RatVec v = piece_coords(piece, prod);
                    std::ostringstream nm;
                    nm << "g" << gi << "@(" << g.dx << "," << g.dy << ")*" << mu_str(mu);
                    if (!span.add(v)) {
                        // dependent: extract the explicit relation
                        RatMat m(static_cast<int>(piece.monos.size()),
                                 static_cast<int>(prev.size()));
                        for (size_t col = 0; col < prev.size(); ++col)
                            for (size_t row = 0; row < prev[col].size(); ++row)
                                m(static_cast<int>(row), static_cast<int>(col)) = prev[col][row];
                        auto sol = solve(m, v);
                        std::ostringstream w;
                        w << "relation at bidegree (" << dx << "," << dy << "): " << nm.str()
                          << " =";
                        if (sol) {
                            for (size_t col = 0; col < prev.size(); ++col)
                                if ((*sol)[col] != 0)
                                    w << " + (" << rat_str((*sol)[col]) << ")*" << names[col];
                        } else {
                            w << " [inconsistent dependency]";
                        }
                        report.certified = false;
                        report.witness = w.str();
                        break;
                    }
                    prev.push_back(std::move(v));
                    names.push_back(nm.str());
                }
                if (!report.certified) break;
            }
            if (report.certified && span.dim() != piece.span.dim()) {
                std::ostringstream w;
                w << "spanning deficit at bidegree (" << dx << "," << dy << "): generators give "
                  << span.dim() << ", module piece has " << piece.span.dim();
                report.certified = false;
                report.witness = w.str();
            }
        }
    }
    return report;
}

std::map<std::pair<int, int>, long> hilbert_table(int n, int k, int boundX, int boundY) {
    check_bidegree(boundX, boundY);
    std::map<std::pair<int, int>, long> out;
    for (int dx = 0; dx <= boundX; ++dx)
        for (int dy = 0; dy <= boundY; ++dy) out[{dx, dy}] = ak_dim(n, k, dx, dy);
    return out;
}

std::vector<MPoly> wedge_matrix_polys(const WedgeLabel& label) {
    label.validate();
    std::vector<std::string> vars{"x", "y"};
    std::vector<MPoly> out;
    for (const auto& [p, q] : label.pairs)
        out.push_back(MPoly::monomial(vars, {p, q}, CPoly::one()));
    return out;
}

} // namespace acx
