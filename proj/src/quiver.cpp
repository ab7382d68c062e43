#include "acx/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "acx/errors.hpp"

namespace acx {

void Quiver::validate() const {
    if (vertices < 0) throw MalformedInput("negative vertex count");
    for (const auto& [t, h] : edges)
        if (t < 0 || t >= vertices || h < 0 || h >= vertices)
            throw MalformedInput("edge endpoint out of range");
}

int Quiver::loops_at(int v) const {
    int c = 0;
    for (const auto& [t, h] : edges)
        if (t == v && h == v) ++c;
    return c;
}

namespace {

void check_len(const Quiver& q, const DimVec& a) {
    if (static_cast<int>(a.size()) != q.vertices)
        throw MalformedInput("dimension vector length mismatch");
}

// symmetric matrix C with C_ii = 2 − 2·loops(i), C_ij = −#edges{i,j}
std::vector<std::vector<long>> cartan(const Quiver& q) {
    std::vector<std::vector<long>> c(q.vertices, std::vector<long>(q.vertices, 0));
    for (int v = 0; v < q.vertices; ++v) c[v][v] = 2;
    for (const auto& [t, h] : q.edges) {
        if (t == h) {
            c[t][t] -= 2;
        } else {
            c[t][h] -= 1;
            c[h][t] -= 1;
        }
    }
    return c;
}

bool support_connected(const Quiver& q, const DimVec& a) {
    int start = -1;
    for (int v = 0; v < q.vertices; ++v)
        if (a[v] != 0) {
            start = v;
            break;
        }
    if (start < 0) return false;
    std::vector<bool> seen(q.vertices, false);
    seen[start] = true;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& [t, h] : q.edges) {
            int other = -1;
            if (t == v) other = h;
            else if (h == v) other = t;
            if (other >= 0 && a[other] != 0 && !seen[other]) {
                seen[other] = true;
                queue.push_back(other);
            }
        }
    }
    for (int v = 0; v < q.vertices; ++v)
        if (a[v] != 0 && !seen[v]) return false;
    return true;
}

} // namespace

long ringel(const Quiver& q, const DimVec& a, const DimVec& b) {
    q.validate();
    check_len(q, a);
    check_len(q, b);
    long r = 0;
    for (int v = 0; v < q.vertices; ++v) r += static_cast<long>(a[v]) * b[v];
    for (const auto& [t, h] : q.edges) r -= static_cast<long>(a[t]) * b[h];
    return r;
}

long sym_pairing(const Quiver& q, const DimVec& a, const DimVec& b) {
    return ringel(q, a, b) + ringel(q, b, a);
}

long tits_q(const Quiver& q, const DimVec& a) { return ringel(q, a, a); }

long tits_p(const Quiver& q, const DimVec& a) { return 1 - tits_q(q, a); }

RootType classify_root(const Quiver& q, const DimVec& a0) {
    q.validate();
    check_len(q, a0);
    for (int v : a0)
        if (v < 0) throw MalformedInput("root candidate must be nonnegative");
    if (std::all_of(a0.begin(), a0.end(), [](int v) { return v == 0; }))
        throw MalformedInput("root candidate must be nonzero");
    auto c = cartan(q);
    DimVec a = a0;
    while (true) {
        if (!support_connected(q, a)) return RootType::NotRoot;
        int total = std::accumulate(a.begin(), a.end(), 0);
        if (total == 1) {
            int v = 0;
            while (a[v] == 0) ++v;
            return q.loop_free(v) ? RootType::Real : RootType::Imaginary;
        }
        // (α, ε_i) at the loop-free vertices
        int pivot = -1;
        long d = 0;
        bool fundamental = true;
        for (int v = 0; v < q.vertices && pivot < 0; ++v) {
            if (!q.loop_free(v)) continue;
            long pair = 0;
            for (int w = 0; w < q.vertices; ++w) pair += c[v][w] * a[w];
            if (pair > 0) {
                fundamental = false;
                pivot = v;
                d = pair;
            }
        }
        if (fundamental) return RootType::Imaginary;
        a[pivot] -= static_cast<int>(d); // r_pivot(α), since (ε_i,ε_i)=2 here
        if (a[pivot] < 0) return RootType::NotRoot;
    }
}

std::vector<RootInfo> positive_roots(const Quiver& q, const DimVec& bound) {
    q.validate();
    check_len(q, bound);
    for (int v : bound)
        if (v < 0) throw MalformedInput("bound must be nonnegative");
    std::vector<RootInfo> out;
    DimVec a(q.vertices, 0);
    while (true) {
        // increment odometer
        int k = 0;
        while (k < q.vertices && a[k] == bound[k]) {
            a[k] = 0;
            ++k;
        }
        if (k == q.vertices) break;
        ++a[k];
        RootType t = classify_root(q, a);
        if (t != RootType::NotRoot) out.push_back({a, t});
    }
    std::sort(out.begin(), out.end(), [](const RootInfo& l, const RootInfo& r) {
        int ls = std::accumulate(l.coords.begin(), l.coords.end(), 0);
        int rs = std::accumulate(r.coords.begin(), r.coords.end(), 0);
        if (ls != rs) return ls < rs;
        return l.coords < r.coords;
    });
    return out;
}

std::vector<DimVec> r_lambda(const Quiver& q, const std::vector<Rat>& lambda, const DimVec& bound) {
    if (static_cast<int>(lambda.size()) != q.vertices)
        throw MalformedInput("weight length mismatch");
    std::vector<DimVec> out;
    for (const RootInfo& r : positive_roots(q, bound)) {
        Rat dot(0);
        for (int v = 0; v < q.vertices; ++v) dot += lambda[v] * r.coords[v];
        if (dot == 0) out.push_back(r.coords);
    }
    return out;
}

namespace {

struct DecompSearch {
    std::vector<DimVec> cand; // descending (Σ, lex)
    std::vector<long> p;
    long pTarget = 0;
    long nodes = 0;
    long maxNodes = 0;
    std::vector<DimVec> current;
    std::vector<std::vector<DimVec>> found;

    void run(size_t start, DimVec& residual, long pSum) {
        if (++nodes > maxNodes) throw BoundExceeded("decomposition search exceeded node limit");
        if (std::all_of(residual.begin(), residual.end(), [](int v) { return v == 0; })) {
            if (pSum > pTarget)
                throw NotSigmaPrime("a decomposition strictly exceeds p(alpha)");
            if (pSum == pTarget) found.push_back(current);
            return;
        }
        for (size_t k = start; k < cand.size(); ++k) {
            bool fits = true;
            for (size_t v = 0; v < residual.size(); ++v)
                if (cand[k][v] > residual[v]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (size_t v = 0; v < residual.size(); ++v) residual[v] -= cand[k][v];
            current.push_back(cand[k]);
            run(k, residual, pSum + p[k]);
            current.pop_back();
            for (size_t v = 0; v < residual.size(); ++v) residual[v] += cand[k][v];
        }
    }
};

} // namespace

std::vector<std::vector<DimVec>> sigma_prime_decomps(const Quiver& q,
                                                     const std::vector<Rat>& lambda,
                                                     const DimVec& alpha,
                                                     const DecompLimits& lim) {
    if (classify_root(q, alpha) == RootType::NotRoot)
        throw MalformedInput("alpha is not a positive root");
    {
        Rat dot(0);
        for (int v = 0; v < q.vertices; ++v) dot += lambda[v] * alpha[v];
        if (dot != 0) throw MalformedInput("alpha is not lambda-orthogonal");
    }
    DecompSearch s;
    s.cand = r_lambda(q, lambda, alpha);
    if (static_cast<long>(s.cand.size()) > lim.maxCandidates)
        throw BoundExceeded("too many candidate roots");
    std::sort(s.cand.begin(), s.cand.end(), [](const DimVec& l, const DimVec& r) {
        int ls = std::accumulate(l.begin(), l.end(), 0);
        int rs = std::accumulate(r.begin(), r.end(), 0);
        if (ls != rs) return ls > rs;
        return l > r;
    });
    for (const DimVec& c : s.cand) s.p.push_back(tits_p(q, c));
    s.pTarget = tits_p(q, alpha);
    s.maxNodes = lim.maxNodes;
    DimVec residual = alpha;
    s.run(0, residual, 0);
    std::sort(s.found.begin(), s.found.end());
    // self-audit: parts re-sum to alpha and lie in R_λ^+
    for (const auto& parts : s.found) {
        DimVec sum(q.vertices, 0);
        for (const DimVec& part : parts) {
            for (int v = 0; v < q.vertices; ++v) sum[v] += part[v];
            Rat dot(0);
            for (int v = 0; v < q.vertices; ++v) dot += lambda[v] * part[v];
            if (dot != 0 || classify_root(q, part) == RootType::NotRoot)
                throw InternalInconsistency("decomposition part left R_lambda^+");
        }
        if (sum != alpha) throw InternalInconsistency("decomposition does not re-sum to alpha");
    }
    return s.found;
}

long component_count(const Quiver& q, const std::vector<Rat>& lambda, const DimVec& alpha,
                     const DecompLimits& lim) {
    return static_cast<long>(sigma_prime_decomps(q, lambda, alpha, lim).size());
}

long expected_dim(const Quiver& q, const DimVec& alpha) {
    long norm = 0;
    for (int v : alpha) norm += static_cast<long>(v) * v;
    return norm - 1 + 2 * tits_p(q, alpha);
}

AffineQuiver affine_jordan() { return {{1, {{0, 0}}}, {1}}; }

AffineQuiver affine_cycle(int m) {
    if (m < 1) throw MalformedInput("cycle length must be positive");
    Quiver q;
    q.vertices = m;
    for (int v = 0; v < m; ++v) q.edges.emplace_back(v, (v + 1) % m);
    return {q, DimVec(m, 1)};
}

AffineQuiver affine_d4() {
    Quiver q;
    q.vertices = 5; // center last
    for (int leaf = 0; leaf < 4; ++leaf) q.edges.emplace_back(leaf, 4);
    return {q, {1, 1, 1, 1, 2}};
}

FramedQuiver frame_affine(const AffineQuiver& aq, int extendingVertex, int n) {
    aq.q.validate();
    if (static_cast<int>(aq.delta.size()) != aq.q.vertices)
        throw MalformedInput("delta length mismatch");
    for (int v : aq.delta)
        if (v < 1) throw MalformedInput("delta must be positive at every vertex");
    if (tits_q(aq.q, aq.delta) != 0) throw MalformedInput("delta is not isotropic: q(delta) != 0");
    if (extendingVertex < 0 || extendingVertex >= aq.q.vertices)
        throw MalformedInput("extending vertex out of range");
    if (aq.delta[extendingVertex] != 1)
        throw MalformedInput("extending vertex must carry delta = 1");
    if (n < 0) throw MalformedInput("n must be nonnegative");
    FramedQuiver f;
    f.framed = aq.q;
    f.framed.vertices += 1;
    f.frameVertex = aq.q.vertices;
    f.extendingVertex = extendingVertex;
    f.framed.edges.emplace_back(f.frameVertex, extendingVertex);
    f.delta = aq.delta;
    f.delta.push_back(0);
    f.n = n;
    f.alpha.resize(f.framed.vertices, 0);
    for (int v = 0; v < aq.q.vertices; ++v) f.alpha[v] = n * aq.delta[v];
    f.alpha[f.frameVertex] = 1;
    return f;
}

bool lambda_admissible(const FramedQuiver& f, const std::vector<Rat>& lambda) {
    if (static_cast<int>(lambda.size()) != f.framed.vertices)
        throw MalformedInput("weight length mismatch");
    if (lambda[f.frameVertex] != 0) return false;
    Rat dot(0);
    for (int v = 0; v < f.framed.vertices; ++v) dot += lambda[v] * f.delta[v];
    return dot == 0;
}

} // namespace acx
