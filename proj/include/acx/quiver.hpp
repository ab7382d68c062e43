#pragma once

#include <utility>
#include <vector>

#include "acx/rational.hpp"

namespace acx {

// directed multigraph; loops and parallel edges allowed
struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges; // (tail, head)

    void validate() const;
    int loops_at(int v) const;
    bool loop_free(int v) const { return loops_at(v) == 0; }
};

using DimVec = std::vector<int>;

// ⟨α,β⟩ = Σ α_i β_i − Σ_a α_{tail(a)} β_{head(a)}
long ringel(const Quiver& q, const DimVec& a, const DimVec& b);
// (α,β) = ⟨α,β⟩ + ⟨β,α⟩
long sym_pairing(const Quiver& q, const DimVec& a, const DimVec& b);
long tits_q(const Quiver& q, const DimVec& a);
long tits_p(const Quiver& q, const DimVec& a); // 1 − q(α)

enum class RootType { Real, Imaginary, NotRoot };

// reflection descent; reflections act only at loop-free vertices, and the
// fundamental-region test imposes (α, ε_i) ≤ 0 only at loop-free vertices
RootType classify_root(const Quiver& q, const DimVec& a);

struct RootInfo {
    DimVec coords;
    RootType type = RootType::NotRoot;
};

// all positive roots ≤ bound componentwise, sorted by (Σα, lex)
std::vector<RootInfo> positive_roots(const Quiver& q, const DimVec& bound);

// positive roots ≤ bound with λ·α = 0 exactly
std::vector<DimVec> r_lambda(const Quiver& q, const std::vector<Rat>& lambda, const DimVec& bound);

struct DecompLimits {
    long maxCandidates = 10000;
    long maxNodes = 4000000;
};

// all multiset decompositions of α into parts from R_λ^+ with
// Σ p(part) = p(α), including the trivial {α}; parts sorted descending
// within a decomposition, decompositions sorted lexicographically.
// Throws NotSigmaPrime as soon as some decomposition strictly exceeds p(α).
std::vector<std::vector<DimVec>> sigma_prime_decomps(const Quiver& q,
                                                     const std::vector<Rat>& lambda,
                                                     const DimVec& alpha,
                                                     const DecompLimits& lim = {});

long component_count(const Quiver& q, const std::vector<Rat>& lambda, const DimVec& alpha,
                     const DecompLimits& lim = {});

// |α|² − 1 + 2p(α)
long expected_dim(const Quiver& q, const DimVec& alpha);

struct AffineQuiver {
    Quiver q;
    DimVec delta; // minimal positive imaginary root, verified q(δ)=0
};

AffineQuiver affine_jordan();     // one vertex, one loop, δ=(1)
AffineQuiver affine_cycle(int m); // m-cycle, δ=(1,…,1); m=1 is the Jordan quiver
AffineQuiver affine_d4();         // four leaves into a center, δ=(1,1,1,1,2)

struct FramedQuiver {
    Quiver framed;       // frame vertex is last
    DimVec delta;        // padded with 0 at the frame vertex
    int frameVertex = 0;
    int extendingVertex = 0;
    int n = 0;
    DimVec alpha;        // nδ + ε_frame
};

FramedQuiver frame_affine(const AffineQuiver& aq, int extendingVertex, int n);

// λ_frame = 0 and λ·δ = 0
bool lambda_admissible(const FramedQuiver& f, const std::vector<Rat>& lambda);

} // namespace acx
