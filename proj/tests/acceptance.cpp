// Acceptance suite: one line per criterion, "[PASS]" or "[FAIL]", exact
// arithmetic throughout (no tolerances anywhere). Exit code = number of
// failed criteria. ACXTOOL_PATH points at the companion CLI binary and is
// used for the report-determinism and exit-code checks.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "acx/altpoly.hpp"
#include "acx/cherednik.hpp"
#include "acx/quiver.hpp"
#include "acx/rng.hpp"
#include "acx/variety.hpp"

using namespace acx;

namespace {

int g_failures = 0;

void report(const std::string& id, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    std::cout.flush();
    if (!pass) ++g_failures;
}

void run(const std::string& id, const std::string& title, const std::function<bool(std::string&)>& body) {
    std::string detail = title;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = title + " — unexpected exception: " + e.what();
        pass = false;
    }
    report(id, pass, detail);
}

Quad seeded_point(Rng& rng, int n, int kPrime, int kDoublePrime, bool conjugated) {
    NormalFormParams p;
    p.kPrime = kPrime;
    p.kDoublePrime = kDoublePrime;
    p.x = rng.vec(n);
    p.y = rng.distinct_vec(n);
    Quad q = normal_form(p);
    if (conjugated) {
        RatMat g = rng.invertible(n);
        q = conjugate(g, *inverse(g), q);
    }
    return q;
}

long binom(long m, long r) {
    long v = 1;
    for (long t = 1; t <= r; ++t) v = v * (m - r + t) / t;
    return v;
}

// all words over {X,Y,Z} of the given length
std::vector<std::string> words_of_length(int len) {
    std::vector<std::string> out = {""};
    for (int t = 0; t < len; ++t) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (char c : {'X', 'Y', 'Z'}) next.push_back(w + c);
        out = next;
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// ---- criteria ------------------------------------------------------------

bool acc01(std::string& detail) {
    Rng rng(101);
    long points = 0;
    for (int n = 1; n <= 5; ++n)
        for (int kp = 0; kp <= n; ++kp)
            for (int kpp = kp; kpp <= n; ++kpp)
                for (int d = 0; d < 50; ++d) {
                    NormalFormParams p;
                    p.kPrime = kp;
                    p.kDoublePrime = kpp;
                    p.x = rng.vec(n);
                    p.y = rng.distinct_vec(n);
                    Quad q = normal_form(p);
                    ++points;
                    if (!moment(q).is_zero()) {
                        detail += ": moment != 0 at n=" + std::to_string(n);
                        return false;
                    }
                    if ((int)cyclic_subspace(q.X, q.Y, q.i).size() != n - kpp ||
                        (int)co_cyclic_subspace(q.j, q.X, q.Y).size() != kp) {
                        detail += ": wrong invariants at n=" + std::to_string(n) +
                                  " k'=" + std::to_string(kp) + " k''=" + std::to_string(kpp);
                        return false;
                    }
                }
    detail += ": " + std::to_string(points) + " seeded points, all exact";
    return true;
}

bool acc02(std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
        FramedQuiver f = frame_affine(affine_jordan(), 0, n);
        long c = component_count(f.framed, std::vector<Rat>(2, Rat(0)), f.alpha);
        if (c != n + 1) {
            detail += ": one-loop family n=" + std::to_string(n) + " gave " + std::to_string(c);
            return false;
        }
    }
    for (int n = 1; n <= 3; ++n) {
        FramedQuiver f = frame_affine(affine_cycle(2), 0, n);
        long c = component_count(f.framed, std::vector<Rat>(3, Rat(0)), f.alpha);
        if (c != n + 1) {
            detail += ": 2-cycle family n=" + std::to_string(n) + " gave " + std::to_string(c);
            return false;
        }
    }
    detail += ": counts are n+1 in both families";
    return true;
}

bool acc03(std::string& detail) {
    std::vector<std::pair<std::string, AffineQuiver>> fams = {
        {"one-loop", affine_jordan()},
        {"2-cycle", affine_cycle(2)},
        {"3-cycle", affine_cycle(3)},
        {"4-star", affine_d4()},
    };
    for (const auto& [name, aq] : fams) {
        long d2 = 0;
        for (int v : aq.delta) d2 += (long)v * v;
        for (int n = 1; n <= 4; ++n) {
            FramedQuiver f = frame_affine(aq, 0, n);
            long dim = expected_dim(f.framed, f.alpha);
            if (dim != (long)n * n * d2 + 2L * n) {
                detail += ": " + name + " n=" + std::to_string(n) + " gave " + std::to_string(dim);
                return false;
            }
        }
    }
    Rng rng(103);
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            int r = parametrization_jacobian_rank(rng.vec(n), rng.distinct_vec(n), k);
            if (r != n * n + 2 * n) {
                detail += ": chart rank " + std::to_string(r) + " at n=" + std::to_string(n) +
                          " k=" + std::to_string(k);
                return false;
            }
        }
    detail += ": quiver dimensions and chart ranks agree";
    return true;
}

bool acc04(std::string& detail) {
    Rng rng(104);
    long points = 0;
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (int d = 0; d < 20; ++d) {
                Quad q = seeded_point(rng, n, k, k, d % 2 == 1);
                ++points;
                int s = stabilizer_dim(q);
                if (s != 0) {
                    detail += ": isotropy " + std::to_string(s) + " at n=" + std::to_string(n) +
                              " k=" + std::to_string(k) + " draw=" + std::to_string(d);
                    return false;
                }
            }
    detail += ": trivial isotropy at " + std::to_string(points) + " points";
    return true;
}

bool acc05(std::string& detail) {
    Rng rng(105);
    std::vector<std::string> words;
    for (int len = 1; len <= 3; ++len)
        for (const auto& w : words_of_length(len)) words.push_back(w);
    for (const auto& w : {"XYZZ", "ZXYZ", "XXYZ", "YZYZ", "XYZXY", "ZZXYZ",
                          "XYXZY", "XYZXYZ", "ZXXYYZ", "XXYYZZ"})
        words.push_back(w);

    long points = 0;
    for (int n = 2; n <= 4; ++n)
        for (int kp = 0; kp <= n; ++kp)
            for (int kpp = kp; kpp <= n; ++kpp)
                for (int d = 0; d < (n == 4 ? 5 : 8); ++d) {
                    Quad q = seeded_point(rng, n, kp, kpp, d % 2 == 1);
                    ++points;
                    if (!pairing_vanishes(q)) {
                        detail += ": pairing failed at n=" + std::to_string(n) +
                                  " k'=" + std::to_string(kp) + " k''=" + std::to_string(kpp);
                        return false;
                    }
                    for (const auto& w : words)
                        if (trace_word(w, q, true) != trace_word(w, q, false)) {
                            detail += ": readings differ on word " + w;
                            return false;
                        }
                }
    if (points < 200) {
        detail += ": only " + std::to_string(points) + " points sampled";
        return false;
    }
    detail += ": " + std::to_string(points) + " points, " + std::to_string(words.size()) +
              " words each";
    return true;
}

bool acc06(std::string& detail) {
    long profiles = 0;
    // every multiset of block sizes (one distinct eigenvalue per block)
    // totaling <= 4, with every marking-height profile
    std::function<bool(int, int, std::vector<int>&, std::string&)> scan =
        [&](int rem, int maxPart, std::vector<int>& sizes, std::string& why) {
            if (rem == 0) {
                int n = 0;
                for (int s : sizes) n += s;
                if (n == 0) return true;
                std::vector<int> h(sizes.size(), 0);
                std::function<bool(size_t)> walk = [&](size_t t) -> bool {
                    if (t == sizes.size()) {
                        RatMat X(n, n);
                        RatVec iv(n, Rat(0));
                        int off = 0;
                        bool expectRel = true;
                        for (size_t b = 0; b < sizes.size(); ++b) {
                            for (int r = 0; r < sizes[b]; ++r) {
                                X(off + r, off + r) = Rat((long)b);
                                if (r + 1 < sizes[b]) X(off + r, off + r + 1) = 1;
                            }
                            if (h[b] > 0) iv[off + h[b] - 1] = 1;
                            expectRel = expectRel && (h[b] == 0 || h[b] == sizes[b]);
                            off += sizes[b];
                        }
                        ++profiles;
                        bool rel = is_relevant(X, iv);
                        bool nil = all_Y_nilpotent(conormal_space(X, iv));
                        if (rel != nil || rel != expectRel) {
                            std::ostringstream os;
                            os << ": mismatch at sizes";
                            for (int s : sizes) os << " " << s;
                            os << " heights";
                            for (int hh : h) os << " " << hh;
                            why += os.str();
                            return false;
                        }
                        return true;
                    }
                    for (int hh = 0; hh <= sizes[t]; ++hh) {
                        h[t] = hh;
                        if (!walk(t + 1)) return false;
                    }
                    return true;
                };
                return walk(0);
            }
            for (int s = std::min(rem, maxPart); s >= 1; --s) {
                sizes.push_back(s);
                if (!scan(rem - s, s, sizes, why)) return false;
                sizes.pop_back();
            }
            return true;
        };
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> sizes;
        if (!scan(n, n, sizes, detail)) return false;
    }
    // single-block boundary cases stated explicitly
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m <= n; ++m) {
            RatMat X(n, n);
            for (int r = 0; r < n; ++r) {
                X(r, r) = 5;
                if (r + 1 < n) X(r, r + 1) = 1;
            }
            RatVec iv(n, Rat(0));
            if (m > 0) iv[m - 1] = 1;
            bool rel = is_relevant(X, iv);
            if (rel != (m == 0 || m == n)) {
                detail += ": single block n=" + std::to_string(n) + " m=" + std::to_string(m);
                return false;
            }
        }
    detail += ": " + std::to_string(profiles) + " profiles, equivalence exact";
    return true;
}

bool acc07(std::string& detail) {
    Rng rng(107);
    long polys = 0;
    for (int n = 2; n <= 4; ++n) {
        auto vars = xvars(n);
        int draws = (n == 2) ? 40 : (n == 3) ? 40 : 20;
        for (int d = 0; d < draws; ++d) {
            MPoly f(vars);
            int terms = 1 + (int)rng.integer(0, 3);
            for (int t = 0; t < terms; ++t) {
                std::vector<int> e(n, 0);
                int deg = (int)rng.integer(0, 5);
                for (int u = 0; u < deg; ++u) e[rng.integer(0, n - 1)]++;
                f = f + MPoly::monomial(vars, e, CPoly(rng.nonzero_rational()));
            }
            ++polys;
            std::vector<MPoly> Df;
            for (int i = 0; i < n; ++i) {
                Df.push_back(dunkl(i, f));
                if (Df[i] != act_poly(h_y(n, i), f)) {
                    detail += ": formula/action mismatch, n=" + std::to_string(n);
                    return false;
                }
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (dunkl(i, Df[j]) != dunkl(j, Df[i])) {
                        detail += ": operators do not commute, n=" + std::to_string(n);
                        return false;
                    }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    MPoly xj = MPoly::variable(vars, j);
                    MPoly lhs = dunkl(i, xj * f) - xj * Df[i];
                    MPoly rhs(vars);
                    if (i != j) {
                        rhs = mpoly_scale(mpoly_permute_vars(f, Perm::transposition(n, i, j).img),
                                          CPoly::c());
                    } else {
                        rhs = f;
                        for (int kk = 0; kk < n; ++kk)
                            if (kk != i)
                                rhs = rhs - mpoly_scale(
                                                mpoly_permute_vars(
                                                    f, Perm::transposition(n, i, kk).img),
                                                CPoly::c());
                    }
                    if (lhs != rhs) {
                        detail += ": commutation relation failed, n=" + std::to_string(n) +
                                  " i=" + std::to_string(i) + " j=" + std::to_string(j);
                        return false;
                    }
                }
        }
    }
    detail += ": " + std::to_string(polys) + " polynomials, identities exact in c";
    return true;
}

bool acc08(std::string& detail) {
    for (int n = 1; n <= 3; ++n)
        for (int d = 0; d <= 3; ++d) {
            long got = pbw_count(n, d);
            long fact = 1;
            for (int t = 2; t <= n; ++t) fact *= t;
            long want = fact * binom(2 * n + d, 2 * n);
            if (got != want) {
                detail += ": (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ") gave " +
                          std::to_string(got) + ", closed form " + std::to_string(want);
                return false;
            }
        }
    detail += ": filtration dimensions match n!*C(2n+d,2n) for n<=3, d<=3";
    return true;
}

bool acc09(std::string& detail) {
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < n; ++i) {
            HElem x = h_x(n, i), y = h_y(n, i);
            HElem fx = x, fy = y;
            for (int t = 0; t < 4; ++t) fx = fourier(fx);
            for (int t = 0; t < 4; ++t) fy = fourier(fy);
            if (!h_sub(fx, x).terms.empty() || !h_sub(fy, y).terms.empty()) {
                detail += ": order-4 failed on generator " + std::to_string(i);
                return false;
            }
        }
    Rng rng(109);
    long pairs = 0;
    for (int n = 2; n <= 3; ++n) {
        int draws = (n == 2) ? 60 : 40;
        for (int d = 0; d < draws; ++d) {
            auto randElem = [&](int deg, int nterms) {
                HElem h = h_zero(n);
                for (int t = 0; t < nterms; ++t) {
                    std::vector<int> a(n, 0), b(n, 0);
                    for (int u = 0; u < deg; ++u) {
                        a[rng.integer(0, n - 1)] += rng.integer(0, 1);
                        b[rng.integer(0, n - 1)] += rng.integer(0, 1);
                    }
                    CPoly coef = CPoly(rng.nonzero_rational(5, 3));
                    if (rng.integer(0, 1)) coef = coef * CPoly::c();
                    h = h_add(h, h_term(n, a, rng.perm(n), b, coef));
                }
                return h;
            };
            HElem a = randElem(2, 2), b = randElem(2, 2);
            ++pairs;
            if (!h_sub(fourier(h_mul(a, b)), h_mul(fourier(a), fourier(b))).terms.empty()) {
                detail += ": multiplicativity failed at n=" + std::to_string(n) +
                          " draw=" + std::to_string(d);
                return false;
            }
        }
    }
    detail += ": order 4 on generators, multiplicative on " + std::to_string(pairs) + " pairs";
    return true;
}

bool acc10(std::string& detail) {
    struct Case {
        int n, k, bound;
    };
    for (const Case& c : {Case{2, 1, 4}, Case{2, 2, 4}, Case{2, 3, 4}, Case{3, 1, 3}}) {
        FreenessReport r = freeness_certificate(c.n, c.k, c.bound, c.bound);
        if (!r.certified) {
            detail += ": not certified at n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) +
                      " (" + r.witness + ")";
            return false;
        }
        if (!r.witness.empty()) {
            detail += ": relation found at n=" + std::to_string(c.n) + " k=" + std::to_string(c.k);
            return false;
        }
    }
    detail += ": all four module structures certified free up to the bound";
    return true;
}

bool acc11(std::string& detail) {
    Rng rng(111);
    std::vector<WedgeLabel> families;
    {
        WedgeLabel a;
        a.pairs = {{1, 0}, {0, 0}};
        WedgeLabel b;
        b.pairs = {{2, 1}, {0, 0}};
        WedgeLabel c;
        c.pairs = {{1, 1}, {1, 0}};
        WedgeLabel d;
        d.pairs = {{2, 0}, {1, 1}, {0, 0}};
        WedgeLabel e;
        e.pairs = {{1, 1}, {1, 0}, {0, 1}};
        families = {a, b, c, d, e};
    }
    for (const WedgeLabel& l : families) {
        int n = l.n();
        auto fs = wedge_matrix_polys(l);
        MPoly alt = alternant(l);
        for (int d = 0; d < 50; ++d) {
            RatVec xs = rng.distinct_vec(n), ys = rng.distinct_vec(n);
            Quad q = epsilon(xs, ys);
            RatVec at;
            for (const Rat& v : xs) at.push_back(v);
            for (const Rat& v : ys) at.push_back(v);
            if (psi(fs, q) != mpoly_eval_rat(alt, at)) {
                detail += ": bridge mismatch at draw " + std::to_string(d);
                return false;
            }
        }
    }
    // vanishing off the distinguished component
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= n; ++k)
            for (int d = 0; d < 10; ++d) {
                Quad q = seeded_point(rng, n, k, k, d % 2 == 1);
                WedgeLabel l;
                for (int t = n - 1; t >= 0; --t) l.pairs.push_back({t, 0});
                if (psi(wedge_matrix_polys(l), q) != 0) {
                    detail += ": nonzero value at n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                }
                l.pairs.clear();
            }
    detail += ": 250 bridge evaluations exact, vanishing confirmed";
    return true;
}

bool acc12(std::string& detail) {
    std::string tool = ACXTOOL_PATH;
    std::string outA = "acx_acc_a.json", outB = "acx_acc_b.json";
    auto sh = [](const std::string& cmd) { return std::system(cmd.c_str()); };

    int rc1 = sh(tool + " classify --n 3 --draws 3 --out " + outA + " >/dev/null 2>&1");
    int rc2 = sh(tool + " classify --n 3 --draws 3 --out " + outB + " >/dev/null 2>&1");
    if (rc1 != 0 || rc2 != 0) {
        detail += ": classify run failed";
        return false;
    }
    std::string a = slurp(outA), b = slurp(outB);
    std::remove(outA.c_str());
    std::remove(outB.c_str());
    if (a.empty() || a != b) {
        detail += ": reports are not byte-identical";
        return false;
    }

    auto code = [&](const std::string& args) {
        int rc = sh(tool + " " + args + " >/dev/null 2>&1");
        return WEXITSTATUS(rc);
    };
    if (code("pbw-count --n 2 --bound 2") != 0) {
        detail += ": success path exit code != 0";
        return false;
    }
    if (code("normal-form --n 2 --k 7") != 2) {
        detail += ": usage-error exit code != 2";
        return false;
    }
    if (code("freeness --n 2 --k 1 --bound 99") != 3) {
        detail += ": capability-limit exit code != 3";
        return false;
    }
    if (code("this-command-does-not-exist") != 2) {
        detail += ": parse-error exit code != 2";
        return false;
    }
    detail += ": byte-identical reports, exit codes 0/2/3 as documented";
    return true;
}

} // namespace

int main() {
    run("ACC-01", "normal forms: defining equation and stratum invariants", acc01);
    run("ACC-02", "component counts n+1 in two framed affine families", acc02);
    run("ACC-03", "dimension formula and chart rank", acc03);
    run("ACC-04", "trivial isotropy at component points", acc04);
    run("ACC-05", "co-vector/word vanishing and double reading of trace words", acc05);
    run("ACC-06", "relevance iff nilpotent linear family, all profiles to size 4", acc06);
    run("ACC-07", "divided-difference operator relations in the formal parameter", acc07);
    run("ACC-08", "filtration count matches the closed formula", acc08);
    run("ACC-09", "fourier symmetry: order four and multiplicativity", acc09);
    run("ACC-10", "freeness certificates over symmetric polynomials", acc10);
    run("ACC-11", "determinant semi-invariant bridge and vanishing", acc11);
    run("ACC-12", "CLI reports deterministic with documented exit codes", acc12);
    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << g_failures << " criteria failed\n";
    }
    return g_failures;
}
