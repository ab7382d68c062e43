// acxtool — command-line front end for the acx library.
//
// Every subcommand runs a deterministic experiment (seeded where random) and
// emits a machine-readable report to stdout or --out. Reports carry the tool
// version, the full configuration, and a hash of that configuration, so two
// runs with the same flags produce byte-identical output.
//
// Exit codes: 0 all checks passed, 1 a mathematical property failed on valid
// input, 2 usage / malformed input, 3 capability limit (irrational spectrum
// or a configured bound was exceeded).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "acx/altpoly.hpp"
#include "acx/cherednik.hpp"
#include "acx/errors.hpp"
#include "acx/io.hpp"
#include "acx/quiver.hpp"
#include "acx/rng.hpp"
#include "acx/variety.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct Report {
    std::string command;
    acx::Json config = acx::Json::object();
    std::vector<std::string> columns;
    std::vector<acx::Json> rows; // ordered objects keyed by `columns`
    bool pass = true;
    std::string witness; // non-empty on failure: how to reproduce / what broke
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string cell_str(const acx::Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void emit(const Report& r, const std::string& format, const std::string& outPath) {
    std::string payload;
    if (format == "csv") {
        std::ostringstream os;
        for (size_t c = 0; c < r.columns.size(); ++c)
            os << (c ? "," : "") << csv_escape(r.columns[c]);
        os << "\n";
        for (const auto& row : r.rows) {
            for (size_t c = 0; c < r.columns.size(); ++c)
                os << (c ? "," : "") << csv_escape(cell_str(row.at(r.columns[c])));
            os << "\n";
        }
        payload = os.str();
    } else {
        acx::Json doc = acx::Json::object();
        doc["tool"] = "acxtool";
        doc["version"] = kVersion;
        doc["command"] = r.command;
        doc["config"] = r.config;
        doc["configHash"] = acx::hash_hex(r.config.dump());
        doc["columns"] = r.columns;
        doc["rows"] = r.rows;
        doc["status"] = r.pass ? "pass" : "fail";
        if (!r.witness.empty()) doc["witness"] = r.witness;
        payload = doc.dump(2) + "\n";
    }
    if (outPath.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(outPath, std::ios::binary);
        if (!f) throw acx::MalformedInput("cannot open output file: " + outPath);
        f << payload;
    }
}

// ---------------------------------------------------------------- classify
// Random points in normal form (optionally conjugated) for every stratum
// (k', k'') with k' <= k'', n = 2..n; checks the generic classification
// recovers dim C[X,Y]i = n-k'', dim jC[X,Y] = k', and flags the point as a
// component point exactly when k' = k''.
Report cmd_classify(int nMax, uint64_t seed, int draws) {
    Report rep;
    rep.command = "classify";
    rep.config = {{"n", nMax}, {"seed", seed}, {"draws", draws}};
    rep.columns = {"n", "kPrime", "kDoublePrime", "draw", "dimCyclic",
                   "dimCoCyclic", "component", "k", "ok"};
    acx::Rng rng(seed);
    for (int n = 2; n <= nMax; ++n) {
        for (int kp = 0; kp <= n; ++kp) {
            for (int kpp = kp; kpp <= n; ++kpp) {
                for (int d = 0; d < draws; ++d) {
                    acx::NormalFormParams p;
                    p.kPrime = kp;
                    p.kDoublePrime = kpp;
                    p.x = rng.vec(n);
                    p.y = rng.distinct_vec(n);
                    acx::Quad q = acx::normal_form(p);
                    if (d % 2 == 1) { // exercise invariance under conjugation
                        acx::RatMat g = rng.invertible(n);
                        q = acx::conjugate(g, *acx::inverse(g), q);
                    }
                    acx::Classification c = acx::classify_generic(q);
                    bool ok = c.dimCyclic == n - kpp && c.dimCoCyclic == kp &&
                              c.component == (kp == kpp) &&
                              (!c.component || c.k == kp);
                    acx::Json row = {{"n", n},
                                     {"kPrime", kp},
                                     {"kDoublePrime", kpp},
                                     {"draw", d},
                                     {"dimCyclic", c.dimCyclic},
                                     {"dimCoCyclic", c.dimCoCyclic},
                                     {"component", c.component},
                                     {"k", c.k},
                                     {"ok", ok}};
                    rep.rows.push_back(row);
                    if (!ok && rep.pass) {
                        rep.pass = false;
                        rep.witness = "classify --n " + std::to_string(nMax) +
                                      " --seed " + std::to_string(seed) +
                                      " : first mismatch at n=" + std::to_string(n) +
                                      " k'=" + std::to_string(kp) +
                                      " k''=" + std::to_string(kpp) +
                                      " draw=" + std::to_string(d);
                    }
                }
            }
        }
    }
    return rep;
}

// ------------------------------------------------------------- normal-form
// One explicit point on the component labeled k: coordinates, the moment-map
// residual (must be zero), and the classification data.
Report cmd_normal_form(int n, int k, uint64_t seed) {
    Report rep;
    rep.command = "normal-form";
    rep.config = {{"n", n}, {"k", k}, {"seed", seed}};
    rep.columns = {"field", "value"};
    if (k < 0 || k > n) throw acx::MalformedInput("need 0 <= k <= n");
    acx::Rng rng(seed);
    acx::NormalFormParams p;
    p.kPrime = k;
    p.kDoublePrime = k;
    p.x = rng.vec(n);
    p.y = rng.distinct_vec(n);
    acx::Quad q = acx::normal_form(p);
    acx::Classification c = acx::classify_generic(q);
    bool momentZero = acx::on_variety(q);
    bool ok = momentZero && c.component && c.k == k;
    auto put = [&](const std::string& f, const acx::Json& v) {
        rep.rows.push_back(acx::Json{{"field", f}, {"value", v}});
    };
    put("X", acx::json_mat(q.X).dump());
    put("Y", acx::json_mat(q.Y).dump());
    put("i", acx::json_vec(q.i).dump());
    put("j", acx::json_vec(q.j).dump());
    put("momentZero", momentZero);
    put("component", c.component);
    put("k", c.k);
    put("stabilizerDim", acx::stabilizer_dim(q));
    put("ok", ok);
    if (!ok) {
        rep.pass = false;
        rep.witness = "normal-form --n " + std::to_string(n) + " --k " +
                      std::to_string(k) + " --seed " + std::to_string(seed);
    }
    return rep;
}

// ------------------------------------------------------- quiver-components
// Component counts and expected dimensions for the framed affine quivers.
// For each family and each n <= bound the count must be n+1 and the expected
// dimension must be n^2*|delta|^2 + 2n.
Report cmd_quiver_components(int nMax, int cycleMax) {
    Report rep;
    rep.command = "quiver-components";
    rep.config = {{"n", nMax}, {"cycleN", cycleMax}};
    rep.columns = {"family", "n", "count", "expectedDim", "ok"};
    struct Family {
        std::string name;
        acx::AffineQuiver aq;
        int cap;
    };
    std::vector<Family> fams = {
        {"jordan", acx::affine_jordan(), nMax},
        {"cycle2", acx::affine_cycle(2), cycleMax},
    };
    for (const auto& fam : fams) {
        long d2 = 0;
        for (int v : fam.aq.delta) d2 += (long)v * v;
        for (int n = 1; n <= fam.cap; ++n) {
            acx::FramedQuiver f = acx::frame_affine(fam.aq, 0, n);
            std::vector<acx::Rat> lambda(f.framed.vertices, acx::Rat(0));
            long count = acx::component_count(f.framed, lambda, f.alpha);
            long dim = acx::expected_dim(f.framed, f.alpha);
            bool ok = count == n + 1 && dim == (long)n * n * d2 + 2L * n;
            rep.rows.push_back(acx::Json{{"family", fam.name},
                                         {"n", n},
                                         {"count", count},
                                         {"expectedDim", dim},
                                         {"ok", ok}});
            if (!ok && rep.pass) {
                rep.pass = false;
                rep.witness = "quiver-components : first mismatch at family=" +
                              fam.name + " n=" + std::to_string(n);
            }
        }
    }
    return rep;
}

// ------------------------------------------------------------- dunkl-check
// Random polynomials of bounded degree; verifies commutativity [D_i,D_j] = 0,
// the commutation relations with multiplication operators, and agreement of
// the direct Dunkl formula with the algebra action on the polynomial module.
Report cmd_dunkl_check(int n, uint64_t seed, int draws, int degBound) {
    Report rep;
    rep.command = "dunkl-check";
    rep.config = {{"n", n}, {"seed", seed}, {"draws", draws}, {"degree", degBound}};
    rep.columns = {"draw", "commute", "crossRelation", "diagRelation", "matchesAction", "ok"};
    if (n < 2) throw acx::MalformedInput("need n >= 2");
    acx::Rng rng(seed);
    std::vector<std::string> vars;
    for (int i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
    for (int d = 0; d < draws; ++d) {
        // random polynomial: up to 4 monomials of total degree <= degBound
        acx::MPoly f(vars);
        int terms = (int)rng.integer(1, 4);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> e(n, 0);
            int deg = (int)rng.integer(0, degBound);
            for (int u = 0; u < deg; ++u) e[rng.integer(0, n - 1)]++;
            f = f + acx::MPoly::monomial(vars, e, acx::CPoly(rng.nonzero_rational()));
        }
        bool commute = true, cross = true, diag = true, matches = true;
        std::vector<acx::MPoly> Df(n, acx::MPoly(vars));
        for (int i = 0; i < n; ++i) {
            Df[i] = acx::dunkl(i, f);
            matches = matches && Df[i] == acx::act_poly(acx::h_y(n, i), f);
        }
        for (int i = 0; i < n && commute; ++i)
            for (int j = i + 1; j < n && commute; ++j)
                commute = acx::dunkl(i, Df[j]) == acx::dunkl(j, Df[i]);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                acx::MPoly xj = acx::MPoly::variable(vars, j);
                acx::MPoly lhs = acx::dunkl(i, xj * f) - xj * Df[i];
                if (i != j) {
                    // [D_i, x_j] f = c * s_ij f
                    acx::Perm s = acx::Perm::transposition(n, i, j);
                    acx::MPoly rhs = acx::mpoly_scale(acx::mpoly_permute_vars(f, s.img), acx::CPoly::c());
                    cross = cross && lhs == rhs;
                } else {
                    // [D_i, x_i] f = f - c * sum_{k != i} s_ik f
                    acx::MPoly rhs = f;
                    for (int kk = 0; kk < n; ++kk) {
                        if (kk == i) continue;
                        acx::Perm s = acx::Perm::transposition(n, i, kk);
                        rhs = rhs - acx::mpoly_scale(acx::mpoly_permute_vars(f, s.img), acx::CPoly::c());
                    }
                    diag = diag && lhs == rhs;
                }
            }
        }
        bool ok = commute && cross && diag && matches;
        rep.rows.push_back(acx::Json{{"draw", d},
                                     {"commute", commute},
                                     {"crossRelation", cross},
                                     {"diagRelation", diag},
                                     {"matchesAction", matches},
                                     {"ok", ok}});
        if (!ok && rep.pass) {
            rep.pass = false;
            rep.witness = "dunkl-check --n " + std::to_string(n) + " --seed " +
                          std::to_string(seed) + " : draw " + std::to_string(d) +
                          " on f = " + acx::mpoly_str(f);
        }
    }
    return rep;
}

// ---------------------------------------------------------------- freeness
// Emits the freeness certificate for the space of k-fold products of
// alternants over the symmetric polynomials in y, up to the bidegree bound.
Report cmd_freeness(int n, int k, int bound) {
    Report rep;
    rep.command = "freeness";
    rep.config = {{"n", n}, {"k", k}, {"bound", bound}};
    rep.columns = {"generator", "degX", "degY"};
    acx::FreenessReport fr = acx::freeness_certificate(n, k, bound, bound);
    for (size_t g = 0; g < fr.generators.size(); ++g)
        rep.rows.push_back(acx::Json{{"generator", (int)g},
                                     {"degX", fr.generators[g].first},
                                     {"degY", fr.generators[g].second}});
    rep.pass = fr.certified;
    if (!fr.certified) rep.witness = fr.witness;
    return rep;
}

// ------------------------------------------------------------- strata-scan
// Enumerates regular matrices X (one Jordan block per distinct eigenvalue)
// with every i-height profile, and checks the equivalence: X relevant
// (each height 0 or full) iff every Y in the conormal space is nilpotent.
Report cmd_strata_scan(int nMax) {
    Report rep;
    rep.command = "strata-scan";
    rep.config = {{"n", nMax}};
    rep.columns = {"blocks", "heights", "relevant", "allNilpotent", "ok"};
    // partitions of n into block sizes, descending
    std::function<void(int, int, std::vector<int>&)> parts =
        [&](int rem, int maxPart, std::vector<int>& cur) {
            if (rem == 0) {
                int n = 0;
                for (int s : cur) n += s;
                // heights: for block t of size s, i-component height 0..s
                std::vector<int> h(cur.size(), 0);
                std::function<void(size_t)> walk = [&](size_t t) {
                    if (t == cur.size()) {
                        acx::RatMat X(n, n);
                        acx::RatVec iv(n, acx::Rat(0));
                        int off = 0;
                        for (size_t b = 0; b < cur.size(); ++b) {
                            for (int r = 0; r < cur[b]; ++r) {
                                X(off + r, off + r) = acx::Rat((long)b);
                                if (r + 1 < cur[b]) X(off + r, off + r + 1) = acx::Rat(1);
                            }
                            // e_h has height exactly h in an upper Jordan block
                            if (h[b] > 0) iv[off + h[b] - 1] = acx::Rat(1);
                            off += cur[b];
                        }
                        bool rel = acx::is_relevant(X, iv);
                        bool nil = acx::all_Y_nilpotent(acx::conormal_space(X, iv));
                        bool ok = rel == nil;
                        std::ostringstream bs, hs;
                        for (size_t b = 0; b < cur.size(); ++b)
                            bs << (b ? "+" : "") << cur[b];
                        for (size_t b = 0; b < h.size(); ++b) hs << (b ? "," : "") << h[b];
                        rep.rows.push_back(acx::Json{{"blocks", bs.str()},
                                                     {"heights", hs.str()},
                                                     {"relevant", rel},
                                                     {"allNilpotent", nil},
                                                     {"ok", ok}});
                        if (!ok && rep.pass) {
                            rep.pass = false;
                            rep.witness = "strata-scan --n " + std::to_string(nMax) +
                                          " : equivalence fails at blocks=" + bs.str() +
                                          " heights=" + hs.str();
                        }
                        return;
                    }
                    for (int hh = 0; hh <= cur[t]; ++hh) {
                        h[t] = hh;
                        walk(t + 1);
                    }
                };
                walk(0);
                return;
            }
            for (int s = std::min(rem, maxPart); s >= 1; --s) {
                cur.push_back(s);
                parts(rem - s, s, cur);
                cur.pop_back();
            }
        };
    for (int n = 1; n <= nMax; ++n) {
        std::vector<int> cur;
        parts(n, n, cur);
    }
    return rep;
}

// --------------------------------------------------------------- pbw-count
// Dimension of the degree-<=d filtration piece computed by multiplying out
// monomials inside the algebra; must equal n! * C(2n+d, 2n).
Report cmd_pbw_count(int n, int d) {
    Report rep;
    rep.command = "pbw-count";
    rep.config = {{"n", n}, {"d", d}};
    rep.columns = {"n", "d", "count", "expected", "ok"};
    long count = acx::pbw_count(n, d);
    long expected = 1;
    for (int t = 2; t <= n; ++t) expected *= t;
    // C(2n+d, 2n)
    long binom = 1;
    for (int t = 1; t <= d; ++t) binom = binom * (2 * n + t) / t;
    expected *= binom;
    bool ok = count == expected;
    rep.rows.push_back(acx::Json{
        {"n", n}, {"d", d}, {"count", count}, {"expected", expected}, {"ok", ok}});
    if (!ok) {
        rep.pass = false;
        rep.witness = "pbw-count --n " + std::to_string(n) + " --bound " + std::to_string(d);
    }
    return rep;
}

// -------------------------------------------------------------- trace-scan
// Random component points: checks the pairing j·X^a Y^b i = 0, and that
// trace words agree under the two readings of Z (outer product vs -[X,Y]).
Report cmd_trace_scan(int nMax, uint64_t seed, int draws) {
    Report rep;
    rep.command = "trace-scan";
    rep.config = {{"n", nMax}, {"seed", seed}, {"draws", draws}};
    rep.columns = {"n", "k", "draw", "pairingVanishes", "wordsAgree", "ok"};
    const std::vector<std::string> words = {"XY", "XZ", "XYZ", "XXZ", "XZYZ", "ZZ", "XYXZ"};
    acx::Rng rng(seed);
    for (int n = 2; n <= nMax; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int d = 0; d < draws; ++d) {
                acx::NormalFormParams p;
                p.kPrime = k;
                p.kDoublePrime = k;
                p.x = rng.vec(n);
                p.y = rng.distinct_vec(n);
                acx::Quad q = acx::normal_form(p);
                if (d % 2 == 1) {
                    acx::RatMat g = rng.invertible(n);
                    q = acx::conjugate(g, *acx::inverse(g), q);
                }
                bool pv = acx::pairing_vanishes(q);
                bool agree = true;
                for (const auto& w : words)
                    agree = agree && acx::trace_word(w, q, true) == acx::trace_word(w, q, false);
                bool ok = pv && agree;
                rep.rows.push_back(acx::Json{{"n", n},
                                             {"k", k},
                                             {"draw", d},
                                             {"pairingVanishes", pv},
                                             {"wordsAgree", agree},
                                             {"ok", ok}});
                if (!ok && rep.pass) {
                    rep.pass = false;
                    rep.witness = "trace-scan --n " + std::to_string(nMax) + " --seed " +
                                  std::to_string(seed) + " : n=" + std::to_string(n) +
                                  " k=" + std::to_string(k) + " draw=" + std::to_string(d);
                }
            }
        }
    }
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic experiments on the almost-commuting variety"};
    app.require_subcommand(1);

    uint64_t seed = 12345;
    std::string format = "json", outPath;

    auto* cClassify = app.add_subcommand("classify", "stratum recovery on random points");
    int clN = 4, clDraws = 4;
    cClassify->add_option("--n", clN, "max matrix size")->capture_default_str();
    cClassify->add_option("--draws", clDraws, "points per stratum")->capture_default_str();

    auto* cNormal = app.add_subcommand("normal-form", "one explicit component point");
    int nfN = 3, nfK = 1;
    cNormal->add_option("--n", nfN, "matrix size")->capture_default_str();
    cNormal->add_option("--k", nfK, "component label")->capture_default_str();

    auto* cQuiver = app.add_subcommand("quiver-components",
                                       "component counts for framed affine quivers");
    int qvN = 6, qvCycle = 3;
    cQuiver->add_option("--n", qvN, "max n for the one-loop family")->capture_default_str();
    cQuiver->add_option("--cycle-n", qvCycle, "max n for the 2-cycle family")
        ->capture_default_str();

    auto* cDunkl = app.add_subcommand("dunkl-check", "Dunkl operator relations on random polynomials");
    int duN = 3, duDraws = 100, duDeg = 5;
    cDunkl->add_option("--n", duN, "number of variables")->capture_default_str();
    cDunkl->add_option("--draws", duDraws, "number of random polynomials")->capture_default_str();
    cDunkl->add_option("--degree", duDeg, "max total degree")->capture_default_str();

    auto* cFree = app.add_subcommand("freeness", "freeness certificate for alternating products");
    int frN = 2, frK = 1, frBound = 4;
    cFree->add_option("--n", frN, "number of points")->capture_default_str();
    cFree->add_option("--k", frK, "number of factors")->capture_default_str();
    cFree->add_option("--bound", frBound, "bidegree bound")->capture_default_str();

    auto* cStrata = app.add_subcommand("strata-scan",
                                       "relevance vs nilpotence over all regular strata");
    int stN = 4;
    cStrata->add_option("--n", stN, "max matrix size")->capture_default_str();

    auto* cPbw = app.add_subcommand("pbw-count", "filtration dimension vs closed formula");
    int pbN = 2, pbD = 2;
    cPbw->add_option("--n", pbN, "rank")->capture_default_str();
    cPbw->add_option("--bound", pbD, "filtration degree")->capture_default_str();

    auto* cTrace = app.add_subcommand("trace-scan", "pairing and trace-word identities");
    int trN = 4, trDraws = 6;
    cTrace->add_option("--n", trN, "max matrix size")->capture_default_str();
    cTrace->add_option("--draws", trDraws, "points per (n, k)")->capture_default_str();

    for (auto* c : {cClassify, cNormal, cQuiver, cDunkl, cFree, cStrata, cPbw, cTrace}) {
        c->add_option("--seed", seed, "RNG seed")->capture_default_str();
        c->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        c->add_option("--out", outPath, "write the report to this file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Report rep;
        if (cClassify->parsed()) rep = cmd_classify(clN, seed, clDraws);
        else if (cNormal->parsed()) rep = cmd_normal_form(nfN, nfK, seed);
        else if (cQuiver->parsed()) rep = cmd_quiver_components(qvN, qvCycle);
        else if (cDunkl->parsed()) rep = cmd_dunkl_check(duN, seed, duDraws, duDeg);
        else if (cFree->parsed()) rep = cmd_freeness(frN, frK, frBound);
        else if (cStrata->parsed()) rep = cmd_strata_scan(stN);
        else if (cPbw->parsed()) rep = cmd_pbw_count(pbN, pbD);
        else if (cTrace->parsed()) rep = cmd_trace_scan(trN, seed, trDraws);
        emit(rep, format, outPath);
        return rep.pass ? 0 : 1;
    } catch (const acx::Error& e) {
        acx::Json err = {{"error", e.kind}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
