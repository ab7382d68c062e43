#include "acx/io.hpp"

#include <cstdint>

#include "acx/errors.hpp"

namespace acx {

Json json_rat(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw MalformedInput("rational must be a JSON string");
    return rat_parse(j.get<std::string>());
}

Json json_vec(const RatVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(json_rat(x));
    return a;
}

RatVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInput("vector must be a JSON array");
    RatVec v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

Json json_mat(const RatMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(json_rat(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat mat_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInput("matrix must be a JSON array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    RatMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
            throw MalformedInput("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(r, c) = rat_from_json(j[r][c]);
    }
    return m;
}

Json json_mpoly(const MPoly& p) {
    Json out;
    out["vars"] = p.vars;
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms) {
        Json t;
        t["exps"] = e;
        t["coef"] = cpoly_str(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

MPoly mpoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw MalformedInput("polynomial must have vars and terms");
    MPoly p(j["vars"].get<std::vector<std::string>>());
    for (const auto& t : j["terms"]) {
        auto e = t.at("exps").get<std::vector<int>>();
        if (e.size() != p.vars.size()) throw MalformedInput("term exponent size mismatch");
        p.add_term(e, cpoly_parse(t.at("coef").get<std::string>()));
    }
    return p;
}

Json json_perm(const Perm& p) {
    Json a = Json::array();
    for (int k = 0; k < p.n(); ++k) a.push_back(p.img[k] + 1);
    return a;
}

Perm perm_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInput("permutation must be a JSON array");
    Perm p(static_cast<int>(j.size()));
    std::vector<bool> seen(p.n(), false);
    for (int k = 0; k < p.n(); ++k) {
        int v = j[k].get<int>() - 1;
        if (v < 0 || v >= p.n() || seen[v]) throw MalformedInput("not a permutation");
        seen[v] = true;
        p.img[k] = v;
    }
    return p;
}

std::string hash_hex(const std::string& payload) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : payload) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace acx
