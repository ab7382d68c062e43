#pragma once
#include <json.hpp>

#include "acx/matrix.hpp"
#include "acx/mpoly.hpp"
#include "acx/perm.hpp"

namespace acx {

// All wire formats use nlohmann::ordered_json so that serialization is
// byte-stable: field order is fixed by the code, term order by the canonical
// grlex map order, and rationals by rat_str ("p" or "p/q", q > 0).
using Json = nlohmann::ordered_json;

Json json_rat(const Rat& r);
Rat rat_from_json(const Json& j);

Json json_vec(const RatVec& v);
RatVec vec_from_json(const Json& j);

Json json_mat(const RatMat& m); // array of row arrays
RatMat mat_from_json(const Json& j);

Json json_mpoly(const MPoly& p); // {vars, terms:[{exps, coef}]}
MPoly mpoly_from_json(const Json& j);

Json json_perm(const Perm& p); // 1-based image list
Perm perm_from_json(const Json& j);

// FNV-1a over the dump; used to stamp reports with a config fingerprint.
std::string hash_hex(const std::string& payload);

} // namespace acx
