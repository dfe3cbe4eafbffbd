#pragma once

#include <string>

#include "json.hpp"
#include "qcluster/qtorus.hpp"
#include "qcluster/seed.hpp"
#include "qcluster/words.hpp"

namespace qcluster {

using json = nlohmann::json;

// {"I", "I_uf", "d", "B" (I x I_uf rows), "Lambda" (I x I or null), "labels"}
json seed_to_json(const Seed& s);
Seed seed_from_json(const json& j);  // InputError on any schema problem
Seed seed_from_text(const std::string& text);
Seed read_seed_file(const std::string& path);

json expvec_json(const ExpVec& g);
// {"text": canonical form, "terms": [{"x": [...], "c": [[exp, coeff], ...]}]}
json laurent_json(const QLaurent& z, const std::vector<std::string>& names = {});
// x<id> for ids >= 0 and xm<|id|> for negative ids (x-1 would read as a difference)
std::vector<std::string> seed_names(const Seed& s);

// Unfrozen vertices are ellipses, frozen ones boxes; i -> j labelled b_ij when b_ij > 0.
// With the full ddB of a trapezoid seed the frozen-frozen arrows are drawn too, dashed when half-integral.
std::string seed_to_dot(const Seed& s);
std::string seed_to_dot(const Seed& s, const std::vector<VertexId>& ddI, const RatMatrix& ddB);

}  // namespace qcluster
