#include "doctest.h"

#include <random>
#include <regex>
#include <set>

#include "qcluster/io.hpp"
#include "qcluster/session.hpp"
#include "random_seeds.hpp"

using namespace qcluster;

namespace {

// (from, to) -> (label, dashed) read back from DOT text
std::map<std::pair<int, int>, std::pair<std::string, bool>> dot_arrows(const std::string& dot) {
    std::map<std::pair<int, int>, std::pair<std::string, bool>> out;
    std::regex re(R"re("(-?\d+)" -> "(-?\d+)"(?: \[([^\]]*)\])?;)re");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), re); it != std::sregex_iterator(); ++it) {
        std::string attrs = (*it)[3];
        std::smatch lm;
        std::string label = "1";
        if (std::regex_search(attrs, lm, std::regex(R"re(label="([^"]*)")re"))) label = lm[1];
        out[{std::stoi((*it)[1]), std::stoi((*it)[2])}] = {label, attrs.find("dashed") != std::string::npos};
    }
    return out;
}

std::map<int, std::string> dot_shapes(const std::string& dot) {
    std::map<int, std::string> out;
    std::regex re(R"re("(-?\d+)" \[label="[^"]*", shape=(\w+)\];)re");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), re); it != std::sregex_iterator(); ++it)
        out[std::stoi((*it)[1])] = (*it)[2];
    return out;
}

}  // namespace

TEST_CASE("seed JSON round trip") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        Seed s = trial % 2 ? testutil::random_quantum_seed(rng, 2 + trial % 3, 1 + trial % 2)
                           : testutil::random_seed(rng, 2 + trial % 3, trial % 3, false);
        s.labels[s.ids[0]] = "a";
        json j = seed_to_json(s);
        Seed t = seed_from_text(j.dump());
        CHECK(t == s);
        CHECK(t.labels == s.labels);
        CHECK(seed_to_json(t) == j);
    }
    json sl2 = json::parse(R"({"I":[-1,1,2],"I_uf":[1],"d":[1,1,1],"B":[[-1],[0],[-1]],
                                "Lambda":[[0,-1,0],[1,0,1],[0,-1,0]],"labels":{"-1":"u","1":"x","2":"v"}})");
    Seed s = seed_from_json(sl2);
    CHECK(s.name(0) == "u");
    CHECK(check_compatible(s).ok);
    CHECK(seed_names(s) == std::vector<std::string>{"xm1", "x1", "x2"});
}

TEST_CASE("malformed seed JSON is an input error") {
    const std::vector<std::string> bad{
        "not json",
        R"({"I":[1,2]})",
        R"({"I":[1,2],"I_uf":[1],"B":[[0]]})",
        R"({"I":[1,2],"I_uf":[1],"B":[[0],[1,2]]})",
        R"({"I":[1,2],"I_uf":[1,2],"d":[1,1],"B":[[0,1],[1,0]]})",
        R"({"I":[1,2],"I_uf":[3],"B":[[0],[1]]})",
        R"({"I":[1,2],"I_uf":[1],"B":[[0],[1]],"labels":{"7":"z"}})",
        R"({"I":[1,2],"I_uf":[1],"B":[[0],["a"]]})",
        R"([1,2,3])",
    };
    for (auto& text : bad) {
        INFO(text);
        CHECK_THROWS_AS(seed_from_text(text), InputError);
    }
    CHECK_THROWS_AS(read_seed_file("/nonexistent/seed.json"), InputError);
}

TEST_CASE("DOT export of the running example") {
    auto t = seed_from_trapezoid({1, 2, 1, -1, -2, -1}, parse_cartan("A2"));
    std::string dot = seed_to_dot(t.dsd, t.ddI, t.ddB);
    auto arrows = dot_arrows(dot);
    // oracle: the closed formula for the unfrozen columns
    Seed f = seed_from_formula({1, 2, 1, -1, -2, -1}, parse_cartan("A2"));
    std::set<std::pair<int, int>> from_formula;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            if (f.is_unfrozen(j) && f.b(i, j) > 0) from_formula.insert({f.ids[i], f.ids[j]});
    std::set<std::pair<int, int>> solid, dashed;
    for (auto& [e, attr] : arrows) {
        (attr.second ? dashed : solid).insert(e);
        CHECK(attr.first == (attr.second ? "1/2" : "1"));
    }
    for (auto& e : from_formula) CHECK(solid.count(e));
    CHECK(dashed == std::set<std::pair<int, int>>{{-2, -1}, {5, 6}});
    // unfrozen into unfrozen arrows are exactly the formula's
    std::set<std::pair<int, int>> uu;
    for (auto& e : solid)
        if (f.is_unfrozen(f.pos(e.first)) && f.is_unfrozen(f.pos(e.second))) uu.insert(e);
    std::set<std::pair<int, int>> uu_formula;
    for (auto& e : from_formula)
        if (f.is_unfrozen(f.pos(e.first))) uu_formula.insert(e);
    CHECK(uu == uu_formula);
    auto shapes = dot_shapes(dot);
    CHECK(shapes.size() == 8);
    for (auto [id, shape] : shapes) CHECK(shape == (f.is_unfrozen(f.pos(id)) ? "ellipse" : "box"));
    // the plain export has the same arrows apart from frozen-frozen ones
    auto plain = dot_arrows(seed_to_dot(t.dsd));
    for (auto& [e, attr] : arrows)
        if (!attr.second) CHECK(plain.count(e));
    CHECK(plain.size() + 2 == arrows.size());
}

TEST_CASE("DOT weights follow b_ij for skew-symmetrizable seeds") {
    std::mt19937 rng(62);
    for (int trial = 0; trial < 30; ++trial) {
        Seed s = testutil::random_seed(rng, 3, 2);
        auto arrows = dot_arrows(seed_to_dot(s));
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (!s.is_unfrozen(i) && !s.is_unfrozen(j)) continue;
                std::int64_t b = s.is_unfrozen(j) ? s.b(i, j) : -s.b(j, i) * s.dvee()[j] / s.dvee()[i];
                auto it = arrows.find({s.ids[i], s.ids[j]});
                if (b > 0) {
                    REQUIRE(it != arrows.end());
                    CHECK(it->second.first == std::to_string(b));
                } else {
                    CHECK(it == arrows.end());
                }
            }
    }
}

TEST_CASE("element JSON and degree text") {
    Seed s = make_seed({-1, 1, 2}, {1}, {1, 1, 1}, IntMatrix::from_rows({{-1}, {0}, {-1}}));
    auto names = seed_names(s);
    auto z = parse_laurent("q^(1/2)*xm1*x1^-1 + 3*x2", names);
    json j = laurent_json(z, names);
    CHECK(parse_laurent(j["text"].get<std::string>(), names) == z);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][1]["x"] == json::array({1, -1, 0}));
    CHECK(j["terms"][1]["c"][0][0] == "1/2");
    CHECK(f_text(s, ExpVec{1, -1, 2}) == "fm1-f1+2f2");
    CHECK(f_text(s, ExpVec{0, 0, 0}) == "0");
}
