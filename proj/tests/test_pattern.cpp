#include "doctest.h"

#include <set>

#include "qcluster/pattern.hpp"
#include "random_seeds.hpp"

using namespace qcluster;

namespace {

Seed freezing_example() { return make_seed({1, 2}, {1}, {1, 1}, IntMatrix::from_rows({{0}, {1}})); }

Seed a2_quantum() {
    return make_seed({1, 2}, {1, 2}, {1, 1}, IntMatrix::from_rows({{0, 1}, {-1, 0}}),
                     IntMatrix::from_rows({{0, 1}, {-1, 0}}));
}

std::vector<VertexId> random_word(std::mt19937& rng, const Seed& s, std::size_t len) {
    std::vector<VertexId> w;
    std::uniform_int_distribution<std::size_t> pick(0, s.rank() - 1);
    while (w.size() < len) {
        VertexId k = s.ids[s.uf[pick(rng)]];
        if (!w.empty() && w.back() == k) continue;
        w.push_back(k);
    }
    return w;
}

}  // namespace

TEST_CASE("exchange relation in the rank one freezing seed") {
    auto ts = mutate_tracked(track(freezing_example()), 1);
    std::vector<std::string> names{"x1", "x2"};
    CHECK(ts.var(1) == parse_laurent("x1^-1*(1 + x2)", names));
    CHECK(ts.var(2) == parse_laurent("x2", names));
    auto back = mutate_tracked(ts, 1);
    CHECK(back.var(1) == parse_laurent("x1", names));
    CHECK(back.seed == freezing_example());
}

TEST_CASE("A2 pentagon, classical and quantum") {
    for (bool quantum : {false, true}) {
        Seed s = a2_quantum();
        if (!quantum) s.Lambda.reset();
        auto t0 = track(s);
        auto ts = t0;
        std::vector<QLaurent> seen;
        std::vector<VertexId> word;
        for (int step = 0; step < 10; ++step) {
            VertexId k = step % 2 == 0 ? 1 : 2;
            ts = mutate_tracked(ts, k);
            word.push_back(k);
            seen.push_back(ts.var(k));
            for (auto& v : ts.vars) CHECK(v.bar() == v);
            if (step == 4) {
                // five mutations swap the two initial variables
                CHECK(ts.var(1) == t0.var(2));
                CHECK(ts.var(2) == t0.var(1));
                ExpVec m{2, -1};
                CHECK(same_tropical_point(s, {word, m}, {{}, ExpVec{-1, 2}}));
                CHECK_FALSE(same_tropical_point(s, {word, m}, {{}, m}));
            }
        }
        CHECK(ts.vars == t0.vars);
        std::set<ExpVec> distinct;
        for (auto& v : seen) distinct.insert(v.terms().begin()->first);
        std::set<std::string> as_text;
        for (auto& v : seen) as_text.insert(v.str());
        CHECK(as_text.size() == 5);
        if (!quantum) {
            // the five classical variables of A2
            std::vector<std::string> names{"x1", "x2"};
            std::set<std::string> expect;
            for (auto e : {"x1^-1 + x1^-1*x2", "x1^-1*x2^-1 + x1^-1 + x2^-1", "x2^-1 + x1*x2^-1", "x2", "x1"})
                expect.insert(parse_laurent(e, names).str());
            CHECK(as_text == expect);
        }
    }
}

TEST_CASE("tropical steps are involutions") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> e(-4, 4);
    for (int trial = 0; trial < 1000; ++trial) {
        Seed s = testutil::random_seed(rng, 1 + trial % 5, trial % 3, false);
        ExpVec m(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) m[i] = e(rng);
        VertexId k = s.ids[s.uf[trial % s.rank()]];
        CHECK(tropical_step(tropical_step(m, s, k), mutate_seed(s, k), k) == m);
        ExpVec mk0 = m;
        mk0[s.pos(k)] = 0;
        CHECK(tropical_step(mk0, s, k) == mk0);
    }
    Seed s = a2_quantum();
    CHECK(tropical_transport(ExpVec{3, 1}, s, {}) == ExpVec{3, 1});
}

TEST_CASE("random quantum walks: exactness, bar invariance and degree transport") {
    std::mt19937 rng(10);
    int walks = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Seed s = testutil::random_quantum_seed(rng, 2 + trial % 3, 1 + trial % 2, 1);
        DominanceOrder dom(s.B);
        auto word = random_word(rng, s, 1 + trial % 5);
        TrackedSeed ts = track(s, 200'000);
        try {
            for (std::size_t r = 0; r < word.size(); ++r) {
                ts = mutate_tracked(ts, word[r]);
                std::vector<VertexId> prefix(word.begin(), word.begin() + static_cast<long>(r) + 1);
                for (std::size_t i = 0; i < s.size(); ++i) {
                    const auto& v = ts.vars[i];
                    CHECK(v.bar() == v);
                    auto g = degree(v, dom);
                    REQUIRE(g);
                    CHECK(*g == g_vector(s, prefix, s.ids[i]));
                    CHECK(v.coeff(*g) == QCoeff(1));
                }
            }
            // involution at the variable level
            auto again = mutate_tracked(mutate_tracked(ts, word.back()), word.back());
            CHECK(again.vars == ts.vars);
            ++walks;
        } catch (const BudgetError&) {
        }
    }
    CHECK(walks > 40);
}

TEST_CASE("localized cluster monomials") {
    auto s = a2_quantum();
    auto ts = mutate_tracked(track(s), {1, 2});
    DominanceOrder dom(s.B);
    std::set<ExpVec> degs;
    for (std::int64_t a = 0; a < 3; ++a)
        for (std::int64_t b = 0; b < 3; ++b) {
            auto p = localized_cluster_monomial(ts, ExpVec{a, b});
            CHECK(p.value.bar() == p.value);
            CHECK(p.degree == tropical_pullback(ExpVec{a, b}, s, {1, 2}));
            degs.insert(p.degree);
            // degree of a product is the sum
            auto q = ts.torus.mul(ts.var(1), ts.var(2));
            CHECK(degree(q, dom) == *degree(ts.var(1), dom) + *degree(ts.var(2), dom));
        }
    CHECK(degs.size() == 9);
    CHECK_THROWS_AS(localized_cluster_monomial(ts, ExpVec{-1, 0}), InputError);

    Seed f = make_seed({1, 2}, {1}, {1, 1}, IntMatrix::from_rows({{0}, {1}}));
    auto tf = track(f);
    auto p = localized_cluster_monomial(tf, ExpVec{0, -2});
    CHECK(p.value == QLaurent::monomial({0, -2}));
}

TEST_CASE("green to red sequences") {
    Seed s = a2_quantum();
    CHECK_FALSE(is_green_to_red(s, {}, {}));
    CHECK(is_green_to_red(s, {1, 2, 1}, {{1, 2}, {2, 1}}));
    CHECK_FALSE(is_green_to_red(s, {1, 2, 1}, {}));
    Seed r1 = make_seed({1, 2}, {1}, {1, 1}, IntMatrix::from_rows({{0}, {-1}}));
    CHECK(is_green_to_red(r1, {1}, {}));
}

TEST_CASE("laurent report") {
    auto ts = mutate_tracked(track(a2_quantum()), {1, 2, 1});
    for (auto& r : laurent_report(ts)) {
        CHECK(r.is_laurent);
        CHECK(r.coefficients_nonnegative);
    }
    for (auto& r : laurent_report(track(freezing_example()))) CHECK(r.coefficients_nonnegative);
}
