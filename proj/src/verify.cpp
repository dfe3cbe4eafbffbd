#include "qcluster/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "qcluster/bases.hpp"
#include "qcluster/dbs.hpp"
#include "qcluster/freeze.hpp"

namespace qcluster {

json SuiteResult::to_json() const {
    return json{{"suite", name}, {"description", description}, {"pass", pass},   {"fail", fail},
                {"skipped", skipped}, {"ok", ok()},            {"details", details}, {"seconds", seconds}};
}

namespace {

struct Ctx {
    SuiteResult& r;
    void check(bool ok, const std::string& what) {
        if (ok) ++r.pass;
        else {
            ++r.fail;
            if (r.details.size() < 50) r.details.push_back(what);
        }
    }
};

const Word kKronecker{1, 2, 1, 1, 2, 2, 1};

ExpVec fdiff(std::size_t n, int a, int b) {
    ExpVec e(n);
    e[static_cast<std::size_t>(a - 1)] -= 1;
    e[static_cast<std::size_t>(b - 1)] += 1;
    return e;
}

// b_ik = s_ik d_i with s skew; frozen rows arbitrary.
Seed random_seed(std::mt19937& rng, std::size_t m, std::size_t frozen, int amp) {
    std::uniform_int_distribution<int> e(-amp, amp), dd(1, 3);
    for (;;) {
        std::size_t n = m + frozen;
        std::vector<VertexId> ids, uf;
        for (std::size_t i = 0; i < n; ++i) ids.push_back(static_cast<VertexId>(i + 1));
        for (std::size_t i = 0; i < m; ++i) uf.push_back(static_cast<VertexId>(i + 1));
        std::vector<std::int64_t> d(n);
        for (auto& x : d) x = dd(rng);
        IntMatrix B(n, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = i + 1; k < m; ++k) {
                int s = e(rng);
                B(i, k) = s * d[i];
                B(k, i) = -s * d[k];
            }
        for (std::size_t i = m; i < n; ++i)
            for (std::size_t k = 0; k < m; ++k) B(i, k) = e(rng);
        if (rank(B) < m) continue;
        return make_seed(ids, uf, d, B);
    }
}

std::vector<VertexId> random_walk(std::mt19937& rng, const Seed& s, std::size_t len) {
    std::vector<VertexId> w;
    while (w.size() < len) {
        VertexId k = s.ids[s.uf[rng() % s.rank()]];
        if (!w.empty() && w.back() == k) continue;
        w.push_back(k);
    }
    return w;
}

void kronecker_degrees(Ctx& c, std::mt19937&) {
    CartanData cd = parse_cartan("Kronecker");
    DbsData data(kKronecker, cd);
    auto plan = data.plan();
    c.check(plan.sigma == std::vector<VertexId>{1, 3, 4, 2, 5, 1, 3, 1, 2}, "Sigma is not (1,3,4,2,5,1,3,1,2)");
    const std::vector<std::pair<int, int>> ivs{{3, 3}, {3, 4}, {3, 7}, {5, 5}, {5, 6}, {4, 4}, {4, 7}, {7, 7}, {6, 6}};
    const std::vector<std::pair<int, int>> degs{{1, 3}, {1, 4}, {1, 7}, {2, 5}, {2, 6}, {3, 4}, {3, 7}, {4, 7}, {5, 6}};
    TrackedSeed ts = track(data.seed());
    for (std::size_t i = 0; i < plan.sigma.size(); ++i) {
        ts = mutate_tracked(ts, plan.sigma[i]);
        auto g = degree(ts.var(plan.sigma[i]), data.dominance());
        std::string tag = "W[" + std::to_string(ivs[i].first) + "," + std::to_string(ivs[i].second) + "]";
        c.check(g && *g == fdiff(7, degs[i].first, degs[i].second), tag + " has the wrong degree");
        c.check(ts.var(plan.sigma[i]) == data.W(ivs[i].first, ivs[i].second), tag + " is not the interval variable");
    }
    std::map<VertexId, VertexId> sigma{{1, 4}, {4, 1}, {2, 5}, {5, 2}, {3, 3}};
    c.check(plan.perm == sigma, "sigma is not (1,4)(2,5)");
    c.check(is_green_to_red(rsd(kKronecker, cd), plan.sigma, sigma), "Sigma is not green to red with sigma");
}

void y_degree_suite(Ctx& c, std::mt19937&) {
    DbsData data(kKronecker, parse_cartan("Kronecker"));
    auto y = y_degree(data, 4);
    ExpVec expect{0, -2, 1, 0, 0, 2, -1};
    c.check(y.f == expect, "deg y_4 != f3 - f7 + 2 f6 - 2 f2");
    c.check(y.f == data.beta(4, 7) * -1 + data.beta(5, 6) * 2, "deg y_4 != -beta[4,7] + 2 beta[5,6]");
    c.check(y.matches_column, "closed formula differs from the B column");
}

void freeze_example(Ctx& c, std::mt19937&) {
    Seed s = make_seed({1, 2}, {1}, {1, 1}, IntMatrix::from_rows({{0}, {1}}));
    std::vector<std::string> names{"x1", "x2"};
    auto z = parse_laurent("x1^-1*(1 + x2)", names);
    c.check(frz(z, {1}, ExpVec{-1, 0}, s) == parse_laurent("x1^-1", names), "frz(x1^-1 (1 + x2)) != x1^-1");
    auto t0 = track(s), t1 = mutate_tracked(t0, 1);
    for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = -3; b <= 3; ++b) {
            ExpVec m{a, b};
            QLaurent sm = a >= 0 ? QLaurent::monomial(m) : localized_cluster_monomial(t1, ExpVec{-a, b}).value;
            c.check(frz(sm, {1}, m, s) == QLaurent::monomial(m), "frz(s_m) != x^m at m = " + m.str());
        }
}

void oracle_pair(Ctx& c, std::mt19937& rng) {
    for (int trial = 0; trial < 220; ++trial) {
        auto cd = random_cartan(rng, 1 + trial % 3);
        Word w = random_word(rng, cd, static_cast<std::size_t>(trial % 9));
        c.check(seed_from_formula(w, cd) == seed_from_trapezoid(w, cd).dsd, "formula and trapezoid differ on " +
                                                                             word_string(w));
    }
}

void tsystems(Ctx& c, std::mt19937&) {
    for (auto [w, cd] : {std::pair{Word{1, 2, 1}, parse_cartan("A2")}, std::pair{kKronecker, parse_cartan("Kronecker")}}) {
        DbsData data(w, cd);
        for (auto& r : all_t_systems(data)) {
            c.check(r.holds, word_string(w) + ": " + r.identity + " fails");
            c.check(r.alpha > r.alpha_prime, word_string(w) + ": alpha <= alpha' in " + r.identity);
        }
    }
}

void properties(Ctx& c, std::mt19937& rng) {
    int cases = 0;
    for (int trial = 0; cases < 520 && trial < 3000; ++trial) {
        Seed s = quantize(random_seed(rng, 2 + trial % 4, 1 + trial % 2, 1));
        auto word = random_walk(rng, s, 1 + rng() % 6);
        std::vector<std::string> bad;
        try {
            auto delta0 = check_compatible(s).delta;
            Seed t = s;
            for (auto k : word) {
                Seed u = mutate_seed(t, k);
                if (mutate_seed(u, k) != t) bad.push_back("mutation is not an involution");
                if (mutate_seed(t, k, -1) != u) bad.push_back("mutation depends on the sign");
                auto comp = check_compatible(u);
                if (!comp.ok || comp.delta != delta0) bad.push_back("compatibility or delta changed");
                t = u;
            }
            ExpVec m(s.size());
            for (std::size_t i = 0; i < s.size(); ++i) m[i] = static_cast<std::int64_t>(rng() % 7) - 3;
            if (tropical_pullback(tropical_transport(m, s, word), s, word) != m) bad.push_back("tropical round trip");
            DominanceOrder dom(s.B);
            auto ts = mutate_tracked(track(s, 3000), word);
            for (auto id : s.ids) {
                auto g = degree(ts.var(id), dom);
                if (!g || *g != g_vector(s, word, id)) bad.push_back("degree transport at " + std::to_string(id));
            }
        } catch (const BudgetError&) {
            // failures found before the budget ran out still count
            if (bad.empty()) {
                ++c.r.skipped;
                continue;
            }
        }
        std::string what;
        for (auto& b : bad) what += b + "; ";
        c.check(bad.empty(), "walk " + std::to_string(trial) + ": " + what);
        ++cases;
    }
}

void commutation(Ctx& c, std::mt19937& rng) {
    int applicable = 0;
    for (int trial = 0; applicable < 220 && trial < 1000; ++trial) {
        CartanData cd = random_cartan(rng, 1 + rng() % 2, 2);
        Word w = random_word(rng, cd, 2 + rng() % 5, false);
        Seed s = rsd(w, cd, true);
        if (s.rank() == 0) continue;
        auto ts = track(s, 50'000);
        std::size_t steps = rng() % 3;
        for (std::size_t i = 0; i < steps; ++i) ts = mutate_tracked(ts, s.ids[s.uf[rng() % s.rank()]]);
        ExpVec m(s.size());
        for (std::size_t p = 0; p < s.size(); ++p) m[p] = static_cast<std::int64_t>(rng() % 2);
        for (auto p : s.frozen()) m[p] = static_cast<std::int64_t>(rng() % 3) - 1;
        QLaurent z = localized_cluster_monomial(ts, m).value;
        VertexId k = s.ids[s.uf[rng() % s.rank()]];
        std::vector<VertexId> F;
        for (auto p : s.uf)
            if (s.ids[p] != k && rng() % 2) F.push_back(s.ids[p]);
        auto r = frz_commutes_with_mutation(z, F, k, s);
        if (!r.applicable) continue;
        ++applicable;
        c.check(r.holds, word_string(w) + ": freezing and mutation at " + std::to_string(k) + " disagree");
    }
}

std::vector<std::vector<std::int64_t>> small_exponents(std::size_t l, std::int64_t total) {
    std::vector<std::vector<std::int64_t>> out{{}};
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<std::vector<std::int64_t>> next;
        for (auto& w : out) {
            std::int64_t used = 0;
            for (auto x : w) used += x;
            for (std::int64_t e = 0; used + e <= total; ++e) {
                auto v = w;
                v.push_back(e);
                next.push_back(v);
            }
        }
        out = next;
    }
    return out;
}

void kl(Ctx& c, std::mt19937&) {
    for (auto [w, cd] : {std::pair{Word{1, 1, 1}, parse_cartan("A1")}, std::pair{Word{1, 2, 1}, parse_cartan("A2")}}) {
        DbsData data(w, cd);
        StandardBasis basis(data);
        auto cms = cluster_monomials_near(data.seed(), 6, 3);
        for (auto& v : small_exponents(w.size(), 3)) {
            std::string tag = word_string(w) + " w=" + ExpVec(v).str();
            auto L = kl_basis(basis, v, KLOrder::Rev);
            auto L2 = kl_basis(basis, v, KLOrder::Lex);
            c.check(L.value.bar() == L.value, tag + " not bar-invariant");
            bool tri = L.over_M.at(v) == QCoeff(1);
            for (auto& [u, b] : L.over_M)
                if (u != v) tri = tri && order_less(u, v, KLOrder::Rev) && b.strictly_negative_exponents();
            c.check(tri, tag + " not unitriangular");
            c.check(L.value == L2.value, tag + " differs between rev and lex");
            auto it = cms.find(data.from_beta(v));
            if (it != cms.end()) c.check(it->second == L.value, tag + " differs from the cluster monomial");
        }
    }
}

void sl2(Ctx& c, std::mt19937&) {
    IntMatrix lambda = IntMatrix::from_rows({{0, -1, 0}, {1, 0, 1}, {0, -1, 0}});
    Seed s = make_seed({-1, 1, 2}, {1}, {1, 1, 1}, IntMatrix::from_rows({{-1}, {0}, {-1}}), lambda);
    auto t0 = track(s), t1 = mutate_tracked(t0, 1);
    QuantumTorus T(lambda);
    DominanceOrder dom(s.B);
    QLaurent u = t0.var(-1), x = t0.var(1), v = t0.var(2), y = t1.var(1);
    const std::int64_t N = 3;
    std::map<ExpVec, int> hits;
    for (std::int64_t n = 0; n <= N; ++n)
        for (std::int64_t m = 0; m <= N; ++m)
            for (std::int64_t l = 0; l <= N; ++l)
                for (int branch = 0; branch < 2; ++branch) {
                    if (branch == 1 && m == 0) continue;
                    QLaurent z = T.mul(T.mul(T.pow(u, n), T.pow(branch ? y : x, m)), T.pow(v, l));
                    auto pz = normalize(z, dom);
                    auto cm = localized_cluster_monomial(branch ? t1 : t0, ExpVec{n, m, l});
                    std::string tag = std::string(branch ? "u^n y^m v^l" : "u^n x^m v^l") + " at " + pz.degree.str();
                    c.check(cm.value == pz.value, tag + " is not a cluster monomial up to q-powers");
                    c.check(cm.value.bar() == cm.value, tag + " is not bar-invariant");
                    c.check(T.q_commute(cm.value, u) && T.q_commute(cm.value, v), tag + " does not q-commute with u, v");
                    ++hits[pz.degree];
                }
    for (std::int64_t a = 0; a <= N; ++a)
        for (std::int64_t b = -N; b <= N; ++b)
            for (std::int64_t d = 0; d <= N; ++d) {
                bool in_cone = b >= 0 || (a + b >= 0 && d + b >= 0);
                if (!in_cone) continue;
                ExpVec g{a, b, d};
                c.check(hits[g] == 1, "degree " + g.str() + " is hit " + std::to_string(hits[g]) + " times");
            }
}

void correction(Ctx& c, std::mt19937& rng) {
    int instances = 0;
    for (int trial = 0; instances < 110 && trial < 600; ++trial) {
        Seed t = quantize(random_seed(rng, 2 + rng() % 2, 1 + rng() % 2, 1));
        auto ps = principal_seed(t);
        auto sim = similarity_check(t, ps.seed);
        if (!sim) {
            c.check(false, "t and t^prin are not similar");
            continue;
        }
        auto ts = track(t, 200'000), ts2 = track(ps.seed, 200'000);
        std::vector<QLaurent> zs, z2s;
        try {
            std::size_t r = 1 + rng() % 3;
            for (std::size_t f = 0; f < r; ++f) {
                auto word = random_walk(rng, t, rng() % 4);
                auto a = mutate_tracked(ts, word), b = mutate_tracked(ts2, word);
                VertexId v = t.ids[t.uf[rng() % t.rank()]];
                zs.push_back(a.var(v));
                z2s.push_back(b.var(v));
            }
            QuantumTorus T(*t.Lambda);
            QLaurent prod = zs[0];
            for (std::size_t f = 1; f < zs.size(); ++f) prod = T.mul(prod, zs[f]);
            ExpVec m = normalize(prod, DominanceOrder(t.B)).degree;
            ExpVec m2(ps.seed.size());
            for (auto p : t.uf) m2[ps.seed.pos(t.ids[p])] = m[p];
            for (auto p : ps.seed.frozen()) m2[p] = static_cast<std::int64_t>(rng() % 5) - 2;
            auto rep = correction_check(zs, z2s, m2, *sim);
            c.check(rep.holds && rep.frozen_only && rep.p_degree == rep.p_degree_measured,
                    "correction fails on trial " + std::to_string(trial));
            ++instances;
        } catch (const BudgetError&) {
            ++c.r.skipped;
        }
    }
}

struct SuiteDef {
    std::string description;
    std::function<void(Ctx&, std::mt19937&)> run;
};

const std::map<std::string, SuiteDef>& registry() {
    static const std::map<std::string, SuiteDef> r{
        {"kronecker-degrees", {"interval degrees along Sigma for (1,2,1,1,2,2,1) and green-to-red sigma", kronecker_degrees}},
        {"y-degree", {"deg y_4 = -beta[4,7] + 2 beta[5,6] for the Kronecker word", y_degree_suite}},
        {"freeze-example", {"rank one freezing example and frz(s_m) = x^m", freeze_example}},
        {"oracle-pair", {"closed formula vs trapezoid construction on random signed words", oracle_pair}},
        {"tsystems", {"all T-systems for (1,2,1) and the Kronecker word, alpha > alpha'", tsystems}},
        {"properties", {"mutation, quantization, tropical and degree-transport properties on random walks", properties}},
        {"commutation", {"freezing commutes with mutation away from F on word seeds", commutation}},
        {"kl", {"KL bases for (1,1,1) and (1,2,1), |w| <= 3", kl}},
        {"sl2", {"quantum SL2 seed: cluster monomials and the crystal basis degrees", sl2}},
        {"correction", {"correction technique between t and t^prin", correction}},
    };
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> v;
    for (auto& [k, d] : registry()) v.push_back(k);
    return v;
}

SuiteResult run_suite(const std::string& name, std::uint32_t rng_seed) {
    auto it = registry().find(name);
    if (it == registry().end()) throw InputError("unknown suite '" + name + "'");
    SuiteResult r;
    r.name = name;
    r.description = it->second.description;
    std::mt19937 rng(rng_seed);
    Ctx c{r};
    auto start = std::chrono::steady_clock::now();
    it->second.run(c, rng);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace qcluster
