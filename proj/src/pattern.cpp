#include "qcluster/pattern.hpp"

namespace qcluster {

namespace {

std::int64_t lam(const Seed& s, std::size_t i, std::size_t j) { return s.Lambda ? (*s.Lambda)(i, j) : 0; }

// Power of an expansion; frozen variables are monomials and may take negative powers.
QLaurent var_power(const TrackedSeed& ts, std::size_t i, std::int64_t e) {
    const QLaurent& v = ts.vars[i];
    if (e >= 0) return ts.torus.pow(v, e);
    if (!v.is_monomial()) throw InputError("negative power of a non-monomial cluster variable");
    return ts.torus.pow(ts.torus.inverse_monomial(v), -e);
}

}  // namespace

TrackedSeed track(const Seed& s, std::size_t max_terms) {
    TrackedSeed ts{s, s, {}, {}, s.Lambda ? QuantumTorus(*s.Lambda) : QuantumTorus::classical(s.size())};
    ts.torus.max_terms = max_terms;
    for (std::size_t i = 0; i < s.size(); ++i) ts.vars.push_back(QLaurent::monomial(ExpVec::unit(s.size(), i)));
    return ts;
}

QLaurent expand_monomial(const TrackedSeed& ts, const ExpVec& h) {
    const Seed& s = ts.seed;
    std::size_t n = s.size();
    Rat shift = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (h[i] && h[j]) shift -= Rat(checked_mul(checked_mul(h[i], h[j]), lam(s, i, j)), 2);
    QLaurent r = QLaurent::constant(n, QCoeff::q_power(shift));
    for (std::size_t i = 0; i < n; ++i)
        if (h[i]) r = ts.torus.mul(r, var_power(ts, i, h[i]));
    return r;
}

QLaurent expand_in_initial(const TrackedSeed& ts, const QLaurent& z) {
    QLaurent r(ts.seed.size());
    for (auto& [g, c] : z.terms()) r += expand_monomial(ts, g).scaled(c);
    return r;
}

TrackedSeed mutate_tracked(const TrackedSeed& ts, VertexId kid) {
    const Seed& s = ts.seed;
    std::size_t n = s.size(), k = s.pos(kid);
    auto kc = s.column(k);
    if (!kc) throw InputError("cannot mutate at frozen vertex " + std::to_string(kid));
    ExpVec h1(n), h2(n), fk = ExpVec::unit(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t b = s.B(i, *kc);
        if (b < 0) h1[i] = -b;
        if (b > 0) h2[i] = b;
    }
    // x'_k = x_k^{-1} * (q^{lambda(f_k,h1)/2} X^{h1} + q^{lambda(f_k,h2)/2} X^{h2}), all in t's torus
    auto half = [&](const ExpVec& h) {
        std::int64_t f = 0;
        for (std::size_t j = 0; j < n; ++j) f = checked_add(f, checked_mul(lam(s, k, j), h[j]));
        return Rat(f, 2);
    };
    QLaurent N = expand_monomial(ts, h1).scaled(QCoeff::q_power(half(h1))) +
                 expand_monomial(ts, h2).scaled(QCoeff::q_power(half(h2)));
    TrackedSeed r = ts;
    r.vars[k] = ts.torus.left_divide(ts.vars[k], N);
    r.seed = mutate_seed(s, kid);
    r.history.push_back(kid);
    return r;
}

TrackedSeed mutate_tracked(TrackedSeed ts, const std::vector<VertexId>& word) {
    for (auto k : word) ts = mutate_tracked(ts, k);
    return ts;
}

PointedElement localized_cluster_monomial(const TrackedSeed& ts, const ExpVec& m) {
    for (auto p : ts.seed.uf)
        if (m[p] < 0) throw InputError("localized cluster monomials need nonnegative unfrozen exponents");
    QLaurent z = expand_monomial(ts, m);
    return normalize(z, DominanceOrder(ts.initial.B));
}

ExpVec tropical_step(const ExpVec& m, const Seed& t, VertexId kid) {
    std::size_t k = t.pos(kid);
    auto kc = t.column(k);
    if (!kc) throw InputError("cannot mutate at frozen vertex " + std::to_string(kid));
    ExpVec r = m;
    std::int64_t mk = m[k];
    r[k] = -mk;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i == k) continue;
        std::int64_t b = t.B(i, *kc);
        if (b >= 0) r[i] = checked_add(m[i], checked_mul(b, mk > 0 ? mk : 0));
        else r[i] = checked_add(m[i], checked_mul(b, mk < 0 ? -mk : 0));
    }
    return r;
}

ExpVec tropical_transport(const ExpVec& m, const Seed& t, const std::vector<VertexId>& word) {
    ExpVec r = m;
    Seed s = t;
    for (auto k : word) {
        r = tropical_step(r, s, k);
        s = mutate_seed(s, k);
    }
    return r;
}

ExpVec tropical_pullback(const ExpVec& m, const Seed& t, const std::vector<VertexId>& word) {
    std::vector<Seed> seeds{t};
    for (auto k : word) seeds.push_back(mutate_seed(seeds.back(), k));
    ExpVec r = m;
    for (std::size_t i = word.size(); i-- > 0;) r = tropical_step(r, seeds[i + 1], word[i]);
    return r;
}

bool same_tropical_point(const Seed& t0, const TropicalPoint& a, const TropicalPoint& b) {
    return tropical_pullback(a.m, t0, a.word) == tropical_pullback(b.m, t0, b.word);
}

ExpVec g_vector(const Seed& t, const std::vector<VertexId>& word, VertexId i) {
    return tropical_pullback(ExpVec::unit(t.size(), t.pos(i)), t, word);
}

bool is_green_to_red(const Seed& t, const std::vector<VertexId>& word, const std::map<VertexId, VertexId>& sigma) {
    if (t.rank() == 0) return true;
    for (auto k : t.uf) {
        VertexId kid = t.ids[k];
        auto it = sigma.find(kid);
        VertexId sk = it == sigma.end() ? kid : it->second;
        if (!t.is_unfrozen(t.pos(sk))) return false;
        ExpVec g = g_vector(t, word, sk);
        for (auto p : t.uf)
            if (g[p] != (p == k ? -1 : 0)) return false;
    }
    return true;
}

std::vector<LaurentReport> laurent_report(const TrackedSeed& ts) {
    std::vector<LaurentReport> r;
    for (std::size_t i = 0; i < ts.seed.size(); ++i)
        r.push_back({ts.seed.ids[i], !ts.vars[i].is_zero(), ts.vars[i].coefficients_nonnegative()});
    return r;
}

}  // namespace qcluster
