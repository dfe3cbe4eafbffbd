#include "qcluster/freeze.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qcluster/errors.hpp"

namespace qcluster {

std::vector<VertexId> unfrozen_part(const Seed& s, const std::vector<VertexId>& F) {
    std::set<VertexId> keep;
    for (auto id : F)
        if (s.is_unfrozen(s.pos(id))) keep.insert(id);
    return {keep.begin(), keep.end()};
}

FreezeContext freeze_context(const Seed& s, const std::vector<VertexId>& F) {
    auto G = unfrozen_part(s, F);
    return {s, G, freeze_seed(s, G)};
}

QLaurent frz(const QLaurent& z, const std::vector<VertexId>& F, const ExpVec& m, const Seed& s) {
    if (z.dim() != s.size() || m.size() != s.size()) throw InputError("dimension mismatch in frz");
    std::vector<std::size_t> cols;
    for (auto id : unfrozen_part(s, F)) cols.push_back(s.column_of(id));
    DominanceOrder dom(s.B);
    QLaurent r(s.size());
    for (auto& [g, c] : z.terms()) {
        auto n = dom.leq(g, m);
        if (!n) throw InputError("term x^" + g.str() + " is not dominated by " + m.str());
        bool keep = true;
        for (auto col : cols) keep = keep && (*n)[col] == 0;
        if (keep) r.add_term(g, c);
    }
    return r;
}

QLaurent frz(const QLaurent& z, const std::vector<VertexId>& F, const Seed& s) {
    auto m = degree(z, DominanceOrder(s.B));
    if (!m) throw InputError("element has no unique maximal degree");
    return frz(z, F, *m, s);
}

QLaurent change_frame(const QLaurent& z, const Seed& t, VertexId k) {
    // Variables of t expanded in the frame of mu_k t.
    TrackedSeed ts = mutate_tracked(track(mutate_seed(t, k)), k);
    std::size_t p = t.pos(k);
    std::int64_t N = z.is_zero() ? 0 : std::max<std::int64_t>(0, -z.min_exponent(p));
    QuantumTorus torus = t.Lambda ? QuantumTorus(*t.Lambda) : QuantumTorus::classical(t.size());
    ExpVec xk = ExpVec::unit(t.size(), p) * N;
    QLaurent lifted = torus.mono_mul(xk, z);
    QLaurent num = expand_in_initial(ts, lifted);
    QLaurent den = expand_monomial(ts, xk);
    return ts.torus.left_divide(den, num);
}

CommutationReport frz_commutes_with_mutation(const QLaurent& z, const std::vector<VertexId>& F, VertexId k,
                                             const Seed& t) {
    CommutationReport r;
    if (std::find(F.begin(), F.end(), k) != F.end()) throw InputError("mutation vertex lies in F");
    if (!t.is_unfrozen(t.pos(k))) throw InputError("mutation vertex is frozen");
    Seed t2 = mutate_seed(t, k);
    DominanceOrder dom(t.B), dom2(t2.B);
    auto m = degree(z, dom);
    if (!m) {
        r.reason = "not pointed in the initial frame";
        return r;
    }
    QLaurent moved;
    try {
        moved = change_frame(z, t, k);
    } catch (const ConsistencyError&) {
        r.reason = "not Laurent in the mutated frame";
        return r;
    }
    auto m2 = degree(moved, dom2);
    if (!m2) {
        r.reason = "not pointed in the mutated frame";
        return r;
    }
    r.applicable = true;
    r.lhs = frz(moved, F, *m2, t2);
    Seed frozen = freeze_seed(t, unfrozen_part(t, F));
    r.rhs = change_frame(frz(z, F, *m, t), frozen, k);
    r.holds = r.lhs == r.rhs;
    return r;
}

StabilizationResult frz_via_stabilization(const QLaurent& z, VertexId k, const Seed& s, const BasisProvider& basis,
                                          int d_max) {
    DominanceOrder dom(s.B);
    auto m = degree(z, dom);
    if (!m) throw InputError("element has no unique maximal degree");
    QuantumTorus torus = s.Lambda ? QuantumTorus(*s.Lambda) : QuantumTorus::classical(s.size());
    ExpVec fk = ExpVec::unit(s.size(), s.pos(k));
    std::optional<QLaurent> prev;
    for (int d = 0; d <= d_max + 1; ++d) {
        auto b = basis(*m + fk * d);
        if (!b) throw InputError("basis has no element at degree " + (*m + fk * d).str());
        QLaurent v = normalize(torus.mono_mul(fk * (-d), *b), dom).value;
        if (prev && *prev == v) return {v, d - 1};
        prev = v;
    }
    throw BudgetError("no stabilization up to d = " + std::to_string(d_max));
}

std::int64_t vanishing_order(const QLaurent& z, std::size_t j) {
    if (z.is_zero()) throw InputError("order of vanishing of zero");
    return z.min_exponent(j);
}

std::int64_t vanishing_order(const QLaurent& numerator, const QLaurent& denominator, std::size_t j) {
    return vanishing_order(numerator, j) - vanishing_order(denominator, j);
}

bool is_optimized(const Seed& s, VertexId j) {
    std::size_t p = s.pos(j);
    if (s.is_unfrozen(p)) throw InputError("vertex " + std::to_string(j) + " is not frozen");
    for (std::size_t c = 0; c < s.rank(); ++c)
        if (s.B(p, c) < 0) return false;
    return true;
}

std::optional<std::vector<VertexId>> optimized_seed_search(const Seed& s, VertexId j,
                                                           const std::vector<std::vector<VertexId>>& candidates,
                                                           int max_depth, std::size_t max_seeds) {
    for (auto& w : candidates)
        if (is_optimized(mutate_word(s, w), j)) return w;
    struct Node {
        Seed seed;
        std::vector<VertexId> word;
    };
    std::deque<Node> queue{{s, {}}};
    std::set<std::vector<std::int64_t>> seen;
    auto key = [](const Seed& t) {
        std::vector<std::int64_t> k;
        for (std::size_t i = 0; i < t.B.rows(); ++i)
            for (std::size_t c = 0; c < t.B.cols(); ++c) k.push_back(t.B(i, c));
        return k;
    };
    seen.insert(key(s));
    while (!queue.empty()) {
        Node n = std::move(queue.front());
        queue.pop_front();
        if (is_optimized(n.seed, j)) return n.word;
        if (static_cast<int>(n.word.size()) >= max_depth) continue;
        for (auto p : n.seed.uf) {
            VertexId k = n.seed.ids[p];
            if (!n.word.empty() && n.word.back() == k) continue;
            Seed t = mutate_seed(n.seed, k);
            if (!seen.insert(key(t)).second) continue;
            if (seen.size() > max_seeds) return std::nullopt;
            auto w = n.word;
            w.push_back(k);
            queue.push_back({std::move(t), std::move(w)});
        }
    }
    return std::nullopt;
}

bool dominant_membership(const ExpVec& m, const Seed& s, const std::map<VertexId, std::vector<VertexId>>& optimized) {
    for (auto p : s.frozen()) {
        VertexId j = s.ids[p];
        auto it = optimized.find(j);
        if (it == optimized.end()) throw InputError("no optimized seed given for frozen vertex " + std::to_string(j));
        if (!is_optimized(mutate_word(s, it->second), j))
            throw InputError("supplied seed does not optimize vertex " + std::to_string(j));
        if (tropical_transport(m, s, it->second)[p] < 0) return false;
    }
    return true;
}

}  // namespace qcluster
