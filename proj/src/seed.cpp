#include "qcluster/seed.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qcluster {

std::size_t Seed::pos(VertexId id) const {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw InputError("unknown vertex " + std::to_string(id));
    return static_cast<std::size_t>(it - ids.begin());
}

std::optional<std::size_t> Seed::column(std::size_t p) const {
    auto it = std::lower_bound(uf.begin(), uf.end(), p);
    if (it == uf.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - uf.begin());
}

std::size_t Seed::column_of(VertexId id) const {
    auto c = column(pos(id));
    if (!c) throw InputError("vertex " + std::to_string(id) + " is frozen");
    return *c;
}

std::vector<std::size_t> Seed::frozen() const {
    std::vector<std::size_t> f;
    for (std::size_t p = 0; p < size(); ++p)
        if (!is_unfrozen(p)) f.push_back(p);
    return f;
}

std::vector<std::int64_t> Seed::dvee() const {
    std::int64_t l = 1;
    for (auto x : d) l = lcm64(l, x);
    std::vector<std::int64_t> v;
    for (auto x : d) v.push_back(l / x);
    return v;
}

std::string Seed::name(std::size_t p) const {
    auto it = labels.find(ids[p]);
    return it != labels.end() ? it->second : std::to_string(ids[p]);
}

void validate(const Seed& s) {
    std::size_t n = s.size(), m = s.rank();
    if (std::set<VertexId>(s.ids.begin(), s.ids.end()).size() != n) throw InputError("duplicate vertex ids");
    if (!std::is_sorted(s.uf.begin(), s.uf.end()) || std::adjacent_find(s.uf.begin(), s.uf.end()) != s.uf.end())
        throw InputError("unfrozen positions must be increasing");
    for (auto p : s.uf)
        if (p >= n) throw InputError("unfrozen position out of range");
    if (s.d.size() != n) throw InputError("symmetrizer count does not match the vertex count");
    for (auto x : s.d)
        if (x <= 0) throw InputError("symmetrizers must be positive");
    if (s.B.rows() != n || s.B.cols() != m) throw InputError("B must be |I| x |I_uf|");
    if (s.Lambda && (s.Lambda->rows() != n || !is_skew(*s.Lambda)))
        throw InputError("Lambda must be a skew-symmetric |I| x |I| matrix");
    auto dv = s.dvee();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = 0; c < m; ++c) {
            std::size_t i = s.uf[a], k = s.uf[c];
            if (checked_mul(dv[i], s.B(i, c)) != -checked_mul(dv[k], s.B(k, a)))
                throw InputError("B is not skew-symmetrizable by d at (" + std::to_string(s.ids[i]) + "," +
                                 std::to_string(s.ids[k]) + ")");
        }
}

Seed make_seed(std::vector<VertexId> ids, const std::vector<VertexId>& unfrozen, std::vector<std::int64_t> d,
               IntMatrix B, std::optional<IntMatrix> Lambda) {
    Seed s;
    s.ids = std::move(ids);
    for (auto id : unfrozen) s.uf.push_back(s.pos(id));
    // columns of B follow the order of `unfrozen`; store them by position
    std::vector<std::size_t> order(s.uf.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return s.uf[a] < s.uf[b]; });
    if (B.cols() != s.uf.size()) throw InputError("B must have one column per unfrozen vertex");
    IntMatrix Bs(B.rows(), B.cols());
    for (std::size_t c = 0; c < order.size(); ++c)
        for (std::size_t i = 0; i < B.rows(); ++i) Bs(i, c) = B(i, order[c]);
    std::sort(s.uf.begin(), s.uf.end());
    s.d = std::move(d);
    s.B = std::move(Bs);
    s.Lambda = std::move(Lambda);
    validate(s);
    return s;
}

Compatibility check_compatible(const Seed& s) {
    Compatibility r;
    if (!s.Lambda) throw MathError("seed carries no quantization matrix");
    IntMatrix P = *s.Lambda * s.B;
    for (std::size_t c = 0; c < s.rank(); ++c) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            bool diag = i == s.uf[c];
            if (!diag && P(i, c)) {
                r.failure = "(Lambda B)[" + s.name(i) + "," + s.name(s.uf[c]) + "] = " + std::to_string(P(i, c));
                return r;
            }
            if (diag && P(i, c) >= 0) {
                r.failure = "(Lambda B)[" + s.name(i) + "," + s.name(i) + "] = " + std::to_string(P(i, c)) +
                            " is not negative";
                return r;
            }
        }
        r.delta.push_back(-P(s.uf[c], c));
    }
    r.ok = true;
    return r;
}

Seed quantize(const Seed& s) {
    std::size_t n = s.size(), m = s.rank();
    auto R = independent_rows(s.B);
    if (!R) throw UnsupportedSeedError("quantization needs a full-rank B");
    auto dv = s.dvee();
    // Q = [B | e_j (j not a pivot row)] is invertible.
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j)
        if (std::find(R->begin(), R->end(), j) == R->end()) rest.push_back(j);
    RatMatrix Q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < m; ++c) Q(i, c) = Rat(s.B(i, c));
    for (std::size_t r = 0; r < rest.size(); ++r) Q(rest[r], m + r) = Rat(1);
    auto Qi = inverse(Q);
    if (!Qi) throw MathError("quantization: completion of B is singular");
    // B^T Lambda = Dhat^T where Dhat(i,c) = delta_c [i = uf[c]]
    RatMatrix DhT(m, n);
    for (std::size_t c = 0; c < m; ++c) DhT(c, s.uf[c]) = Rat(dv[s.uf[c]]);
    RatMatrix top = DhT * Q;  // m x n
    RatMatrix S(n, n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            S(a, b) = top(a, b);
            if (b >= m) S(b, a) = -top(a, b);
        }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (S(a, b) != -S(b, a)) throw MathError("quantization: B^T Dhat is not skew (bad symmetrizers)");
    RatMatrix L = Qi->transpose() * S * *Qi;
    std::int64_t den = 1;
    for (auto& x : L.data()) den = lcm64(den, x.denominator());
    IntMatrix Li(n, n);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = L(i, j) * den;
            Li(i, j) = v.numerator();
            g = std::gcd(g, Li(i, j));
        }
    for (auto x : dv) g = std::gcd(g, checked_mul(x, den));
    Seed t = s;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Li(i, j) /= g;
    t.Lambda = Li;
    auto c = check_compatible(t);
    if (!c.ok) throw ConsistencyError("quantization solve failed: " + c.failure);
    return t;
}

Seed mutate_seed(const Seed& s, VertexId kid, int eps) {
    if (eps != 1 && eps != -1) throw InputError("mutation sign must be +1 or -1");
    std::size_t k = s.pos(kid);
    auto kc = s.column(k);
    if (!kc) throw InputError("cannot mutate at frozen vertex " + std::to_string(kid));
    std::size_t n = s.size(), m = s.rank();
    auto pos_part = [](std::int64_t x) { return x > 0 ? x : std::int64_t(0); };
    IntMatrix E = IntMatrix::identity(n), F = IntMatrix::identity(m);
    E(k, k) = -1;
    for (std::size_t i = 0; i < n; ++i)
        if (i != k) E(i, k) = pos_part(-eps * s.B(i, *kc));
    F(*kc, *kc) = -1;
    for (std::size_t j = 0; j < m; ++j)
        if (j != *kc) F(*kc, j) = pos_part(eps * s.B(k, j));
    Seed t = s;
    t.B = E * s.B * F;
    if (s.Lambda) t.Lambda = E.transpose() * *s.Lambda * E;
    return t;
}

Seed mutate_word(Seed s, const std::vector<VertexId>& word) {
    for (auto k : word) s = mutate_seed(s, k);
    return s;
}

Seed opposite(const Seed& s) {
    Seed t = s;
    t.B = -s.B;
    if (s.Lambda) t.Lambda = -*s.Lambda;
    return t;
}

Seed permute(const Seed& s, const std::map<VertexId, VertexId>& sigma) {
    std::size_t n = s.size();
    std::vector<std::size_t> to(n);  // position i -> position of sigma(i)
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < n; ++i) {
        auto it = sigma.find(s.ids[i]);
        VertexId img = it == sigma.end() ? s.ids[i] : it->second;
        if (!seen.insert(img).second) throw InputError("permutation is not injective");
        to[i] = s.pos(img);
        if (s.is_unfrozen(i) != s.is_unfrozen(to[i])) throw InputError("permutation mixes frozen and unfrozen");
    }
    Seed t = s;
    for (std::size_t i = 0; i < n; ++i) {
        t.d[to[i]] = s.d[i];
        for (std::size_t c = 0; c < s.rank(); ++c) t.B(to[i], *s.column(to[s.uf[c]])) = s.B(i, c);
        if (s.Lambda)
            for (std::size_t j = 0; j < n; ++j) (*t.Lambda)(to[i], to[j]) = (*s.Lambda)(i, j);
    }
    return t;
}

Seed relabel(const Seed& s, const std::map<VertexId, VertexId>& sigma) {
    std::size_t n = s.size();
    std::vector<VertexId> img(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = sigma.find(s.ids[i]);
        img[i] = it == sigma.end() ? s.ids[i] : it->second;
    }
    std::vector<VertexId> ids = img;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw InputError("relabeling is not injective");
    std::vector<std::size_t> from(n);  // new position -> old position
    for (std::size_t i = 0; i < n; ++i)
        from[static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), img[i]) - ids.begin())] = i;
    std::vector<VertexId> uf;
    for (auto p : s.uf) uf.push_back(img[p]);
    std::vector<std::int64_t> d(n);
    IntMatrix B(n, s.rank());
    std::optional<IntMatrix> L;
    if (s.Lambda) L = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = s.d[from[i]];
        for (std::size_t c = 0; c < s.rank(); ++c) B(i, c) = s.B(from[i], c);
        if (L)
            for (std::size_t j = 0; j < n; ++j) (*L)(i, j) = (*s.Lambda)(from[i], from[j]);
    }
    Seed t = make_seed(ids, uf, d, B, L);
    for (auto& [id, name] : s.labels) t.labels[img[s.pos(id)]] = name;
    return t;
}

Seed freeze_seed(const Seed& s, const std::vector<VertexId>& F) {
    std::set<std::size_t> drop;
    for (auto id : F) drop.insert(s.column_of(id));
    Seed t = s;
    t.uf.clear();
    IntMatrix B(s.size(), s.rank() - drop.size());
    std::size_t c2 = 0;
    for (std::size_t c = 0; c < s.rank(); ++c) {
        if (drop.count(c)) continue;
        t.uf.push_back(s.uf[c]);
        for (std::size_t i = 0; i < s.size(); ++i) B(i, c2) = s.B(i, c);
        ++c2;
    }
    t.B = B;
    return t;
}

Seed remove_frozen(const Seed& s, const std::vector<VertexId>& S) {
    std::set<std::size_t> drop;
    for (auto id : S) {
        auto p = s.pos(id);
        if (s.is_unfrozen(p)) throw InputError("vertex " + std::to_string(id) + " is not frozen");
        drop.insert(p);
    }
    Seed t;
    std::vector<std::size_t> keep;
    for (std::size_t p = 0; p < s.size(); ++p)
        if (!drop.count(p)) keep.push_back(p);
    for (auto p : keep) {
        t.ids.push_back(s.ids[p]);
        t.d.push_back(s.d[p]);
        if (s.is_unfrozen(p)) t.uf.push_back(t.ids.size() - 1);
        if (auto it = s.labels.find(s.ids[p]); it != s.labels.end()) t.labels.insert(*it);
    }
    t.B = IntMatrix(keep.size(), s.rank());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t c = 0; c < s.rank(); ++c) t.B(i, c) = s.B(keep[i], c);
    if (s.Lambda) {
        IntMatrix L(keep.size(), keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j) L(i, j) = (*s.Lambda)(keep[i], keep[j]);
        t.Lambda = L;
    }
    return t;
}

bool is_non_essential(const Seed& s, VertexId j) {
    auto p = s.pos(j);
    if (s.is_unfrozen(p)) throw InputError("vertex " + std::to_string(j) + " is not frozen");
    for (std::size_t c = 0; c < s.rank(); ++c)
        if (s.B(p, c)) return false;
    return true;
}

bool same_seed(const Seed& a, const Seed& b) {
    if (a.size() != b.size() || a.rank() != b.rank()) return false;
    if (a.Lambda.has_value() != b.Lambda.has_value()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto it = std::find(b.ids.begin(), b.ids.end(), a.ids[i]);
        if (it == b.ids.end()) return false;
        std::size_t bi = static_cast<std::size_t>(it - b.ids.begin());
        if (a.d[i] != b.d[bi] || a.is_unfrozen(i) != b.is_unfrozen(bi)) return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t bi = b.pos(a.ids[i]);
        for (std::size_t c = 0; c < a.rank(); ++c)
            if (a.B(i, c) != b.b(bi, b.pos(a.ids[a.uf[c]]))) return false;
        if (a.Lambda)
            for (std::size_t j = 0; j < a.size(); ++j)
                if ((*a.Lambda)(i, j) != (*b.Lambda)(bi, b.pos(a.ids[j]))) return false;
    }
    return true;
}

EmbeddingKind subseed_check(const ClusterEmbedding& e) {
    const Seed &s = e.source, &t = e.target;
    auto img = [&](VertexId i) {
        auto it = e.iota.find(i);
        if (it == e.iota.end()) throw InputError("embedding undefined at " + std::to_string(i));
        return t.pos(it->second);
    };
    std::set<std::size_t> image;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t ti = img(s.ids[i]);
        if (!image.insert(ti).second) return EmbeddingKind::Neither;
        if (s.d[i] != t.d[ti]) return EmbeddingKind::Neither;
        if (s.is_unfrozen(i) && !t.is_unfrozen(ti)) return EmbeddingKind::Neither;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t ti = img(s.ids[i]);
        for (std::size_t c = 0; c < s.rank(); ++c)
            if (s.B(i, c) != t.b(ti, img(s.ids[s.uf[c]]))) return EmbeddingKind::Neither;
        if (s.Lambda && t.Lambda)
            for (std::size_t j = 0; j < s.size(); ++j)
                if ((*s.Lambda)(i, j) != (*t.Lambda)(ti, img(s.ids[j]))) return EmbeddingKind::Neither;
    }
    for (std::size_t c = 0; c < s.rank(); ++c) {
        std::size_t tk = img(s.ids[s.uf[c]]);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!image.count(i) && t.b(i, tk)) return EmbeddingKind::ClusterEmbedding;
    }
    return EmbeddingKind::Good;
}

std::string to_string(EmbeddingKind k) {
    switch (k) {
        case EmbeddingKind::Good: return "good";
        case EmbeddingKind::ClusterEmbedding: return "cluster-embedding";
        default: return "neither";
    }
}

PrincipalSeed principal_seed(const Seed& s) {
    std::size_t n = s.size(), m = s.rank();
    VertexId top = 0;
    for (auto id : s.ids) top = std::max(top, id < 0 ? -id : id);
    PrincipalSeed p;
    Seed& t = p.seed;
    for (std::size_t c = 0; c < m; ++c) {
        t.ids.push_back(s.ids[s.uf[c]]);
        t.d.push_back(s.d[s.uf[c]]);
        t.uf.push_back(c);
    }
    for (std::size_t c = 0; c < m; ++c) {
        VertexId id = top + 1 + s.ids[s.uf[c]] + top;  // disjoint from every original id
        t.ids.push_back(id);
        t.d.push_back(s.d[s.uf[c]]);
        t.labels[id] = s.name(s.uf[c]) + "'";
        p.copy_of[s.ids[s.uf[c]]] = id;
    }
    t.B = IntMatrix(2 * m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = 0; c < m; ++c) t.B(a, c) = s.B(s.uf[a], c);
    for (std::size_t c = 0; c < m; ++c) t.B(m + c, c) = 1;
    p.var = IntMatrix(n, 2 * m);
    for (std::size_t c = 0; c < m; ++c) {
        p.var(s.uf[c], c) = 1;
        for (auto j : s.frozen()) p.var(j, m + c) = s.B(j, c);
    }
    if (s.Lambda) t.Lambda = p.var.transpose() * *s.Lambda * p.var;
    validate(t);
    return p;
}

}  // namespace qcluster
