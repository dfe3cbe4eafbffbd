#include "qcluster/words.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qcluster {

using nlohmann::json;

std::size_t CartanData::index(int a) const {
    auto it = std::lower_bound(J.begin(), J.end(), a);
    if (it == J.end() || *it != a) throw InputError("letter " + std::to_string(a) + " is not in J");
    return static_cast<std::size_t>(it - J.begin());
}

bool CartanData::has(int a) const { return std::binary_search(J.begin(), J.end(), a); }

CartanData make_cartan(const IntMatrix& C, std::vector<int> J) {
    std::size_t n = C.rows();
    if (C.cols() != n) throw InputError("Cartan matrix must be square");
    if (J.empty())
        for (std::size_t i = 0; i < n; ++i) J.push_back(static_cast<int>(i + 1));
    if (J.size() != n) throw InputError("J and C sizes differ");
    for (std::size_t i = 0; i < n; ++i) {
        if (J[i] <= 0 || (i > 0 && J[i] <= J[i - 1])) throw InputError("J must be increasing positive letters");
        if (C(i, i) != 2) throw InputError("Cartan diagonal must be 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (C(i, j) > 0) throw InputError("off-diagonal Cartan entries must be <= 0");
            if ((C(i, j) == 0) != (C(j, i) == 0)) throw InputError("C_ab = 0 iff C_ba = 0 fails");
        }
    }
    // D_b / D_a = C_ba / C_ab along the Dynkin graph, componentwise minimal.
    std::vector<Rat> r(n, Rat(0));
    std::vector<std::int64_t> D(n, 0);
    for (std::size_t root = 0; root < n; ++root) {
        if (r[root] != Rat(0)) continue;
        std::vector<std::size_t> comp{root};
        r[root] = 1;
        for (std::size_t at = 0; at < comp.size(); ++at) {
            std::size_t a = comp[at];
            for (std::size_t b = 0; b < n; ++b) {
                if (b == a || C(a, b) == 0) continue;
                Rat want = r[a] * Rat(C(b, a), C(a, b));
                if (r[b] == Rat(0)) {
                    r[b] = want;
                    comp.push_back(b);
                } else if (r[b] != want) {
                    throw InputError("Cartan matrix is not symmetrizable");
                }
            }
        }
        std::int64_t l = 1;
        for (auto a : comp) l = lcm64(l, r[a].denominator());
        std::int64_t g = 0;
        for (auto a : comp) g = std::gcd(g, (r[a] * l).numerator());
        for (auto a : comp) D[a] = (r[a] * l).numerator() / g;
    }
    return {std::move(J), C, std::move(D)};
}

namespace {

IntMatrix json_matrix(const json& j) {
    if (!j.is_array()) throw InputError("matrix must be a JSON array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (auto& row : j) rows.push_back(row.get<std::vector<std::int64_t>>());
    return IntMatrix::from_rows(rows);
}

IntMatrix type_a(std::size_t n) {
    IntMatrix C(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        C(i, i) = 2;
        if (i + 1 < n) C(i, i + 1) = C(i + 1, i) = -1;
    }
    return C;
}

}  // namespace

CartanData parse_cartan(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
    if (t.empty()) throw InputError("empty Cartan description");
    if (t[0] == '[' || t[0] == '{') {
        json j;
        try {
            j = json::parse(t);
        } catch (const json::exception& e) {
            throw InputError(std::string("bad Cartan JSON: ") + e.what());
        }
        try {
            if (j.is_array()) return make_cartan(json_matrix(j));
            std::vector<int> J = j.contains("J") ? j["J"].get<std::vector<int>>() : std::vector<int>{};
            CartanData c = make_cartan(json_matrix(j.at("C")), J);
            if (j.contains("D")) {
                auto D = j["D"].get<std::vector<std::int64_t>>();
                if (D.size() != c.size()) throw InputError("D has the wrong length");
                for (std::size_t a = 0; a < c.size(); ++a)
                    for (std::size_t b = 0; b < c.size(); ++b)
                        if (D[a] <= 0 || D[b] * c.C(a, b) != D[a] * c.C(b, a))
                            throw InputError("D does not symmetrize C");
                c.D = D;
            }
            return c;
        } catch (const json::exception& e) {
            throw InputError(std::string("bad Cartan JSON: ") + e.what());
        }
    }
    auto num = [&](std::size_t from, int dflt) {
        if (from >= t.size()) return dflt;
        try {
            std::size_t used = 0;
            int v = std::stoi(t.substr(from), &used);
            if (from + used != t.size() || v <= 0) throw InputError("bad Cartan preset " + text);
            return v;
        } catch (const std::logic_error&) {
            throw InputError("bad Cartan preset " + text);
        }
    };
    if (t.rfind("Kronecker", 0) == 0 || t.rfind("kronecker", 0) == 0) {
        int m = num(9, 2);
        return make_cartan(IntMatrix::from_rows({{2, -m}, {-m, 2}}));
    }
    if (t == "B2") return make_cartan(IntMatrix::from_rows({{2, -2}, {-1, 2}}));
    if (t == "C2") return make_cartan(IntMatrix::from_rows({{2, -1}, {-2, 2}}));
    if (t == "G2") return make_cartan(IntMatrix::from_rows({{2, -1}, {-3, 2}}));
    if (t[0] == 'A' || t[0] == 'a') return make_cartan(type_a(static_cast<std::size_t>(num(1, -1))));
    throw InputError("unknown Cartan preset " + text);
}

std::string cartan_json(const CartanData& c) {
    json C = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) C.push_back(c.C.row(i));
    return json{{"J", c.J}, {"C", C}, {"D", c.D}}.dump();
}

Word parse_word(const std::string& text) {
    Word w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            w.push_back(std::stoi(item, &used));
            if (used != item.size()) throw InputError("bad letter '" + item + "'");
        } catch (const std::logic_error&) {
            throw InputError("bad letter '" + item + "'");
        }
    }
    return w;
}

std::string word_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

void validate_word(const Word& w, const CartanData& c) {
    for (int x : w) {
        if (x == 0) throw InputError("letter 0 in signed word");
        if (!c.has(std::abs(x))) throw InputError("letter " + std::to_string(x) + " not in J");
    }
}

int WordIndices::occurrences(int j, int k, int a) const {
    int n = 0;
    for (int p = std::max(j, 1); p <= std::min<int>(k, static_cast<int>(length)); ++p) n += letter[p] == a;
    return n;
}

VertexId WordIndices::id_of(int a, int d) const {
    if (d == -1) return -a;
    for (std::size_t p = 1; p <= length; ++p)
        if (letter[p] == a && o_minus[p] == d) return static_cast<VertexId>(p);
    throw InputError("no vertex (" + std::to_string(a) + "," + std::to_string(d) + ")");
}

std::pair<int, int> WordIndices::label_of(VertexId v) const {
    if (v < 0) return {-v, -1};
    if (v == 0 || static_cast<std::size_t>(v) > length) throw InputError("vertex " + std::to_string(v) + " not in word");
    return {letter[v], o_minus[v]};
}

WordIndices word_indices(const Word& w, const CartanData& c) {
    validate_word(w, c);
    WordIndices wi;
    wi.word = w;
    std::size_t l = wi.length = w.size();
    for (auto v : {&wi.letter, &wi.eps, &wi.succ, &wi.pred, &wi.o_minus, &wi.o_plus, &wi.kmin, &wi.kmax})
        v->assign(l + 1, 0);
    for (int a : c.J) wi.count[a] = 0;
    std::map<int, int> last;
    for (std::size_t k = 1; k <= l; ++k) {
        int a = std::abs(w[k - 1]);
        wi.letter[k] = a;
        wi.eps[k] = w[k - 1] > 0 ? 1 : -1;
        wi.o_minus[k] = wi.count[a]++;
        wi.succ[k] = kPlusInf;
        auto it = last.find(a);
        wi.pred[k] = it == last.end() ? kMinusInf : it->second;
        if (it != last.end()) wi.succ[it->second] = static_cast<int>(k);
        last[a] = static_cast<int>(k);
    }
    std::map<int, int> first;
    for (std::size_t k = l; k >= 1; --k) first[wi.letter[k]] = static_cast<int>(k);
    for (std::size_t k = 1; k <= l; ++k) {
        int a = wi.letter[k];
        wi.o_plus[k] = wi.count[a] - 1 - wi.o_minus[k];
        wi.kmin[k] = first[a];
        wi.kmax[k] = last[a];
    }
    return wi;
}

std::vector<VertexId> dd_vertices(const WordIndices& wi, const CartanData& c) {
    std::vector<VertexId> v;
    for (auto it = c.J.rbegin(); it != c.J.rend(); ++it) v.push_back(-*it);
    for (std::size_t k = 1; k <= wi.length; ++k) v.push_back(static_cast<VertexId>(k));
    return v;
}

std::string vertex_label(const WordIndices& wi, VertexId v) {
    auto [a, d] = wi.label_of(v);
    return "(" + std::to_string(a) + "," + std::to_string(d) + ")";
}

namespace {

// Shared shell: ids, unfrozen set, d = D_a, labels.
Seed dd_shell(const WordIndices& wi, const CartanData& c, const IntMatrix& B) {
    auto ids = dd_vertices(wi, c);
    std::vector<VertexId> uf;
    for (std::size_t k = 1; k <= wi.length; ++k)
        if (wi.unfrozen(static_cast<int>(k))) uf.push_back(static_cast<VertexId>(k));
    std::vector<std::int64_t> d;
    for (auto v : ids) d.push_back(c.sym(wi.label_of(v).first));
    Seed s = make_seed(ids, uf, d, B);
    for (auto v : ids) s.labels[v] = vertex_label(wi, v);
    return s;
}

// position of a ddI vertex on the word axis; (a,-1) sits at 0
int axis(VertexId v) { return v < 0 ? 0 : v; }

// successor of a ddI vertex; (a,-1)[1] is the first a
int dd_succ(const WordIndices& wi, VertexId v) {
    if (v > 0) return wi.succ[v];
    for (std::size_t k = 1; k <= wi.length; ++k)
        if (wi.letter[k] == -v) return static_cast<int>(k);
    return kPlusInf;
}

}  // namespace

Seed seed_from_formula(const Word& w, const CartanData& c) {
    auto wi = word_indices(w, c);
    auto ids = dd_vertices(wi, c);
    std::vector<int> ufpos;
    for (std::size_t k = 1; k <= wi.length; ++k)
        if (wi.unfrozen(static_cast<int>(k))) ufpos.push_back(static_cast<int>(k));
    IntMatrix B(ids.size(), ufpos.size());
    auto epsAt = [&](int p) { return wi.eps[p]; };
    for (std::size_t r = 0; r < ids.size(); ++r) {
        VertexId jv = ids[r];
        int j = axis(jv), j1 = dd_succ(wi, jv);
        int aj = wi.label_of(jv).first;
        for (std::size_t col = 0; col < ufpos.size(); ++col) {
            int k = ufpos[col], k1 = wi.succ[k];
            int ak = wi.letter[k];
            std::int64_t b = 0;
            if (k == j1) {
                b = epsAt(k);
            } else if (jv > 0 && j == k1) {
                b = -epsAt(j);
            } else if (aj != ak) {
                std::int64_t C = c.c(aj, ak);
                if (j < k && k < j1 && j1 < k1 && epsAt(j1) == epsAt(k)) b = epsAt(k) * C;
                else if (j < k && k < k1 && k1 < j1 && epsAt(k) == -epsAt(k1)) b = epsAt(k) * C;
                else if (jv > 0 && k < j && j < k1 && k1 < j1 && epsAt(k1) == epsAt(j)) b = -epsAt(j) * C;
                else if (jv > 0 && k < j && j < j1 && j1 < k1 && epsAt(j) == -epsAt(j1)) b = -epsAt(j) * C;
            }
            B(r, col) = b;
        }
    }
    return dd_shell(wi, c, B);
}

TrapezoidSeed seed_from_trapezoid(const Word& w, const CartanData& c, bool quantum) {
    auto wi = word_indices(w, c);
    TrapezoidSeed ts;
    ts.ddI = dd_vertices(wi, c);
    std::size_t n = ts.ddI.size();
    std::map<VertexId, std::size_t> at;
    for (std::size_t i = 0; i < n; ++i) at[ts.ddI[i]] = i;
    RatMatrix G(n, n);
    const Rat half(1, 2);
    for (std::size_t k = 1; k <= wi.length; ++k) {
        int a = wi.letter[k];
        Rat e(wi.eps[k]);
        std::size_t lm = at[wi.id_of(a, wi.o_minus[k] - 1)], lp = at[static_cast<VertexId>(k)];
        G(lm, lp) += e;
        G(lp, lm) -= e;
        for (int b : c.J) {
            if (b == a) continue;
            std::size_t lb = at[wi.id_of(b, wi.occurrences(1, static_cast<int>(k) - 1, b) - 1)];
            G(lb, lm) += half * e;
            G(lm, lb) -= half * e;
            G(lb, lp) -= half * e;
            G(lp, lb) += half * e;
        }
    }
    ts.ddB = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int a = wi.label_of(ts.ddI[i]).first, b = wi.label_of(ts.ddI[j]).first;
            ts.ddB(i, j) = a == b ? G(i, j) : G(i, j) * Rat(-c.c(a, b));
        }
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i)
        if (ts.ddI[i] > 0 && wi.unfrozen(ts.ddI[i])) cols.push_back(i);
    RatMatrix rect(n, cols.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t col = 0; col < cols.size(); ++col) rect(i, col) = ts.ddB(i, cols[col]);
    ts.dsd = dd_shell(wi, c, to_int(rect));
    std::vector<VertexId> minus;
    for (int a : c.J) minus.push_back(-a);
    ts.rsd = remove_frozen(ts.dsd, minus);
    if (!ts.rsd.full_rank()) throw ConsistencyError("rsd(" + word_string(w) + ") is not of full rank");
    if (quantum) {
        ts.dsd = quantize(ts.dsd);
        ts.rsd = quantize(ts.rsd);
    }
    return ts;
}

Seed dsd(const Word& w, const CartanData& c, bool quantum) { return seed_from_trapezoid(w, c, quantum).dsd; }
Seed rsd(const Word& w, const CartanData& c, bool quantum) { return seed_from_trapezoid(w, c, quantum).rsd; }

std::map<VertexId, VertexId> occurrence_map(const Word& from, const Word& to, const CartanData& c) {
    auto a = word_indices(from, c), b = word_indices(to, c);
    if (a.count != b.count) throw InputError("words have different letter counts");
    std::map<VertexId, VertexId> m;
    for (auto v : dd_vertices(a, c)) {
        auto [x, d] = a.label_of(v);
        m[v] = b.id_of(x, d);
    }
    return m;
}

Seed apply_move(const Seed& s, const WordMove& m) { return relabel(mutate_word(s, m.mutations), m.sigma); }

namespace {

// The move must hold on the bare word and inside a padded context, so that the witness is not an accident
// of boundary vertices.
struct MoveContext {
    Seed before, after;
    int shift;  // position offset of the word inside the context
};

std::vector<MoveContext> move_contexts(const Word& w, const Word& w2, const CartanData& c) {
    std::vector<MoveContext> ctx;
    ctx.push_back({dsd(w, c), dsd(w2, c), 0});
    Word pad;
    for (int a : c.J) pad.push_back(a);
    Word pw = pad, pw2 = pad;
    pw.insert(pw.end(), w.begin(), w.end());
    pw2.insert(pw2.end(), w2.begin(), w2.end());
    for (auto it = pad.rbegin(); it != pad.rend(); ++it) {
        pw.push_back(-*it);
        pw2.push_back(-*it);
    }
    ctx.push_back({dsd(pw, c), dsd(pw2, c), static_cast<int>(pad.size())});
    return ctx;
}

std::vector<std::optional<Seed>> mutated(const std::vector<MoveContext>& ctx, const std::vector<VertexId>& mu) {
    std::vector<std::optional<Seed>> r;
    for (auto& x : ctx) {
        std::vector<VertexId> shifted;
        for (auto v : mu) shifted.push_back(v + x.shift);
        try {
            r.push_back(mutate_word(x.before, shifted));
        } catch (const InputError&) {
            r.push_back(std::nullopt);
        }
    }
    return r;
}

bool sigma_holds(const std::vector<MoveContext>& ctx, const std::vector<std::optional<Seed>>& mut,
                 const std::map<VertexId, VertexId>& sigma) {
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (!mut[i]) return false;
        std::map<VertexId, VertexId> s;
        for (auto [p, q] : sigma) s[p > 0 ? p + ctx[i].shift : p] = q > 0 ? q + ctx[i].shift : q;
        try {
            if (!same_seed(relabel(*mut[i], s), ctx[i].after)) return false;
        } catch (const InputError&) {
            return false;
        }
    }
    return true;
}

bool move_holds(const std::vector<MoveContext>& ctx, const std::vector<VertexId>& mu,
                const std::map<VertexId, VertexId>& sigma) {
    return sigma_holds(ctx, mutated(ctx, mu), sigma);
}

}  // namespace

WordMove flip(const Word& w, int k, const CartanData& c) {
    validate_word(w, c);
    if (k < 1 || k + 1 > static_cast<int>(w.size())) throw InputError("flip position out of range");
    int x = w[k - 1], y = w[k];
    if ((x > 0) == (y > 0)) throw InputError("flip needs letters of opposite signs at " + std::to_string(k));
    WordMove m;
    m.word = w;
    std::swap(m.word[k - 1], m.word[k]);
    m.sigma = occurrence_map(w, m.word, c);
    if (std::abs(x) == std::abs(y)) m.mutations.push_back(k);
    auto ctx = move_contexts(w, m.word, c);
    if (!move_holds(ctx, m.mutations, m.sigma)) throw ConsistencyError("flip witness failed at " + std::to_string(k));
    m.contexts_checked = static_cast<int>(ctx.size());
    return m;
}

int braid_order(const CartanData& c, int a, int b) {
    if (a == b) return 1;
    switch (c.c(a, b) * c.c(b, a)) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: return 0;
    }
}

WordMove braid_move(const Word& w, int j, const Word& eta_prime, const CartanData& c) {
    validate_word(w, c);
    int len = static_cast<int>(eta_prime.size());
    int k = j + len - 1;
    if (len < 2 || j < 1 || k > static_cast<int>(w.size())) throw InputError("braid span out of range");
    int eps = w[j - 1] > 0 ? 1 : -1;
    Word eta;
    for (int p = j; p <= k; ++p) {
        if ((w[p - 1] > 0 ? 1 : -1) != eps) throw InputError("braid span must have a constant sign");
        eta.push_back(std::abs(w[p - 1]));
    }
    int a = eta[0], b = eta[1];
    int m = a == b ? 0 : braid_order(c, a, b);
    bool ok = m == len;
    for (int p = 0; ok && p < len; ++p) {
        ok = eta[p] == (p % 2 ? b : a) && std::abs(eta_prime[p]) == (p % 2 ? a : b) && eta_prime[p] > 0;
    }
    if (!ok) throw InputError("no braid relation turns " + word_string(eta) + " into " + word_string(eta_prime));

    WordMove mv;
    mv.word = w;
    for (int p = j; p <= k; ++p) mv.word[p - 1] = eps * eta_prime[p - j];
    auto ctx = move_contexts(w, mv.word, c);
    auto wi = word_indices(w, c);
    std::vector<VertexId> cand;
    for (int r = j; r <= k; ++r)
        if (wi.succ[r] <= k) cand.push_back(r);
    std::vector<VertexId> span;
    for (int r = j; r <= k; ++r) span.push_back(r);

    auto try_sigmas = [&](const std::vector<VertexId>& mu) -> bool {
        auto mut = mutated(ctx, mu);
        std::vector<VertexId> img = span;
        do {
            std::map<VertexId, VertexId> sigma;
            for (std::size_t i = 0; i < span.size(); ++i) sigma[span[i]] = img[i];
            if (sigma_holds(ctx, mut, sigma)) {
                mv.mutations = mu;
                mv.sigma = sigma;
                return true;
            }
        } while (std::next_permutation(img.begin(), img.end()));
        return false;
    };
    std::int64_t bound = c.c(a, b) * c.c(b, a) + 2;
    std::vector<std::vector<VertexId>> layer{{}};
    for (std::int64_t length = 0; length <= bound; ++length) {
        for (auto& mu : layer)
            if (try_sigmas(mu)) {
                mv.contexts_checked = static_cast<int>(ctx.size());
                return mv;
            }
        std::vector<std::vector<VertexId>> next;
        for (auto& mu : layer)
            for (auto r : cand)
                if (mu.empty() || mu.back() != r) {
                    next.push_back(mu);
                    next.back().push_back(r);
                }
        layer = std::move(next);
    }
    throw UnsupportedSeedError("no braid-move witness with at most " + std::to_string(bound) + " mutations");
}

Word left_reflection(const Word& w) {
    if (w.empty()) throw InputError("reflection of the empty word");
    Word r = w;
    r.front() = -r.front();
    return r;
}

Word right_reflection(const Word& w) {
    if (w.empty()) throw InputError("reflection of the empty word");
    Word r = w;
    r.back() = -r.back();
    return r;
}

ClusterEmbedding subword_embedding(const Word& w, int j, int k, const CartanData& c, bool reduced) {
    if (j < 1 || j > k || k > static_cast<int>(w.size())) throw InputError("subword range out of bounds");
    Word sub(w.begin() + j - 1, w.begin() + k);
    auto wi = word_indices(w, c), si = word_indices(sub, c);
    ClusterEmbedding e;
    e.source = reduced ? rsd(sub, c) : dsd(sub, c);
    e.target = reduced ? rsd(w, c) : dsd(w, c);
    for (auto v : e.source.ids) {
        auto [a, d] = si.label_of(v);
        e.iota[v] = wi.id_of(a, d + wi.occurrences(1, j - 1, a));
    }
    return e;
}

LetterExtension letter_extension(const Word& w, const CartanData& c) {
    LetterExtension x;
    x.new_letter = (c.J.empty() ? 0 : c.J.back()) + 1;
    std::size_t n = c.size();
    std::int64_t L = 1;
    for (auto d : c.D) L = lcm64(L, d);
    // C_ac = -2, C_ca = -2L/D_a, D_c = L: symmetrizable and C_ac C_ca >= 4
    IntMatrix C(n + 1, n + 1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) C(a, b) = c.C(a, b);
        C(a, n) = -2;
        C(n, a) = -2 * L / c.D[a];
    }
    C(n, n) = 2;
    auto J = c.J;
    J.push_back(x.new_letter);
    x.cartan = make_cartan(C, J);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) x.word.push_back(x.new_letter);
        x.word.push_back(w[i]);
    }
    return x;
}

bool is_letter_extension(const Word& extended, const Word& w, const CartanData& small) {
    Word kept;
    for (int x : extended)
        if (small.has(std::abs(x))) kept.push_back(x);
    return kept == w;
}

bool is_reduced(const Word& w, const CartanData& c) {
    // w is reduced iff s_{i1}..s_{i(k-1)} alpha_{ik} stays positive for every k
    std::size_t n = c.size();
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::vector<std::int64_t> v(n, 0);
        v[c.index(std::abs(w[k]))] = 1;
        for (std::size_t p = k; p-- > 0;) {
            std::size_t a = c.index(std::abs(w[p]));
            std::int64_t pair = 0;  // <alpha_a^vee, v>
            for (std::size_t b = 0; b < n; ++b) pair = checked_add(pair, checked_mul(c.C(a, b), v[b]));
            v[a] = checked_add(v[a], -pair);
        }
        bool neg = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x <= 0; });
        if (neg) return false;
    }
    return true;
}

CartanData random_cartan(std::mt19937& rng, std::size_t rank, int max_product) {
    std::uniform_int_distribution<int> dd(1, 3), tt(0, 2);
    std::vector<std::int64_t> D(rank);
    for (auto& x : D) x = dd(rng);
    for (int attempt = 0;; ++attempt) {
        IntMatrix C(rank, rank);
        bool ok = true;
        for (std::size_t a = 0; a < rank; ++a) {
            C(a, a) = 2;
            for (std::size_t b = a + 1; b < rank; ++b) {
                std::int64_t t = tt(rng), g = std::gcd(D[a], D[b]);
                C(a, b) = -t * D[a] / g;
                C(b, a) = -t * D[b] / g;
                if (C(a, b) * C(b, a) > max_product) ok = false;
            }
        }
        if (!ok && attempt < 100) continue;
        if (!ok) std::fill(D.begin(), D.end(), 1);
        if (!ok) continue;
        CartanData cd = make_cartan(C);
        return cd;
    }
}

Word random_word(std::mt19937& rng, const CartanData& c, std::size_t length, bool signed_letters) {
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    std::bernoulli_distribution neg(0.5);
    Word w;
    for (std::size_t i = 0; i < length; ++i) {
        int a = c.J[pick(rng)];
        w.push_back(signed_letters && neg(rng) ? -a : a);
    }
    return w;
}

}  // namespace qcluster
