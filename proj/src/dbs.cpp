#include "qcluster/dbs.hpp"

#include <algorithm>
#include <sstream>

#include "qcluster/bases.hpp"
#include "qcluster/errors.hpp"
#include "qcluster/freeze.hpp"

namespace qcluster {

namespace {

bool finite(int p) { return p != kPlusInf && p != kMinusInf; }

int succ_n(const WordIndices& wi, int j, int s) {
    for (int i = 0; i < s && finite(j); ++i) j = wi.succ[j];
    return j;
}

}  // namespace

std::vector<VertexId> SigmaPlan::prefix(int r, int s) const {
    int l = static_cast<int>(wi.length);
    if (r < 0 || r > l) throw InputError("r out of range");
    std::vector<VertexId> w;
    for (int k = 1; k <= r; ++k) w.insert(w.end(), blocks[k].begin(), blocks[k].end());
    if (s > 0) {
        if (r == l || s > static_cast<int>(blocks[r + 1].size())) throw InputError("s out of range");
        w.insert(w.end(), blocks[r + 1].begin(), blocks[r + 1].begin() + s);
    }
    return w;
}

std::vector<VertexId> SigmaPlan::optimizing_word(int k) const { return blocks.at(wi.kmin.at(k)); }

SigmaPlan sigma_plan(const Word& eta, const CartanData& c) {
    for (int a : eta)
        if (a <= 0) throw InputError("dBS plans need an unsigned word");
    SigmaPlan p;
    p.eta = eta;
    p.cartan = c;
    p.wi = word_indices(eta, c);
    int l = static_cast<int>(p.wi.length);
    p.blocks.assign(l + 1, {});
    for (int k = 1; k <= l; ++k) {
        int v = p.wi.kmin[k];
        for (int i = 0; i < p.wi.o_plus[k]; ++i, v = p.wi.succ[v]) p.blocks[k].push_back(v);
        p.sigma.insert(p.sigma.end(), p.blocks[k].begin(), p.blocks[k].end());
    }
    for (int k = 1; k <= l; ++k) {
        if (!p.wi.unfrozen(k)) continue;
        int r = p.wi.o_minus[k];
        int v = p.wi.kmax[k];
        for (int i = 0; i <= r; ++i) v = p.wi.pred[v];
        p.perm[k] = v;
    }
    return p;
}

Word shuffled_word(const Word& eta, const CartanData& c, int r, int s) {
    auto wi = word_indices(eta, c);
    int l = static_cast<int>(wi.length);
    if (r < 0 || r > l) throw InputError("r out of range");
    Word w;
    if (r < l) {
        int rp = r + 1;
        if (s < 0 || s > wi.o_plus[rp]) throw InputError("s out of range");
        int rs = succ_n(wi, rp, s);
        for (int i = rp + 1; i <= rs; ++i) w.push_back(eta[i - 1]);
        w.push_back(-eta[rp - 1]);
        for (int i = rs + 1; i <= l; ++i) w.push_back(eta[i - 1]);
    }
    for (int i = r; i >= 1; --i) w.push_back(-eta[i - 1]);
    return w;
}

Seed shuffled_seed(const Word& eta, const CartanData& c, int r, int s) {
    Word w = shuffled_word(eta, c, r, s);
    std::map<VertexId, VertexId> m;
    for (auto [from, to] : occurrence_map(w, eta, c))
        if (from > 0) m[from] = to;
    return relabel(rsd(w, c), m);
}

DbsData::DbsData(const Word& eta, const CartanData& c, std::size_t max_terms)
    : plan_(sigma_plan(eta, c)),
      seed_(rsd(eta, c, true)),
      torus_(*seed_.Lambda),
      dom_(seed_.B) {
    const auto& wi = plan_.wi;
    int l = static_cast<int>(wi.length);
    TrackedSeed ts = track(seed_, max_terms);
    snaps_.push_back(ts);
    for (int r = 1; r <= l; ++r) {
        ts = mutate_tracked(ts, plan_.blocks[r]);
        snaps_.push_back(ts);
    }
    for (int r = 0; r <= l; ++r) {
        for (auto [a, total] : wi.count) {
            int ra = wi.occurrences(1, r, a);
            for (int d = 0; d < total - ra; ++d) {
                VertexId v = wi.id_of(a, d);
                int j = wi.id_of(a, ra), k = wi.id_of(a, ra + d);
                const QLaurent& x = snaps_[r].var(v);
                auto it = vars_.find({j, k});
                if (it != vars_.end()) {
                    ++checks_;
                    if (it->second.element != x)
                        throw ConsistencyError("interval variable [" + std::to_string(j) + "," + std::to_string(k) +
                                               "] differs between seeds");
                    continue;
                }
                auto g = degree(x, dom_);
                if (!g) throw ConsistencyError("interval variable is not pointed");
                vars_[{j, k}] = IntervalVar{j, k, r, v, x, *g, beta(j, k)};
            }
        }
    }
}

ExpVec DbsData::f(int k) const {
    ExpVec e(length());
    if (finite(k)) e[static_cast<std::size_t>(k - 1)] = 1;
    return e;
}

ExpVec DbsData::beta(int j, int k) const { return f(k) - f(plan_.wi.pred.at(j)); }

const IntervalVar& DbsData::interval(int j, int k) const {
    auto it = vars_.find({j, k});
    if (it == vars_.end())
        throw InputError("no interval variable [" + std::to_string(j) + "," + std::to_string(k) + "]");
    return it->second;
}

QLaurent DbsData::W(int j, int k) const {
    if (plan_.wi.pred.at(j) == k) return QLaurent::constant(length(), QCoeff(1));
    return interval(j, k).element;
}

std::vector<std::int64_t> DbsData::beta_coordinates(const ExpVec& m) const {
    const auto& wi = plan_.wi;
    std::size_t l = length();
    std::vector<std::int64_t> c(l + 1, 0);
    for (std::size_t i = l; i >= 1; --i) {
        int s = wi.succ[i];
        c[i] = m[i - 1] + (finite(s) ? c[static_cast<std::size_t>(s)] : 0);
    }
    return {c.begin() + 1, c.end()};
}

ExpVec DbsData::from_beta(const std::vector<std::int64_t>& c) const {
    ExpVec m(length());
    for (std::size_t i = 0; i < c.size(); ++i) m += beta(static_cast<int>(i + 1)) * c[i];
    return m;
}

YDegree y_degree(const DbsData& data, int k) {
    const auto& wi = data.indices();
    if (k < 1 || k > static_cast<int>(wi.length) || !wi.unfrozen(k)) throw InputError("y-degree needs an unfrozen vertex");
    int a = wi.letter[k], next = wi.succ[k];
    YDegree y;
    y.f = data.f(wi.pred[k]) - data.f(next);
    for (auto [b, total] : wi.count) {
        if (b == a || total == 0) continue;
        int first = 0, last = 0;
        for (int p = k + 1; p < next; ++p)
            if (wi.letter[p] == b) {
                if (!first) first = p;
                last = p;
            }
        if (!first) continue;
        y.f += data.beta(first, last) * (-data.cartan().c(b, a));
    }
    y.beta = data.beta_coordinates(y.f);
    const Seed& s = data.seed();
    std::size_t col = s.column_of(k);
    bool ok = true;
    for (std::size_t i = 0; i < s.size(); ++i) ok = ok && s.B(i, col) == y.f[i];
    y.matches_column = ok;
    return y;
}

bool t_system_valid(const WordIndices& wi, int j, int s) {
    if (j < 1 || j > static_cast<int>(wi.length) || s < 0) return false;
    int js = succ_n(wi, j, s);
    return finite(js) && finite(wi.succ[js]);
}

TSystemReport t_system_check(const DbsData& data, int j, int s) {
    const auto& wi = data.indices();
    if (!t_system_valid(wi, j, s)) throw InputError("no T-system for (j,s) = (" + std::to_string(j) + "," +
                                                    std::to_string(s) + ")");
    const auto& torus = data.torus();
    const auto& dom = data.dominance();
    int a = wi.letter[j];
    int j1 = wi.succ[j], js = succ_n(wi, j, s), js1 = wi.succ[js];
    TSystemReport rep;
    rep.j = j;
    rep.s = s;
    QLaurent lhs = torus.mul(data.W(j, js), data.W(j1, js1));
    QLaurent first = normalize(torus.mul(data.W(j1, js), data.W(j, js1)), dom).value;
    QLaurent prod = QLaurent::constant(data.length(), QCoeff(1));
    ExpVec prod_deg(data.length());
    for (auto [b, total] : wi.count) {
        if (b == a || data.cartan().c(b, a) == 0) continue;
        int i = 0, id = 0;
        for (int p = j; p < js1; ++p)
            if (wi.letter[p] == b) {
                if (!i) i = p;
                id = p;
            }
        if (!i) continue;
        std::int64_t e = -data.cartan().c(b, a);
        rep.product.emplace_back(i, id);
        prod = torus.mul(prod, torus.pow(data.W(i, id), e));
        prod_deg += data.beta(i, id) * e;
    }
    QLaurent second = normalize(prod, dom).value;
    ExpVec b1 = data.beta(j, js), b2 = data.beta(j1, js1);
    rep.alpha = torus.half_form(b1, b2);
    rep.alpha_prime = torus.half_form(b1, prod_deg);
    QLaurent rhs = first.scaled(QCoeff::q_power(rep.alpha)) + second.scaled(QCoeff::q_power(rep.alpha_prime));
    rep.holds = lhs == rhs;
    rep.classical_holds = lhs.at_q_one() == rhs.at_q_one();
    std::ostringstream os;
    auto iv = [&](int x, int y) {
        return wi.pred[x] == y ? std::string("1") : "W[" + std::to_string(x) + "," + std::to_string(y) + "]";
    };
    os << iv(j, js) << " * " << iv(j1, js1) << " = q^(" << rep.alpha.numerator() << "/" << rep.alpha.denominator()
       << ") [" << iv(j1, js) << " * " << iv(j, js1) << "] + q^(" << rep.alpha_prime.numerator() << "/"
       << rep.alpha_prime.denominator() << ") [";
    if (rep.product.empty()) os << "1";
    for (std::size_t t = 0; t < rep.product.size(); ++t) {
        auto [x, y] = rep.product[t];
        os << (t ? " * " : "") << iv(x, y) << "^" << -data.cartan().c(wi.letter[x], a);
    }
    os << "]";
    rep.identity = os.str();
    return rep;
}

std::vector<TSystemReport> all_t_systems(const DbsData& data) {
    std::vector<TSystemReport> out;
    const auto& wi = data.indices();
    for (int j = 1; j <= static_cast<int>(wi.length); ++j)
        for (int s = 0; t_system_valid(wi, j, s); ++s) out.push_back(t_system_check(data, j, s));
    return out;
}

PointedElement standard_monomial(const DbsData& data, const std::vector<std::int64_t>& w) {
    if (w.size() != data.length()) throw InputError("exponent vector has the wrong length");
    const auto& torus = data.torus();
    QLaurent z = QLaurent::constant(data.length(), QCoeff(1));
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) throw InputError("standard monomials need nonnegative exponents");
        if (w[i]) z = torus.mul(z, torus.pow(data.W(static_cast<int>(i + 1), static_cast<int>(i + 1)), w[i]));
    }
    return normalize(z, data.dominance());
}

StraighteningReport ls_straightening(const DbsData& data, int j, int k) {
    if (!(1 <= j && j < k && k <= static_cast<int>(data.length()))) throw InputError("need 1 <= j < k <= l");
    const auto& torus = data.torus();
    QLaurent Wj = data.W(j, j), Wk = data.W(k, k);
    StraighteningReport rep;
    rep.j = j;
    rep.k = k;
    rep.exponent = Rat(torus.form(data.beta(k), data.beta(j)));
    QLaurent z = torus.mul(Wk, Wj) - torus.mul(Wj, Wk).scaled(QCoeff::q_power(rep.exponent));
    StandardBasis basis(data);
    rep.expansion = basis.expand(z);
    rep.support_ok = true;
    for (auto& [w, c] : rep.expansion)
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] && !(static_cast<int>(i + 1) > j && static_cast<int>(i + 1) < k)) rep.support_ok = false;
    return rep;
}

bool in_beta_cone(const DbsData& data, const ExpVec& m) {
    for (auto c : data.beta_coordinates(m))
        if (c < 0) return false;
    return true;
}

std::map<VertexId, std::vector<VertexId>> optimized_words(const SigmaPlan& plan) {
    std::map<VertexId, std::vector<VertexId>> out;
    for (auto [a, total] : plan.wi.count) {
        if (!total) continue;
        int kmax = plan.wi.id_of(a, total - 1);
        out[kmax] = plan.optimizing_word(kmax);
    }
    return out;
}

ConeCheck dominant_cone_check(const DbsData& data, const ExpVec& m) {
    ConeCheck r;
    r.beta_cone = in_beta_cone(data, m);
    r.optimized_route = dominant_membership(m, data.seed(), optimized_words(data.plan()));
    return r;
}

QLaurent embed_subword_element(const DbsData& data, int j, int k, const QLaurent& z) {
    const auto& wi = data.indices();
    if (!(1 <= j && j <= k && k <= static_cast<int>(wi.length))) throw InputError("bad subword range");
    Word sub(data.eta().begin() + (j - 1), data.eta().begin() + k);
    auto swi = word_indices(sub, data.cartan());
    if (z.dim() != sub.size()) throw InputError("element does not live on the subword seed");
    const TrackedSeed& ts = data.snapshot(j - 1);
    QLaurent out(data.length());
    for (auto& [g, c] : z.terms()) {
        ExpVec h(data.length());
        for (std::size_t p = 1; p <= sub.size(); ++p) {
            VertexId v = wi.id_of(swi.letter[p], swi.o_minus[p]);
            h[ts.seed.pos(v)] += g[p - 1];
        }
        out += expand_monomial(ts, h).scaled(c);
    }
    return out;
}

}  // namespace qcluster
