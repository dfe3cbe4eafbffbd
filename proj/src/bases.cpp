#include "qcluster/bases.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qcluster/errors.hpp"

namespace qcluster {

namespace {

QuantumTorus torus_of(const Seed& s) {
    return s.Lambda ? QuantumTorus(*s.Lambda) : QuantumTorus::classical(s.size());
}

// n with g = m + B n, or nullopt.
std::optional<std::vector<std::int64_t>> y_part(const Seed& s, const ExpVec& g, const ExpVec& m) {
    return DominanceOrder(s.B).solve(g - m);
}

ExpVec apply_matrix(const IntMatrix& A, const ExpVec& g) {
    ExpVec out(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) out[i] += A(i, j) * g[j];
    return out;
}

}  // namespace

std::optional<SimilarityData> similarity_check(const Seed& t, const Seed& t2, std::map<VertexId, VertexId> sigma,
                                               std::string* failure) {
    auto fail = [&](const std::string& why) -> std::optional<SimilarityData> {
        if (failure) *failure = why;
        return std::nullopt;
    };
    if (t.rank() != t2.rank()) return fail("different numbers of unfrozen vertices");
    for (auto p : t.uf)
        if (!sigma.count(t.ids[p])) sigma[t.ids[p]] = t.ids[p];
    std::set<VertexId> image;
    auto has = [](const Seed& x, VertexId v) { return std::find(x.ids.begin(), x.ids.end(), v) != x.ids.end(); };
    for (auto [a, b] : sigma) {
        if (!has(t, a) || !has(t2, b)) return fail("sigma names an unknown vertex");
        if (!t.is_unfrozen(t.pos(a))) return fail("sigma moves the frozen vertex " + std::to_string(a));
        if (!t2.is_unfrozen(t2.pos(b))) return fail("vertex " + std::to_string(b) + " is frozen in the second seed");
        image.insert(b);
    }
    if (image.size() != sigma.size()) return fail("sigma is not injective");
    for (auto [i, si] : sigma) {
        if (t.d[t.pos(i)] != t2.d[t2.pos(si)]) return fail("symmetrizers differ at " + std::to_string(i));
        for (auto [j, sj] : sigma)
            if (t.b(t.pos(i), t.pos(j)) != t2.b(t2.pos(si), t2.pos(sj)))
                return fail("b differs at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    SimilarityData sim{t, t2, sigma, Rat(1)};
    if (t.Lambda.has_value() != t2.Lambda.has_value()) return fail("only one seed is quantum");
    if (t.Lambda) {
        auto c1 = check_compatible(t), c2 = check_compatible(t2);
        if (!c1.ok || !c2.ok) return fail("incompatible quantization");
        std::optional<Rat> rho;
        for (auto [i, si] : sigma) {
            Rat r(c2.delta[t2.column_of(si)], c1.delta[t.column_of(i)]);
            if (rho && *rho != r) return fail("delta ratios differ at " + std::to_string(i));
            rho = r;
        }
        if (rho) sim.rho = *rho;
    }
    return sim;
}

QLaurent var_element(const QLaurent& z, const ExpVec& m, const ExpVec& m2, const SimilarityData& sim) {
    const Seed &t = sim.t, &t2 = sim.t2;
    for (auto [i, si] : sim.sigma)
        if (m[t.pos(i)] != m2[t2.pos(si)]) throw InputError("target degree differs on the unfrozen part");
    QLaurent out(t2.size());
    for (auto& [g, c] : z.terms()) {
        auto n = y_part(t, g, m);
        if (!n) throw InputError("term x^" + g.str() + " is not in x^m k[y]");
        ExpVec g2 = m2;
        for (auto [i, si] : sim.sigma) {
            std::int64_t ni = (*n)[t.column_of(i)];
            std::size_t c2 = t2.column_of(si);
            for (std::size_t r = 0; r < t2.size(); ++r) g2[r] += t2.B(r, c2) * ni;
        }
        out.add_term(g2, sim.rho == Rat(1) ? c : c.rescaled(sim.rho));
    }
    return out;
}

CorrectionReport correction_check(const std::vector<QLaurent>& zs, const std::vector<QLaurent>& z2s, const ExpVec& m2,
                                  const SimilarityData& sim) {
    if (zs.empty() || zs.size() != z2s.size()) throw InputError("need matching nonempty factor lists");
    const Seed &t = sim.t, &t2 = sim.t2;
    QuantumTorus T = torus_of(t), T2 = torus_of(t2);
    DominanceOrder dom(t.B), dom2(t2.B);
    QLaurent z = zs[0], n2 = z2s[0];
    ExpVec sum2 = *degree(z2s[0], dom2);
    for (std::size_t s = 1; s < zs.size(); ++s) {
        z = T.mul(z, zs[s]);
        n2 = T2.mul(n2, z2s[s]);
        auto g = degree(z2s[s], dom2);
        if (!g) throw InputError("factor is not pointed");
        sum2 += *g;
    }
    CorrectionReport rep;
    auto pz = normalize(z, dom);
    rep.m = pz.degree;
    rep.m2 = m2;
    QLaurent zp = var_element(pz.value, pz.degree, m2, sim);
    auto N = normalize(n2, dom2);
    rep.p_degree = m2 - sum2;
    rep.p_degree_measured = *degree(zp, dom2) - N.degree;
    rep.frozen_only = true;
    for (auto p : t2.uf) rep.frozen_only = rep.frozen_only && rep.p_degree[p] == 0;
    rep.holds = rep.frozen_only && zp == N.value.shifted(rep.p_degree);
    return rep;
}

bool correction_linear_check(const std::vector<LinearPiece>& pieces, const ExpVec& m, const ExpVec& m2,
                             const SimilarityData& sim) {
    const Seed &t = sim.t, &t2 = sim.t2;
    DominanceOrder dom(t.B), dom2(t2.B);
    QLaurent z(t.size()), rhs(t2.size());
    for (auto& pc : pieces) {
        z += pc.z.scaled(pc.b);
        auto ms = degree(pc.z, dom);
        auto ms2 = degree(pc.z2, dom2);
        if (!ms || !ms2) throw InputError("pieces must be pointed");
        auto n = y_part(t, *ms, m);
        if (!n) continue;  // outside x^m k[y]: cancels in z
        ExpVec target = m2;
        for (auto [i, si] : sim.sigma) {
            std::size_t c2 = t2.column_of(si);
            for (std::size_t r = 0; r < t2.size(); ++r) target[r] += t2.B(r, c2) * (*n)[t.column_of(i)];
        }
        QCoeff b2 = sim.rho == Rat(1) ? pc.b : pc.b.rescaled(sim.rho);
        rhs += pc.z2.shifted(target - *ms2).scaled(b2);
    }
    return var_element(z, m, m2, sim) == rhs;
}

QLaurent BaseChange::apply(const QLaurent& z) const {
    QLaurent out(t2.size());
    for (auto& [g, c] : z.terms()) out.add_term(apply_matrix(matrix, g), c);
    return out;
}

BaseChange base_change_map(const Seed& t, const Seed& t2, const IntMatrix& var) {
    BaseChange bc{t, t2, var, false, {}};
    if (var.rows() != t2.size() || var.cols() != t.size()) throw InputError("variation matrix has the wrong shape");
    if (t.rank() != t2.rank()) throw InputError("seeds have different unfrozen parts");
    std::string why;
    if (!similarity_check(t, t2, {}, &why)) bc.failures.push_back("seeds are not similar: " + why);
    for (std::size_t c = 0; c < t.rank(); ++c) {
        std::size_t k = t.uf[c];
        ExpVec fk = apply_matrix(var, ExpVec::unit(t.size(), k));
        std::size_t k2 = t2.pos(t.ids[k]);
        for (std::size_t r = 0; r < t2.size(); ++r) {
            std::int64_t expect = r == k2 ? 1 : 0;
            if (t2.is_unfrozen(r) && fk[r] != expect) bc.failures.push_back("var(x_k) is not x'_k p' at " + t.name(k));
        }
        ExpVec yk(t.size());
        for (std::size_t r = 0; r < t.size(); ++r) yk[r] = t.B(r, c);
        ExpVec yk2(t2.size());
        for (std::size_t r = 0; r < t2.size(); ++r) yk2[r] = t2.B(r, t2.column_of(t.ids[k]));
        if (apply_matrix(var, yk) != yk2) bc.failures.push_back("var(y_k) != y'_k at " + t.name(k));
    }
    for (auto j : t.frozen()) {
        ExpVec fj = apply_matrix(var, ExpVec::unit(t.size(), j));
        for (auto p : t2.uf)
            if (fj[p] != 0) bc.failures.push_back("frozen " + t.name(j) + " leaves the frozen group");
    }
    if (t.Lambda && t2.Lambda) {
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                ExpVec a = apply_matrix(var, ExpVec::unit(t.size(), i)), b = apply_matrix(var, ExpVec::unit(t.size(), j));
                if (QuantumTorus(*t2.Lambda).form(a, b) != (*t.Lambda)(i, j))
                    bc.failures.push_back("twisted product not preserved on " + t.name(i) + "," + t.name(j));
            }
    }
    bc.is_variation = bc.failures.empty();
    return bc;
}

bool transports_basis(const BaseChange& bc, const std::vector<QLaurent>& Z, const std::vector<QLaurent>& Z2) {
    if (Z.size() != Z2.size()) throw InputError("fragments differ in size");
    DominanceOrder dom2(bc.t2.B);
    QuantumTorus T2 = torus_of(bc.t2);
    for (std::size_t i = 0; i < Z.size(); ++i) {
        QLaurent v = bc.apply(Z[i]);
        auto g = degree(v, dom2), g2 = degree(Z2[i], dom2);
        if (!g || !g2) return false;
        ExpVec p = *g2 - *g;
        for (auto u : bc.t2.uf)
            if (p[u] != 0) return false;
        if (normalize(T2.mono_mul(p, v), dom2).value != Z2[i]) return false;
    }
    return true;
}

// ------------------------------------------------------------------ standard basis

const QLaurent& StandardBasis::M(const std::vector<std::int64_t>& w) const {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(w, standard_monomial(data_, w).value).first->second;
}

std::map<std::vector<std::int64_t>, QCoeff> StandardBasis::expand(const QLaurent& z, const std::optional<ExpVec>& ceiling,
                                                                  std::size_t max_steps) const {
    std::map<std::vector<std::int64_t>, QCoeff> out;
    QLaurent r = z;
    const auto& dom = data_.dominance();
    for (std::size_t step = 0; !r.is_zero(); ++step) {
        if (step >= max_steps) throw BudgetError("standard expansion did not finish");
        ExpVec g = a_maximal_exponent(r, dom);
        if (ceiling && !dom.leq(g, *ceiling)) throw InputError("degree " + g.str() + " exceeds the ceiling");
        auto w = data_.beta_coordinates(g);
        for (auto c : w)
            if (c < 0) throw ConsistencyError("degree " + g.str() + " is outside the standard basis span");
        QCoeff c = r.coeff(g);
        r -= M(w).scaled(c);
        out[w] += c;
        if (out[w].is_zero()) out.erase(w);
    }
    return out;
}

QLaurent StandardBasis::evaluate(const std::map<std::vector<std::int64_t>, QCoeff>& c) const {
    QLaurent out(data_.length());
    for (auto& [w, b] : c) out += M(w).scaled(b);
    return out;
}

bool order_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, KLOrder o) {
    if (o == KLOrder::Lex) return a < b;
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

BarMatrixReport bar_row(const StandardBasis& basis, const std::vector<std::int64_t>& w) {
    BarMatrixReport rep;
    rep.row = basis.expand(basis.M(w).bar());
    auto it = rep.row.find(w);
    rep.unitriangular = it != rep.row.end() && it->second == QCoeff(1);
    const auto& dom = basis.data().dominance();
    ExpVec top = basis.data().from_beta(w);
    for (auto& [v, c] : rep.row)
        if (v != w && !dom.less(basis.data().from_beta(v), top)) rep.unitriangular = false;
    return rep;
}

KLElement kl_basis(const StandardBasis& basis, const std::vector<std::int64_t>& w, KLOrder order) {
    auto top = bar_row(basis, w);
    if (!top.unitriangular) throw ConsistencyError("bar involution is not unitriangular on the standard basis");
    KLElement L{w, basis.M(w), {{w, QCoeff(1)}}};
    for (int guard = 0;; ++guard) {
        if (guard > 10'000) throw BudgetError("KL recursion did not terminate");
        auto defect = basis.expand(L.value.bar() - L.value);
        if (defect.empty()) break;
        // the largest index left in the defect is fixed next
        auto pick = defect.begin();
        for (auto it = defect.begin(); it != defect.end(); ++it)
            if (order_less(pick->first, it->first, order)) pick = it;
        if (!order_less(pick->first, w, order)) throw ConsistencyError("defect is not below w");
        QCoeff d = pick->second;
        if (d.bar() != -d) throw ConsistencyError("defect coefficient is not anti-invariant");
        QCoeff b;
        for (auto& [e, c] : d.terms())
            if (e < Rat(0)) b += QCoeff::q_power(e, c);
        L.value += basis.M(pick->first).scaled(b);
        L.over_M[pick->first] += b;
    }
    return L;
}

AxiomReport triangular_axioms_check(const std::vector<QLaurent>& fragment, const Seed& t,
                                    const std::vector<QLaurent>& cluster_monomials) {
    AxiomReport rep;
    DominanceOrder dom(t.B);
    QuantumTorus T = torus_of(t);
    std::map<ExpVec, const QLaurent*> by_degree;
    for (auto& L : fragment) {
        auto g = degree(L, dom);
        if (!g) {
            rep.bar_invariant = false;
            rep.witnesses.push_back("member without a unique maximal degree");
            continue;
        }
        by_degree[*g] = &L;
        if (L.bar() != L) {
            rep.bar_invariant = false;
            rep.witnesses.push_back("not bar-invariant at degree " + g->str());
        }
    }
    for (auto& c : cluster_monomials) {
        auto g = degree(c, dom);
        if (!g) continue;
        auto it = by_degree.find(*g);
        if (it != by_degree.end() && *it->second != c) {
            rep.contains_cluster_monomials = false;
            rep.witnesses.push_back("cluster monomial at " + g->str() + " differs from the member");
        }
    }
    for (auto& [g, L] : by_degree) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            ExpVec fi = ExpVec::unit(t.size(), i);
            QLaurent r = normalize(T.mono_mul(fi, *L), dom).value;
            ExpVec lead = g + fi;
            bool checkable = true, ok = true;
            for (int step = 0; !r.is_zero() && checkable; ++step) {
                ExpVec h = a_maximal_exponent(r, dom);
                auto it = by_degree.find(h);
                if (it == by_degree.end()) {
                    checkable = false;
                    break;
                }
                QCoeff c = r.coeff(h);
                if (h == lead) ok = ok && c == QCoeff(1);
                else ok = ok && dom.less(h, lead) && c.strictly_negative_exponents();
                r -= it->second->scaled(c);
            }
            if (!checkable) continue;
            ++rep.products_checked;
            if (!ok) {
                rep.triangular_products = false;
                rep.witnesses.push_back("[x_" + t.name(i) + " * L] at " + g.str() + " is not unitriangular");
            }
        }
    }
    return rep;
}

std::map<ExpVec, QLaurent> cluster_monomials_near(const Seed& s, int depth, std::int64_t box, std::size_t max_terms) {
    std::map<ExpVec, QLaurent> out;
    std::vector<TrackedSeed> layer{track(s, max_terms)};
    std::set<std::vector<std::string>> seen;
    std::size_t n = s.size();
    for (int d = 0; d <= depth && !layer.empty(); ++d) {
        std::vector<TrackedSeed> next;
        for (auto& ts : layer) {
            // the cluster as an unordered set of variables
            std::vector<std::string> key;
            for (auto& v : ts.vars) key.push_back(v.str());
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            std::vector<std::int64_t> m(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                if (!ts.seed.is_unfrozen(i)) m[i] = -box;
            for (;;) {
                auto pe = localized_cluster_monomial(ts, ExpVec(m));
                out.emplace(pe.degree, pe.value);
                std::size_t i = 0;
                for (; i < n; ++i) {
                    if (++m[i] <= box) break;
                    m[i] = ts.seed.is_unfrozen(i) ? 0 : -box;
                }
                if (i == n) break;
            }
            for (auto p : ts.seed.uf) next.push_back(mutate_tracked(ts, ts.seed.ids[p]));
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace qcluster
