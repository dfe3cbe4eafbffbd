#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcluster/dbs.hpp"

namespace qcluster {

// t and t2 agree on the unfrozen part up to sigma; in the quantum case delta'_{sigma k} = rho delta_k.
struct SimilarityData {
    Seed t, t2;
    std::map<VertexId, VertexId> sigma;  // on I_uf, t -> t2
    Rat rho{1};
};
// Returns the data or nullopt with the first mismatch in *failure.
std::optional<SimilarityData> similarity_check(const Seed& t, const Seed& t2, std::map<VertexId, VertexId> sigma = {},
                                               std::string* failure = nullptr);

// var_{m2,m}: x^m y^n -> x'^{m2} y'^n with q^{1/2} -> q^{rho/2}; z must be pointed at m in t.
QLaurent var_element(const QLaurent& z, const ExpVec& m, const ExpVec& m2, const SimilarityData& sim);

struct CorrectionReport {
    ExpVec m, m2;              // degrees of z in t and of var(z) in t2
    ExpVec p_degree;           // m2 - sum m2_s
    ExpVec p_degree_measured;  // deg var(z) - deg [z'_1 * ... * z'_r]
    bool frozen_only = false;  // p' lies in the frozen group
    bool holds = false;        // var(z) == p' . [z'_1 * ... * z'_r]
};
// z = [z_1 * ... * z_r] in t, z' = var_{m2,m}(z); z2s are the similar elements in t2.
CorrectionReport correction_check(const std::vector<QLaurent>& zs, const std::vector<QLaurent>& z2s, const ExpVec& m2,
                                  const SimilarityData& sim);

struct LinearPiece {
    QCoeff b;
    QLaurent z;   // pointed in t
    QLaurent z2;  // a similar element in t2
};
// z = sum b_s z_s inside x^m k[y]; checks var_{m2,m}(z) = sum b'_s p'_s z'_s.
bool correction_linear_check(const std::vector<LinearPiece>& pieces, const ExpVec& m, const ExpVec& m2,
                             const SimilarityData& sim);

// A monomial map on exponents: column i of `matrix` is var(f_i).
struct BaseChange {
    Seed t, t2;
    IntMatrix matrix;  // |I(t2)| x |I(t)|
    bool is_variation = false;
    std::vector<std::string> failures;
    QLaurent apply(const QLaurent& z) const;
};
BaseChange base_change_map(const Seed& t, const Seed& t2, const IntMatrix& var);
// Checks Z2 = [p' * var(Z)] elementwise with p' frozen; fragments are matched by position.
bool transports_basis(const BaseChange& bc, const std::vector<QLaurent>& Z, const std::vector<QLaurent>& Z2);

// Standard monomials of a dBS seed with a cache, and expansion by peeling off maximal terms.
class StandardBasis {
  public:
    explicit StandardBasis(const DbsData& data) : data_(data) {}
    const DbsData& data() const { return data_; }
    const QLaurent& M(const std::vector<std::int64_t>& w) const;
    // Exact expansion sum c_w M(w); throws ConsistencyError if z is outside the span,
    // BudgetError after max_steps peels, InputError if a degree exceeds the ceiling.
    std::map<std::vector<std::int64_t>, QCoeff> expand(const QLaurent& z, const std::optional<ExpVec>& ceiling = {},
                                                       std::size_t max_steps = 100'000) const;
    QLaurent evaluate(const std::map<std::vector<std::int64_t>, QCoeff>& c) const;

  private:
    const DbsData& data_;
    mutable std::map<std::vector<std::int64_t>, QLaurent> cache_;
};

enum class KLOrder { Rev, Lex };
bool order_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, KLOrder o);

struct KLElement {
    std::vector<std::int64_t> w;
    QLaurent value;
    std::map<std::vector<std::int64_t>, QCoeff> over_M;  // includes w itself with coefficient 1
};
// Bar-invariant L(w) = M(w) + sum_{w' < w} b_{w'} M(w'), b in q^{-1/2}Z[q^{-1/2}].
KLElement kl_basis(const StandardBasis& basis, const std::vector<std::int64_t>& w, KLOrder order = KLOrder::Rev);

struct BarMatrixReport {
    bool unitriangular = false;  // bar M(w) = M(w) + lower terms
    std::map<std::vector<std::int64_t>, QCoeff> row;
};
BarMatrixReport bar_row(const StandardBasis& basis, const std::vector<std::int64_t>& w);

struct AxiomReport {
    bool bar_invariant = true;
    bool contains_cluster_monomials = true;
    bool triangular_products = true;
    int products_checked = 0;
    std::vector<std::string> witnesses;
    bool all() const { return bar_invariant && contains_cluster_monomials && triangular_products; }
};
// Fragment of pointed elements in seed t (distinct degrees). Cluster monomials of t and t[1] whose degrees
// land on the fragment must be members; [x_i * L] must be L' + (q^{-1/2}Z[q^{-1/2}])-combination of lower
// members whenever all degrees involved stay in the fragment.
AxiomReport triangular_axioms_check(const std::vector<QLaurent>& fragment, const Seed& t,
                                    const std::vector<QLaurent>& cluster_monomials);

// Localized cluster monomials (frozen exponents in [-box, box], unfrozen in [0, box]) of every seed within
// `depth` mutations of s, keyed by their degree in s.
std::map<ExpVec, QLaurent> cluster_monomials_near(const Seed& s, int depth, std::int64_t box,
                                                  std::size_t max_terms = 200'000);

}  // namespace qcluster
