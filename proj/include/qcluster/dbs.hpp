#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcluster/pattern.hpp"
#include "qcluster/words.hpp"

namespace qcluster {

// The sequence Sigma = Sigma_l ... Sigma_1 on rsd(eta); vertex ids are positions 1..l.
struct SigmaPlan {
    Word eta;
    CartanData cartan;
    WordIndices wi;
    std::vector<std::vector<VertexId>> blocks;  // blocks[k] = Sigma_k, mutation order; blocks[0] unused
    std::vector<VertexId> sigma;                // Sigma_1 first
    std::map<VertexId, VertexId> perm;          // sigma(k^min[r]) = k^max[-1-r] on I_uf

    // Mutations taking rsd to rsd{r}_s.
    std::vector<VertexId> prefix(int r, int s = 0) const;
    // Sigma_{k^min} for the letter of k: k^max is optimized after it.
    std::vector<VertexId> optimizing_word(int k) const;
};
SigmaPlan sigma_plan(const Word& eta, const CartanData& c);

// rsd{r}_s = rsd of (eta_[r'+1, r'[s]], -eta_r', eta_[r'[s]+1, l], -eta_[1,r]^op), r' = r+1.
Word shuffled_word(const Word& eta, const CartanData& c, int r, int s = 0);
// That seed with its vertices renamed to positions of eta through the occurrence labels (a,d).
Seed shuffled_seed(const Word& eta, const CartanData& c, int r, int s = 0);

struct IntervalVar {
    int j = 0, k = 0;      // positions with eta_j = eta_k, j <= k
    int r = 0;             // computed as x_vertex(rsd{r})
    VertexId vertex = 0;
    QLaurent element;      // expansion in rsd(eta)
    ExpVec degree;         // measured
    ExpVec beta;           // f_k - f_{j[-1]}
};

// Interval variables and derived data of a quantized rsd(eta), computed once along Sigma.
class DbsData {
  public:
    DbsData(const Word& eta, const CartanData& c, std::size_t max_terms = 2'000'000);

    const Word& eta() const { return plan_.eta; }
    const WordIndices& indices() const { return plan_.wi; }
    const CartanData& cartan() const { return plan_.cartan; }
    const SigmaPlan& plan() const { return plan_; }
    const Seed& seed() const { return seed_; }
    const QuantumTorus& torus() const { return torus_; }
    const DominanceOrder& dominance() const { return dom_; }
    std::size_t length() const { return plan_.wi.length; }

    ExpVec f(int k) const;                 // unit vector, zero for +-infinity
    ExpVec beta(int j, int k) const;       // f_k - f_{j[-1]}
    ExpVec beta(int j) const { return beta(j, j); }
    // W_[j,k]; W over an empty range (k = j[-1]) is 1.
    QLaurent W(int j, int k) const;
    const IntervalVar& interval(int j, int k) const;
    const std::map<std::pair<int, int>, IntervalVar>& intervals() const { return vars_; }
    // Intervals reachable from several r must agree; returns the number of comparisons made.
    int consistency_checks() const { return checks_; }
    const TrackedSeed& snapshot(int r) const { return snaps_.at(static_cast<std::size_t>(r)); }

    // m = sum c_i beta_i
    std::vector<std::int64_t> beta_coordinates(const ExpVec& m) const;
    ExpVec from_beta(const std::vector<std::int64_t>& c) const;

  private:
    SigmaPlan plan_;
    Seed seed_;
    QuantumTorus torus_;
    DominanceOrder dom_;
    std::vector<TrackedSeed> snaps_;
    std::map<std::pair<int, int>, IntervalVar> vars_;
    int checks_ = 0;
};

struct YDegree {
    ExpVec f;                                // deg y_k from the closed formula
    std::vector<std::int64_t> beta;          // its beta coordinates
    bool matches_column = false;             // equals the column of B at k
};
YDegree y_degree(const DbsData& data, int k);

struct TSystemReport {
    int j = 0, s = 0;
    bool holds = false;
    bool classical_holds = false;
    Rat alpha, alpha_prime;
    std::vector<std::pair<int, int>> product;  // intervals [i, i[d]] in the second term
    std::string identity;                      // human readable
};
// Valid when 1 <= j <= j[s] < l and j[s+1] is finite.
bool t_system_valid(const WordIndices& wi, int j, int s);
TSystemReport t_system_check(const DbsData& data, int j, int s);
std::vector<TSystemReport> all_t_systems(const DbsData& data);

// M(w) = [W_1^{w_1} * ... * W_l^{w_l}]
PointedElement standard_monomial(const DbsData& data, const std::vector<std::int64_t>& w);

struct StraighteningReport {
    int j = 0, k = 0;
    Rat exponent;  // lambda(beta_k, beta_j)
    std::map<std::vector<std::int64_t>, QCoeff> expansion;
    bool support_ok = false;  // every w lives on [j+1, k-1]
};
StraighteningReport ls_straightening(const DbsData& data, int j, int k);

// m in the span of the beta_i with nonnegative coefficients
bool in_beta_cone(const DbsData& data, const ExpVec& m);
struct ConeCheck {
    bool beta_cone = false;
    bool optimized_route = false;
    bool agree() const { return beta_cone == optimized_route; }
};
ConeCheck dominant_cone_check(const DbsData& data, const ExpVec& m);
std::map<VertexId, std::vector<VertexId>> optimized_words(const SigmaPlan& plan);

// x-exponents of rsd(eta_[j,k]) pushed into rsd(eta) (classical); used for subword functoriality.
QLaurent embed_subword_element(const DbsData& data, int j, int k, const QLaurent& z);

}  // namespace qcluster
