#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcluster/pattern.hpp"

namespace qcluster {

struct FreezeContext {
    Seed seed;
    std::vector<VertexId> F;
    Seed frozen_seed;
};
// Freezing a set means freezing its unfrozen members.
std::vector<VertexId> unfrozen_part(const Seed& s, const std::vector<VertexId>& F);
FreezeContext freeze_context(const Seed& s, const std::vector<VertexId>& F);

// Keeps the terms x^m * y^n of z with n vanishing on F; throws InputError if a term is not below m.
QLaurent frz(const QLaurent& z, const std::vector<VertexId>& F, const ExpVec& m, const Seed& s);
// Same with m the unique maximal degree of z.
QLaurent frz(const QLaurent& z, const std::vector<VertexId>& F, const Seed& s);

// mu_k^*: z written in the frame of t, rewritten in the frame of mu_k t. Throws ConsistencyError if not Laurent there.
QLaurent change_frame(const QLaurent& z, const Seed& t, VertexId k);

struct CommutationReport {
    bool applicable = false;
    bool holds = false;
    std::string reason;
    QLaurent lhs, rhs;  // in the frame of mu_k t (frozen at F)
};
// Compares frz^{t'}(mu_k^* z) with mu_k^* frz^{t}(z) for t' = mu_k t.
CommutationReport frz_commutes_with_mutation(const QLaurent& z, const std::vector<VertexId>& F, VertexId k,
                                             const Seed& t);

// Basis element pointed at the given degree; nullopt if the degree is outside the basis.
using BasisProvider = std::function<std::optional<QLaurent>(const ExpVec&)>;

struct StabilizationResult {
    QLaurent value;
    int stable_from = 0;  // smallest d with value_d == value_{d+1}
};
// [x_k^{-d} * b(deg z + d f_k)] until two consecutive d agree; throws BudgetError past d_max.
StabilizationResult frz_via_stabilization(const QLaurent& z, VertexId k, const Seed& s, const BasisProvider& basis,
                                          int d_max = 12);

// Order of vanishing along x_j = 0.
std::int64_t vanishing_order(const QLaurent& z, std::size_t j);
std::int64_t vanishing_order(const QLaurent& numerator, const QLaurent& denominator, std::size_t j);

bool is_optimized(const Seed& s, VertexId j);
// Candidate words first, then breadth-first over mutation words (bounded depth and seed count).
std::optional<std::vector<VertexId>> optimized_seed_search(const Seed& s, VertexId j,
                                                           const std::vector<std::vector<VertexId>>& candidates = {},
                                                           int max_depth = 8, std::size_t max_seeds = 10'000);

// m is dominant iff the j-th coordinate of m transported to a j-optimized seed is >= 0 for each frozen j.
bool dominant_membership(const ExpVec& m, const Seed& s, const std::map<VertexId, std::vector<VertexId>>& optimized);

}  // namespace qcluster
