#pragma once

#include <optional>
#include <vector>

#include "qcluster/qtorus.hpp"
#include "qcluster/seed.hpp"

namespace qcluster {

// A seed reached from `initial` by `history`; vars are expansions in the initial quantum torus.
struct TrackedSeed {
    Seed initial;
    Seed seed;
    std::vector<VertexId> history;
    std::vector<QLaurent> vars;  // by vertex position
    QuantumTorus torus;

    const QuantumTorus& ring() const { return torus; }
    const QLaurent& var(VertexId id) const { return vars[seed.pos(id)]; }
};

TrackedSeed track(const Seed& s, std::size_t max_terms = 2'000'000);
TrackedSeed mutate_tracked(const TrackedSeed& ts, VertexId k);
TrackedSeed mutate_tracked(TrackedSeed ts, const std::vector<VertexId>& word);

// x^h(t) for the current seed t, expanded in the initial frame (Weyl-ordered monomial).
QLaurent expand_monomial(const TrackedSeed& ts, const ExpVec& h);
// Sum c_g x^g(t) written in t's own variables, expanded in the initial frame.
QLaurent expand_in_initial(const TrackedSeed& ts, const QLaurent& z);
// The localized cluster monomial x^m(t); unfrozen exponents must be >= 0.
PointedElement localized_cluster_monomial(const TrackedSeed& ts, const ExpVec& m);

// phi_{mu_k t, t}: coordinates in t to coordinates in mu_k t.
ExpVec tropical_step(const ExpVec& m, const Seed& t, VertexId k);
// Along the word starting at t; returns coordinates in the final seed.
ExpVec tropical_transport(const ExpVec& m, const Seed& t, const std::vector<VertexId>& word);
// Coordinates in mu_word(t) pulled back to t.
ExpVec tropical_pullback(const ExpVec& m, const Seed& t, const std::vector<VertexId>& word);

struct TropicalPoint {
    std::vector<VertexId> word;  // the seed mu_word(t0) the coordinates refer to
    ExpVec m;
};
bool same_tropical_point(const Seed& t0, const TropicalPoint& a, const TropicalPoint& b);

// g-vector in t of the cluster variable x_i(mu_word t).
ExpVec g_vector(const Seed& t, const std::vector<VertexId>& word, VertexId i);
bool is_green_to_red(const Seed& t, const std::vector<VertexId>& word, const std::map<VertexId, VertexId>& sigma);

struct LaurentReport {
    VertexId vertex;
    bool is_laurent = true;
    bool coefficients_nonnegative = true;
};
std::vector<LaurentReport> laurent_report(const TrackedSeed& ts);

}  // namespace qcluster
