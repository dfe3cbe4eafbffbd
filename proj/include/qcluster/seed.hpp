#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcluster/matrix.hpp"

namespace qcluster {

using VertexId = int;

// Vertices ids[0..n); B is n x |uf| with column c belonging to vertex position uf[c].
struct Seed {
    std::vector<VertexId> ids;
    std::vector<std::size_t> uf;  // increasing positions of the unfrozen vertices
    std::vector<std::int64_t> d;
    IntMatrix B;
    std::optional<IntMatrix> Lambda;
    std::map<VertexId, std::string> labels;

    std::size_t size() const { return ids.size(); }
    std::size_t rank() const { return uf.size(); }
    std::size_t pos(VertexId id) const;  // throws InputError
    std::optional<std::size_t> column(std::size_t p) const;
    std::size_t column_of(VertexId id) const;  // throws InputError for frozen ids
    bool is_unfrozen(std::size_t p) const { return column(p).has_value(); }
    std::vector<std::size_t> frozen() const;
    // b_{ik} with i, k positions, k unfrozen
    std::int64_t b(std::size_t i, std::size_t k) const { return B(i, *column(k)); }
    std::vector<std::int64_t> dvee() const;
    std::string name(std::size_t p) const;
    bool full_rank() const { return qcluster::rank(B) == rank(); }

    bool operator==(const Seed& o) const {
        return ids == o.ids && uf == o.uf && d == o.d && B == o.B && Lambda == o.Lambda;
    }
    bool operator!=(const Seed& o) const { return !(*this == o); }
};

// Shape checks plus skew-symmetrizability d^v_i b_ik = -d^v_k b_ki; throws InputError.
void validate(const Seed& s);
Seed make_seed(std::vector<VertexId> ids, const std::vector<VertexId>& unfrozen, std::vector<std::int64_t> d,
               IntMatrix B, std::optional<IntMatrix> Lambda = std::nullopt);

struct Compatibility {
    bool ok = false;
    std::vector<std::int64_t> delta;  // per unfrozen column
    std::string failure;
};
// Lambda B = -diag(delta) on the unfrozen rows, 0 on frozen rows.
Compatibility check_compatible(const Seed& s);
// Solves for a compatible Lambda on a full-rank seed, delta proportional to d^v.
Seed quantize(const Seed& s);

Seed mutate_seed(const Seed& s, VertexId k, int eps = 1);
Seed mutate_word(Seed s, const std::vector<VertexId>& word);
Seed opposite(const Seed& s);
// sigma maps old ids to new ids; b'_{sigma i, sigma j} = b_ij.
Seed permute(const Seed& s, const std::map<VertexId, VertexId>& sigma);
// Renames vertices through a bijection old id -> new id (ids outside sigma keep their name).
Seed relabel(const Seed& s, const std::map<VertexId, VertexId>& sigma);
Seed freeze_seed(const Seed& s, const std::vector<VertexId>& F);
Seed remove_frozen(const Seed& s, const std::vector<VertexId>& S);
bool is_non_essential(const Seed& s, VertexId j);
// Same exchange data after reordering; compares by vertex id, ignoring the stored order.
bool same_seed(const Seed& a, const Seed& b);

struct ClusterEmbedding {
    Seed source, target;
    std::map<VertexId, VertexId> iota;
};
enum class EmbeddingKind { Good, ClusterEmbedding, Neither };
EmbeddingKind subseed_check(const ClusterEmbedding& e);
std::string to_string(EmbeddingKind k);

struct PrincipalSeed {
    Seed seed;      // vertices: the unfrozen ids, then copies
    IntMatrix var;  // |I| x |I^prin|, column j = var(f_j)
    std::map<VertexId, VertexId> copy_of;  // unfrozen k -> k'
};
PrincipalSeed principal_seed(const Seed& s);

}  // namespace qcluster
