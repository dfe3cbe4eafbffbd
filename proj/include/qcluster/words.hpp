#pragma once

#include <climits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qcluster/seed.hpp"

namespace qcluster {

// Generalized Cartan matrix over the letters J (increasing), with symmetrizers D_b C_ab = D_a C_ba.
struct CartanData {
    std::vector<int> J;
    IntMatrix C;
    std::vector<std::int64_t> D;

    std::size_t size() const { return J.size(); }
    std::size_t index(int a) const;  // throws InputError
    bool has(int a) const;
    std::int64_t c(int a, int b) const { return C(index(a), index(b)); }
    std::int64_t sym(int a) const { return D[index(a)]; }
};

// Validates C and computes the minimal symmetrizers; J defaults to 1..n.
CartanData make_cartan(const IntMatrix& C, std::vector<int> J = {});
// A<n>, B2, C2, G2, Kronecker / Kronecker<m>, or inline JSON ([[..]] or {"C":..,"D":..,"J":..}).
CartanData parse_cartan(const std::string& text);
std::string cartan_json(const CartanData& c);

using Word = std::vector<int>;

Word parse_word(const std::string& text);  // "1,2,-1"
std::string word_string(const Word& w);
void validate_word(const Word& w, const CartanData& c);  // throws InputError

inline constexpr int kPlusInf = INT_MAX / 2;
inline constexpr int kMinusInf = -kPlusInf;

// Derived indices; everything is 1-based by position, entry 0 unused.
struct WordIndices {
    Word word;
    std::size_t length = 0;
    std::vector<int> letter, eps, succ, pred, o_minus, o_plus, kmin, kmax;
    std::map<int, int> count;  // O(a) for every a in J

    int occurrences(int j, int k, int a) const;  // O([j,k]; a)
    bool unfrozen(int k) const { return succ[k] != kPlusInf; }
    // ddI ids: (a,-1) is -a, (a,d) with d >= 0 is the position of the (d+1)-th a.
    VertexId id_of(int a, int d) const;
    std::pair<int, int> label_of(VertexId v) const;
};
WordIndices word_indices(const Word& w, const CartanData& c);

// ddI in increasing id order: -max J .. -min J, then 1..l.
std::vector<VertexId> dd_vertices(const WordIndices& wi, const CartanData& c);
std::string vertex_label(const WordIndices& wi, VertexId v);

// dsd via the closed case formula for b_jk.
Seed seed_from_formula(const Word& w, const CartanData& c);

struct TrapezoidSeed {
    std::vector<VertexId> ddI;
    RatMatrix ddB;  // ddI x ddI, frozen-frozen entries may be half-integers
    Seed dsd;
    Seed rsd;
};
// Sum of the per-triangle contributions, rescaled across layers by -C_ab.
TrapezoidSeed seed_from_trapezoid(const Word& w, const CartanData& c, bool quantum = false);
Seed dsd(const Word& w, const CartanData& c, bool quantum = false);
Seed rsd(const Word& w, const CartanData& c, bool quantum = false);

// Maps ddI ids of `from` to those of `to` through the stable name (a, d); needs equal letter counts.
std::map<VertexId, VertexId> occurrence_map(const Word& from, const Word& to, const CartanData& c);

// sd' = relabel(mutate_word(sd, mutations), sigma), compared on dsd; ids in sigma/mutations are those of the old word.
struct WordMove {
    Word word;
    std::vector<VertexId> mutations;
    std::map<VertexId, VertexId> sigma;  // old id -> new id
    int contexts_checked = 0;
};
Seed apply_move(const Seed& s, const WordMove& m);

// (.., eps a, -eps b, ..) at positions k, k+1 becomes (.., -eps b, eps a, ..).
WordMove flip(const Word& w, int k, const CartanData& c);
// Replaces w[j..j+|eta'|-1] = eps*eta by eps*eta' where eta, eta' are the two sides of a braid relation.
WordMove braid_move(const Word& w, int j, const Word& eta_prime, const CartanData& c);
int braid_order(const CartanData& c, int a, int b);  // m_ab, or 0 if infinite

Word left_reflection(const Word& w);
Word right_reflection(const Word& w);

// iota(s) = s + j - 1; on dsd, (a,-1) goes to (a, O([1,j-1];a) - 1).
ClusterEmbedding subword_embedding(const Word& w, int j, int k, const CartanData& c, bool reduced = true);

struct LetterExtension {
    CartanData cartan;
    Word word;
    int new_letter = 0;
};
// Inserts a new letter c between consecutive letters, with C_ac C_ca >= 4 for all a.
LetterExtension letter_extension(const Word& w, const CartanData& c);
bool is_letter_extension(const Word& extended, const Word& w, const CartanData& small);

// Reduced in the Weyl group of c; only the absolute values of the letters are used.
bool is_reduced(const Word& w, const CartanData& c);

CartanData random_cartan(std::mt19937& rng, std::size_t rank, int max_product = 3);
Word random_word(std::mt19937& rng, const CartanData& c, std::size_t length, bool signed_letters = true);

}  // namespace qcluster
