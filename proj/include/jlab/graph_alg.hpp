#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jlab/bigint.hpp"
#include "jlab/jgraph.hpp"

namespace jlab {

// Vertex permutation as an image table: perm[v] is where v goes.
using Perm = std::vector<int>;

Perm perm_identity(std::size_t n);
Perm perm_compose(const Perm& a, const Perm& b);  // apply b first, then a
Perm perm_inverse(const Perm& a);
bool perm_is_identity(const Perm& a);

// Ordered color classes; disjoint and covering all vertices.
struct VertexPartition {
    std::vector<std::vector<int>> classes;

    static VertexPartition unit(std::size_t n);
    std::vector<int> colors(std::size_t n) const;
    static VertexPartition from_colors(const std::vector<int>& colors);
};

// Classic color refinement: split classes by the multiset of neighbor
// colors until stable. Canonical output for a given input order; never
// merges classes; a fixpoint refines to itself.
VertexPartition refine(const JGraph& g, const VertexPartition& p);

inline constexpr std::size_t kDefaultIsoCap = 256;
inline constexpr std::size_t kDefaultAutCap = 64;

// Edge-preserving bijection from g1 to g2, or nullopt if none exists.
// Backtracking with joint color refinement; the witness is re-verified
// edge by edge before it is returned. Throws when a graph exceeds cap.
std::optional<Perm> are_isomorphic(const JGraph& g1, const JGraph& g2,
                                   std::size_t cap = kDefaultIsoCap);

// True iff map is a bijection that preserves and reflects edges.
bool is_isomorphism(const JGraph& g1, const JGraph& g2, const Perm& map);

// Exact |Aut(g)| by orbit-stabilizer recursion: the orbit of each base
// vertex is measured with one automorphism-existence search per candidate.
BigInt automorphism_count(const JGraph& g, std::size_t cap = kDefaultAutCap);

// Coset representatives collected along the same stabilizer chain; they
// generate the full automorphism group.
std::vector<Perm> automorphism_generators(const JGraph& g, std::size_t cap = kDefaultAutCap);

// Permutation group order via a stabilizer chain (Schreier-Sims).
class PermGroup {
public:
    explicit PermGroup(std::size_t n);
    void add_generator(Perm g);
    BigInt order();

private:
    struct Level {
        int base;
        std::vector<Perm> gens;  // strong generators introduced at this level
        std::vector<int> orbit;
        std::vector<Perm> via;  // via[point] maps base to point; empty when absent
    };

    void rebuild_orbit(std::size_t l);
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
    void place(Perm g, std::size_t level);
    void close();

    std::size_t n_;
    std::vector<Level> levels_;
    bool dirty_ = false;
};

// Group order by breadth-first closure over products; throws if the group
// exceeds cap elements. Cross-check for PermGroup at small sizes.
BigInt closure_order_bfs(std::size_t n, const std::vector<Perm>& gens, std::size_t cap = 200000);

// Graph with vertex v relabelled to relabel[v].
JGraph apply_permutation(const JGraph& g, const Perm& relabel);

}  // namespace jlab
