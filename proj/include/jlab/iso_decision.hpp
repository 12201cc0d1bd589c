#pragma once

#include <utility>
#include <vector>

#include "jlab/graph_alg.hpp"
#include "jlab/ring.hpp"

namespace jlab {

// Structural criterion for Jacobson-graph isomorphism: equal Jacobson
// radical sizes and equal residue-field multisets.
bool decide_iso(const RingDesc& r1, const RingDesc& r2);

// Explicit vertex bijection from the graph of r1 to the graph of r2 when
// decide_iso holds. A residue-ring isomorphism (atom matching plus per-field
// embeddings) is lifted across J-cosets by pairing coset elements in element
// order; the result is verified edge-preserving before it is returned.
Perm build_witness(const RingDesc& r1, const RingDesc& r2);

// All unordered vertex pairs x != y with equal open neighborhoods.
// Requires a semisimple ring.
std::vector<std::pair<std::size_t, std::size_t>> check_open_nbhd_rigidity(const RingDesc& r);

// All unordered vertex pairs x != y with equal closed neighborhoods.
// Requires a semisimple ring that is not a field.
std::vector<std::pair<std::size_t, std::size_t>> check_closed_nbhd_rigidity(const RingDesc& r);

}  // namespace jlab
