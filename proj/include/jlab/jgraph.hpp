#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jlab/bitset.hpp"
#include "jlab/ring.hpp"

namespace jlab {

// Jacobson graph of a finite commutative ring: vertices are the elements
// outside J(R) in element order, and x ~ y iff 1 - xy is not a unit.
struct JGraph {
    RingDesc ring;
    std::vector<std::uint64_t> vertex_elem;  // ascending element indices
    std::vector<Bitset> adj;                 // symmetric, zero diagonal

    std::size_t num_vertices() const { return vertex_elem.size(); }
    bool adjacent(std::size_t i, std::size_t j) const { return adj[i].test(j); }
    std::size_t edge_count() const;
    RingElement vertex(std::size_t v) const { return ring.element_at(vertex_elem[v]); }
    std::string label(std::size_t v) const { return ring.render_element(vertex(v)); }
};

inline constexpr std::size_t kDefaultVertexCap = 4096;

// All-pairs unit tests over the vertex set.
JGraph build_graph(const RingDesc& r, std::size_t vertex_cap = kDefaultVertexCap);

// Coset-collapse construction: builds the residue-field graph and expands
// each vertex to its J(R)-coset. Bit-identical to build_graph.
JGraph build_graph_cosets(const RingDesc& r, std::size_t vertex_cap = kDefaultVertexCap);

// (isolated vertex count, edge count) of the Jacobson graph of GF(q).
std::pair<std::uint64_t, std::uint64_t> field_graph_profile(std::uint64_t q);

std::size_t degree(const JGraph& g, std::size_t v);
std::vector<std::size_t> degree_sequence(const JGraph& g);  // sorted ascending
std::size_t min_degree(const JGraph& g);

// Degree of a unit vertex: (|R| - |U(R)|) - eps, eps = [1 - x^2 not a unit].
std::uint64_t predicted_unit_degree(const RingDesc& r, const RingElement& x);

// |R| / max|F_i| - 1 when the largest residue field has order > 3.
std::optional<std::uint64_t> predicted_min_degree(const RingDesc& r);

enum class ExportFormat { Graph6, Dot, Json };

std::string export_graph(const JGraph& g, ExportFormat format);

}  // namespace jlab
