#include "jlab/iso_decision.hpp"

#include <map>
#include <stdexcept>

#include "jlab/jgraph.hpp"

namespace jlab {

bool decide_iso(const RingDesc& r1, const RingDesc& r2) {
    return r1.jacobson_size() == r2.jacobson_size() &&
           r1.residue_multiset() == r2.residue_multiset();
}

Perm build_witness(const RingDesc& r1, const RingDesc& r2) {
    if (!decide_iso(r1, r2))
        throw std::invalid_argument("build_witness: rings fail the isomorphism criterion");

    const JGraph g1 = build_graph(r1);
    const JGraph g2 = build_graph(r2);

    const RingDesc q1 = r1.residue_ring();
    const RingDesc q2 = r2.residue_ring();

    // Match residue field atoms of equal order, first unused wins.
    const std::size_t na = q1.atoms.size();
    std::vector<std::size_t> tau(na);
    std::vector<bool> used(na, false);
    for (std::size_t i = 0; i < na; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < na && !found; ++j) {
            if (used[j]) continue;
            if (q1.atoms[i].residue_field_order() == q2.atoms[j].residue_field_order()) {
                tau[i] = j;
                used[j] = true;
                found = true;
            }
        }
        if (!found) throw std::logic_error("build_witness: residue multisets out of sync");
    }

    std::vector<std::vector<std::uint64_t>> field_map(na);
    for (std::size_t i = 0; i < na; ++i)
        field_map[i] = field_embedding_iso(q1.atoms[i], q2.atoms[tau[i]]);

    // Residue element index in q1 -> residue element index in q2.
    auto residue_image = [&](std::uint64_t ridx) {
        RingElement x = q1.element_at(ridx);
        RingElement y = q2.zero();
        for (std::size_t i = 0; i < na; ++i) y.comp[tau[i]] = field_map[i][x.comp[i]];
        return q2.index_of(y);
    };

    // Vertices grouped by residue class, ascending element order within each.
    auto cosets_of = [](const JGraph& g) {
        std::map<std::uint64_t, std::vector<std::size_t>> m;
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            m[g.ring.residue_index(g.vertex(v))].push_back(v);
        return m;
    };
    auto cosets1 = cosets_of(g1);
    auto cosets2 = cosets_of(g2);

    Perm witness(g1.num_vertices(), -1);
    for (const auto& [ridx, members] : cosets1) {
        const auto& targets = cosets2.at(residue_image(ridx));
        if (targets.size() != members.size())
            throw std::logic_error("build_witness: coset sizes differ");
        for (std::size_t k = 0; k < members.size(); ++k)
            witness[members[k]] = static_cast<int>(targets[k]);
    }

    if (!is_isomorphism(g1, g2, witness))
        throw std::logic_error("build_witness: constructed map is not edge-preserving");
    return witness;
}

std::vector<std::pair<std::size_t, std::size_t>> check_open_nbhd_rigidity(const RingDesc& r) {
    if (!r.is_semisimple())
        throw std::invalid_argument("check_open_nbhd_rigidity: ring must be semisimple");
    const JGraph g = build_graph(r);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        for (std::size_t j = i + 1; j < g.num_vertices(); ++j)
            if (g.adj[i] == g.adj[j]) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> check_closed_nbhd_rigidity(const RingDesc& r) {
    if (!r.is_semisimple())
        throw std::invalid_argument("check_closed_nbhd_rigidity: ring must be semisimple");
    if (r.atoms.size() == 1)
        throw std::invalid_argument("check_closed_nbhd_rigidity: ring must not be a field");
    const JGraph g = build_graph(r);
    std::vector<Bitset> closed(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        closed[v] = g.adj[v];
        closed[v].set(v);
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        for (std::size_t j = i + 1; j < g.num_vertices(); ++j)
            if (closed[i] == closed[j]) out.emplace_back(i, j);
    return out;
}

}  // namespace jlab
