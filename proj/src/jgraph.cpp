#include "jlab/jgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

#include "jlab/numthy.hpp"

namespace jlab {

std::size_t JGraph::edge_count() const {
    std::size_t s = 0;
    for (const auto& row : adj) s += row.count();
    return s / 2;
}

namespace {

std::vector<std::uint64_t> collect_vertices(const RingDesc& r, std::size_t vertex_cap) {
    const std::uint64_t n = r.size();
    const std::uint64_t nv = n - r.jacobson_size();
    if (nv > vertex_cap)
        throw std::length_error("build_graph: vertex cap exceeded (" + std::to_string(nv) +
                                " > " + std::to_string(vertex_cap) + ")");
    std::vector<std::uint64_t> verts;
    verts.reserve(nv);
    for (std::uint64_t i = 0; i < n; ++i)
        if (!r.in_jacobson(r.element_at(i))) verts.push_back(i);
    return verts;
}

}  // namespace

JGraph build_graph(const RingDesc& r, std::size_t vertex_cap) {
    JGraph g;
    g.ring = r;
    g.vertex_elem = collect_vertices(r, vertex_cap);
    const std::size_t nv = g.vertex_elem.size();

    // Per-atom tables of the pair predicate "1 - a*b is not a unit". A ring
    // that passes the default vertex cap has |R| <= 2*cap, so tables stay
    // small; enormous atoms (reachable only via a raised cap) fall back to
    // direct evaluation.
    constexpr std::uint64_t kTableLimit = 1 << 16;
    const std::size_t natoms = r.atoms.size();
    std::vector<Bitset> nonunit_pair(natoms);
    std::vector<std::uint64_t> atom_size(natoms);
    for (std::size_t t = 0; t < natoms; ++t) {
        const auto& a = r.atoms[t];
        const std::uint64_t q = a.size();
        atom_size[t] = q;
        if (q > kTableLimit) continue;
        Bitset tab(q * q);
        for (std::uint64_t x = 0; x < q; ++x)
            for (std::uint64_t y = x; y < q; ++y) {
                std::uint64_t v = a.add(a.one(), a.neg(a.mul(x, y)));
                if (!a.is_unit(v)) {
                    tab.set(x * q + y);
                    tab.set(y * q + x);
                }
            }
        nonunit_pair[t] = std::move(tab);
    }

    std::vector<std::vector<std::uint64_t>> comp(nv);
    for (std::size_t v = 0; v < nv; ++v) comp[v] = r.element_at(g.vertex_elem[v]).comp;

    g.adj.assign(nv, Bitset(nv));
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            bool edge = false;
            for (std::size_t t = 0; t < natoms && !edge; ++t) {
                const auto& a = r.atoms[t];
                if (atom_size[t] <= kTableLimit) {
                    edge = nonunit_pair[t].test(comp[i][t] * atom_size[t] + comp[j][t]);
                } else {
                    edge = !a.is_unit(a.add(a.one(), a.neg(a.mul(comp[i][t], comp[j][t]))));
                }
            }
            if (edge) {
                g.adj[i].set(j);
                g.adj[j].set(i);
            }
        }
    return g;
}

JGraph build_graph_cosets(const RingDesc& r, std::size_t vertex_cap) {
    JGraph g;
    g.ring = r;
    g.vertex_elem = collect_vertices(r, vertex_cap);
    const std::size_t nv = g.vertex_elem.size();

    const RingDesc rq = r.residue_ring();
    JGraph gq = build_graph(rq, vertex_cap);

    std::unordered_map<std::uint64_t, std::size_t> rq_vertex;
    for (std::size_t v = 0; v < gq.num_vertices(); ++v) rq_vertex[gq.vertex_elem[v]] = v;

    // Residue-graph vertex of each vertex, plus the within-coset rule:
    // a coset is a clique iff 1 - v^2 is not a unit on its residue class.
    std::vector<std::size_t> rvtx(nv);
    for (std::size_t v = 0; v < nv; ++v)
        rvtx[v] = rq_vertex.at(r.residue_index(r.element_at(g.vertex_elem[v])));

    std::vector<char> self_paired(gq.num_vertices());
    for (std::size_t v = 0; v < gq.num_vertices(); ++v) {
        RingElement x = gq.vertex(v);
        self_paired[v] = !rq.is_unit(rq.sub(rq.one(), rq.mul(x, x)));
    }

    g.adj.assign(nv, Bitset(nv));
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            bool edge = rvtx[i] == rvtx[j] ? static_cast<bool>(self_paired[rvtx[i]])
                                           : gq.adjacent(rvtx[i], rvtx[j]);
            if (edge) {
                g.adj[i].set(j);
                g.adj[j].set(i);
            }
        }
    return g;
}

std::pair<std::uint64_t, std::uint64_t> field_graph_profile(std::uint64_t q) {
    if (!numthy::is_prime_power(q))
        throw std::invalid_argument("field_graph_profile: q must be a prime power");
    const std::uint64_t eps = q % 2;
    return {eps + 1, (q - 2 - eps) / 2};
}

std::size_t degree(const JGraph& g, std::size_t v) {
    if (v >= g.num_vertices()) throw std::out_of_range("degree: vertex index out of range");
    return g.adj[v].count();
}

std::vector<std::size_t> degree_sequence(const JGraph& g) {
    std::vector<std::size_t> d(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) d[v] = g.adj[v].count();
    std::sort(d.begin(), d.end());
    return d;
}

std::size_t min_degree(const JGraph& g) {
    if (g.num_vertices() == 0) throw std::invalid_argument("min_degree: empty graph");
    std::size_t mn = g.adj[0].count();
    for (std::size_t v = 1; v < g.num_vertices(); ++v) mn = std::min(mn, g.adj[v].count());
    return mn;
}

std::uint64_t predicted_unit_degree(const RingDesc& r, const RingElement& x) {
    if (!r.is_unit(x)) throw std::invalid_argument("predicted_unit_degree: x is not a unit");
    const std::uint64_t nonunits = r.size() - r.unit_count();
    const bool eps = !r.is_unit(r.sub(r.one(), r.mul(x, x)));
    return nonunits - (eps ? 1 : 0);
}

std::optional<std::uint64_t> predicted_min_degree(const RingDesc& r) {
    const std::uint64_t mx = r.max_residue_order();
    if (mx <= 3) return std::nullopt;
    return r.size() / mx - 1;
}

namespace {

std::string graph6_encode(const JGraph& g) {
    const std::uint64_t n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += '~';
        out += static_cast<char>(63 + ((n >> 12) & 63));
        out += static_cast<char>(63 + ((n >> 6) & 63));
        out += static_cast<char>(63 + (n & 63));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63));
    }
    unsigned buf = 0;
    int nbits = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i) {
            buf = (buf << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++nbits == 6) {
                out += static_cast<char>(63 + buf);
                buf = 0;
                nbits = 0;
            }
        }
    if (nbits) out += static_cast<char>(63 + (buf << (6 - nbits)));
    return out;
}

std::string dot_encode(const JGraph& g) {
    std::string out = "graph jacobson {\n";
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + g.label(v) + "\"];\n";
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        g.adj[i].for_each_set([&](std::size_t j) {
            if (i < j) out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
        });
    out += "}\n";
    return out;
}

std::string json_encode(const JGraph& g) {
    nlohmann::json j;
    j["spec"] = g.ring.render();
    j["n"] = g.num_vertices();
    auto verts = nlohmann::json::array();
    for (std::size_t v = 0; v < g.num_vertices(); ++v) verts.push_back(g.label(v));
    j["vertices"] = std::move(verts);
    auto edges = nlohmann::json::array();
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        g.adj[i].for_each_set([&](std::size_t k) {
            if (i < k) edges.push_back(nlohmann::json::array({i, k}));
        });
    j["edges"] = std::move(edges);
    return j.dump();
}

}  // namespace

std::string export_graph(const JGraph& g, ExportFormat format) {
    switch (format) {
        case ExportFormat::Graph6:
            return graph6_encode(g);
        case ExportFormat::Dot:
            return dot_encode(g);
        case ExportFormat::Json:
            return json_encode(g);
    }
    throw std::invalid_argument("export_graph: unknown format");
}

}  // namespace jlab
