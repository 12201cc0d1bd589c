#include "jlab/graph_alg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace jlab {

Perm perm_identity(std::size_t n) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

bool perm_is_identity(const Perm& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != static_cast<int>(i)) return false;
    return true;
}

VertexPartition VertexPartition::unit(std::size_t n) {
    VertexPartition p;
    p.classes.emplace_back();
    for (std::size_t i = 0; i < n; ++i) p.classes[0].push_back(static_cast<int>(i));
    return p;
}

std::vector<int> VertexPartition::colors(std::size_t n) const {
    std::vector<int> c(n, -1);
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (int v : classes[k]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || c[v] != -1)
                throw std::invalid_argument("VertexPartition: classes must be a disjoint cover");
            c[v] = static_cast<int>(k);
        }
    for (int x : c)
        if (x == -1) throw std::invalid_argument("VertexPartition: classes must cover all vertices");
    return c;
}

VertexPartition VertexPartition::from_colors(const std::vector<int>& colors) {
    int mx = -1;
    for (int c : colors) mx = std::max(mx, c);
    VertexPartition p;
    p.classes.assign(mx + 1, {});
    for (std::size_t v = 0; v < colors.size(); ++v)
        p.classes[colors[v]].push_back(static_cast<int>(v));
    std::erase_if(p.classes, [](const auto& cls) { return cls.empty(); });
    return p;
}

namespace {

using Sig = std::vector<int>;

Sig signature_of(const JGraph& g, const std::vector<int>& c, std::size_t v) {
    Sig s{c[v]};
    std::vector<int> nb;
    g.adj[v].for_each_set([&](std::size_t u) { nb.push_back(c[u]); });
    std::sort(nb.begin(), nb.end());
    s.insert(s.end(), nb.begin(), nb.end());
    return s;
}

int count_colors(const std::vector<int>& c) {
    int mx = -1;
    for (int x : c) mx = std::max(mx, x);
    return mx + 1;
}

// One-graph refinement to a stable, canonically labelled coloring.
void refine_colors(const JGraph& g, std::vector<int>& c) {
    const std::size_t n = g.num_vertices();
    int prev = -1;
    for (;;) {
        std::vector<Sig> sigs(n);
        std::map<Sig, int> ids;
        for (std::size_t v = 0; v < n; ++v) {
            sigs[v] = signature_of(g, c, v);
            ids.emplace(sigs[v], 0);
        }
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        for (std::size_t v = 0; v < n; ++v) c[v] = ids[sigs[v]];
        if (next == prev) return;
        prev = next;
    }
}

// Parallel refinement of two colorings with a shared signature dictionary.
// Returns false when the signature histograms stop matching (no bijection
// can respect the colors).
bool joint_refine(const JGraph& g1, const JGraph& g2, std::vector<int>& c1, std::vector<int>& c2) {
    const std::size_t n = g1.num_vertices();
    int prev = -1;
    for (;;) {
        std::vector<Sig> s1(n), s2(n);
        std::map<Sig, std::pair<int, int>> counts;
        for (std::size_t v = 0; v < n; ++v) {
            s1[v] = signature_of(g1, c1, v);
            counts[s1[v]].first++;
            s2[v] = signature_of(g2, c2, v);
            counts[s2[v]].second++;
        }
        std::map<Sig, int> ids;
        int next = 0;
        for (auto& [sig, cnt] : counts) {
            if (cnt.first != cnt.second) return false;
            ids[sig] = next++;
        }
        for (std::size_t v = 0; v < n; ++v) {
            c1[v] = ids[s1[v]];
            c2[v] = ids[s2[v]];
        }
        if (next == prev) return true;
        prev = next;
    }
}

bool verify_isomorphism(const JGraph& g1, const JGraph& g2, const Perm& map) {
    const std::size_t n = g1.num_vertices();
    if (map.size() != n || g2.num_vertices() != n) return false;
    std::vector<char> hit(n, 0);
    for (int x : map) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || hit[x]) return false;
        hit[x] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g1.adjacent(i, j) != g2.adjacent(map[i], map[j])) return false;
    return true;
}

// Individualization-refinement backtracking over aligned colorings.
struct IsoSearch {
    const JGraph& g1;
    const JGraph& g2;

    // Smallest non-singleton class, lowest color id on ties; -1 if discrete.
    static int pick_target_color(const std::vector<int>& c) {
        int ncol = count_colors(c);
        std::vector<int> size(ncol, 0);
        for (int x : c) size[x]++;
        int best = -1;
        for (int col = 0; col < ncol; ++col)
            if (size[col] > 1 && (best == -1 || size[col] < size[best])) best = col;
        return best;
    }

    std::optional<Perm> run(std::vector<int> c1, std::vector<int> c2) const {
        if (!joint_refine(g1, g2, c1, c2)) return std::nullopt;
        return search(std::move(c1), std::move(c2));
    }

    std::optional<Perm> search(std::vector<int> c1, std::vector<int> c2) const {
        const std::size_t n = g1.num_vertices();
        int target = pick_target_color(c1);
        if (target == -1) {
            // discrete: colors force the bijection
            std::vector<int> where(count_colors(c2), -1);
            for (std::size_t u = 0; u < n; ++u) where[c2[u]] = static_cast<int>(u);
            Perm map(n);
            for (std::size_t v = 0; v < n; ++v) map[v] = where[c1[v]];
            if (verify_isomorphism(g1, g2, map)) return map;
            return std::nullopt;
        }
        int v = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (c1[i] == target) {
                v = static_cast<int>(i);
                break;
            }
        const int fresh = count_colors(c1);
        for (std::size_t u = 0; u < n; ++u) {
            if (c2[u] != target) continue;
            std::vector<int> n1 = c1, n2 = c2;
            n1[v] = fresh;
            n2[u] = fresh;
            if (!joint_refine(g1, g2, n1, n2)) continue;
            if (auto r = search(std::move(n1), std::move(n2))) return r;
        }
        return std::nullopt;
    }
};

}  // namespace

VertexPartition refine(const JGraph& g, const VertexPartition& p) {
    std::vector<int> c = p.colors(g.num_vertices());
    refine_colors(g, c);
    return VertexPartition::from_colors(c);
}

bool is_isomorphism(const JGraph& g1, const JGraph& g2, const Perm& map) {
    return verify_isomorphism(g1, g2, map);
}

std::optional<Perm> are_isomorphic(const JGraph& g1, const JGraph& g2, std::size_t cap) {
    if (g1.num_vertices() > cap || g2.num_vertices() > cap)
        throw std::length_error("are_isomorphic: vertex cap exceeded");
    if (g1.num_vertices() != g2.num_vertices()) return std::nullopt;
    if (g1.num_vertices() == 0) return Perm{};
    std::vector<int> c1(g1.num_vertices(), 0), c2(g2.num_vertices(), 0);
    return IsoSearch{g1, g2}.run(std::move(c1), std::move(c2));
}

namespace {

// True iff swapping just u and v preserves adjacency, i.e. their
// neighborhoods agree away from {u, v}. Settles most orbit queries on
// coset blow-up graphs without a search.
bool transposition_is_automorphism(const JGraph& g, int u, int v) {
    Bitset a = g.adj[u], b = g.adj[v];
    a.reset(u);
    a.reset(v);
    b.reset(u);
    b.reset(v);
    return a == b;
}

// Orbit-stabilizer recursion: |Aut| = |orbit(v)| * |stabilizer of v|, with
// orbit membership decided by one automorphism-existence search each. The
// witnesses are transversal elements, so together they generate Aut(g).
struct AutEngine {
    const JGraph& g;
    std::vector<Perm> witnesses;

    BigInt count(const std::vector<int>& colors) {
        int target = IsoSearch::pick_target_color(colors);
        if (target == -1) return 1;
        const std::size_t n = g.num_vertices();
        int v = -1;
        std::vector<int> cell;
        for (std::size_t i = 0; i < n; ++i)
            if (colors[i] == target) {
                if (v == -1) v = static_cast<int>(i);
                cell.push_back(static_cast<int>(i));
            }
        const int fresh = count_colors(colors);
        BigInt orbit = 0;
        for (int u : cell) {
            if (u == v) {
                orbit += 1;
                continue;
            }
            if (transposition_is_automorphism(g, v, u)) {
                Perm swap = perm_identity(n);
                swap[v] = u;
                swap[u] = v;
                orbit += 1;
                witnesses.push_back(std::move(swap));
                continue;
            }
            std::vector<int> n1 = colors, n2 = colors;
            n1[v] = fresh;
            n2[u] = fresh;
            if (auto r = IsoSearch{g, g}.run(std::move(n1), std::move(n2))) {
                orbit += 1;
                witnesses.push_back(std::move(*r));
            }
        }
        std::vector<int> stab = colors;
        stab[v] = fresh;
        refine_colors(g, stab);
        return orbit * count(stab);
    }
};

std::vector<int> base_colors(const JGraph& g) {
    std::vector<int> c(g.num_vertices(), 0);
    refine_colors(g, c);
    return c;
}

}  // namespace

BigInt automorphism_count(const JGraph& g, std::size_t cap) {
    if (g.num_vertices() > cap) throw std::length_error("automorphism_count: vertex cap exceeded");
    if (g.num_vertices() == 0) return 1;
    AutEngine eng{g, {}};
    return eng.count(base_colors(g));
}

std::vector<Perm> automorphism_generators(const JGraph& g, std::size_t cap) {
    if (g.num_vertices() > cap)
        throw std::length_error("automorphism_generators: vertex cap exceeded");
    if (g.num_vertices() == 0) return {};
    AutEngine eng{g, {}};
    eng.count(base_colors(g));
    return std::move(eng.witnesses);
}

// ---- PermGroup ----

PermGroup::PermGroup(std::size_t n) : n_(n) {}

void PermGroup::rebuild_orbit(std::size_t l) {
    Level& lv = levels_[l];
    lv.orbit.clear();
    lv.via.assign(n_, {});
    lv.orbit.push_back(lv.base);
    lv.via[lv.base] = perm_identity(n_);
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
        int x = lv.orbit[head];
        for (std::size_t j = l; j < levels_.size(); ++j)
            for (const Perm& s : levels_[j].gens) {
                int y = s[x];
                if (lv.via[y].empty()) {
                    lv.via[y] = perm_compose(s, lv.via[x]);
                    lv.orbit.push_back(y);
                }
            }
    }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
        int x = g[levels_[l].base];
        if (x == levels_[l].base) continue;
        if (levels_[l].via[x].empty()) return {std::move(g), l};
        g = perm_compose(perm_inverse(levels_[l].via[x]), g);
    }
    return {std::move(g), levels_.size()};
}

void PermGroup::place(Perm g, std::size_t level) {
    if (level == levels_.size()) {
        int base = -1;
        for (std::size_t i = 0; i < n_; ++i)
            if (g[i] != static_cast<int>(i)) {
                base = static_cast<int>(i);
                break;
            }
        levels_.push_back(Level{base, {}, {}, {}});
        rebuild_orbit(levels_.size() - 1);
    }
    for (const Perm& have : levels_[level].gens)
        if (have == g) return;
    levels_[level].gens.push_back(std::move(g));
}

void PermGroup::add_generator(Perm g) {
    if (g.size() != n_) throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (perm_is_identity(g)) return;
    auto [res, l] = strip(std::move(g), 0);
    if (perm_is_identity(res)) return;
    place(std::move(res), l);
    dirty_ = true;
}

void PermGroup::close() {
    if (levels_.empty()) {
        dirty_ = false;
        return;
    }
    // Bottom-up: when processing a level, all deeper levels are complete, so
    // strip decides membership exactly and every placement grows some orbit.
    for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);
    std::size_t level = levels_.size() - 1;
    for (;;) {
        rebuild_orbit(level);
        bool complete = true;
        std::vector<const Perm*> gens;
        for (std::size_t j = level; j < levels_.size(); ++j)
            for (const Perm& s : levels_[j].gens) gens.push_back(&s);
        const std::vector<int> orbit = levels_[level].orbit;
        for (std::size_t oi = 0; oi < orbit.size() && complete; ++oi) {
            int x = orbit[oi];
            for (const Perm* sp : gens) {
                const Perm& s = *sp;
                Perm h = perm_compose(perm_inverse(levels_[level].via[s[x]]),
                                      perm_compose(s, levels_[level].via[x]));
                if (perm_is_identity(h)) continue;
                auto [res, m] = strip(std::move(h), level + 1);
                if (perm_is_identity(res)) continue;
                place(std::move(res), m);
                level = std::min(m, levels_.size() - 1);
                complete = false;
                break;
            }
        }
        if (complete) {
            if (level == 0) break;
            --level;
        }
    }
    dirty_ = false;
}

BigInt PermGroup::order() {
    if (dirty_) close();
    BigInt o = 1;
    for (std::size_t l = 0; l < levels_.size(); ++l) {
        rebuild_orbit(l);
        o *= static_cast<unsigned long>(levels_[l].orbit.size());
    }
    return o;
}

BigInt closure_order_bfs(std::size_t n, const std::vector<Perm>& gens, std::size_t cap) {
    std::set<Perm> seen{perm_identity(n)};
    std::vector<Perm> queue{perm_identity(n)};
    while (!queue.empty()) {
        Perm cur = std::move(queue.back());
        queue.pop_back();
        for (const Perm& s : gens) {
            Perm next = perm_compose(s, cur);
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw std::length_error("closure_order_bfs: cap exceeded");
                queue.push_back(std::move(next));
            }
        }
    }
    return static_cast<unsigned long>(seen.size());
}

JGraph apply_permutation(const JGraph& g, const Perm& relabel) {
    const std::size_t n = g.num_vertices();
    if (relabel.size() != n) throw std::invalid_argument("apply_permutation: size mismatch");
    JGraph h;
    h.ring = g.ring;
    h.vertex_elem.resize(n);
    h.adj.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) h.vertex_elem[relabel[i]] = g.vertex_elem[i];
    for (std::size_t i = 0; i < n; ++i)
        g.adj[i].for_each_set([&](std::size_t j) { h.adj[relabel[i]].set(relabel[j]); });
    return h;
}

}  // namespace jlab
