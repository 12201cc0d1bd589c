#include "jlab/aut_structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "jlab/iso_decision.hpp"
#include "jlab/jgraph.hpp"
#include "jlab/numthy.hpp"

namespace jlab {

// ---- GroupExpr ----

GroupExpr GroupExpr::trivial() { return GroupExpr{}; }

GroupExpr GroupExpr::cyclic(unsigned long n) {
    if (n <= 1) return trivial();
    GroupExpr e;
    e.kind = Kind::Cyclic;
    e.n = n;
    return e;
}

GroupExpr GroupExpr::symmetric(unsigned long n) {
    if (n <= 1) return trivial();
    GroupExpr e;
    e.kind = Kind::Symmetric;
    e.n = n;
    return e;
}

GroupExpr GroupExpr::product(std::vector<GroupExpr> factors) {
    std::vector<GroupExpr> flat;
    for (auto& f : factors) {
        if (f.kind == Kind::Trivial) continue;
        if (f.kind == Kind::DirectProduct) {
            for (auto& c : f.children) flat.push_back(std::move(c));
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (flat.empty()) return trivial();
    if (flat.size() == 1) return flat.front();
    GroupExpr e;
    e.kind = Kind::DirectProduct;
    e.children = std::move(flat);
    return e;
}

GroupExpr GroupExpr::wreath_by_sym(GroupExpr base, unsigned long n) {
    if (n == 0) return trivial();
    if (n == 1) return base;
    if (base.kind == Kind::Trivial) return symmetric(n);
    GroupExpr e;
    e.kind = Kind::WreathBySym;
    e.n = n;
    e.children.push_back(std::move(base));
    return e;
}

BigInt GroupExpr::order() const {
    switch (kind) {
        case Kind::Trivial:
            return 1;
        case Kind::Cyclic:
            return n;
        case Kind::Symmetric:
            return big_factorial(n);
        case Kind::DirectProduct: {
            BigInt o = 1;
            for (const auto& c : children) o *= c.order();
            return o;
        }
        case Kind::WreathBySym:
            return big_pow(children.front().order(), n) * big_factorial(n);
    }
    throw std::logic_error("bad GroupExpr kind");
}

namespace {

std::string render_expr(const GroupExpr& e, bool as_factor) {
    switch (e.kind) {
        case GroupExpr::Kind::Trivial:
            return "1";
        case GroupExpr::Kind::Cyclic:
            return "Z" + std::to_string(e.n);
        case GroupExpr::Kind::Symmetric:
            return "S" + std::to_string(e.n);
        case GroupExpr::Kind::DirectProduct: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " x ";
                out += render_expr(e.children[i], true);
            }
            return as_factor ? "(" + out + ")" : out;
        }
        case GroupExpr::Kind::WreathBySym: {
            const GroupExpr& base = e.children.front();
            bool atom = base.kind != GroupExpr::Kind::DirectProduct &&
                        base.kind != GroupExpr::Kind::WreathBySym;
            std::string out = (atom ? render_expr(base, false)
                                    : "(" + render_expr(base, false) + ")") +
                              " wr S" + std::to_string(e.n);
            return as_factor ? "(" + out + ")" : out;
        }
    }
    throw std::logic_error("bad GroupExpr kind");
}

}  // namespace

std::string GroupExpr::render() const { return render_expr(*this, false); }

// ---- wreath formulas ----

GroupExpr field_aut_expr(std::uint64_t q) {
    if (!numthy::is_prime_power(q))
        throw std::invalid_argument("field_aut_expr: q must be a prime power");
    if (q == 2) return GroupExpr::trivial();
    if (q == 3) return GroupExpr::cyclic(2);
    const unsigned long eps = q % 2;
    const unsigned long qhat = static_cast<unsigned long>((q - 2 - eps) / 2);
    return GroupExpr::product(
        {GroupExpr::wreath_by_sym(GroupExpr::cyclic(2), qhat), GroupExpr::cyclic(eps + 1)});
}

GroupExpr semisimple_aut_expr(std::vector<std::uint64_t> residues) {
    if (residues.empty())
        throw std::invalid_argument("semisimple_aut_expr: residue multiset is empty");
    std::sort(residues.begin(), residues.end());
    std::vector<GroupExpr> factors;
    for (std::size_t i = 0; i < residues.size();) {
        std::size_t j = i;
        while (j < residues.size() && residues[j] == residues[i]) ++j;
        factors.push_back(
            GroupExpr::wreath_by_sym(field_aut_expr(residues[i]), static_cast<unsigned long>(j - i)));
        i = j;
    }
    return GroupExpr::product(std::move(factors));
}

BigInt full_aut_order(const RingDesc& r) {
    const std::uint64_t j = r.jacobson_size();
    const std::uint64_t cosets = r.size() / j;
    BigInt kernel = big_pow(big_factorial(static_cast<unsigned long>(j)),
                            static_cast<unsigned long>(cosets - 1));
    return kernel * semisimple_aut_expr(r.residue_multiset()).order();
}

// ---- normal forms ----

AutAtom AutAtom::z2power(unsigned long a) {
    AutAtom t;
    t.tag = Tag::Z2Power;
    t.a = a;
    return t;
}
AutAtom AutAtom::sym(unsigned long k) {
    AutAtom t;
    t.tag = Tag::Sym;
    t.k = k;
    return t;
}
AutAtom AutAtom::h(unsigned long mhat) {
    AutAtom t;
    t.tag = Tag::H;
    t.k = mhat;
    return t;
}
AutAtom AutAtom::kgrp(unsigned long n) {
    AutAtom t;
    t.tag = Tag::K;
    t.k = n;
    return t;
}
AutAtom AutAtom::l(unsigned long mhat, int eps_m, unsigned long n) {
    AutAtom t;
    t.tag = Tag::L;
    t.k = mhat;
    t.eps = eps_m;
    t.n = n;
    return t;
}

BigInt AutAtom::order() const {
    switch (tag) {
        case Tag::Z2Power:
            return big_pow(2, a);
        case Tag::Sym:
            return big_factorial(k);
        case Tag::H:
            return big_pow(2, k - k % 2) * big_factorial(k);
        case Tag::K:
            return big_pow(2, k - k % 2) * big_factorial(k);
        case Tag::L: {
            const unsigned long mhat = k;
            const unsigned long exp =
                (mhat + eps) * n - (n % 2) * (mhat % 2 + eps);
            return big_pow(2, exp) * big_pow(big_factorial(mhat), n) * big_factorial(n);
        }
    }
    throw std::logic_error("bad AutAtom tag");
}

std::string AutAtom::render() const {
    switch (tag) {
        case Tag::Z2Power:
            return a == 1 ? "Z2" : "Z2^" + std::to_string(a);
        case Tag::Sym:
            return "S" + std::to_string(k);
        case Tag::H:
            return "H(" + std::to_string(k) + ")";
        case Tag::K:
            return "K(" + std::to_string(k) + ")";
        case Tag::L:
            return "L(" + std::to_string(k) + "," + std::to_string(eps) + "," +
                   std::to_string(n) + ")";
    }
    throw std::logic_error("bad AutAtom tag");
}

BigInt NormalForm::order() const {
    BigInt o = big_pow(2, z2_exponent);
    for (const auto& t : atoms) o *= t.order();
    return o;
}

std::string NormalForm::render() const {
    std::string out;
    if (z2_exponent > 0) out = AutAtom::z2power(z2_exponent).render();
    for (const auto& t : atoms) {
        if (!out.empty()) out += " x ";
        out += t.render();
    }
    return out.empty() ? "1" : out;
}

NormalForm normal_form(std::vector<std::uint64_t> residues) {
    if (residues.empty()) throw std::invalid_argument("normal_form: residue multiset is empty");
    GroupExpr expr = semisimple_aut_expr(residues);  // validates prime powers
    std::sort(residues.begin(), residues.end());
    NormalForm nf;
    for (std::size_t i = 0; i < residues.size();) {
        std::size_t j = i;
        while (j < residues.size() && residues[j] == residues[i]) ++j;
        const std::uint64_t q = residues[i];
        const unsigned long n = static_cast<unsigned long>(j - i);
        i = j;
        const unsigned long eps_q = q % 2;
        const unsigned long mhat = static_cast<unsigned long>((q - 2 - eps_q) / 2);
        const unsigned long eps_mhat = mhat % 2;
        if (n == 1) {
            // Aut(J_F) = Z_{eps_q+1} x Z_{eps_mhat+1} x H, trivial factors dropped
            nf.z2_exponent += eps_q + eps_mhat;
            if (mhat >= 2) nf.atoms.push_back(AutAtom::h(mhat));
        } else if (q == 2) {
            if (n == 2)
                nf.z2_exponent += 1;  // S2 is Z2
            else
                nf.atoms.push_back(AutAtom::sym(n));
        } else if (q == 3 || q == 4) {
            nf.z2_exponent += n % 2;
            nf.atoms.push_back(AutAtom::kgrp(n));
        } else {
            nf.z2_exponent += (n % 2) * (eps_mhat + eps_q);
            nf.atoms.push_back(AutAtom::l(mhat, static_cast<int>(eps_q), n));
        }
    }
    std::sort(nf.atoms.begin(), nf.atoms.end());
    if (nf.order() != expr.order())
        throw std::logic_error("normal_form: order conservation check failed");
    return nf;
}

bool atoms_isomorphic(const AutAtom& x, const AutAtom& y) {
    using Tag = AutAtom::Tag;
    if (x.tag == y.tag) {
        switch (x.tag) {
            case Tag::Z2Power:
                return x.a == y.a;
            case Tag::Sym:
            case Tag::H:
            case Tag::K:
                return x.k == y.k;
            case Tag::L:
                return x.k == y.k && x.eps == y.eps && x.n == y.n;
        }
    }
    auto cross = [](const AutAtom& s, const AutAtom& t) {
        if (s.tag == Tag::Sym && t.tag == Tag::H) return s.k == 4 && t.k == 3;
        if (s.tag == Tag::Sym && t.tag == Tag::K) return s.k == 4 && t.k == 3;
        if (s.tag == Tag::H && t.tag == Tag::K) return s.k == t.k;
        return false;
    };
    return cross(x, y) || cross(y, x);
}

namespace {

void require_semisimple(const RingDesc& r, const char* who) {
    if (!r.is_semisimple())
        throw std::invalid_argument(std::string(who) + ": ring must be semisimple");
}

}  // namespace

bool aut_iso_decide(const RingDesc& r1, const RingDesc& r2) {
    require_semisimple(r1, "aut_iso_decide");
    require_semisimple(r2, "aut_iso_decide");
    NormalForm a = normal_form(r1.residue_multiset());
    NormalForm b = normal_form(r2.residue_multiset());
    if (a.z2_exponent != b.z2_exponent) return false;
    if (a.atoms.size() != b.atoms.size()) return false;
    std::vector<bool> used(b.atoms.size(), false);
    for (const auto& x : a.atoms) {
        bool matched = false;
        for (std::size_t j = 0; j < b.atoms.size() && !matched; ++j) {
            if (used[j] || !atoms_isomorphic(x, b.atoms[j])) continue;
            used[j] = true;
            matched = true;
        }
        if (!matched) return false;
    }
    return true;
}

Thm37Case thm37_hypothesis(const RingDesc& r1, const RingDesc& r2) {
    require_semisimple(r1, "thm37_hypothesis");
    require_semisimple(r2, "thm37_hypothesis");

    auto counts = [](const RingDesc& r) {
        std::map<std::uint64_t, unsigned> byorder;
        for (auto q : r.residue_multiset()) byorder[q]++;
        return byorder;
    };
    auto c1 = counts(r1), c2 = counts(r2);

    auto all_mult_gt1 = [](const std::map<std::uint64_t, unsigned>& c) {
        for (const auto& [q, m] : c)
            if (m <= 1) return false;
        return true;
    };
    auto count_of = [](const std::map<std::uint64_t, unsigned>& c,
                       std::initializer_list<std::uint64_t> orders) {
        unsigned s = 0;
        for (auto q : orders) {
            auto it = c.find(q);
            if (it != c.end()) s += it->second;
        }
        return s;
    };

    const bool case1 =
        all_mult_gt1(c1) && all_mult_gt1(c2) &&
        ((count_of(c1, {2}) != 4 && count_of(c2, {2}) != 4) ||
         (count_of(c1, {3, 4}) != 3 && count_of(c2, {3, 4}) != 3));
    if (case1) return Thm37Case::Case1;

    bool same_parity = true, has34 = false;
    int parity = -1;
    for (const auto* c : {&c1, &c2})
        for (const auto& [q, m] : *c) {
            if (q == 3 || q == 4) has34 = true;
            int pq = static_cast<int>(q % 2);
            if (parity == -1) parity = pq;
            if (pq != parity) same_parity = false;
        }
    const bool case2 =
        same_parity && !has34 &&
        ((count_of(c1, {2}) != 4 && count_of(c2, {2}) != 4) ||
         (count_of(c1, {8, 9}) > 1 && count_of(c2, {8, 9}) > 1));
    if (case2) return Thm37Case::Case2;
    return Thm37Case::Neither;
}

AutIsoReport aut_iso_report(const RingDesc& r1, const RingDesc& r2) {
    AutIsoReport rep;
    rep.nf1 = normal_form(r1.residue_multiset());
    rep.nf2 = normal_form(r2.residue_multiset());
    rep.aut_isomorphic = aut_iso_decide(r1, r2);
    rep.graphs_isomorphic = decide_iso(r1, r2);
    rep.hypothesis = thm37_hypothesis(r1, r2);
    rep.coincidence_flag = rep.aut_isomorphic && !rep.graphs_isomorphic;
    return rep;
}

// ---- element-level generators ----

namespace {

constexpr std::size_t kGenOrderCheckCap = 256;

// Vertex permutation induced by an element map on one component.
Perm materialize(const JGraph& g, const RingDesc& r,
                 const std::function<RingElement(RingElement)>& fn) {
    std::map<std::uint64_t, std::size_t> vtx_of;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) vtx_of[g.vertex_elem[v]] = v;
    Perm p(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        RingElement img = fn(g.vertex(v));
        p[v] = static_cast<int>(vtx_of.at(r.index_of(img)));
    }
    return p;
}

}  // namespace

std::vector<AutGenerator> aut_generators(const RingDesc& r) {
    require_semisimple(r, "aut_generators");
    const JGraph g = build_graph(r);
    std::vector<AutGenerator> out;

    auto push_checked = [&](AutGenerator gen) {
        if (!is_isomorphism(g, g, gen.vertex_perm))
            throw std::logic_error("aut_generators: generator is not an automorphism: " +
                                   gen.description);
        out.push_back(std::move(gen));
    };

    // Component transpositions within each equal-order class. Components are
    // identified through a verified field isomorphism so mixed atom kinds
    // and mixed moduli are handled uniformly.
    std::map<std::uint64_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < r.atoms.size(); ++i)
        classes[r.atoms[i].residue_field_order()].push_back(i);
    for (const auto& [q, positions] : classes) {
        for (std::size_t t = 0; t + 1 < positions.size(); ++t) {
            const std::size_t i = positions[t], j = positions[t + 1];
            const auto fwd = field_embedding_iso(r.atoms[i], r.atoms[j]);
            std::vector<std::uint64_t> bwd(fwd.size());
            for (std::size_t x = 0; x < fwd.size(); ++x) bwd[fwd[x]] = x;
            AutGenerator gen;
            gen.kind = AutGenerator::Kind::ComponentPerm;
            gen.comp_i = i;
            gen.comp_j = j;
            gen.description =
                "swap components " + std::to_string(i) + " and " + std::to_string(j);
            gen.vertex_perm = materialize(g, r, [&](RingElement x) {
                std::uint64_t xi = x.comp[i];
                x.comp[i] = bwd[x.comp[j]];
                x.comp[j] = fwd[xi];
                return x;
            });
            push_checked(std::move(gen));
        }
    }

    // Local field permutations fixing 0, preserving {1,-1} and the family
    // of inverse pairs: negation (odd order), one flip per inverse pair,
    // and swaps of adjacent inverse pairs.
    for (std::size_t i = 0; i < r.atoms.size(); ++i) {
        const LocalRingAtom& f = r.atoms[i];
        const std::uint64_t q = f.size();
        auto emit_sigma = [&](std::vector<std::uint64_t> sigma, std::string what) {
            AutGenerator gen;
            gen.kind = AutGenerator::Kind::LocalMap;
            gen.comp_i = i;
            gen.sigma = sigma;
            gen.description = "component " + std::to_string(i) + ": " + std::move(what);
            gen.vertex_perm = materialize(g, r, [&](RingElement x) {
                x.comp[i] = sigma[x.comp[i]];
                return x;
            });
            push_checked(std::move(gen));
        };

        if (q % 2 == 1 && q > 2) {
            std::vector<std::uint64_t> sigma(q);
            for (std::uint64_t x = 0; x < q; ++x) sigma[x] = f.neg(x);
            emit_sigma(std::move(sigma), "negation");
        }

        const std::uint64_t minus_one = f.neg(f.one());
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
        for (std::uint64_t x = 2; x < q; ++x) {
            if (x == minus_one) continue;
            std::uint64_t inv = f.inverse(x);
            if (x < inv) pairs.emplace_back(x, inv);
        }
        for (const auto& [x, inv] : pairs) {
            std::vector<std::uint64_t> sigma(q);
            std::iota(sigma.begin(), sigma.end(), 0);
            sigma[x] = inv;
            sigma[inv] = x;
            emit_sigma(std::move(sigma), "swap inverse pair {" + f.render_element(x) + "," +
                                             f.render_element(inv) + "}");
        }
        for (std::size_t t = 0; t + 1 < pairs.size(); ++t) {
            std::vector<std::uint64_t> sigma(q);
            std::iota(sigma.begin(), sigma.end(), 0);
            sigma[pairs[t].first] = pairs[t + 1].first;
            sigma[pairs[t + 1].first] = pairs[t].first;
            sigma[pairs[t].second] = pairs[t + 1].second;
            sigma[pairs[t + 1].second] = pairs[t].second;
            emit_sigma(std::move(sigma),
                       "swap inverse pairs {" + f.render_element(pairs[t].first) + "," +
                           f.render_element(pairs[t].second) + "} and {" +
                           f.render_element(pairs[t + 1].first) + "," +
                           f.render_element(pairs[t + 1].second) + "}");
        }
    }

    if (g.num_vertices() <= kGenOrderCheckCap) {
        PermGroup grp(g.num_vertices());
        for (const auto& gen : out) grp.add_generator(gen.vertex_perm);
        if (grp.order() != semisimple_aut_expr(r.residue_multiset()).order())
            throw std::logic_error("aut_generators: generated order does not match the formula");
    }
    return out;
}

bool wreath_decomposable(const std::vector<std::uint64_t>& central_factor_orders,
                         std::uint64_t n) {
    for (auto h : central_factor_orders)
        if (h > 1 && std::gcd(h, n) == 1) return true;
    return false;
}

}  // namespace jlab
