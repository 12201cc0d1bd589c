#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "jlab/aut_structure.hpp"
#include "jlab/catalog.hpp"
#include "jlab/iso_decision.hpp"
#include "jlab/jgraph.hpp"
#include "jlab/numthy.hpp"

using namespace jlab;

namespace {

RingDesc R(const char* spec) { return parse_ring_spec(spec); }

}  // namespace

TEST_CASE("field automorphism expressions") {
    CHECK(field_aut_expr(2).render() == "1");
    CHECK(field_aut_expr(2).order() == 1);
    CHECK(field_aut_expr(3).render() == "Z2");
    CHECK(field_aut_expr(4).order() == 2);
    CHECK(field_aut_expr(5).order() == 4);
    CHECK(field_aut_expr(7).render() == "(Z2 wr S2) x Z2");
    CHECK(field_aut_expr(7).order() == 16);
    CHECK(field_aut_expr(9).order() == 96);  // (Z2 wr S3) x Z2
    CHECK_THROWS_AS(field_aut_expr(6), std::invalid_argument);

    // expression order equals the brute-force count on the field graph
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        JGraph g = build_graph(R(("GF(" + std::to_string(q) + ")").c_str()));
        CHECK(field_aut_expr(q).order() == automorphism_count(g));
    }
}

TEST_CASE("semisimple automorphism expressions") {
    CHECK(semisimple_aut_expr({2, 2, 2, 2, 2}).render() == "S5");
    CHECK(semisimple_aut_expr({2, 2, 2, 2, 2}).order() == 120);
    CHECK(semisimple_aut_expr({3, 3}).render() == "Z2 wr S2");
    CHECK(semisimple_aut_expr({3, 3}).order() == 8);
    CHECK(semisimple_aut_expr({2, 3}).render() == "Z2");

    // hypercube symmetry orders 2^n n! for repeated order-3 or order-4 fields
    for (unsigned n = 1; n <= 5; ++n) {
        std::vector<std::uint64_t> threes(n, 3), fours(n, 4);
        BigInt want = big_pow(2, n) * big_factorial(n);
        CHECK(semisimple_aut_expr(threes).order() == want);
        CHECK(semisimple_aut_expr(fours).order() == want);
    }
}

TEST_CASE("full automorphism order formula: named values") {
    CHECK(full_aut_order(R("Z4")) == 2);
    CHECK(full_aut_order(R("Z9")) == 72);
    CHECK(full_aut_order(R("Z8")) == 24);
    CHECK(full_aut_order(R("Z4 x Z3")) == 64);
    CHECK(full_aut_order(R("GF(4)[t]/(t^2)")) == BigInt(13824) * 2);  // (4!)^3 * 2
    CHECK(full_aut_order(R("Z2^4")) == 24);
    CHECK(full_aut_order(R("Z7")) == 16);
    CHECK(full_aut_order(R("Z3 x Z3")) == 8);
    CHECK(full_aut_order(R("GF(4)")) == 2);
}

TEST_CASE("formula equals oracle on a catalog sample") {
    for (const auto& r : enumerate_catalog(24, 24)) {
        JGraph g = build_graph(r);
        if (g.num_vertices() > 24) continue;
        CHECK(full_aut_order(r) == automorphism_count(g));
    }
}

TEST_CASE("element-level generators") {
    // Z3 x Z3: component swap plus two negations generate all 8
    {
        auto gens = aut_generators(R("Z3 x Z3"));
        CHECK(gens.size() == 3);
        int swaps = 0, negs = 0;
        for (const auto& g : gens) {
            if (g.kind == AutGenerator::Kind::ComponentPerm) ++swaps;
            if (g.description.find("negation") != std::string::npos) ++negs;
        }
        CHECK(swaps == 1);
        CHECK(negs == 2);
    }
    // GF(4): the single inverse-pair flip a <-> a+1 = a^2
    {
        auto gens = aut_generators(R("GF(4)"));
        REQUIRE(gens.size() == 1);
        CHECK(gens[0].kind == AutGenerator::Kind::LocalMap);
        CHECK(gens[0].description.find("{a,a+1}") != std::string::npos);
    }
    // Z2^3: two adjacent component transpositions, generated order 6
    {
        auto gens = aut_generators(R("Z2^3"));
        CHECK(gens.size() == 2);
        JGraph g = build_graph(R("Z2^3"));
        PermGroup grp(g.num_vertices());
        for (const auto& gen : gens) grp.add_generator(gen.vertex_perm);
        CHECK(grp.order() == 6);
    }
    CHECK_THROWS_AS(aut_generators(R("Z4")), std::invalid_argument);
}

TEST_CASE("generators are automorphisms and generate the formula order") {
    for (const auto& r : enumerate_catalog(32, 32)) {
        if (!r.is_semisimple()) continue;
        JGraph g = build_graph(r);
        if (g.num_vertices() > 32) continue;
        auto gens = aut_generators(r);  // self-checks adjacency and order
        PermGroup grp(g.num_vertices());
        for (const auto& gen : gens) {
            CHECK(is_isomorphism(g, g, gen.vertex_perm));
            grp.add_generator(gen.vertex_perm);
        }
        CHECK(grp.order() == semisimple_aut_expr(r.residue_multiset()).order());
    }
    // mixed representations of the same prime field are handled
    auto gens = aut_generators(R("Z2 x GF(2)"));
    CHECK(gens.size() == 1);
}

TEST_CASE("normal forms") {
    NormalForm a = normal_form({2, 2, 2, 2});
    CHECK(a.z2_exponent == 0);
    REQUIRE(a.atoms.size() == 1);
    CHECK(a.atoms[0] == AutAtom::sym(4));

    NormalForm b = normal_form({3, 3, 3});
    CHECK(b.z2_exponent == 1);
    REQUIRE(b.atoms.size() == 1);
    CHECK(b.atoms[0] == AutAtom::kgrp(3));

    NormalForm c = normal_form({7});
    CHECK(c.z2_exponent == 1);
    REQUIRE(c.atoms.size() == 1);
    CHECK(c.atoms[0] == AutAtom::h(2));
    CHECK(c.order() == 16);

    CHECK(normal_form({2}).render() == "1");
    CHECK(normal_form({2, 2}).render() == "Z2");  // S2 folded into the Z2 power
    CHECK(normal_form({9}).render() == "Z2^2 x H(3)");

    // order conservation on random residue multisets (also checked inside)
    std::vector<std::uint64_t> orders;
    for (std::uint64_t q = 2; q <= 32; ++q)
        if (numthy::is_prime_power(q)) orders.push_back(q);
    std::mt19937 rng(777);
    for (int rep = 0; rep < 200; ++rep) {
        std::uniform_int_distribution<std::size_t> len(1, 6);
        std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
        std::vector<std::uint64_t> res;
        for (std::size_t i = 0, l = len(rng); i < l; ++i) res.push_back(orders[pick(rng)]);
        NormalForm nf = normal_form(res);
        CHECK(nf.order() == semisimple_aut_expr(res).order());
    }
}

TEST_CASE("atom orders and the factorial coincidences") {
    CHECK(AutAtom::sym(4).order() == 24);
    CHECK(AutAtom::h(3).order() == 24);
    CHECK(AutAtom::kgrp(3).order() == 24);

    // the two wreath shapes of equal order: 16^7 * 7! = 2 * 8^8 * 8!
    BigInt lhs = big_pow(16, 7) * big_factorial(7);
    BigInt rhs = BigInt(2) * big_pow(8, 8) * big_factorial(8);
    BigInt expect = big_pow(2, 28) * 5040;
    CHECK(lhs == rhs);
    CHECK(lhs == expect);
    CHECK(AutAtom::l(2, 1, 7).order() == AutAtom::l(2, 0, 8).order());
    CHECK(BigInt(2) * AutAtom::l(2, 1, 7).order() == expect);
    CHECK(BigInt(2) * AutAtom::l(2, 0, 8).order() == expect);
    CHECK_FALSE(atoms_isomorphic(AutAtom::l(2, 1, 7), AutAtom::l(2, 0, 8)));
}

TEST_CASE("the nine-item atom isomorphism table") {
    for (unsigned long k = 2; k <= 12; ++k)
        for (unsigned long m = 2; m <= 12; ++m) {
            CHECK(atoms_isomorphic(AutAtom::sym(k), AutAtom::h(m)) == (k == 4 && m == 3));
            CHECK(atoms_isomorphic(AutAtom::sym(k), AutAtom::kgrp(m)) == (k == 4 && m == 3));
            CHECK(atoms_isomorphic(AutAtom::h(k), AutAtom::h(m)) == (k == m));
            CHECK(atoms_isomorphic(AutAtom::h(k), AutAtom::kgrp(m)) == (k == m));
            CHECK(atoms_isomorphic(AutAtom::kgrp(k), AutAtom::kgrp(m)) == (k == m));
            CHECK(atoms_isomorphic(AutAtom::sym(k), AutAtom::sym(m)) == (k == m));
        }
    for (unsigned long mh = 1; mh <= 6; ++mh)
        for (int e = 0; e <= 1; ++e)
            for (unsigned long n = 2; n <= 8; ++n) {
                CHECK_FALSE(atoms_isomorphic(AutAtom::sym(n), AutAtom::l(mh, e, n)));
                CHECK_FALSE(atoms_isomorphic(AutAtom::h(mh == 0 ? 2 : mh), AutAtom::l(mh, e, n)));
                CHECK_FALSE(atoms_isomorphic(AutAtom::kgrp(n), AutAtom::l(mh, e, n)));
                for (unsigned long mh2 = 1; mh2 <= 6; ++mh2)
                    for (int e2 = 0; e2 <= 1; ++e2)
                        for (unsigned long n2 = 2; n2 <= 8; ++n2)
                            CHECK(atoms_isomorphic(AutAtom::l(mh, e, n), AutAtom::l(mh2, e2, n2)) ==
                                  (mh == mh2 && e == e2 && n == n2));
            }
}

TEST_CASE("Aut-isomorphism decision and the documented coincidences") {
    // order-3 vs order-4 fields are invisible to Aut
    CHECK(aut_iso_decide(R("Z3^2"), R("GF(4)^2")));
    CHECK_FALSE(decide_iso(R("Z3^2"), R("GF(4)^2")));
    CHECK(automorphism_count(build_graph(R("Z3^2"))) == 8);
    CHECK(automorphism_count(build_graph(R("GF(4)^2"))) == 8);

    CHECK(aut_iso_decide(R("Z3"), R("GF(4)")));

    // S4 = H(3) needs the compensating Z2: plain Z2^4 vs GF(8) has orders 24 vs 48
    CHECK_FALSE(aut_iso_decide(R("Z2^4"), R("GF(8)")));
    CHECK(aut_iso_decide(R("Z2^4 x Z3"), R("GF(8)")));
    CHECK(full_aut_order(R("Z2^4 x Z3")) == 48);
    CHECK(full_aut_order(R("GF(8)")) == 48);
    CHECK(automorphism_count(build_graph(R("GF(8)"))) == 48);
    CHECK(automorphism_count(build_graph(R("Z2^4 x Z3"))) == 48);

    // K(3) = S4 with the same compensation
    CHECK(aut_iso_decide(R("Z3^3"), R("Z2^4 x Z3")));

    CHECK_FALSE(aut_iso_decide(R("Z2^4"), R("Z3 x GF(4) x Z3")));

    CHECK_THROWS_AS(aut_iso_decide(R("Z4"), R("Z4")), std::invalid_argument);
}

TEST_CASE("theorem hypothesis cases") {
    CHECK(thm37_hypothesis(R("Z3^2 x GF(4)^2"), R("Z3^4")) == Thm37Case::Case1);
    CHECK(thm37_hypothesis(R("Z3^2"), R("GF(4)^2")) == Thm37Case::Case1);
    CHECK(thm37_hypothesis(R("Z2 x Z5"), R("Z7")) == Thm37Case::Neither);
    CHECK(thm37_hypothesis(R("Z5 x GF(25)"), R("Z5 x GF(25)")) == Thm37Case::Case2);
    CHECK(thm37_hypothesis(R("GF(8)^2"), R("GF(8)^2")) == Thm37Case::Case1);

    // within case 1 the Aut-level decision agrees with the ring-level one
    RingDesc a = R("Z3^2 x GF(4)^2"), b = R("Z3^4");
    CHECK(thm37_hypothesis(a, b) == Thm37Case::Case1);
    CHECK(aut_iso_decide(a, b) == decide_iso(a, b));

    auto rep = aut_iso_report(R("Z3^2"), R("GF(4)^2"));
    CHECK(rep.aut_isomorphic);
    CHECK_FALSE(rep.graphs_isomorphic);
    CHECK(rep.coincidence_flag);
    CHECK(rep.nf1 == rep.nf2);
    CHECK(rep.nf1.render() == "K(2)");
}

TEST_CASE("collision search: every Aut collision has a documented cause") {
    std::vector<std::uint64_t> orders;
    for (std::uint64_t q = 2; q <= 32; ++q)
        if (numthy::is_prime_power(q)) orders.push_back(q);

    auto sub34 = [](std::vector<std::uint64_t> v) {
        for (auto& x : v)
            if (x == 4) x = 3;
        std::sort(v.begin(), v.end());
        return v;
    };
    auto tags_of = [](const NormalForm& nf) {
        std::vector<int> t;
        for (const auto& a : nf.atoms) t.push_back(static_cast<int>(a.tag));
        std::sort(t.begin(), t.end());
        return t;
    };

    auto nf_match = [](const NormalForm& na, const NormalForm& nb) {
        if (na.z2_exponent != nb.z2_exponent) return false;
        if (na.atoms.size() != nb.atoms.size()) return false;
        std::vector<bool> used(nb.atoms.size(), false);
        for (const auto& x : na.atoms) {
            bool ok = false;
            for (std::size_t j = 0; j < nb.atoms.size() && !ok; ++j)
                if (!used[j] && atoms_isomorphic(x, nb.atoms[j])) used[j] = ok = true;
            if (!ok) return false;
        }
        return true;
    };

    int collisions = 0, family_sub34 = 0, family_cross = 0;
    auto consider = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        if (a == b) return;
        NormalForm na = normal_form(a), nb = normal_form(b);
        if (!nf_match(na, nb)) return;
        ++collisions;
        bool by_sub34 = sub34(a) == sub34(b);
        bool by_cross = tags_of(na) != tags_of(nb);
        bool by_abelian = na.atoms == nb.atoms;  // only Z2 bookkeeping differs
        if (by_sub34) ++family_sub34;
        if (by_cross) ++family_cross;
        CHECK((by_sub34 || by_cross || by_abelian));
    };

    // systematic over all small multisets, then random for breadth
    std::vector<std::vector<std::uint64_t>> all;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        all.push_back({orders[i]});
        for (std::size_t j = i; j < orders.size(); ++j) {
            all.push_back({orders[i], orders[j]});
            if (orders[j] <= 9)
                for (std::size_t k = j; k < orders.size() && orders[k] <= 9; ++k)
                    all.push_back({orders[i], orders[j], orders[k]});
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) consider(all[i], all[j]);

    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::uniform_int_distribution<std::size_t> pick(0, orders.size() - 1);
    for (int rep = 0; rep < 4000; ++rep) {
        std::vector<std::uint64_t> a, b;
        for (std::size_t i = 0, l = len(rng); i < l; ++i) a.push_back(orders[pick(rng)]);
        for (std::size_t i = 0, l = len(rng); i < l; ++i) b.push_back(orders[pick(rng)]);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        consider(a, b);
    }

    CHECK(collisions > 0);
    CHECK(family_sub34 > 0);   // e.g. {3} vs {4}
    CHECK(family_cross > 0);   // e.g. {3,3,3} vs {8}

    // a deliberate cross-type instance: K(5) from GF(4)^5 x Z3 vs H(5) from GF(13)
    CHECK(aut_iso_decide(R("GF(4)^5 x Z3"), R("GF(13)")));
}

TEST_CASE("wreath decomposability criterion") {
    CHECK(wreath_decomposable({2, 2}, 3));
    CHECK_FALSE(wreath_decomposable({2, 2}, 2));
    CHECK_FALSE(wreath_decomposable({}, 5));
    CHECK_FALSE(wreath_decomposable({1, 1}, 3));
    CHECK(wreath_decomposable({2}, 9));
    CHECK(wreath_decomposable({3, 2}, 4));
}
