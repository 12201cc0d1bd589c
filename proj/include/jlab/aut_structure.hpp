#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jlab/bigint.hpp"
#include "jlab/graph_alg.hpp"
#include "jlab/ring.hpp"

namespace jlab {

// Abstract group-structure expression with exact order.
struct GroupExpr {
    enum class Kind { Trivial, Cyclic, Symmetric, DirectProduct, WreathBySym };

    Kind kind = Kind::Trivial;
    unsigned long n = 0;             // Cyclic/Symmetric parameter; wreath top degree
    std::vector<GroupExpr> children; // product factors, or the single wreath base

    static GroupExpr trivial();
    static GroupExpr cyclic(unsigned long n);
    static GroupExpr symmetric(unsigned long n);
    static GroupExpr product(std::vector<GroupExpr> factors);
    static GroupExpr wreath_by_sym(GroupExpr base, unsigned long n);

    BigInt order() const;
    std::string render() const;

    bool operator==(const GroupExpr&) const = default;
};

// Automorphism group of the Jacobson graph of GF(q):
// trivial for q=2, Z2 for q=3, (Z2 wr S_qhat) x Z_{eps+1} for q >= 4.
GroupExpr field_aut_expr(std::uint64_t q);

// Automorphism group of the Jacobson graph of a product of fields with the
// given residue orders: wreath each field group by the symmetric group on
// its multiplicity, then take the direct product.
GroupExpr semisimple_aut_expr(std::vector<std::uint64_t> residues);

// |Aut| of the Jacobson graph of any catalog ring:
// (|J(R)|!)^(|R/J(R)| - 1) * |Aut of the residue-field graph|.
BigInt full_aut_order(const RingDesc& r);

// Indecomposable factor from the wreath-product classification.
struct AutAtom {
    enum class Tag { Z2Power, Sym, H, K, L };

    Tag tag = Tag::Z2Power;
    unsigned long a = 0;     // Z2Power: exponent
    unsigned long k = 0;     // Sym: degree; H/L: m-hat; K: wreath degree
    int eps = 0;             // L: parity of the field order
    unsigned long n = 0;     // L: wreath degree

    static AutAtom z2power(unsigned long a);
    static AutAtom sym(unsigned long k);
    static AutAtom h(unsigned long mhat);
    static AutAtom kgrp(unsigned long n);
    static AutAtom l(unsigned long mhat, int eps_m, unsigned long n);

    BigInt order() const;
    std::string render() const;

    auto operator<=>(const AutAtom&) const = default;
};

// Direct-product normal form Z2^a x (indecomposable atoms).
struct NormalForm {
    unsigned long z2_exponent = 0;
    std::vector<AutAtom> atoms;  // sorted; no Z2Power entries

    BigInt order() const;
    std::string render() const;

    bool operator==(const NormalForm&) const = default;
};

// Case analysis of Aut(J_F) wr S_n per order class; the total order is
// checked against semisimple_aut_expr before returning.
NormalForm normal_form(std::vector<std::uint64_t> residues);

// The nine-item isomorphism table for {Sym, H, K, L} plus Z2Power equality.
bool atoms_isomorphic(const AutAtom& x, const AutAtom& y);

// Aut(J_R) iso Aut(J_R') for semisimple rings: equal Z2 exponents and a
// perfect matching of atoms under atoms_isomorphic.
bool aut_iso_decide(const RingDesc& r1, const RingDesc& r2);

enum class Thm37Case { Case1, Case2, Neither };

// Literal reading of the two hypothesis sentences; Case1 wins when both fit.
Thm37Case thm37_hypothesis(const RingDesc& r1, const RingDesc& r2);

struct AutIsoReport {
    NormalForm nf1, nf2;
    bool aut_isomorphic = false;
    bool graphs_isomorphic = false;  // structural decide_iso
    Thm37Case hypothesis = Thm37Case::Neither;
    // Aut groups agree but the rings do not: the documented 3<->4 /
    // cross-type order coincidence family.
    bool coincidence_flag = false;
};

AutIsoReport aut_iso_report(const RingDesc& r1, const RingDesc& r2);

// Element-level automorphism generator of the Jacobson graph of a
// semisimple ring, materialized as a vertex permutation.
struct AutGenerator {
    enum class Kind { ComponentPerm, LocalMap };

    Kind kind = Kind::LocalMap;
    std::size_t comp_i = 0, comp_j = 0;     // ComponentPerm: swapped positions
    std::vector<std::uint64_t> sigma;       // LocalMap: permutation of F_i
    std::string description;
    Perm vertex_perm;
};

// Generators of the component permutations (adjacent transpositions within
// each equal-order class) and of each local field permutation group
// (negation for odd order, inverse-pair flips, adjacent pair swaps). Every
// generator is checked to be a graph automorphism; when the graph is small
// enough the generated group order is checked against semisimple_aut_expr.
std::vector<AutGenerator> aut_generators(const RingDesc& r);

// Wreath product G wr S_n is decomposable iff G has a nontrivial central
// direct factor of order coprime to n; callers supply the abelian factor
// orders (known in closed form for every field automorphism group).
bool wreath_decomposable(const std::vector<std::uint64_t>& central_factor_orders,
                         std::uint64_t n);

}  // namespace jlab
