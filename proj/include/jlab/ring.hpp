#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jlab {

// Polynomial over Z_p, coefficients lowest degree first.
using Poly = std::vector<std::uint32_t>;

enum class AtomKind { ZmodPK, GaloisField, TruncatedPoly };

// One local ring: Z_{p^k}, GF(p^m), or GF(p^m)[t]/(t^k). Elements are
// addressed by an index in [0, size()); the index encodes the natural
// mixed-radix representation (value for Z_{p^k}, low-first coefficient
// digits otherwise), so index order is the documented element order.
struct LocalRingAtom {
    AtomKind kind = AtomKind::ZmodPK;
    std::uint32_t p = 2;  // characteristic
    std::uint32_t m = 1;  // residue field degree (1 for Z_{p^k})
    std::uint32_t k = 1;  // Z_{p^k}: exponent; truncated: nilpotency degree
    Poly modulus;         // monic irreducible of degree m (empty for Z_{p^k})

    static LocalRingAtom zmod(std::uint64_t p, std::uint32_t k);
    static LocalRingAtom galois(std::uint64_t p, std::uint32_t m);
    static LocalRingAtom galois(std::uint64_t p, std::uint32_t m, Poly mod);
    static LocalRingAtom truncated(const LocalRingAtom& base_field, std::uint32_t k);

    std::uint64_t size() const;
    std::uint64_t residue_field_order() const;  // p^m
    std::uint64_t jacobson_size() const { return size() / residue_field_order(); }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t one() const { return 1; }
    bool is_unit(std::uint64_t a) const;
    std::uint64_t residue(std::uint64_t a) const;  // index in the residue field
    LocalRingAtom residue_field() const;

    // Multiplicative inverse of a unit (exhaustive scan; atoms are small).
    std::uint64_t inverse(std::uint64_t a) const;

    std::string render() const;
    std::string render_element(std::uint64_t a) const;

    bool operator==(const LocalRingAtom&) const = default;
};

// An element of a RingDesc: one index per atom.
struct RingElement {
    std::vector<std::uint64_t> comp;
    bool operator==(const RingElement&) const = default;
    auto operator<=>(const RingElement&) const = default;
};

// A finite commutative ring presented as an ordered product of local atoms.
struct RingDesc {
    std::vector<LocalRingAtom> atoms;

    std::uint64_t size() const;
    std::uint64_t jacobson_size() const;
    std::uint64_t unit_count() const;  // |J(R)| * prod(|F_i| - 1)
    std::vector<std::uint64_t> residue_multiset() const;  // sorted field orders
    std::uint64_t max_residue_order() const;
    bool is_semisimple() const;
    RingDesc residue_ring() const;

    // Elements in row-major order over components, last atom fastest.
    RingElement element_at(std::uint64_t index) const;
    std::uint64_t index_of(const RingElement& x) const;

    RingElement zero() const;
    RingElement one() const;
    RingElement add(const RingElement& x, const RingElement& y) const;
    RingElement sub(const RingElement& x, const RingElement& y) const;
    RingElement mul(const RingElement& x, const RingElement& y) const;
    RingElement neg(const RingElement& x) const;
    bool is_unit(const RingElement& x) const;
    bool in_jacobson(const RingElement& x) const;
    std::vector<std::size_t> support(const RingElement& x) const;

    // Index of the residue class of x inside residue_ring().
    std::uint64_t residue_index(const RingElement& x) const;

    std::string render() const;
    std::string render_element(const RingElement& x) const;

    bool operator==(const RingDesc&) const = default;
};

// All elements of R in element_at order. Guarded against absurd sizes.
std::vector<RingElement> elements(const RingDesc& r);

struct RingParseError : std::runtime_error {
    std::size_t position;
    RingParseError(std::size_t pos, const std::string& msg);
};

// Grammar: spec := atom (('x'|'*') atom)*
//          atom := base ('^' UINT)?
//          base := 'Z' UINT | 'GF(' UINT ')' | 'GF(' UINT ')[t]/(t^' UINT ')'
// Whitespace is insignificant. Z_n with composite n is CRT-expanded into
// prime-power atoms in ascending prime order; '^r' repeats the atom in place.
RingDesc parse_ring_spec(std::string_view text);

// Ring isomorphism between two finite fields of equal order, as an element
// index bijection f1 -> f2. Found by mapping the residue class of t to a
// root of f1's modulus in f2; verified to preserve + and * on all pairs.
std::vector<std::uint64_t> field_embedding_iso(const LocalRingAtom& f1,
                                               const LocalRingAtom& f2);

// Lexicographically smallest monic irreducible of degree m over Z_p
// (coefficients compared lowest degree first).
Poly canonical_irreducible(std::uint32_t p, std::uint32_t m);
bool poly_is_irreducible(const Poly& f, std::uint32_t p);

}  // namespace jlab
