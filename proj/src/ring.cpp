#include "jlab/ring.hpp"

#include <algorithm>
#include <cctype>

#include "jlab/numthy.hpp"

namespace jlab {
namespace {

constexpr std::uint64_t kMaxAtomSize = std::uint64_t{1} << 31;
constexpr std::uint64_t kMaxRingSize = std::uint64_t{1} << 62;
constexpr std::uint64_t kMaxEnumeratedElements = std::uint64_t{1} << 22;

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t limit,
                          const char* what) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > limit / base) throw std::overflow_error(what);
        r *= base;
    }
    return r;
}

// ---- polynomial arithmetic over Z_p, low-degree-first coefficients ----

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t x = 1; x < p; ++x)
        if (std::uint64_t(a) * x % p == 1) return x;
    throw std::logic_error("inv_mod_p: not invertible");
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    poly_trim(c);
    return c;
}

// a mod f, with f monic
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
    poly_trim(a);
    const int df = poly_deg(f);
    while (poly_deg(a) >= df) {
        std::uint32_t c = a.back();
        int shift = poly_deg(a) - df;
        for (int i = 0; i <= df; ++i) {
            std::uint64_t sub = std::uint64_t(c) * f[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        poly_trim(a);
    }
    return a;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint32_t ai = i < a.size() ? a[i] : 0;
        std::uint32_t bi = i < b.size() ? b[i] : 0;
        c[i] = (ai + p - bi) % p;
    }
    poly_trim(c);
    return c;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        std::uint32_t lead = b.back();
        if (lead != 1) {
            std::uint32_t inv = inv_mod_p(lead, p);
            for (auto& c : b) c = static_cast<std::uint32_t>(std::uint64_t(c) * inv % p);
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// ---- index <-> digit codecs ----

void decode_digits(std::uint64_t idx, std::uint64_t radix, std::uint32_t count,
                   std::uint64_t* out) {
    for (std::uint32_t i = 0; i < count; ++i) {
        out[i] = idx % radix;
        idx /= radix;
    }
}

std::uint64_t encode_digits(const std::uint64_t* digits, std::uint64_t radix,
                            std::uint32_t count) {
    std::uint64_t idx = 0;
    for (std::uint32_t i = count; i-- > 0;) idx = idx * radix + digits[i];
    return idx;
}

}  // namespace

bool poly_is_irreducible(const Poly& f, std::uint32_t p) {
    if (f.size() < 2 || f.back() != 1) return false;
    const int m = poly_deg(f);
    if (m == 1) return true;
    const Poly t{0, 1};
    Poly cur = poly_mod(t, f, p);
    for (int d = 1; d <= m / 2; ++d) {
        cur = poly_pow_mod(cur, p, f, p);  // now x^(p^d) mod f
        Poly g = poly_gcd(f, poly_sub(cur, t, p), p);
        if (poly_deg(g) > 0) return false;
    }
    return true;
}

Poly canonical_irreducible(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return Poly{0, 1};
    std::uint64_t total = checked_pow(p, m, kMaxAtomSize, "canonical_irreducible: field too large");
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        // low-degree-first lexicographic order: c0 is the most significant digit
        Poly f(m + 1, 0);
        f[m] = 1;
        std::uint64_t v = idx;
        for (std::uint32_t i = m; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (poly_is_irreducible(f, p)) return f;
    }
    throw std::logic_error("canonical_irreducible: none found");  // unreachable for prime p
}

// ---- LocalRingAtom ----

LocalRingAtom LocalRingAtom::zmod(std::uint64_t p, std::uint32_t k) {
    if (!numthy::is_prime(p)) throw std::invalid_argument("Z_{p^k}: p must be prime");
    if (k < 1) throw std::invalid_argument("Z_{p^k}: exponent must be >= 1");
    LocalRingAtom a;
    a.kind = AtomKind::ZmodPK;
    a.p = static_cast<std::uint32_t>(p);
    a.m = 1;
    a.k = k;
    checked_pow(p, k, kMaxAtomSize, "Z_{p^k}: atom too large");
    return a;
}

LocalRingAtom LocalRingAtom::galois(std::uint64_t p, std::uint32_t m) {
    if (!numthy::is_prime(p)) throw std::invalid_argument("GF(p^m): p must be prime");
    if (m < 1) throw std::invalid_argument("GF(p^m): degree must be >= 1");
    return galois(p, m, canonical_irreducible(static_cast<std::uint32_t>(p), m));
}

LocalRingAtom LocalRingAtom::galois(std::uint64_t p, std::uint32_t m, Poly mod) {
    if (!numthy::is_prime(p)) throw std::invalid_argument("GF(p^m): p must be prime");
    if (m < 1) throw std::invalid_argument("GF(p^m): degree must be >= 1");
    if (mod.size() != m + 1 || mod.back() != 1)
        throw std::invalid_argument("GF(p^m): modulus must be monic of degree m");
    for (auto c : mod)
        if (c >= p) throw std::invalid_argument("GF(p^m): modulus coefficients must be reduced mod p");
    if (!poly_is_irreducible(mod, static_cast<std::uint32_t>(p)))
        throw std::invalid_argument("GF(p^m): modulus is not irreducible over Z_p");
    LocalRingAtom a;
    a.kind = AtomKind::GaloisField;
    a.p = static_cast<std::uint32_t>(p);
    a.m = m;
    a.k = 1;
    a.modulus = std::move(mod);
    checked_pow(p, m, kMaxAtomSize, "GF(p^m): atom too large");
    return a;
}

LocalRingAtom LocalRingAtom::truncated(const LocalRingAtom& base_field, std::uint32_t k) {
    if (base_field.kind != AtomKind::GaloisField)
        throw std::invalid_argument("GF(q)[t]/(t^k): base must be a Galois field atom");
    if (k < 2) throw std::invalid_argument("GF(q)[t]/(t^k): nilpotency degree must be >= 2");
    LocalRingAtom a = base_field;
    a.kind = AtomKind::TruncatedPoly;
    a.k = k;
    checked_pow(base_field.size(), k, kMaxAtomSize, "GF(q)[t]/(t^k): atom too large");
    return a;
}

std::uint64_t LocalRingAtom::size() const {
    switch (kind) {
        case AtomKind::ZmodPK:
            return checked_pow(p, k, kMaxAtomSize, "atom size overflow");
        case AtomKind::GaloisField:
            return checked_pow(p, m, kMaxAtomSize, "atom size overflow");
        case AtomKind::TruncatedPoly:
            return checked_pow(residue_field_order(), k, kMaxAtomSize, "atom size overflow");
    }
    throw std::logic_error("bad atom kind");
}

std::uint64_t LocalRingAtom::residue_field_order() const {
    return checked_pow(p, m, kMaxAtomSize, "atom size overflow");
}

std::uint64_t LocalRingAtom::add(std::uint64_t a, std::uint64_t b) const {
    switch (kind) {
        case AtomKind::ZmodPK: {
            std::uint64_t n = size();
            return (a + b) % n;
        }
        case AtomKind::GaloisField: {
            std::uint64_t da[64], db[64];
            decode_digits(a, p, m, da);
            decode_digits(b, p, m, db);
            for (std::uint32_t i = 0; i < m; ++i) da[i] = (da[i] + db[i]) % p;
            return encode_digits(da, p, m);
        }
        case AtomKind::TruncatedPoly: {
            const std::uint64_t q = residue_field_order();
            LocalRingAtom base = residue_field();
            std::uint64_t fa[64], fb[64];
            decode_digits(a, q, k, fa);
            decode_digits(b, q, k, fb);
            for (std::uint32_t i = 0; i < k; ++i) fa[i] = base.add(fa[i], fb[i]);
            return encode_digits(fa, q, k);
        }
    }
    throw std::logic_error("bad atom kind");
}

std::uint64_t LocalRingAtom::mul(std::uint64_t a, std::uint64_t b) const {
    switch (kind) {
        case AtomKind::ZmodPK: {
            std::uint64_t n = size();
            return a * b % n;  // atom sizes capped below 2^31, no overflow
        }
        case AtomKind::GaloisField: {
            std::uint64_t da[64], db[64], prod[128] = {0};
            decode_digits(a, p, m, da);
            decode_digits(b, p, m, db);
            for (std::uint32_t i = 0; i < m; ++i)
                for (std::uint32_t j = 0; j < m; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            // reduce by the monic modulus
            for (std::uint32_t d = 2 * m - 2; d + 1 > m; --d) {
                std::uint64_t c = prod[d];
                if (!c) continue;
                prod[d] = 0;
                for (std::uint32_t j = 0; j < m; ++j)
                    prod[d - m + j] = (prod[d - m + j] + c * (p - modulus[j])) % p;
            }
            return encode_digits(prod, p, m);
        }
        case AtomKind::TruncatedPoly: {
            const std::uint64_t q = residue_field_order();
            LocalRingAtom base = residue_field();
            std::uint64_t fa[64], fb[64], h[64] = {0};
            decode_digits(a, q, k, fa);
            decode_digits(b, q, k, fb);
            for (std::uint32_t i = 0; i < k; ++i)
                for (std::uint32_t j = 0; i + j < k; ++j)
                    h[i + j] = base.add(h[i + j], base.mul(fa[i], fb[j]));
            return encode_digits(h, q, k);
        }
    }
    throw std::logic_error("bad atom kind");
}

std::uint64_t LocalRingAtom::neg(std::uint64_t a) const {
    switch (kind) {
        case AtomKind::ZmodPK: {
            std::uint64_t n = size();
            return (n - a) % n;
        }
        case AtomKind::GaloisField: {
            std::uint64_t da[64];
            decode_digits(a, p, m, da);
            for (std::uint32_t i = 0; i < m; ++i) da[i] = (p - da[i]) % p;
            return encode_digits(da, p, m);
        }
        case AtomKind::TruncatedPoly: {
            const std::uint64_t q = residue_field_order();
            LocalRingAtom base = residue_field();
            std::uint64_t fa[64];
            decode_digits(a, q, k, fa);
            for (std::uint32_t i = 0; i < k; ++i) fa[i] = base.neg(fa[i]);
            return encode_digits(fa, q, k);
        }
    }
    throw std::logic_error("bad atom kind");
}

bool LocalRingAtom::is_unit(std::uint64_t a) const {
    switch (kind) {
        case AtomKind::ZmodPK:
            return a % p != 0;
        case AtomKind::GaloisField:
            return a != 0;
        case AtomKind::TruncatedPoly:
            return a % residue_field_order() != 0;  // constant coefficient nonzero
    }
    throw std::logic_error("bad atom kind");
}

std::uint64_t LocalRingAtom::residue(std::uint64_t a) const {
    switch (kind) {
        case AtomKind::ZmodPK:
            return a % p;
        case AtomKind::GaloisField:
            return a;
        case AtomKind::TruncatedPoly:
            return a % residue_field_order();
    }
    throw std::logic_error("bad atom kind");
}

LocalRingAtom LocalRingAtom::residue_field() const {
    switch (kind) {
        case AtomKind::ZmodPK: {
            LocalRingAtom f;
            f.kind = AtomKind::ZmodPK;
            f.p = p;
            f.m = 1;
            f.k = 1;
            return f;
        }
        case AtomKind::GaloisField:
            return *this;
        case AtomKind::TruncatedPoly: {
            LocalRingAtom f = *this;
            f.kind = AtomKind::GaloisField;
            f.k = 1;
            return f;
        }
    }
    throw std::logic_error("bad atom kind");
}

std::uint64_t LocalRingAtom::inverse(std::uint64_t a) const {
    if (!is_unit(a)) throw std::invalid_argument("inverse: not a unit");
    const std::uint64_t n = size();
    for (std::uint64_t x = 1; x < n; ++x)
        if (mul(a, x) == 1) return x;
    throw std::logic_error("inverse: no inverse found for a unit");
}

std::string LocalRingAtom::render() const {
    switch (kind) {
        case AtomKind::ZmodPK:
            return "Z" + std::to_string(size());
        case AtomKind::GaloisField:
            return "GF(" + std::to_string(size()) + ")";
        case AtomKind::TruncatedPoly:
            return "GF(" + std::to_string(residue_field_order()) + ")[t]/(t^" +
                   std::to_string(k) + ")";
    }
    throw std::logic_error("bad atom kind");
}

namespace {

// Renders a Galois-field element as a polynomial in `a` ("a^2+2a+1").
std::string render_gf(const LocalRingAtom& f, std::uint64_t idx) {
    if (f.m == 1) return std::to_string(idx);
    std::uint64_t d[64];
    decode_digits(idx, f.p, f.m, d);
    std::string out;
    for (std::uint32_t i = f.m; i-- > 0;) {
        if (!d[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]);
            out += (i == 1) ? "a" : "a^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string LocalRingAtom::render_element(std::uint64_t a) const {
    switch (kind) {
        case AtomKind::ZmodPK:
            return std::to_string(a);
        case AtomKind::GaloisField:
            return render_gf(*this, a);
        case AtomKind::TruncatedPoly: {
            const std::uint64_t q = residue_field_order();
            LocalRingAtom base = residue_field();
            std::uint64_t d[64];
            decode_digits(a, q, k, d);
            std::string out;
            for (std::uint32_t i = k; i-- > 0;) {
                if (!d[i]) continue;
                if (!out.empty()) out += "+";
                std::string c = render_gf(base, d[i]);
                if (i == 0) {
                    out += c;
                } else {
                    if (c != "1") {
                        bool composite = c.find('+') != std::string::npos ||
                                         (c.size() > 1 && c.find('a') != std::string::npos);
                        out += composite ? "(" + c + ")" : c;
                    }
                    out += (i == 1) ? "t" : "t^" + std::to_string(i);
                }
            }
            return out.empty() ? "0" : out;
        }
    }
    throw std::logic_error("bad atom kind");
}

// ---- RingDesc ----

namespace {

void check_element(const RingDesc& r, const RingElement& x) {
    if (x.comp.size() != r.atoms.size())
        throw std::invalid_argument("RingElement does not belong to this RingDesc");
    for (std::size_t i = 0; i < x.comp.size(); ++i)
        if (x.comp[i] >= r.atoms[i].size())
            throw std::invalid_argument("RingElement does not belong to this RingDesc");
}

}  // namespace

std::uint64_t RingDesc::size() const {
    std::uint64_t s = 1;
    for (const auto& a : atoms) {
        std::uint64_t as = a.size();
        if (s > kMaxRingSize / as) throw std::overflow_error("ring size overflow");
        s *= as;
    }
    return s;
}

std::uint64_t RingDesc::jacobson_size() const {
    std::uint64_t s = 1;
    for (const auto& a : atoms) s *= a.jacobson_size();
    return s;
}

std::uint64_t RingDesc::unit_count() const {
    std::uint64_t u = jacobson_size();
    for (const auto& a : atoms) u *= a.residue_field_order() - 1;
    return u;
}

std::vector<std::uint64_t> RingDesc::residue_multiset() const {
    std::vector<std::uint64_t> v;
    v.reserve(atoms.size());
    for (const auto& a : atoms) v.push_back(a.residue_field_order());
    std::sort(v.begin(), v.end());
    return v;
}

std::uint64_t RingDesc::max_residue_order() const {
    std::uint64_t mx = 0;
    for (const auto& a : atoms) mx = std::max(mx, a.residue_field_order());
    return mx;
}

bool RingDesc::is_semisimple() const {
    for (const auto& a : atoms)
        if (a.jacobson_size() != 1) return false;
    return true;
}

RingDesc RingDesc::residue_ring() const {
    RingDesc q;
    q.atoms.reserve(atoms.size());
    for (const auto& a : atoms) q.atoms.push_back(a.residue_field());
    return q;
}

RingElement RingDesc::element_at(std::uint64_t index) const {
    if (index >= size()) throw std::out_of_range("element_at: index out of range");
    RingElement e;
    e.comp.resize(atoms.size());
    for (std::size_t i = atoms.size(); i-- > 0;) {
        std::uint64_t as = atoms[i].size();
        e.comp[i] = index % as;
        index /= as;
    }
    return e;
}

std::uint64_t RingDesc::index_of(const RingElement& x) const {
    check_element(*this, x);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) idx = idx * atoms[i].size() + x.comp[i];
    return idx;
}

RingElement RingDesc::zero() const {
    return RingElement{std::vector<std::uint64_t>(atoms.size(), 0)};
}

RingElement RingDesc::one() const {
    RingElement e = zero();
    for (std::size_t i = 0; i < atoms.size(); ++i) e.comp[i] = atoms[i].one();
    return e;
}

RingElement RingDesc::add(const RingElement& x, const RingElement& y) const {
    check_element(*this, x);
    check_element(*this, y);
    RingElement r = x;
    for (std::size_t i = 0; i < atoms.size(); ++i) r.comp[i] = atoms[i].add(x.comp[i], y.comp[i]);
    return r;
}

RingElement RingDesc::sub(const RingElement& x, const RingElement& y) const {
    return add(x, neg(y));
}

RingElement RingDesc::mul(const RingElement& x, const RingElement& y) const {
    check_element(*this, x);
    check_element(*this, y);
    RingElement r = x;
    for (std::size_t i = 0; i < atoms.size(); ++i) r.comp[i] = atoms[i].mul(x.comp[i], y.comp[i]);
    return r;
}

RingElement RingDesc::neg(const RingElement& x) const {
    check_element(*this, x);
    RingElement r = x;
    for (std::size_t i = 0; i < atoms.size(); ++i) r.comp[i] = atoms[i].neg(x.comp[i]);
    return r;
}

bool RingDesc::is_unit(const RingElement& x) const {
    check_element(*this, x);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (!atoms[i].is_unit(x.comp[i])) return false;
    return true;
}

bool RingDesc::in_jacobson(const RingElement& x) const {
    check_element(*this, x);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i].residue(x.comp[i]) != 0) return false;
    return true;
}

std::vector<std::size_t> RingDesc::support(const RingElement& x) const {
    check_element(*this, x);
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (x.comp[i] != 0) s.push_back(i);
    return s;
}

std::uint64_t RingDesc::residue_index(const RingElement& x) const {
    check_element(*this, x);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        idx = idx * atoms[i].residue_field_order() + atoms[i].residue(x.comp[i]);
    return idx;
}

std::string RingDesc::render() const {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += " x ";
        out += atoms[i].render();
    }
    return out;
}

std::string RingDesc::render_element(const RingElement& x) const {
    check_element(*this, x);
    if (atoms.size() == 1) return atoms[0].render_element(x.comp[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += ",";
        out += atoms[i].render_element(x.comp[i]);
    }
    return out + ")";
}

std::vector<RingElement> elements(const RingDesc& r) {
    std::uint64_t n = r.size();
    if (n > kMaxEnumeratedElements)
        throw std::length_error("elements: ring too large to enumerate");
    std::vector<RingElement> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(r.element_at(i));
    return out;
}

// ---- parser ----

RingParseError::RingParseError(std::size_t pos, const std::string& msg)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void expect_literal(std::string_view lit) {
        skip_ws();
        if (text.substr(pos, lit.size()) != lit)
            throw RingParseError(pos, "expected '" + std::string(lit) + "'");
        pos += lit.size();
    }

    std::uint64_t parse_uint(const char* what) {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw RingParseError(pos, std::string("expected ") + what);
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (v > (std::uint64_t{1} << 60) / 10) throw RingParseError(pos, "number too large");
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }

    // One base atom, CRT-expanded for composite Z_n.
    std::vector<LocalRingAtom> parse_base() {
        skip_ws();
        std::size_t start = pos;
        if (peek() == 'Z') {
            ++pos;
            std::uint64_t n = parse_uint("modulus after 'Z'");
            if (n < 2) throw RingParseError(start, "ring must have >= 2 elements");
            std::vector<LocalRingAtom> out;
            for (auto [p, e] : numthy::factorize(n))
                out.push_back(LocalRingAtom::zmod(p, static_cast<std::uint32_t>(e)));
            return out;
        }
        if (text.substr(pos, 2) == "GF") {
            pos += 2;
            expect_literal("(");
            skip_ws();
            std::size_t qpos = pos;
            std::uint64_t q = parse_uint("field order");
            expect_literal(")");
            auto pk = numthy::is_prime_power(q);
            if (!pk) throw RingParseError(qpos, "GF(" + std::to_string(q) + "): not a prime power");
            LocalRingAtom field =
                LocalRingAtom::galois(pk->first, static_cast<std::uint32_t>(pk->second));
            skip_ws();
            if (pos < text.size() && text[pos] == '[') {
                expect_literal("[t]/(t^");
                std::size_t kpos = pos;
                std::uint64_t k = parse_uint("nilpotency degree");
                expect_literal(")");
                if (k < 1) throw RingParseError(kpos, "nilpotency degree must be >= 1");
                if (k == 1) return {field};  // GF(q)[t]/(t) is the field itself
                return {LocalRingAtom::truncated(field, static_cast<std::uint32_t>(k))};
            }
            return {field};
        }
        throw RingParseError(pos, "expected ring atom ('Z<n>' or 'GF(<q>)')");
    }

    std::vector<LocalRingAtom> parse_atom() {
        std::vector<LocalRingAtom> base = parse_base();
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t rpos = pos;
            std::uint64_t rep = parse_uint("repetition count");
            if (rep < 1) throw RingParseError(rpos, "repetition count must be >= 1");
            if (rep > 64) throw RingParseError(rpos, "repetition count too large");
            std::vector<LocalRingAtom> out;
            for (std::uint64_t i = 0; i < rep; ++i)
                out.insert(out.end(), base.begin(), base.end());
            return out;
        }
        return base;
    }
};

}  // namespace

RingDesc parse_ring_spec(std::string_view text) {
    Parser ps{text};
    RingDesc r;
    auto first = ps.parse_atom();
    r.atoms.insert(r.atoms.end(), first.begin(), first.end());
    while (!ps.eof()) {
        char c = ps.peek();
        if (c != 'x' && c != '*')
            throw RingParseError(ps.pos, "expected separator 'x' or '*'");
        ++ps.pos;
        auto next = ps.parse_atom();
        r.atoms.insert(r.atoms.end(), next.begin(), next.end());
    }
    r.size();  // trips the overflow check for absurd products
    return r;
}

// ---- field isomorphism ----

std::vector<std::uint64_t> field_embedding_iso(const LocalRingAtom& f1, const LocalRingAtom& f2) {
    auto is_field = [](const LocalRingAtom& f) {
        return f.jacobson_size() == 1;
    };
    if (!is_field(f1) || !is_field(f2))
        throw std::invalid_argument("field_embedding_iso: atoms must be fields");
    const std::uint64_t q = f1.size();
    if (q != f2.size())
        throw std::invalid_argument("field_embedding_iso: field orders differ");

    auto verify = [&](const std::vector<std::uint64_t>& map) {
        std::vector<bool> hit(q, false);
        for (std::uint64_t a = 0; a < q; ++a) {
            if (hit[map[a]]) return false;
            hit[map[a]] = true;
        }
        if (map[0] != 0 || map[f1.one()] != f2.one()) return false;
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = a; b < q; ++b) {
                if (map[f1.add(a, b)] != f2.add(map[a], map[b])) return false;
                if (map[f1.mul(a, b)] != f2.mul(map[a], map[b])) return false;
            }
        return true;
    };

    if (f1.m == 1) {
        // Prime fields: index arithmetic is arithmetic mod p on both sides.
        std::vector<std::uint64_t> map(q);
        for (std::uint64_t a = 0; a < q; ++a) map[a] = a;
        if (!verify(map)) throw std::logic_error("field_embedding_iso: prime-field identity failed");
        return map;
    }

    // Send the residue class of t to a root of f1's modulus inside f2.
    const std::uint32_t p = f1.p, m = f1.m;
    auto scalar_in_f2 = [&](std::uint32_t c) -> std::uint64_t { return c; };
    for (std::uint64_t r = 0; r < q; ++r) {
        std::uint64_t acc = 0;  // Horner evaluation of f1.modulus at r, in f2
        for (std::uint32_t i = m + 1; i-- > 0;)
            acc = f2.add(f2.mul(acc, r), scalar_in_f2(f1.modulus[i]));
        if (acc != 0) continue;
        std::vector<std::uint64_t> map(q);
        for (std::uint64_t a = 0; a < q; ++a) {
            std::uint64_t digits[64];
            decode_digits(a, p, m, digits);
            std::uint64_t v = 0;
            for (std::uint32_t i = m; i-- > 0;)
                v = f2.add(f2.mul(v, r), scalar_in_f2(static_cast<std::uint32_t>(digits[i])));
            map[a] = v;
        }
        if (verify(map)) return map;
    }
    throw std::logic_error(
        "field_embedding_iso: no root of the modulus found (modulus not irreducible?)");
}

}  // namespace jlab
