#include "jlab/catalog.hpp"

#include "jlab/numthy.hpp"

namespace jlab {

std::vector<RingDesc> enumerate_catalog(std::uint64_t max_ring_size,
                                        std::uint64_t max_atom_size) {
    std::vector<LocalRingAtom> atoms;
    for (std::uint64_t s = 2; s <= max_atom_size; ++s) {
        auto pk = numthy::is_prime_power(s);
        if (!pk) continue;
        auto [p, e] = *pk;
        atoms.push_back(LocalRingAtom::zmod(p, static_cast<std::uint32_t>(e)));
        if (e >= 2) atoms.push_back(LocalRingAtom::galois(p, static_cast<std::uint32_t>(e)));
        for (int mm = 1; mm < e; ++mm) {
            if (e % mm) continue;
            int kk = e / mm;
            if (kk < 2) continue;
            atoms.push_back(LocalRingAtom::truncated(
                LocalRingAtom::galois(p, static_cast<std::uint32_t>(mm)),
                static_cast<std::uint32_t>(kk)));
        }
    }

    std::vector<RingDesc> out;
    std::vector<LocalRingAtom> cur;
    auto rec = [&](auto&& self, std::size_t from, std::uint64_t left) -> void {
        if (!cur.empty()) out.push_back(RingDesc{cur});
        for (std::size_t i = from; i < atoms.size(); ++i) {
            std::uint64_t s = atoms[i].size();
            if (s > left) continue;
            cur.push_back(atoms[i]);
            self(self, i, left / s);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_ring_size);
    return out;
}

}  // namespace jlab
