#pragma once

#include <cstdint>
#include <vector>

#include "jlab/ring.hpp"

namespace jlab {

// Every representable ring of size <= max_ring_size built from local atoms
// of size <= max_atom_size, one per atom multiset (component order does not
// change the ring up to isomorphism). Deterministic order.
std::vector<RingDesc> enumerate_catalog(std::uint64_t max_ring_size,
                                        std::uint64_t max_atom_size = 32);

}  // namespace jlab
