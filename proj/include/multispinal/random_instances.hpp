#pragma once

#include <cstdint>
#include <vector>

#include "multispinal/instance.hpp"

namespace multispinal {

// Seeded generator of valid instances for the randomized criteria campaign:
// |B| <= 4 and |X| <= 4 with the free action a disjoint union of regular
// orbits (including non-transitive ones). Every group of order <= 4 is
// abelian, so homomorphisms A -> B kill the commutator subgroup and are
// B-exponent-periodic; faithfulness therefore forces A abelian with exponent
// dividing that of B, and the catalog is exactly those cyclic products with
// |A| <= 16. Draws psi letter maps from the enumerated automorphisms and
// homomorphisms and rejects unfaithful draws. Deterministic for a fixed seed.
std::vector<MultispinalInstance> random_instances(int count, std::uint64_t seed);

}  // namespace multispinal
