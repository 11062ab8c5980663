#pragma once

#include <optional>
#include <string>

#include "modlie/pmap.hpp"
#include "modlie/rng.hpp"

namespace modlie {

// A named algebra with its standard restricted structure (when one is
// designated) and the abelian ideal its envelope constructions use.
struct CorpusEntry {
    std::string name;
    LieAlgebra algebra;
    std::optional<PMap> pmap;
    Subspace designated_abelian;

    CorpusEntry() : algebra(0, 2), designated_abelian(0, 2) {}
};

// Ab(1..3) at p=2; NA2 at p in {2,3,5}; H3 at p in {2,3}; SL2 at p=5;
// NR3 at p=2; W15 (the truncated Witt algebra) at p=5.
std::vector<CorpusEntry> builtin_corpus();

// Random sparse structure-constant table, rejected until Jacobi holds, then
// dressed by a random change of basis (which preserves Jacobi).
LieAlgebra random_jacobi_valid(size_t n, unsigned p, std::uint64_t seed);

}  // namespace modlie
