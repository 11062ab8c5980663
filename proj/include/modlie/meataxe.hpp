#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlie/module.hpp"
#include "modlie/rng.hpp"

namespace modlie {

// Raised when the randomized chop fails to reach a decision within its word
// budget; callers may retry with a different seed.
struct chop_budget_error : std::runtime_error {
    explicit chop_budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Reproducibility record for one chop decision: the seed, which candidate
// element settled the question, its human-readable word expression, and the
// degree of the characteristic-polynomial factor used.
struct ChopWitness {
    std::uint64_t seed = 0;
    unsigned word_index = 0;
    std::string word;
    unsigned factor_degree = 0;
};

struct ChopOutcome {
    std::optional<Subspace> submodule;  // proper nonzero invariant subspace
    std::optional<ChopWitness> witness;
    bool irreducible() const { return !submodule.has_value(); }
};

// One step of the randomized irreducibility test: either exhibits a proper
// nonzero invariant subspace or certifies irreducibility.  Candidate
// elements are seeded combinations of short words in the action matrices;
// a factor of multiplicity one enables the transpose-spin certificate.
ChopOutcome chop(const LieModule& m, std::uint64_t seed);

struct FactorEntry {
    LieModule module;
    ChopWitness witness;
};

// Multiset of composition factors, found by recursive chopping.
std::vector<FactorEntry> composition_factors(const LieModule& m, std::uint64_t seed);

// Ascending chain 0 < F_1 < ... < F_k = full with irreducible quotients,
// as subspaces of the module's own coordinate space.
std::vector<Subspace> composition_flag(const LieModule& m, std::uint64_t seed);

struct MinimalSubmodule {
    Subspace space;      // in the coordinates of the input module
    LieModule module;    // the irreducible module structure on it
    ChopWitness witness; // certifies irreducibility of the result
};

// Chop downward until irreducible; returns an irreducible submodule.
MinimalSubmodule find_minimal_submodule(const LieModule& m, std::uint64_t seed);
inline MinimalSubmodule irreducible_submodule(const LieModule& m, std::uint64_t seed) {
    return find_minimal_submodule(m, seed);
}

// Basis of the unital associative algebra generated by the action matrices
// (closure of {I, rho(e_i)} under products).
std::vector<FpMatrix> action_algebra_basis(const LieModule& m);

// Basis of the radical of that algebra: the elements carrying each member
// of a composition flag into its predecessor.
std::vector<FpMatrix> action_radical(const LieModule& m, std::uint64_t seed);

// Largest semisimple submodule: the annihilator of the action radical.
Subspace socle(const LieModule& m, std::uint64_t seed);

struct SocleSummand {
    Subspace space;  // in the module's coordinates
    ChopWitness witness;
};

// A full decomposition of the socle into irreducible direct summands,
// obtained by repeatedly splitting off a minimal submodule and solving for
// a module-homomorphism complement.
std::vector<SocleSummand> socle_summands(const LieModule& m, std::uint64_t seed);

struct IdealReport {
    Subspace socle;                        // socle of the adjoint module
    std::vector<Subspace> witnesses;       // minimal ideals found
    std::vector<ChopWitness> certificates; // chop certificates, parallel
    bool unique = false;                   // exactly one minimal ideal exists
};

// Decides whether the algebra has a unique minimal ideal.  With two or more
// socle summands the ideal lattice has two distinct minimal members; with a
// single summand the socle itself is the unique minimal ideal.
IdealReport minimal_ideal_report(const LieAlgebra& l, std::uint64_t seed);

// Sum of the abelian minimal ideals (abelian part of the adjoint socle).
Subspace abelian_socle(const LieAlgebra& l, std::uint64_t seed);

}  // namespace modlie
