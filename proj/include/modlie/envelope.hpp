#pragma once

#include "modlie/pmap.hpp"

namespace modlie {

enum class EnvelopeMode { paper, compact };

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(const std::string& msg) {
        ok = false;
        failures.push_back(msg);
    }
};

// One generator's tower of p-power symbols and how it was closed: either a
// dependency combination of earlier symbols (lambda) or an element of the
// host realizing the required adjoint action (realized).
struct EnvelopeChain {
    unsigned generator = 0;          // host index of the generator
    std::vector<unsigned> symbols;   // host indices of its power symbols
    std::vector<unsigned> lambda;    // closure coefficients, when applicable
    bool closed_by_realization = false;
    Vec realized;                    // closing element, when applicable
};

// A restricted algebra containing the input as an ideal, with the brackets
// of all added symbols landing inside the embedded copy.
struct Envelope {
    RestrictedAlgebra host;
    unsigned original_dim = 0;
    FpMatrix l_embedding;   // n x N: host coordinates of the original basis
    Subspace abelian_ideal; // image of the designated ideal, host coordinates
    std::vector<EnvelopeChain> chains;
    FpMatrix reorder;       // n x n: working basis rows in original coordinates

    Envelope() : host{LieAlgebra(0, 2), {}}, l_embedding(0, 0, 2),
                 abelian_ideal(0, 2), reorder(0, 0, 2) {}
};

// Embeds l into a restricted algebra by adjoining iterated-power symbols
// for the generators outside the abelian ideal a.  In paper mode each
// non-central generator receives its first symbol unconditionally and
// towers close by dependency of adjoint powers (falling back to realizing
// the action inside the host); compact mode tries the realization first at
// every step, so restrictable algebras come back unchanged.
Envelope build_envelope(const LieAlgebra& l, const Subspace& a,
                        EnvelopeMode mode = EnvelopeMode::paper);

// Re-checks everything the construction promises: Jacobi, the p-operation,
// the embedding being a bracket-preserving injection onto an ideal,
// derived(host) inside the image, the dimension bound n(n-d+1), the
// designated ideal staying an abelian ideal, symbol-table consistency, and
// that every supplied ideal of the original algebra embeds as an ideal.
CheckReport verify_envelope(const Envelope& e, const std::vector<Subspace>& ideals = {});

}  // namespace modlie
