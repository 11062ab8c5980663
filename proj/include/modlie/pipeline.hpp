#pragma once

#include "modlie/envelope.hpp"
#include "modlie/induced.hpp"
#include "modlie/meataxe.hpp"

namespace modlie {

enum class BoundKind { restricted, general };

struct PipelineOptions {
    std::uint64_t seed = 1;
    unsigned max_module_dim = 4096;
    EnvelopeMode envelope_mode = EnvelopeMode::paper;
};

// Deterministic record of one construction run: which branch fired at every
// recursion level, the summand dimensions with irreducibility witnesses,
// the dimension bound certified, and the outcome of every check performed.
// serialize() is byte-stable for a fixed (input, seed) pair.
struct Certificate {
    BoundKind kind = BoundKind::general;
    std::uint64_t seed = 0;
    std::string input_hash;
    std::vector<std::string> trace;
    std::size_t module_dim = 0;
    std::uint64_t bound = 0;  // saturates at the top of the 64-bit range
    std::vector<std::size_t> summand_dims;
    std::vector<std::string> witnesses;  // parallel to summand_dims
    std::vector<std::string> checks;     // "name: pass" / "name: fail (...)"
    bool ok = false;

    std::string serialize() const;
};

// A faithful completely reducible module presented as an explicit direct
// sum of irreducible summands, with its construction certificate.
struct FaithfulResult {
    LieModule module;
    std::vector<LieModule> summands;
    Certificate certificate;

    FaithfulResult() : module(0, 0, 2) {}
};

// Faithful completely reducible module of dimension at most p^(n-1) for a
// restricted algebra on n basis elements.
FaithfulResult faithful_cr_restricted(const RestrictedAlgebra& r,
                                      const PipelineOptions& opt = {});

// Faithful completely reducible module of dimension at most p^(n^2-1) for
// an arbitrary algebra on n basis elements.
FaithfulResult faithful_cr(const LieAlgebra& l, const PipelineOptions& opt = {});

// Independent re-check of a result: representation law, zero kernel, the
// direct-sum presentation, irreducibility of every summand re-established
// with a fresh seed, and the dimension bound.  Never throws on a failed
// check; the verdict is the returned certificate's ok flag.
Certificate verify_certificate(const LieAlgebra& l, const FaithfulResult& res,
                               BoundKind kind, std::uint64_t fresh_seed);

// p^e with saturation instead of overflow.
std::uint64_t pow_saturating(std::uint64_t base, std::uint64_t exp);

// FNV-1a-64 of a canonical encoding, as 16 hex digits.
std::string input_hash(const LieAlgebra& l);
std::string input_hash(const RestrictedAlgebra& r);

}  // namespace modlie
