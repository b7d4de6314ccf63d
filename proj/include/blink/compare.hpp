#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blink/moves.hpp"
#include "blink/pairing.hpp"

namespace blink {

struct DistinctWitness {
    std::string field;
    std::string left;
    std::string right;
};

struct SearchStats {
    int entry_bound = 0;
    int factor_depth = 0;
    int enlarge_budget = 0;
    std::uint64_t states_explored = 0;
    bool cap_hit = false;
    std::string note;
};

// Three-valued answer. Distinct carries a recomputable witness field,
// Equivalent a certificate that replays from d0 to exactly d1,
// Inconclusive the search caps that were exhausted.
struct Verdict {
    enum class Kind { Equivalent, Distinct, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::optional<DistinctWitness> witness;   // Distinct
    std::vector<Move> certificate;            // Equivalent
    std::optional<SearchStats> stats;         // Inconclusive
    bool fingerprints_equal = false;
};

struct CompareOptions {
    int bound = 2;             // entry bound of elementary congruence factors
    int factor_depth = 6;      // total factors searched (both directions)
    int enlarge_budget = 1;    // reductions/stabilizations allowed per side
    std::uint64_t max_states = 200000;   // per-direction search cap
};

// Decision pipeline: fingerprint mismatch -> Distinct; bounded bidirectional
// search over elementary congruence factors, after normalizing visible
// borders away on both sides -> Equivalent with certificate; otherwise
// Inconclusive. Never returns a wrong verdict: Distinct is backed by a
// move-invariant field, Equivalent by a replayable move list.
Verdict compare(const SeifertMatrix& d0, const SeifertMatrix& d1,
                const CompareOptions& options = {});

// Replays the certificate from d0 and checks exact equality with d1.
// Independent of the search path in compare().
bool verify_certificate(const SeifertMatrix& d0, const SeifertMatrix& d1,
                        const std::vector<Move>& certificate);

} // namespace blink
