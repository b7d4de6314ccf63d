#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "blink/seifert.hpp"

namespace blink {

// Basis change within each component: D -> P^T D P with P block-diagonal
// and |det P| = 1. P cannot mix components.
struct Congruence {
    IntMatrix p;
};

enum class EnlargeVariant { Alpha, Beta };

// Elementary enlargement at component i: two indices are appended at the end
// of block i. In variant Alpha the bordered matrix gains a column xi, a
// diagonal x and an off-diagonal 1 above the diagonal:
//
//     [ D   xi  0 ]
//     [ 0^T  x  1 ]
//     [ 0^T  0  0 ]
//
// drawn here with the new pair written last; the pair actually lives at the
// end of block i's index range. Variant Beta is the transpose pattern (xi as
// a row, the 1 below the diagonal). xi has the height of D before the move
// and may touch every component.
struct Enlarge {
    int component = 1;                    // 1-based
    EnlargeVariant variant = EnlargeVariant::Alpha;
    std::vector<Int> xi;
    Int x = 0;
};

// Inverse of an enlargement: removes the bordered pair starting at the given
// block-local position (0-based) inside block `component`. The border
// pattern of either variant must be present.
struct Reduce {
    int component = 1;
    int position = 0;
};

using Move = std::variant<Congruence, Enlarge, Reduce>;

SeifertMatrix apply_move(const SeifertMatrix& d, const Move& mv);

// Border data extracted by a reduction, sufficient to invert it.
struct BorderData {
    EnlargeVariant variant;
    std::vector<Int> xi;   // in the coordinates of the reduced matrix
    Int x;
};
std::pair<SeifertMatrix, BorderData> reduce_with_data(const SeifertMatrix& d,
                                                      int component, int position);

// Positions where a Reduce move currently applies.
struct ReduciblePattern {
    int component;
    int position;            // block-local, 0-based
    EnlargeVariant variant;
};
std::vector<ReduciblePattern> find_reducible(const SeifertMatrix& d);

// FNV-1a digest of the canonical serialization (components, sizes, entries);
// used to pin move logs to their endpoints.
std::string digest(const SeifertMatrix& d);

struct MoveLog {
    std::string initial_digest;
    std::vector<Move> moves;
    std::string final_digest;
    std::uint64_t seed = 0;
    // Set when the fuzzed input did not satisfy the unimodularity conditions.
    bool input_unimodular = true;
};

struct FuzzOptions {
    std::uint64_t seed = 0;
    int steps = 0;
    int entry_bound = 2;
    // Restrict enlargement columns to the target block. Off by default: the
    // stabilizing handle may link every component.
    bool xi_block_only = false;
};

struct FuzzResult {
    SeifertMatrix matrix;
    MoveLog log;
};

// Deterministic seeded walk through the move set: elementary congruence
// factors, enlargements, and reductions where a border is present.
FuzzResult fuzz(const SeifertMatrix& d, const FuzzOptions& options);

// Replays a log from its initial matrix; digests are checked on both ends.
SeifertMatrix replay(const SeifertMatrix& initial, const MoveLog& log);

} // namespace blink
