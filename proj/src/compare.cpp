#include "blink/compare.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace blink {

namespace {

// Elementary block-diagonal congruence factor. Indices are global and lie in
// one block; the set is closed under inverses.
struct Factor {
    enum class Kind { Transvect, Swap, Negate } kind;
    int a = 0;
    int b = 0;
    long c = 0;
};

std::vector<Factor> enumerate_factors(const SeifertMatrix& shape, int bound) {
    std::vector<Factor> out;
    for (int i = 1; i <= shape.components(); ++i) {
        const int off = shape.block_offset(i);
        const int mi = shape.block_sizes()[i - 1];
        for (int a = 0; a < mi; ++a)
            for (int b = 0; b < mi; ++b) {
                if (a == b) continue;
                for (long c = -bound; c <= bound; ++c)
                    if (c != 0)
                        out.push_back({Factor::Kind::Transvect, off + a, off + b, c});
            }
        for (int a = 0; a < mi; ++a)
            for (int b = a + 1; b < mi; ++b)
                out.push_back({Factor::Kind::Swap, off + a, off + b, 0});
        for (int a = 0; a < mi; ++a) out.push_back({Factor::Kind::Negate, off + a, 0, 0});
    }
    return out;
}

// In-place congruence D -> F^T D F for an elementary factor.
void apply_factor(IntMatrix& m, const Factor& f) {
    const int n = m.rows();
    switch (f.kind) {
        case Factor::Kind::Transvect:
            // F = I + c E_ab: row b += c * row a, then column b += c * column a
            for (int j = 0; j < n; ++j) m.at(f.b, j) += f.c * m.at(f.a, j);
            for (int i = 0; i < n; ++i) m.at(i, f.b) += f.c * m.at(i, f.a);
            break;
        case Factor::Kind::Swap:
            m.swap_rows(f.a, f.b);
            m.swap_cols(f.a, f.b);
            break;
        case Factor::Kind::Negate:
            for (int j = 0; j < n; ++j) m.at(f.a, j) = -m.at(f.a, j);
            for (int i = 0; i < n; ++i) m.at(i, f.a) = -m.at(i, f.a);
            break;
    }
}

IntMatrix factor_matrix(int size, const Factor& f) {
    IntMatrix p = IntMatrix::identity(size);
    switch (f.kind) {
        case Factor::Kind::Transvect:
            p.at(f.a, f.b) = f.c;
            break;
        case Factor::Kind::Swap:
            p.at(f.a, f.a) = 0;
            p.at(f.b, f.b) = 0;
            p.at(f.a, f.b) = 1;
            p.at(f.b, f.a) = 1;
            break;
        case Factor::Kind::Negate:
            p.at(f.a, f.a) = -1;
            break;
    }
    return p;
}

Factor inverse_factor(const Factor& f) {
    Factor inv = f;
    if (f.kind == Factor::Kind::Transvect) inv.c = -f.c;
    return inv;
}

std::string state_key(const IntMatrix& m) {
    std::string key;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            key += m.at(r, c).get_str();
            key += ',';
        }
    return key;
}

struct SearchNode {
    int parent = -1;
    int factor = -1;
};

struct Side {
    std::vector<SearchNode> nodes;
    std::vector<int> frontier;                         // node ids
    std::vector<IntMatrix> frontier_mats;
    std::unordered_map<std::string, int> visited;      // key -> node id
    int depth = 0;
};

std::vector<int> path_factors(const Side& side, int node) {
    std::vector<int> out;
    for (int at = node; side.nodes[at].parent >= 0; at = side.nodes[at].parent)
        out.push_back(side.nodes[at].factor);
    std::reverse(out.begin(), out.end());
    return out;
}

// Cumulative congruence matrix of a factor chain, in application order.
IntMatrix chain_product(int size, const std::vector<Factor>& factors,
                        const std::vector<int>& ids, bool invert) {
    IntMatrix p = IntMatrix::identity(size);
    if (!invert) {
        for (int id : ids) p = p * factor_matrix(size, factors[id]);
    } else {
        for (auto it = ids.rbegin(); it != ids.rend(); ++it)
            p = p * factor_matrix(size, inverse_factor(factors[*it]));
    }
    return p;
}

struct SearchOutcome {
    bool found = false;
    IntMatrix p;                      // P with P^T e0 P = e1
    std::uint64_t states = 0;
    bool cap_hit = false;
};

SearchOutcome congruence_search(const SeifertMatrix& e0, const SeifertMatrix& e1,
                                const CompareOptions& opt) {
    SearchOutcome outcome;
    const int size = e0.size();
    if (e0.entries() == e1.entries()) {
        outcome.found = true;
        outcome.p = IntMatrix::identity(size);
        return outcome;
    }
    const std::vector<Factor> factors = enumerate_factors(e0, opt.bound);
    if (factors.empty()) return outcome;

    Side fwd, bwd;
    auto init = [&](Side& side, const SeifertMatrix& start) {
        side.nodes.push_back({});
        side.frontier.push_back(0);
        side.frontier_mats.push_back(start.entries());
        side.visited.emplace(state_key(start.entries()), 0);
    };
    init(fwd, e0);
    init(bwd, e1);

    auto finish = [&](int fwd_node, int bwd_node) {
        IntMatrix p = chain_product(size, factors, path_factors(fwd, fwd_node), false);
        IntMatrix qinv = chain_product(size, factors, path_factors(bwd, bwd_node), true);
        outcome.found = true;
        outcome.p = p * qinv;
    };

    while (fwd.depth + bwd.depth < opt.factor_depth) {
        // expand the smaller frontier; a side whose orbit closed early is
        // skipped, the other may still walk into its visited set
        if (fwd.frontier.empty() && bwd.frontier.empty()) break;
        Side& mine = bwd.frontier.empty() ||
                             (!fwd.frontier.empty() &&
                              fwd.frontier.size() <= bwd.frontier.size())
                         ? fwd
                         : bwd;
        Side& other = &mine == &fwd ? bwd : fwd;

        std::vector<int> next;
        std::vector<IntMatrix> next_mats;
        for (size_t idx = 0; idx < mine.frontier.size(); ++idx) {
            const int node = mine.frontier[idx];
            for (size_t fid = 0; fid < factors.size(); ++fid) {
                IntMatrix child = mine.frontier_mats[idx];
                apply_factor(child, factors[fid]);
                std::string key = state_key(child);
                if (mine.visited.contains(key)) continue;
                if (outcome.states + 1 > opt.max_states) {
                    outcome.cap_hit = true;
                    return outcome;
                }
                ++outcome.states;
                const int child_id = static_cast<int>(mine.nodes.size());
                mine.nodes.push_back({node, static_cast<int>(fid)});
                mine.visited.emplace(key, child_id);
                auto hit = other.visited.find(key);
                if (hit != other.visited.end()) {
                    if (&mine == &fwd)
                        finish(child_id, hit->second);
                    else
                        finish(hit->second, child_id);
                    return outcome;
                }
                next.push_back(child_id);
                next_mats.push_back(std::move(child));
            }
        }
        mine.frontier = std::move(next);
        mine.frontier_mats = std::move(next_mats);
        ++mine.depth;
    }
    return outcome;
}

struct Normalized {
    SeifertMatrix matrix;
    std::vector<Move> reductions;   // applied moves, in order
    // data to invert each reduction, in application order
    std::vector<std::tuple<int, int, BorderData>> inversions;
    int used = 0;
};

// All matrices reachable by at most `budget` reductions, in breadth-first
// order (the unreduced matrix comes first). Base matrices can contain border
// patterns of their own, so no single greedy choice is safe; the search tries
// every bounded reduction sequence.
std::vector<Normalized> reduction_closure(const SeifertMatrix& d, int budget) {
    constexpr size_t kClosureCap = 64;
    std::vector<Normalized> out{{d, {}, {}, 0}};
    std::vector<std::string> seen{digest(d)};
    size_t cursor = 0;
    while (cursor < out.size() && out.size() < kClosureCap) {
        const Normalized state = out[cursor++];
        if (state.used >= budget) continue;
        for (const auto& pat : find_reducible(state.matrix)) {
            auto [reduced, data] = reduce_with_data(state.matrix, pat.component, pat.position);
            std::string key = digest(reduced);
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
            seen.push_back(std::move(key));
            Normalized next = state;
            next.matrix = std::move(reduced);
            next.reductions.push_back(Reduce{pat.component, pat.position});
            next.inversions.emplace_back(pat.component, pat.position, data);
            ++next.used;
            out.push_back(std::move(next));
            if (out.size() >= kClosureCap) break;
        }
    }
    return out;
}

// Moves rebuilding the pre-reduction matrix from `reduced`: an enlargement at
// the block end, then a permutation shifting the pair to its home position.
std::vector<Move> invert_reduction(const SeifertMatrix& reduced, int component, int position,
                                   const BorderData& data) {
    std::vector<Move> out;
    out.push_back(Enlarge{component, data.variant, data.xi, data.x});
    const int mi = reduced.block_sizes()[component - 1];   // block size before re-enlarging
    if (position != mi) {
        const int off = reduced.block_offset(component);
        const int total = reduced.size() + 2;
        std::vector<int> perm(total);
        for (int k = 0; k < total; ++k) perm[k] = k;
        // inside the block: [0..pos-1, end-pair, pos..mi-1]
        for (int k = 0; k < position; ++k) perm[off + k] = off + k;
        perm[off + position] = off + mi;
        perm[off + position + 1] = off + mi + 1;
        for (int k = position; k < mi; ++k) perm[off + k + 2] = off + k;
        IntMatrix p(total, total);
        for (int i = 0; i < total; ++i) p.at(perm[i], i) = 1;
        out.push_back(Congruence{std::move(p)});
    }
    return out;
}

Verdict distinct_verdict(const std::string& field, std::string left, std::string right) {
    Verdict v;
    v.kind = Verdict::Kind::Distinct;
    v.witness = DistinctWitness{field, std::move(left), std::move(right)};
    return v;
}

Verdict inconclusive_verdict(const CompareOptions& opt, std::uint64_t states, bool cap_hit,
                             std::string note) {
    Verdict v;
    v.kind = Verdict::Kind::Inconclusive;
    v.fingerprints_equal = true;
    v.stats = SearchStats{opt.bound, opt.factor_depth, opt.enlarge_budget,
                          states, cap_hit, std::move(note)};
    return v;
}

} // namespace

Verdict compare(const SeifertMatrix& d0, const SeifertMatrix& d1,
                const CompareOptions& options) {
    if (d0.components() != d1.components())
        return distinct_verdict("n", std::to_string(d0.components()),
                                std::to_string(d1.components()));

    const auto fields0 = fingerprint_fields(fingerprint(d0));
    const auto fields1 = fingerprint_fields(fingerprint(d1));
    for (size_t i = 0; i < fields0.size(); ++i)
        if (fields0[i].second != fields1[i].second)
            return distinct_verdict(fields0[i].first, fields0[i].second, fields1[i].second);

    if (d0 == d1) {
        Verdict v;
        v.kind = Verdict::Kind::Equivalent;
        v.fingerprints_equal = true;
        v.certificate.push_back(Congruence{IntMatrix::identity(d0.size())});
        return v;
    }

    const std::vector<Normalized> left_states = reduction_closure(d0, options.enlarge_budget);
    const std::vector<Normalized> right_states = reduction_closure(d1, options.enlarge_budget);

    // candidate endpoint pairs for the congruence search; a trivial
    // stabilization may be appended on one side to match block partitions
    struct Candidate {
        const Normalized* left_base;
        const Normalized* right_base;
        SeifertMatrix left;
        SeifertMatrix right;
        std::vector<Move> left_extra;     // moves from left_base to `left`
        std::vector<Move> right_suffix;   // moves from `right` back to right_base
        int cost;
    };
    std::vector<Candidate> candidates;
    for (const Normalized& l : left_states) {
        for (const Normalized& r : right_states) {
            if (l.matrix.block_sizes() == r.matrix.block_sizes()) {
                candidates.push_back(
                    {&l, &r, l.matrix, r.matrix, {}, {}, l.used + r.used});
                continue;
            }
            const int ml = l.matrix.size(), mr = r.matrix.size();
            if (mr - ml == 2 && l.used < options.enlarge_budget) {
                for (int i = 1; i <= l.matrix.components(); ++i) {
                    Enlarge stab{i, EnlargeVariant::Alpha, std::vector<Int>(ml, Int(0)), 0};
                    SeifertMatrix grown = apply_move(l.matrix, stab);
                    if (grown.block_sizes() != r.matrix.block_sizes()) continue;
                    candidates.push_back({&l, &r, std::move(grown), r.matrix,
                                          {Move(stab)}, {}, l.used + r.used + 1});
                }
            } else if (ml - mr == 2 && r.used < options.enlarge_budget) {
                for (int i = 1; i <= r.matrix.components(); ++i) {
                    Enlarge stab{i, EnlargeVariant::Alpha, std::vector<Int>(mr, Int(0)), 0};
                    SeifertMatrix grown = apply_move(r.matrix, stab);
                    if (grown.block_sizes() != l.matrix.block_sizes()) continue;
                    // the stabilized pair sits at the end of block i
                    Reduce undo{i, r.matrix.block_sizes()[i - 1]};
                    candidates.push_back({&l, &r, l.matrix, std::move(grown),
                                          {}, {Move(undo)}, l.used + r.used + 1});
                }
            }
        }
    }
    if (candidates.empty())
        return inconclusive_verdict(options, 0, false,
                                    "block partitions differ after normalization");
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.cost < b.cost; });
    // the per-direction cap applies to each endpoint pair; bound the number
    // of pairs so the total work stays finite on border-rich inputs
    constexpr size_t kCandidateCap = 32;
    bool cap_hit = candidates.size() > kCandidateCap;
    if (cap_hit)
        candidates.erase(candidates.begin() + kCandidateCap, candidates.end());

    std::uint64_t states = 0;
    for (const Candidate& cand : candidates) {
        SearchOutcome outcome = congruence_search(cand.left, cand.right, options);
        states += outcome.states;
        cap_hit = cap_hit || outcome.cap_hit;
        if (!outcome.found) continue;

        Verdict v;
        v.kind = Verdict::Kind::Equivalent;
        v.fingerprints_equal = true;
        v.certificate = cand.left_base->reductions;
        for (const Move& mv : cand.left_extra) v.certificate.push_back(mv);
        if (!(outcome.p == IntMatrix::identity(cand.left.size())))
            v.certificate.push_back(Congruence{outcome.p});
        for (const Move& mv : cand.right_suffix) v.certificate.push_back(mv);

        // invert the d1-side reductions in reverse order; each inversion is
        // built against the matrix its reduction produced
        const auto& inversions = cand.right_base->inversions;
        std::vector<SeifertMatrix> stages{d1};
        for (const auto& [comp, pos, data] : inversions)
            stages.push_back(reduce_with_data(stages.back(), comp, pos).first);
        for (size_t k = inversions.size(); k-- > 0;) {
            const auto& [comp, pos, data] = inversions[k];
            for (Move& mv : invert_reduction(stages[k + 1], comp, pos, data))
                v.certificate.push_back(std::move(mv));
        }
        if (v.certificate.empty())
            v.certificate.push_back(Congruence{IntMatrix::identity(d0.size())});
        return v;
    }

    std::string note = cap_hit ? "state cap exhausted" : "factor depth exhausted";
    return inconclusive_verdict(options, states, cap_hit, note);
}

bool verify_certificate(const SeifertMatrix& d0, const SeifertMatrix& d1,
                        const std::vector<Move>& certificate) {
    SeifertMatrix current = d0;
    for (const Move& mv : certificate) current = apply_move(current, mv);
    return current == d1;
}

} // namespace blink
