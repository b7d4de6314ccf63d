#include "blink/moves.hpp"

#include <cstdio>
#include <optional>
#include <random>

namespace blink {

namespace {

void validate_congruence(const SeifertMatrix& d, const IntMatrix& p) {
    const int m = d.size();
    if (p.rows() != m || p.cols() != m)
        throw ValidationError("congruence matrix has the wrong shape");
    // block-diagonal: nothing outside the diagonal blocks
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            if (d.component_of(r) != d.component_of(c) && p.at(r, c) != 0)
                throw ValidationError("congruence matrix is not block-diagonal");
    if (abs(det(p)) != 1)
        throw ValidationError("congruence matrix is not unimodular");
}

SeifertMatrix apply_congruence(const SeifertMatrix& d, const Congruence& mv) {
    validate_congruence(d, mv.p);
    return SeifertMatrix(d.components(), d.block_sizes(),
                         mv.p.transpose() * d.entries() * mv.p);
}

SeifertMatrix apply_enlarge(const SeifertMatrix& d, const Enlarge& mv) {
    const int n = d.components();
    const int m = d.size();
    if (mv.component < 1 || mv.component > n)
        throw ValidationError("enlarge component out of range");
    if (static_cast<int>(mv.xi.size()) != m)
        throw ValidationError("enlarge column has the wrong height");

    // the new pair of indices sits at the end of block `component`
    const int p = d.block_offset(mv.component) + d.block_sizes()[mv.component - 1];
    auto shift = [p](int k) { return k < p ? k : k + 2; };

    IntMatrix out(m + 2, m + 2);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) out.at(shift(r), shift(c)) = d.entries().at(r, c);
    out.at(p, p) = mv.x;
    if (mv.variant == EnlargeVariant::Alpha) {
        for (int r = 0; r < m; ++r) out.at(shift(r), p) = mv.xi[r];
        out.at(p, p + 1) = 1;
    } else {
        for (int c = 0; c < m; ++c) out.at(p, shift(c)) = mv.xi[c];
        out.at(p + 1, p) = 1;
    }

    std::vector<int> sizes = d.block_sizes();
    sizes[mv.component - 1] += 2;
    return SeifertMatrix(n, std::move(sizes), std::move(out));
}

// Checks the border pattern of either variant at the adjacent global pair
// (p, p+1); returns the matching variant or nothing.
std::optional<EnlargeVariant> border_variant(const IntMatrix& e, int p) {
    const int m = e.rows();
    const int q = p + 1;
    auto zero_row = [&](int r, int except_a, int except_b) {
        for (int c = 0; c < m; ++c)
            if (c != except_a && c != except_b && e.at(r, c) != 0) return false;
        return true;
    };
    auto zero_col = [&](int c, int except_a, int except_b) {
        for (int r = 0; r < m; ++r)
            if (r != except_a && r != except_b && e.at(r, c) != 0) return false;
        return true;
    };
    if (e.at(p, q) == 1 && zero_row(q, -1, -1) && zero_col(q, p, -1) && zero_row(p, p, q))
        return EnlargeVariant::Alpha;
    if (e.at(q, p) == 1 && zero_col(q, -1, -1) && zero_row(q, p, -1) && zero_col(p, p, q))
        return EnlargeVariant::Beta;
    return std::nullopt;
}

} // namespace

std::pair<SeifertMatrix, BorderData> reduce_with_data(const SeifertMatrix& d,
                                                      int component, int position) {
    const int n = d.components();
    if (component < 1 || component > n)
        throw ValidationError("reduce component out of range");
    const int mi = d.block_sizes()[component - 1];
    if (position < 0 || position + 2 > mi)
        throw PreconditionError("reduce position is outside the block");
    const int p = d.block_offset(component) + position;
    const IntMatrix& e = d.entries();
    auto variant = border_variant(e, p);
    if (!variant)
        throw PreconditionError("no border pattern at the requested position");

    const int m = d.size();
    BorderData data{*variant, {}, e.at(p, p)};
    data.xi.reserve(m - 2);
    std::vector<int> keep;
    keep.reserve(m - 2);
    for (int k = 0; k < m; ++k)
        if (k != p && k != p + 1) keep.push_back(k);
    for (int k : keep)
        data.xi.push_back(*variant == EnlargeVariant::Alpha ? e.at(k, p) : e.at(p, k));

    std::vector<int> sizes = d.block_sizes();
    sizes[component - 1] -= 2;
    return {SeifertMatrix(n, std::move(sizes), e.select(keep, keep)), std::move(data)};
}

SeifertMatrix apply_move(const SeifertMatrix& d, const Move& mv) {
    return std::visit(
        [&](const auto& m) -> SeifertMatrix {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Congruence>) {
                return apply_congruence(d, m);
            } else if constexpr (std::is_same_v<T, Enlarge>) {
                return apply_enlarge(d, m);
            } else {
                return reduce_with_data(d, m.component, m.position).first;
            }
        },
        mv);
}

std::vector<ReduciblePattern> find_reducible(const SeifertMatrix& d) {
    std::vector<ReduciblePattern> out;
    for (int i = 1; i <= d.components(); ++i) {
        const int off = d.block_offset(i);
        const int mi = d.block_sizes()[i - 1];
        for (int pos = 0; pos + 2 <= mi; ++pos) {
            if (auto v = border_variant(d.entries(), off + pos))
                out.push_back({i, pos, *v});
        }
    }
    return out;
}

std::string digest(const SeifertMatrix& d) {
    std::string text = std::to_string(d.components());
    text += ';';
    for (int s : d.block_sizes()) {
        text += std::to_string(s);
        text += ',';
    }
    text += ';';
    for (int r = 0; r < d.size(); ++r)
        for (int c = 0; c < d.size(); ++c) {
            text += d.entries().at(r, c).get_str();
            text += ',';
        }
    std::uint64_t h = 1469598103934665603ull;   // FNV-1a
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // draws stay portable: no distribution objects
    std::uint64_t pick(std::uint64_t k) { return eng_() % k; }
    long range(long lo, long hi) { return lo + static_cast<long>(pick(hi - lo + 1)); }
    long nonzero(long bound) {
        long v = range(1, bound);
        return pick(2) ? v : -v;
    }

private:
    std::mt19937_64 eng_;
};

Move random_congruence(const SeifertMatrix& d, Rng& rng, int entry_bound) {
    const int n = d.components();
    std::vector<int> nonempty, wide;
    for (int i = 1; i <= n; ++i) {
        if (d.block_sizes()[i - 1] >= 1) nonempty.push_back(i);
        if (d.block_sizes()[i - 1] >= 2) wide.push_back(i);
    }
    IntMatrix p = IntMatrix::identity(d.size());
    const int kind = static_cast<int>(rng.pick(3));
    if (kind <= 1 && !wide.empty()) {
        // transvection within a block
        int i = wide[rng.pick(wide.size())];
        int off = d.block_offset(i), mi = d.block_sizes()[i - 1];
        int a = static_cast<int>(rng.pick(mi));
        int b = static_cast<int>(rng.pick(mi - 1));
        if (b >= a) ++b;
        p.at(off + a, off + b) = rng.nonzero(entry_bound);
    } else if (kind == 2 && !wide.empty() && rng.pick(2) == 0) {
        // swap within a block
        int i = wide[rng.pick(wide.size())];
        int off = d.block_offset(i), mi = d.block_sizes()[i - 1];
        int a = static_cast<int>(rng.pick(mi));
        int b = static_cast<int>(rng.pick(mi - 1));
        if (b >= a) ++b;
        p.at(off + a, off + a) = 0;
        p.at(off + b, off + b) = 0;
        p.at(off + a, off + b) = 1;
        p.at(off + b, off + a) = 1;
    } else {
        // sign flip
        int i = nonempty[rng.pick(nonempty.size())];
        int off = d.block_offset(i), mi = d.block_sizes()[i - 1];
        int a = static_cast<int>(rng.pick(mi));
        p.at(off + a, off + a) = -1;
    }
    return Congruence{std::move(p)};
}

Move random_enlarge(const SeifertMatrix& d, Rng& rng, const FuzzOptions& options) {
    Enlarge mv;
    mv.component = 1 + static_cast<int>(rng.pick(d.components()));
    mv.variant = rng.pick(2) ? EnlargeVariant::Alpha : EnlargeVariant::Beta;
    mv.x = rng.range(-options.entry_bound, options.entry_bound);
    mv.xi.resize(d.size());
    const int off = d.block_offset(mv.component);
    const int mi = d.block_sizes()[mv.component - 1];
    for (int k = 0; k < d.size(); ++k) {
        if (options.xi_block_only && (k < off || k >= off + mi)) {
            mv.xi[k] = 0;
            continue;
        }
        mv.xi[k] = rng.range(-options.entry_bound, options.entry_bound);
    }
    return mv;
}

} // namespace

FuzzResult fuzz(const SeifertMatrix& d, const FuzzOptions& options) {
    if (options.steps < 0) throw ValidationError("step count must be nonnegative");
    if (options.entry_bound < 1) throw ValidationError("entry bound must be >= 1");
    Rng rng(options.seed);
    MoveLog log;
    log.seed = options.seed;
    log.input_unimodular = check_unimodularity(d).pass;
    log.initial_digest = digest(d);

    SeifertMatrix current = d;
    bool has_nonempty_block = false;
    for (int s : current.block_sizes()) has_nonempty_block |= s > 0;
    for (int step = 0; step < options.steps; ++step) {
        const std::uint64_t roll = rng.pick(100);
        Move mv = Congruence{IntMatrix::identity(current.size())};
        if (!has_nonempty_block || (roll >= 62 && roll < 80)) {
            mv = random_enlarge(current, rng, options);
        } else if (roll >= 80) {
            auto patterns = find_reducible(current);
            if (!patterns.empty()) {
                const auto& pat = patterns[rng.pick(patterns.size())];
                mv = Reduce{pat.component, pat.position};
            } else {
                mv = random_congruence(current, rng, options.entry_bound);
            }
        } else {
            mv = random_congruence(current, rng, options.entry_bound);
        }
        current = apply_move(current, mv);
        log.moves.push_back(std::move(mv));
        has_nonempty_block = false;
        for (int s : current.block_sizes()) has_nonempty_block |= s > 0;
    }
    log.final_digest = digest(current);
    return {std::move(current), std::move(log)};
}

SeifertMatrix replay(const SeifertMatrix& initial, const MoveLog& log) {
    if (digest(initial) != log.initial_digest)
        throw ValidationError("initial digest does not match the log");
    SeifertMatrix current = initial;
    for (const Move& mv : log.moves) current = apply_move(current, mv);
    if (digest(current) != log.final_digest)
        throw ValidationError("final digest does not match the log");
    return current;
}

} // namespace blink
