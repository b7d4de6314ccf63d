#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "blink/compare.hpp"
#include "blink/errors.hpp"
#include "blink/io.hpp"
#include "blink/moves.hpp"
#include "blink/pairing.hpp"

namespace {

int run_check(const std::string& path) {
    blink::SeifertDocument doc = blink::load_document(path);
    blink::UnimodularityReport report = blink::check_unimodularity(doc.matrix);
    std::cout << blink::dump_canonical(blink::to_json(report));
    return report.pass ? 0 : 1;
}

int run_invariants(const std::string& path) {
    blink::SeifertDocument doc = blink::load_document(path);
    std::cout << blink::dump_canonical(blink::to_json(blink::fingerprint(doc.matrix)));
    return 0;
}

int run_alexander(const std::string& path, int ideal) {
    blink::SeifertDocument doc = blink::load_document(path);
    nlohmann::json j;
    if (ideal < 0 && doc.matrix.components() == 1) {
        blink::LaurentPoly delta = blink::alexander_knot(doc.matrix);
        j["alexander"] = delta.str();
        j["coefficients"] = blink::to_json(delta);
    } else {
        const int k = ideal < 0 ? 0 : ideal;
        nlohmann::json gens = nlohmann::json::array();
        for (const blink::LaurentPoly& g : blink::alexander_ideal(doc.matrix, k))
            gens.push_back(g.str());
        j["k"] = k;
        j["generators"] = std::move(gens);
    }
    std::cout << blink::dump_canonical(j);
    return 0;
}

int run_phi(const std::string& path) {
    blink::SeifertDocument doc = blink::load_document(path);
    std::cout << blink::dump_canonical(blink::to_json(blink::build_phi(doc.matrix)));
    return 0;
}

std::string bits_str(const std::vector<int>& bits) {
    std::string out = "[";
    for (size_t i = 0; i < bits.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(bits[i]);
    }
    return out + "]";
}

int run_compare(const std::string& path0, const std::string& path1,
                const blink::CompareOptions& options) {
    blink::SeifertDocument doc0 = blink::load_document(path0);
    blink::SeifertDocument doc1 = blink::load_document(path1);
    // Kirby-Siebenmann data is compared verbatim under the given component
    // enumeration whenever both documents carry it.
    if (doc0.ks && doc1.ks && *doc0.ks != *doc1.ks) {
        blink::Verdict v;
        v.kind = blink::Verdict::Kind::Distinct;
        v.witness = blink::DistinctWitness{"ks", bits_str(*doc0.ks), bits_str(*doc1.ks)};
        std::cout << blink::dump_canonical(blink::to_json(v));
        return 1;
    }
    blink::Verdict verdict = blink::compare(doc0.matrix, doc1.matrix, options);
    std::cout << blink::dump_canonical(blink::to_json(verdict));
    switch (verdict.kind) {
        case blink::Verdict::Kind::Equivalent: return 0;
        case blink::Verdict::Kind::Distinct: return 1;
        case blink::Verdict::Kind::Inconclusive: return 3;
    }
    return 2;
}

int run_fuzz(const std::string& path, const blink::FuzzOptions& options,
             const std::string& log_path) {
    blink::SeifertDocument doc = blink::load_document(path);
    blink::FuzzResult result = blink::fuzz(doc.matrix, options);
    blink::SeifertDocument out{result.matrix, std::nullopt, std::nullopt, doc.label};
    nlohmann::json j{{"document", blink::to_json(out)}, {"log", blink::to_json(result.log)}};
    std::cout << blink::dump_canonical(j);
    if (!log_path.empty()) {
        std::ofstream f(log_path);
        if (!f) throw blink::ValidationError(log_path + ": cannot open for writing");
        f << blink::dump_canonical(blink::to_json(result.log));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants and l-equivalence tools for blocked Seifert matrices"};
    app.require_subcommand(1);

    std::string file0, file1, emit_log;
    int ideal = -1;
    blink::CompareOptions copts;
    blink::FuzzOptions fopts;
    fopts.steps = 10;

    CLI::App* check = app.add_subcommand("check", "Check the unimodularity conditions");
    check->add_option("file", file0, "Seifert document")->required();

    CLI::App* invariants =
        app.add_subcommand("invariants", "Move-invariant fingerprint of a matrix");
    invariants->add_option("file", file0, "Seifert document")->required();

    CLI::App* alexander =
        app.add_subcommand("alexander", "Alexander polynomial / elementary ideal generators");
    alexander->add_option("file", file0, "Seifert document")->required();
    alexander->add_option("--ideal", ideal, "Order k of the elementary ideal");

    CLI::App* phi = app.add_subcommand("phi", "Presentation matrix of pi_2 over Z[F_n]");
    phi->add_option("file", file0, "Seifert document")->required();

    CLI::App* cmp = app.add_subcommand("compare", "Decide equivalence of two matrices");
    cmp->add_option("file0", file0, "First document")->required();
    cmp->add_option("file1", file1, "Second document")->required();
    cmp->add_option("--bound", copts.bound, "Entry bound for congruence factors");
    cmp->add_option("--enlarge", copts.enlarge_budget, "Enlargement/reduction budget per side");
    cmp->add_option("--depth", copts.factor_depth, "Maximum number of congruence factors");
    cmp->add_option("--max-states", copts.max_states, "Search state cap per direction");

    CLI::App* fuzz = app.add_subcommand("fuzz", "Apply a seeded random move sequence");
    fuzz->add_option("file", file0, "Seifert document")->required();
    fuzz->add_option("--seed", fopts.seed, "64-bit seed");
    fuzz->add_option("--steps", fopts.steps, "Number of moves");
    fuzz->add_option("--entry-bound", fopts.entry_bound, "Entry bound for random moves");
    fuzz->add_flag("--xi-block-only", fopts.xi_block_only,
                   "Restrict enlargement columns to the target block");
    fuzz->add_option("--emit-log", emit_log, "Write the move log to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) return run_check(file0);
        if (app.got_subcommand(invariants)) return run_invariants(file0);
        if (app.got_subcommand(alexander)) return run_alexander(file0, ideal);
        if (app.got_subcommand(phi)) return run_phi(file0);
        if (app.got_subcommand(cmp)) return run_compare(file0, file1, copts);
        if (app.got_subcommand(fuzz)) return run_fuzz(file0, fopts, emit_log);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
