#include "blink/io.hpp"

#include <fstream>

#include "blink/errors.hpp"

namespace blink {

using nlohmann::json;

json to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
        return Int(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        Int v;
        if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
            throw ValidationError(where + ": not a decimal integer: \"" + s + "\"");
        return v;
    }
    throw ValidationError(where + ": expected an integer or a decimal string");
}

namespace {

std::vector<int> bits_from_json(const json& j, size_t expected, const std::string& where) {
    if (!j.is_array() || j.size() != expected)
        throw ValidationError(where + ": expected an array of " + std::to_string(expected) +
                              " bits");
    std::vector<int> out;
    out.reserve(expected);
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer() || (j[i] != 0 && j[i] != 1))
            throw ValidationError(where + "[" + std::to_string(i) + "]: expected 0 or 1");
        out.push_back(j[i].get<int>());
    }
    return out;
}

} // namespace

SeifertDocument parse_document(const json& j) {
    if (!j.is_object()) throw ValidationError("document: expected a JSON object");
    if (!j.contains("format") || j["format"] != "seifert-v1")
        throw ValidationError("format: expected \"seifert-v1\"");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ValidationError("n: expected an integer");
    const int n = j["n"].get<int>();
    if (!j.contains("block_sizes") || !j["block_sizes"].is_array())
        throw ValidationError("block_sizes: expected an array");
    std::vector<int> sizes;
    for (size_t i = 0; i < j["block_sizes"].size(); ++i) {
        const auto& v = j["block_sizes"][i];
        if (!v.is_number_integer())
            throw ValidationError("block_sizes[" + std::to_string(i) + "]: expected an integer");
        sizes.push_back(v.get<int>());
    }
    if (!j.contains("matrix") || !j["matrix"].is_array())
        throw ValidationError("matrix: expected an array of rows");
    const size_t m = j["matrix"].size();
    std::vector<Int> entries;
    entries.reserve(m * m);
    for (size_t r = 0; r < m; ++r) {
        const auto& row = j["matrix"][r];
        if (!row.is_array() || row.size() != m)
            throw ValidationError("matrix[" + std::to_string(r) + "]: expected a row of " +
                                  std::to_string(m) + " integers");
        for (size_t c = 0; c < m; ++c)
            entries.push_back(int_from_json(
                row[c], "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }

    SeifertDocument doc{
        SeifertMatrix(n, std::move(sizes),
                      IntMatrix(static_cast<int>(m), static_cast<int>(m), std::move(entries))),
        std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("w2")) doc.w2 = bits_from_json(j["w2"], m, "w2");
    if (j.contains("ks")) doc.ks = bits_from_json(j["ks"], static_cast<size_t>(n), "ks");
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw ValidationError("label: expected a string");
        doc.label = j["label"].get<std::string>();
    }
    return doc;
}

SeifertDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    try {
        return parse_document(j);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

json to_json(const SeifertDocument& doc) {
    json j;
    j["format"] = "seifert-v1";
    j["n"] = doc.matrix.components();
    j["block_sizes"] = doc.matrix.block_sizes();
    json rows = json::array();
    for (int r = 0; r < doc.matrix.size(); ++r) {
        json row = json::array();
        for (int c = 0; c < doc.matrix.size(); ++c)
            row.push_back(to_json(doc.matrix.entries().at(r, c)));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    if (doc.w2) j["w2"] = *doc.w2;
    if (doc.ks) j["ks"] = *doc.ks;
    if (doc.label) j["label"] = *doc.label;
    return j;
}

json to_json(const UnimodularityReport& report) {
    json per = json::array();
    for (const auto& [i, value] : report.per_component)
        per.push_back({{"component", i}, {"det", to_json(value)}});
    return json{{"pass", report.pass}, {"per_component", std::move(per)},
                {"total", to_json(report.total)}};
}

json to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) {
        std::string key;
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(e[i]);
        }
        j[key] = to_json(c);
    }
    return j;
}

namespace {

json int_list(const std::vector<Int>& xs) {
    json j = json::array();
    for (const Int& x : xs) j.push_back(to_json(x));
    return j;
}

} // namespace

json to_json(const Fingerprint& f) {
    json components = json::array();
    for (const auto& c : f.components)
        components.push_back({{"block_parity", c.block_parity},
                              {"signature", c.signature},
                              {"snf_nontrivial", int_list(c.snf_nontrivial)},
                              {"even", c.even}});
    return json{
        {"n", f.n},
        {"components", std::move(components)},
        {"sym",
         {{"det_abs", to_json(f.sym_det_abs)},
          {"signature", f.sym_signature},
          {"snf_nontrivial", int_list(f.sym_snf_nontrivial)}}},
        {"alexander",
         {{"e0", to_json(f.e0)},
          {"e0_string", f.e0.str()},
          {"snf_phi_at_minus1", int_list(f.snf_phi_minus_one)}}}};
}

namespace {

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where + ": expected an array of rows");
    const int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : -1;
    std::vector<Int> entries;
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array()) throw ValidationError(where + ": expected an array of rows");
        if (cols < 0) cols = static_cast<int>(j[r].size());
        if (static_cast<int>(j[r].size()) != cols)
            throw ValidationError(where + ": ragged rows");
        for (int c = 0; c < cols; ++c)
            entries.push_back(int_from_json(j[r][c], where));
    }
    return IntMatrix(rows, cols == -1 ? 0 : cols, std::move(entries));
}

} // namespace

json to_json(const Move& mv) {
    return std::visit(
        [](const auto& m) -> json {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Congruence>) {
                return json{{"type", "congruence"}, {"p", matrix_to_json(m.p)}};
            } else if constexpr (std::is_same_v<T, Enlarge>) {
                json xi = json::array();
                for (const Int& v : m.xi) xi.push_back(to_json(v));
                return json{{"type", "enlarge"},
                            {"component", m.component},
                            {"variant", m.variant == EnlargeVariant::Alpha ? "alpha" : "beta"},
                            {"xi", std::move(xi)},
                            {"x", to_json(m.x)}};
            } else {
                return json{{"type", "reduce"},
                            {"component", m.component},
                            {"position", m.position}};
            }
        },
        mv);
}

Move move_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw ValidationError("move: expected an object with a type");
    const std::string type = j["type"].get<std::string>();
    if (type == "congruence") {
        return Congruence{matrix_from_json(j.at("p"), "congruence.p")};
    }
    if (type == "enlarge") {
        Enlarge mv;
        mv.component = j.at("component").get<int>();
        const std::string variant = j.at("variant").get<std::string>();
        if (variant == "alpha")
            mv.variant = EnlargeVariant::Alpha;
        else if (variant == "beta")
            mv.variant = EnlargeVariant::Beta;
        else
            throw ValidationError("enlarge.variant: expected \"alpha\" or \"beta\"");
        for (const auto& v : j.at("xi")) mv.xi.push_back(int_from_json(v, "enlarge.xi"));
        mv.x = int_from_json(j.at("x"), "enlarge.x");
        return mv;
    }
    if (type == "reduce") {
        return Reduce{j.at("component").get<int>(), j.at("position").get<int>()};
    }
    throw ValidationError("move: unknown type \"" + type + "\"");
}

json to_json(const MoveLog& log) {
    json moves = json::array();
    for (const Move& mv : log.moves) moves.push_back(to_json(mv));
    return json{{"format", "movelog-v1"},
                {"seed", log.seed},
                {"input_unimodular", log.input_unimodular},
                {"initial_digest", log.initial_digest},
                {"final_digest", log.final_digest},
                {"moves", std::move(moves)}};
}

MoveLog movelog_from_json(const json& j) {
    if (!j.is_object() || !j.contains("format") || j["format"] != "movelog-v1")
        throw ValidationError("log format: expected \"movelog-v1\"");
    MoveLog log;
    log.seed = j.at("seed").get<std::uint64_t>();
    log.input_unimodular = j.at("input_unimodular").get<bool>();
    log.initial_digest = j.at("initial_digest").get<std::string>();
    log.final_digest = j.at("final_digest").get<std::string>();
    for (const auto& mv : j.at("moves")) log.moves.push_back(move_from_json(mv));
    return log;
}

json to_json(const Verdict& v) {
    json j;
    switch (v.kind) {
        case Verdict::Kind::Equivalent: {
            j["verdict"] = "equivalent";
            json cert = json::array();
            for (const Move& mv : v.certificate) cert.push_back(to_json(mv));
            j["certificate"] = std::move(cert);
            break;
        }
        case Verdict::Kind::Distinct:
            j["verdict"] = "distinct";
            j["witness"] = {{"field", v.witness->field},
                            {"left", v.witness->left},
                            {"right", v.witness->right}};
            break;
        case Verdict::Kind::Inconclusive:
            j["verdict"] = "inconclusive";
            j["fingerprints_equal"] = v.fingerprints_equal;
            if (v.stats)
                j["search"] = {{"entry_bound", v.stats->entry_bound},
                               {"factor_depth", v.stats->factor_depth},
                               {"enlarge_budget", v.stats->enlarge_budget},
                               {"states_explored", v.stats->states_explored},
                               {"cap_hit", v.stats->cap_hit},
                               {"note", v.stats->note}};
            break;
    }
    return j;
}

json to_json(const PhiMatrix& phi) {
    json rows = json::array();
    for (int r = 0; r < phi.size(); ++r) {
        json row = json::array();
        for (int c = 0; c < phi.size(); ++c) row.push_back(phi.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return json{{"n", phi.components()},
                {"size", phi.size()},
                {"block_sizes", phi.block_sizes()},
                {"entries", std::move(rows)}};
}

std::string dump_canonical(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace blink
