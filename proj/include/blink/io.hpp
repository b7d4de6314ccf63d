#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "blink/compare.hpp"
#include "blink/moves.hpp"
#include "blink/pairing.hpp"
#include "blink/seifert.hpp"

namespace blink {

// On-disk document: {"format":"seifert-v1","n":..,"block_sizes":[..],
// "matrix":[[..]],"w2":[..]?,"ks":[..]?,"label":".."?}. Matrix entries are
// JSON integers, or decimal strings once they outgrow 64 bits.
struct SeifertDocument {
    SeifertMatrix matrix;
    std::optional<std::vector<int>> w2;
    std::optional<std::vector<int>> ks;
    std::optional<std::string> label;
};

SeifertDocument parse_document(const nlohmann::json& j);
SeifertDocument load_document(const std::string& path);

nlohmann::json to_json(const Int& v);
Int int_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json to_json(const SeifertDocument& doc);
nlohmann::json to_json(const UnimodularityReport& report);
nlohmann::json to_json(const Fingerprint& f);
nlohmann::json to_json(const LaurentPoly& p);      // exponents -> coefficients map
nlohmann::json to_json(const Move& mv);
nlohmann::json to_json(const MoveLog& log);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const PhiMatrix& phi);      // entries as word strings

Move move_from_json(const nlohmann::json& j);
MoveLog movelog_from_json(const nlohmann::json& j);

// Canonical text form: sorted keys, 2-space indent, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

} // namespace blink
