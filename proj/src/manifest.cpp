#include "sqtop/manifest.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "sqtop/parse.hpp"

namespace sqtop {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ManifestError(msg); }

const json& need(const json& doc, const char* key, json::value_t type, const char* what) {
    auto it = doc.find(key);
    if (it == doc.end()) fail(std::string("missing manifest key '") + key + "'");
    if (it->type() != type &&
        !(type == json::value_t::number_integer && it->is_number_unsigned()))
        fail(std::string("manifest key '") + key + "' must be " + what);
    return *it;
}

int int_field(const json& doc, const char* key) {
    return need(doc, key, json::value_t::number_integer, "an integer").get<int>();
}

std::string str_field(const json& doc, const char* key) {
    return need(doc, key, json::value_t::string, "a string").get<std::string>();
}

}  // namespace

PresentationData manifest_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) fail("manifest must be a JSON object");
    static const char* known[] = {"schema",    "name",       "mode",
                                  "dimension", "generators", "parameters",
                                  "relations", "steenrod",   "assume_smooth"};
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) fail("unknown manifest key '" + key + "'");
    }

    if (int_field(doc, "schema") != kManifestSchema)
        fail("unsupported manifest schema version " + doc["schema"].dump());

    PresentationData data;
    data.name = str_field(doc, "name");
    data.mode = mode_from_name(str_field(doc, "mode"));
    data.dimension = int_field(doc, "dimension");

    const json& gens = need(doc, "generators", json::value_t::array, "an array");
    for (const json& g : gens) {
        if (!g.is_object() || g.size() != 2 || !g.contains("name") || !g.contains("degree"))
            fail("each generator must be an object {name, degree}");
        data.generators.push_back({str_field(g, "name"), int_field(g, "degree")});
    }

    if (doc.contains("parameters")) {
        const json& params = need(doc, "parameters", json::value_t::array, "an array");
        for (const json& p : params) {
            if (!p.is_string()) fail("parameters must be strings");
            data.parameters.push_back(p.get<std::string>());
        }
    }

    const json& rels = need(doc, "relations", json::value_t::array, "an array");
    for (const json& r : rels) {
        if (!r.is_string()) fail("relations must be expression strings");
        data.relations.push_back(r.get<std::string>());
    }

    if (doc.contains("steenrod")) {
        const json& sq = need(doc, "steenrod", json::value_t::object, "an object");
        for (const auto& [gname, entries] : sq.items()) {
            if (!entries.is_object())
                fail("steenrod entry for '" + gname + "' must map indices to expressions");
            for (const auto& [idx, expr] : entries.items()) {
                std::size_t used = 0;
                int i = 0;
                try {
                    i = std::stoi(idx, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != idx.size() || i < 1)
                    fail("steenrod index '" + idx + "' on " + gname +
                         " is not a positive integer");
                if (!expr.is_string())
                    fail("steenrod entry Sq^" + idx + " " + gname + " must be a string");
                data.steenrod[gname][i] = expr.get<std::string>();
            }
        }
    }

    if (doc.contains("assume_smooth")) {
        if (!doc["assume_smooth"].is_boolean()) fail("assume_smooth must be a boolean");
        data.assume_smooth = doc["assume_smooth"].get<bool>();
    }
    return data;
}

nlohmann::json manifest_to_json(const PresentationData& data) {
    json doc;
    doc["schema"] = kManifestSchema;
    doc["name"] = data.name;
    doc["mode"] = mode_name(data.mode);
    doc["dimension"] = data.dimension;
    doc["generators"] = json::array();
    for (const auto& g : data.generators)
        doc["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    if (!data.parameters.empty()) doc["parameters"] = data.parameters;
    doc["relations"] = data.relations;
    if (!data.steenrod.empty()) {
        json sq = json::object();
        for (const auto& [gname, entries] : data.steenrod)
            for (const auto& [i, expr] : entries) sq[gname][std::to_string(i)] = expr;
        doc["steenrod"] = sq;
    }
    if (data.assume_smooth) doc["assume_smooth"] = true;
    return doc;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ManifestError("cannot open manifest '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 1-based line/column of a byte offset.
std::pair<int, int> text_pos(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::string located(const std::string& path, const std::string& text, const std::string& needle,
                    std::size_t extra, const std::string& msg) {
    std::size_t at = text.find('"' + needle + '"');
    if (at == std::string::npos) return path + ": " + msg;
    auto [line, col] = text_pos(text, at + 1 + extra);
    return path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg;
}

// Validates one expression the way Presentation::make will, so schema errors
// can be pinned to their position in the file.
void check_expression(const std::string& path, const std::string& text,
                      const PresentationData& data, const std::string& expr,
                      const GeneratorTable& gens, const ParamTable& params, int want_degree) {
    try {
        if (data.mode == Mode::Int) {
            IntPoly v = parse_int_class(expr, gens);
            v.degree();
        } else {
            Gf2Poly v = parse_class(expr, gens, params);
            if (auto deg = v.degree(); deg && want_degree >= 0 && *deg != want_degree)
                throw InhomogeneousInput("expression has degree " + std::to_string(*deg) +
                                         ", expected " + std::to_string(want_degree));
        }
    } catch (const SyntaxError& e) {
        throw ManifestError(located(path, text, expr, e.pos, e.what()));
    } catch (const ManifestError&) {
        throw;
    } catch (const Error& e) {
        throw ManifestError(located(path, text, expr, 0, e.what()));
    }
}

}  // namespace

PresentationData load_manifest(const std::string& path) {
    std::string text = read_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = text_pos(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ManifestError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                            ": " + e.what());
    }

    PresentationData data;
    try {
        data = manifest_from_json(doc);
    } catch (const Error& e) {
        throw ManifestError(path + ": " + e.what());
    }

    // Pre-flight each expression for located diagnostics, then run the full
    // cross-field validation.
    try {
        GeneratorTable gens(data.generators);
        ParamTable params(data.parameters);
        for (const auto& r : data.relations) check_expression(path, text, data, r, gens, params, -1);
        if (data.mode != Mode::Int)
            for (const auto& [gname, entries] : data.steenrod) {
                auto g = gens.find(gname);
                for (const auto& [i, expr] : entries) {
                    int want = g ? gens[*g].degree + i : -1;
                    check_expression(path, text, data, expr, gens, params, want);
                }
            }
        Presentation::make(data);
    } catch (const ManifestError&) {
        throw;
    } catch (const Error& e) {
        throw ManifestError(path + ": " + e.what());
    }
    return data;
}

std::string file_digest(const std::string& path) {
    std::string bytes = read_file(path);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a:";
    for (int i = 60; i >= 0; i -= 4) out += hex[(h >> i) & 0xf];
    return out;
}

}  // namespace sqtop
