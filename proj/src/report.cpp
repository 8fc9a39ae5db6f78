#include "sqtop/report.hpp"

#include <limits>

#include "sqtop/signature.hpp"
#include "sqtop/snf.hpp"
#include "sqtop/steenrod.hpp"
#include "sqtop/wu.hpp"

namespace sqtop {

namespace {

using ordered = nlohmann::ordered_json;

ordered verdict_json(const Verdict& v, const Presentation& p) {
    ordered out;
    out["status"] = status_name(v.status);
    if (v.witness) {
        out["witness"] = ordered{{"sq", v.witness->sq_index},
                                 {"degree", v.witness->degree},
                                 {"class", v.witness->cls.render(p.gens())}};
    }
    if (!v.conditions.empty()) {
        auto conds = ordered::array();
        for (const auto& c : v.conditions) conds.push_back(c.render(p.params()));
        out["conditions"] = conds;
    }
    return out;
}

// JSON integer when it fits, decimal string otherwise.
ordered big(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return ordered(static_cast<long long>(x));
    return ordered(x.str());
}

void gf2_payload(ordered& doc, const Presentation& p, int threads) {
    RingBasis rb = RingBasis::compute(p, threads);
    long long n = p.dim();

    doc["betti"] = rb.betti();
    doc["euler"] = rb.euler();
    rb.check_poincare();
    doc["poincare"] = true;

    SquareTable table = SquareTable::build(rb);
    SqEvaluator ev(rb, table);
    int levels = max_verdict_level(ev);
    doc["table"] = ordered{{"missing", table.missing()},
                           {"max_complete_index", table.max_complete_index()},
                           {"verdict_levels", levels}};

    // Wu and Stiefel-Whitney classes degrade to the computable prefix; one
    // marker row records where the table stopped supporting them.
    std::vector<WuClass> wu;
    auto wu_rows = ordered::array();
    for (int i = 0; i <= static_cast<int>(n / 2); ++i) {
        try {
            wu.push_back(wu_class(ev, i));
        } catch (const TableIncomplete&) {
            wu_rows.push_back(ordered{{"i", i}, {"unavailable", true}});
            break;
        }
        const WuClass& v = wu.back();
        ordered row{{"i", v.index}, {"class", render(v.cls, p.gens(), p.params())}};
        if (v.forced_zero) row["forced_zero"] = true;
        wu_rows.push_back(row);
    }
    doc["wu"] = wu_rows;

    auto sw_rows = ordered::array();
    for (long long j = 0; j <= n; ++j) {
        long long need = std::min(j, n / 2);
        Gf2Poly w = Gf2Poly::zero(p.gens().size());
        try {
            if (static_cast<long long>(wu.size()) <= need) throw TableIncomplete(table.missing().front());
            for (long long b = 0; b <= need; ++b)
                w += ev.sq_class(wu[static_cast<std::size_t>(b)].cls, static_cast<int>(j - b));
        } catch (const TableIncomplete&) {
            sw_rows.push_back(ordered{{"i", j}, {"unavailable", true}});
            break;
        }
        w = rb.normal_form_poly(w);
        if (!w.is_zero())
            sw_rows.push_back(ordered{{"i", j}, {"class", render(w, p.gens(), p.params())}});
    }
    doc["sw"] = sw_rows;

    auto parity = ordered::array();
    for (const auto& row : parity_rows(ev))
        parity.push_back(ordered{{"k", row.k},
                                 {"status", status_name(row.status)},
                                 {"chi_even", row.chi_even},
                                 {"dim_divisible", row.dim_exempt},
                                 {"consistent", row.consistent}});
    doc["parity"] = parity;

    ordered verdicts;
    for (int k = 1; k <= levels; ++k)
        verdicts["k" + std::to_string(k)] = verdict_json(orientability_verdict(ev, k), p);
    doc["verdicts"] = verdicts;
}

void int_payload(ordered& doc, const Presentation& p, int threads) {
    IntRingBasis ib = IntRingBasis::compute(p, threads);
    doc["ranks"] = ib.ranks();
    auto torsion = ordered::array();
    for (long long d = 0; d <= p.dim(); ++d) {
        const auto& db = ib.at(d);
        if (db.torsion.empty()) continue;
        auto invs = ordered::array();
        for (const auto& t : db.torsion) invs.push_back(big(t));
        torsion.push_back(ordered{{"degree", d}, {"invariants", invs}});
    }
    doc["torsion"] = torsion;
    doc["euler"] = ib.euler();

    if (p.dim() % 4 != 0) return;
    ordered sig;
    try {
        IntersectionForm form = intersection_form(ib);
        auto frame = ordered::array();
        for (const auto& cls : form.frame) frame.push_back(render(cls, p.gens()));
        auto matrix = ordered::array();
        for (const auto& row : form.matrix) {
            auto r = ordered::array();
            for (const auto& x : row) r.push_back(big(x));
            matrix.push_back(r);
        }
        sig = ordered{{"degree", form.degree},
                      {"basis", frame},
                      {"matrix", matrix},
                      {"determinant", big(form.determinant)},
                      {"signature", signature_of(form.matrix)}};
    } catch (const Error& e) {
        sig = ordered{{"error", e.what()}};
    }
    doc["signature"] = sig;
}

}  // namespace

ordered build_report(const PresentationData& data, const std::string& digest, int threads) {
    Presentation p = Presentation::make(data);
    ordered doc;
    doc["schema"] = 1;
    doc["tool"] = ordered{{"name", kToolName}, {"version", kToolVersion}};
    doc["input"] = ordered{{"name", data.name},
                           {"digest", digest},
                           {"mode", mode_name(data.mode)},
                           {"dimension", data.dimension}};
    if (p.mode() == Mode::Int)
        int_payload(doc, p, threads);
    else
        gf2_payload(doc, p, threads);
    return doc;
}

namespace {

void compare_rec(const nlohmann::json& got, const nlohmann::json& want, const std::string& path,
                 std::vector<std::string>& out) {
    if (want.is_object() && got.is_object()) {
        for (const auto& [key, sub] : want.items()) {
            std::string sub_path = path.empty() ? key : path + "." + key;
            auto it = got.find(key);
            if (it == got.end())
                out.push_back(sub_path + ": expected " + sub.dump() + ", got nothing");
            else
                compare_rec(*it, sub, sub_path, out);
        }
        return;
    }
    if (want.is_array() && got.is_array()) {
        if (want.size() != got.size()) {
            out.push_back(path + ": expected " + std::to_string(want.size()) +
                          " entries, got " + std::to_string(got.size()));
            return;
        }
        for (std::size_t i = 0; i < want.size(); ++i)
            compare_rec(got[i], want[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    if (got != want) out.push_back(path + ": expected " + want.dump() + ", got " + got.dump());
}

}  // namespace

std::vector<std::string> compare_with_golden(const nlohmann::json& report,
                                             const nlohmann::json& golden) {
    std::vector<std::string> out;
    compare_rec(report, golden, "", out);
    return out;
}

namespace {

std::string join_line(const ordered& arr, const char* prefix) {
    std::string out;
    for (const auto& row : arr) {
        if (!out.empty()) out += "; ";
        out += prefix + std::to_string(row.at("i").get<long long>());
        if (row.contains("class"))
            out += " = " + row.at("class").get<std::string>();
        else
            out += " unavailable";
    }
    return out;
}

}  // namespace

std::string report_to_text(const nlohmann::ordered_json& report) {
    std::string out;
    const auto& in = report.at("input");
    out += "name: " + in.at("name").get<std::string>() + " (" +
           in.at("mode").get<std::string>() + "), dimension " +
           std::to_string(in.at("dimension").get<long long>()) + "\n";
    out += "digest: " + in.at("digest").get<std::string>() + "\n";

    auto int_list = [](const ordered& arr) {
        std::string s;
        for (const auto& x : arr) {
            if (!s.empty()) s += " ";
            s += x.dump();
        }
        return s;
    };
    if (report.contains("betti")) out += "betti: " + int_list(report.at("betti")) + "\n";
    if (report.contains("ranks")) out += "ranks: " + int_list(report.at("ranks")) + "\n";
    if (report.contains("torsion") && !report.at("torsion").empty())
        out += "torsion: " + report.at("torsion").dump() + "\n";
    out += "euler: " + report.at("euler").dump() + "\n";

    if (report.contains("table")) {
        const auto& t = report.at("table");
        if (!t.at("missing").empty()) {
            out += "missing table entries:";
            for (const auto& m : t.at("missing")) out += " " + m.get<std::string>() + ";";
            out.back() = '\n';
        }
    }
    if (report.contains("wu")) out += "wu: " + join_line(report.at("wu"), "v") + "\n";
    if (report.contains("sw")) out += "sw: " + join_line(report.at("sw"), "w") + "\n";
    if (report.contains("verdicts") && !report.at("verdicts").empty()) {
        out += "verdicts:";
        for (const auto& [key, v] : report.at("verdicts").items()) {
            out += " " + key + " " + v.at("status").get<std::string>();
            if (v.contains("conditions")) {
                out += " (";
                bool first = true;
                for (const auto& c : v.at("conditions")) {
                    if (!first) out += ", ";
                    out += c.get<std::string>();
                    first = false;
                }
                out += ")";
            }
            if (v.contains("witness"))
                out += " (witness degree " + v.at("witness").at("degree").dump() + ")";
            out += ";";
        }
        out.back() = '\n';
    }
    if (report.contains("signature")) {
        const auto& s = report.at("signature");
        if (s.contains("error"))
            out += "signature: unavailable (" + s.at("error").get<std::string>() + ")\n";
        else
            out += "signature: " + s.at("signature").dump() + " in degree " +
                   s.at("degree").dump() + ", determinant " + s.at("determinant").dump() + "\n";
    }
    return out;
}

}  // namespace sqtop
