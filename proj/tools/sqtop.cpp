#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "sqtop/corpus.hpp"
#include "sqtop/manifest.hpp"
#include "sqtop/report.hpp"
#include "sqtop/signature.hpp"
#include "sqtop/snf.hpp"
#include "sqtop/steenrod.hpp"
#include "sqtop/wu.hpp"

namespace {

using namespace sqtop;
using ordered = nlohmann::ordered_json;

// Exit contract: 0 success, 2 invalid input, 3 computational limitation,
// 4 golden mismatch.
int exit_code_for(const Error& e) {
    if (dynamic_cast<const ManifestError*>(&e) || dynamic_cast<const SyntaxError*>(&e) ||
        dynamic_cast<const UnknownIdentifier*>(&e) || dynamic_cast<const UnknownName*>(&e) ||
        dynamic_cast<const NegativeExponent*>(&e) ||
        dynamic_cast<const InhomogeneousRelation*>(&e) ||
        dynamic_cast<const InhomogeneousInput*>(&e) || dynamic_cast<const DomainMismatch*>(&e) ||
        dynamic_cast<const DimensionOverflow*>(&e) || dynamic_cast<const DegreeOverflow*>(&e))
        return 2;
    return 3;
}

struct Options {
    std::string manifest;
    std::string format = "json";
    int threads = 1;
    long long degree = -1;
    bool all = false;
    std::string cls;
    long long n = 0;
    int k = 1;
    std::vector<std::string> set;
    std::string golden_dir;
};

std::map<std::string, bool> parse_set(const std::vector<std::string>& kvs) {
    std::map<std::string, bool> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 2 != kv.size() ||
            (kv[eq + 1] != '0' && kv[eq + 1] != '1'))
            throw ManifestError("--set expects name=0 or name=1, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv[eq + 1] == '1';
    }
    return out;
}

Presentation load(const Options& opt) {
    Presentation p = Presentation::make(load_manifest(opt.manifest));
    if (!opt.set.empty()) p = p.instantiate(parse_set(opt.set));
    return p;
}

void emit(const Options& opt, const ordered& doc, const std::string& text) {
    if (opt.format == "text")
        std::cout << text;
    else
        std::cout << doc.dump(2) << "\n";
}

ordered big(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return ordered(static_cast<long long>(x));
    return ordered(x.str());
}

int cmd_basis(const Options& opt) {
    Presentation p = load(opt);
    if (!opt.all && opt.degree < 0) throw ManifestError("basis needs --degree or --all");

    ordered doc;
    std::string text;
    if (p.mode() == Mode::Int) {
        IntRingBasis ib = IntRingBasis::compute(p, opt.threads);
        if (opt.all) {
            doc["ranks"] = ib.ranks();
            doc["euler"] = ib.euler();
            text = "ranks:";
            for (long long r : ib.ranks()) text += " " + std::to_string(r);
            text += "\neuler: " + std::to_string(ib.euler()) + "\n";
        } else {
            const auto& db = ib.at(opt.degree);
            doc["degree"] = opt.degree;
            doc["rank"] = db.free_rank;
            auto tors = ordered::array();
            for (const auto& t : db.torsion) tors.push_back(big(t));
            doc["torsion"] = tors;
            doc["monomial_count"] = db.monomials.size();
            auto coords = ordered::array();
            for (std::size_t j = 0; j < db.monomials.size(); ++j) {
                auto row = ordered::array();
                for (const auto& x : db.reduce[j]) row.push_back(big(x));
                coords.push_back(ordered{{"monomial", db.monomials[j].render(p.gens())},
                                         {"coordinates", row}});
            }
            doc["monomials"] = coords;
            text = "degree " + std::to_string(opt.degree) + ": rank " +
                   std::to_string(db.free_rank) + ", " + std::to_string(db.monomials.size()) +
                   " monomials\n";
            for (const auto& row : coords) {
                text += "  " + row.at("monomial").get<std::string>() + " ->";
                for (const auto& x : row.at("coordinates")) text += " " + x.dump();
                text += "\n";
            }
        }
        emit(opt, doc, text);
        return 0;
    }

    RingBasis rb = RingBasis::compute(p, opt.threads);
    if (opt.all) {
        doc["betti"] = rb.betti();
        doc["euler"] = rb.euler();
        text = "betti:";
        for (long long b : rb.betti()) text += " " + std::to_string(b);
        text += "\neuler: " + std::to_string(rb.euler()) + "\n";
    } else {
        const auto& db = rb.at(opt.degree);
        doc["degree"] = opt.degree;
        doc["betti"] = db.dim();
        doc["monomial_count"] = db.monomials.size();
        auto basis = ordered::array();
        for (std::size_t k = 0; k < db.dim(); ++k)
            basis.push_back(db.basis_monomial(k).render(p.gens()));
        doc["basis"] = basis;
        std::vector<std::string> nonzero;
        for (const auto& m : db.monomials)
            if (!rb.normal_form(Gf2Poly::monomial(m)).is_zero())
                nonzero.push_back(m.render(p.gens()));
        doc["nonzero_count"] = nonzero.size();
        doc["nonzero"] = nonzero;
        text = "degree " + std::to_string(opt.degree) + ": b=" + std::to_string(db.dim()) +
               ", " + std::to_string(db.monomials.size()) + " monomials, " +
               std::to_string(nonzero.size()) + " nonzero\n";
        for (const auto& b : basis) text += "  basis: " + b.get<std::string>() + "\n";
    }
    emit(opt, doc, text);
    return 0;
}

int cmd_monomials(const Options& opt) {
    Presentation p = load(opt);
    if (opt.degree < 0) throw ManifestError("monomials needs --degree");
    ordered doc;
    doc["degree"] = opt.degree;
    auto rows = ordered::array();
    std::string text = "degree " + std::to_string(opt.degree) + ":\n";
    if (p.mode() == Mode::Int) {
        IntRingBasis ib = IntRingBasis::compute(p, opt.threads);
        const auto& db = ib.at(opt.degree);
        for (std::size_t j = 0; j < db.monomials.size(); ++j) {
            auto row = ordered::array();
            for (const auto& x : db.reduce[j]) row.push_back(big(x));
            std::string name = db.monomials[j].render(p.gens());
            rows.push_back(ordered{{"monomial", name}, {"coordinates", row}});
            text += "  " + name + " -> " + row.dump() + "\n";
        }
    } else {
        RingBasis rb = RingBasis::compute(p, opt.threads);
        const auto& db = rb.at(opt.degree);
        for (const auto& m : db.monomials) {
            auto c = rb.normal_form(Gf2Poly::monomial(m));
            auto row = ordered::array();
            for (const auto& x : c.c) row.push_back(x.render(p.params()));
            std::string name = m.render(p.gens());
            rows.push_back(ordered{{"monomial", name}, {"coordinates", row}});
            text += "  " + name + " -> " + row.dump() + "\n";
        }
    }
    doc["monomials"] = rows;
    emit(opt, doc, text);
    return 0;
}

int cmd_sq(const Options& opt) {
    Presentation p = load(opt);
    RingBasis rb = RingBasis::compute(p, opt.threads);
    SquareTable table = SquareTable::build(rb);
    SqEvaluator ev(rb, table);
    Gf2Poly cls = parse_class(opt.cls, p.gens(), p.params());
    Gf2Poly val = ev.sq_class(cls, opt.n);
    std::string result = render(val, p.gens(), p.params());

    ordered doc;
    doc["n"] = opt.n;
    doc["class"] = opt.cls;
    doc["result"] = result;
    auto coords = ordered::array();
    for (const auto& c : rb.normal_form(val).c) coords.push_back(c.render(p.params()));
    doc["coordinates"] = coords;
    emit(opt, doc, "Sq^" + std::to_string(opt.n) + " (" + opt.cls + ") = " + result + "\n");
    return 0;
}

int cmd_wu(const Options& opt) {
    Presentation p = load(opt);
    RingBasis rb = RingBasis::compute(p, opt.threads);
    SquareTable table = SquareTable::build(rb);
    SqEvaluator ev(rb, table);
    ordered doc;
    auto rows = ordered::array();
    std::string text;
    for (const auto& v : wu_classes(ev, p.dim() / 2)) {
        ordered row{{"i", v.index}, {"class", render(v.cls, p.gens(), p.params())}};
        if (v.forced_zero) row["forced_zero"] = true;
        rows.push_back(row);
        text += "v" + std::to_string(v.index) + " = " + row["class"].get<std::string>() + "\n";
    }
    doc["wu"] = rows;
    emit(opt, doc, text);
    return 0;
}

int cmd_sw(const Options& opt) {
    Presentation p = load(opt);
    RingBasis rb = RingBasis::compute(p, opt.threads);
    SquareTable table = SquareTable::build(rb);
    SqEvaluator ev(rb, table);
    auto sw = stiefel_whitney(ev, p.dim());
    ordered doc;
    auto rows = ordered::array();
    std::string text;
    for (std::size_t j = 0; j < sw.size(); ++j) {
        if (sw[j].is_zero()) continue;
        std::string r = render(sw[j], p.gens(), p.params());
        rows.push_back(ordered{{"i", j}, {"class", r}});
        text += "w" + std::to_string(j) + " = " + r + "\n";
    }
    doc["sw"] = rows;
    emit(opt, doc, text.empty() ? "all zero\n" : text);
    return 0;
}

int cmd_orient(const Options& opt) {
    if (opt.k < 1) throw ManifestError("--k must be >= 1");
    Presentation p = load(opt);
    RingBasis rb = RingBasis::compute(p, opt.threads);
    SquareTable table = SquareTable::build(rb);
    SqEvaluator ev(rb, table);
    Verdict v = orientability_verdict(ev, opt.k);

    ordered doc;
    doc["k"] = v.k;
    doc["status"] = status_name(v.status);
    std::string text = "k=" + std::to_string(v.k) + ": " + status_name(v.status);
    if (v.witness) {
        doc["witness"] = ordered{{"sq", v.witness->sq_index},
                                 {"degree", v.witness->degree},
                                 {"class", v.witness->cls.render(p.gens())}};
        text += " (Sq^" + std::to_string(v.witness->sq_index) + " " +
                v.witness->cls.render(p.gens()) + " hits the top class, degree " +
                std::to_string(v.witness->degree) + ")";
    }
    if (!v.conditions.empty()) {
        auto conds = ordered::array();
        std::string list;
        for (const auto& c : v.conditions) {
            std::string r = c.render(p.params());
            conds.push_back(r);
            list += (list.empty() ? "" : ", ") + r;
        }
        doc["conditions"] = conds;
        text += " (vanishing required: " + list + ")";
    }
    emit(opt, doc, text + "\n");
    return 0;
}

int cmd_euler(const Options& opt) {
    Presentation p = load(opt);
    long long chi = p.mode() == Mode::Int ? IntRingBasis::compute(p, opt.threads).euler()
                                          : RingBasis::compute(p, opt.threads).euler();
    ordered doc;
    doc["euler"] = chi;
    emit(opt, doc, "euler: " + std::to_string(chi) + "\n");
    return 0;
}

int cmd_signature(const Options& opt) {
    Presentation p = load(opt);
    IntRingBasis ib = IntRingBasis::compute(p, opt.threads);
    IntersectionForm form = intersection_form(ib);
    ordered doc;
    doc["degree"] = form.degree;
    auto frame = ordered::array();
    for (const auto& cls : form.frame) frame.push_back(render(cls, p.gens()));
    doc["basis"] = frame;
    auto matrix = ordered::array();
    for (const auto& row : form.matrix) {
        auto r = ordered::array();
        for (const auto& x : row) r.push_back(big(x));
        matrix.push_back(r);
    }
    doc["matrix"] = matrix;
    doc["determinant"] = big(form.determinant);
    int sig = signature_of(form.matrix);
    doc["signature"] = sig;
    emit(opt, doc,
         "signature: " + std::to_string(sig) + " (middle degree " + std::to_string(form.degree) +
             ", determinant " + doc["determinant"].dump() + ")\n");
    return 0;
}

int cmd_check(const Options& opt) {
    Presentation p = load(opt);
    RingBasis rb = RingBasis::compute(p, opt.threads);
    SquareTable table = SquareTable::build(rb);
    SqEvaluator ev(rb, table);
    ordered doc;
    auto rows = ordered::array();
    bool all = true;
    std::string text;
    for (const auto& row : parity_rows(ev)) {
        rows.push_back(ordered{{"k", row.k},
                               {"status", status_name(row.status)},
                               {"chi_even", row.chi_even},
                               {"dim_divisible", row.dim_exempt},
                               {"consistent", row.consistent}});
        all = all && row.consistent;
        text += "k=" + std::to_string(row.k) + ": " + status_name(row.status) +
                (row.chi_even ? ", chi even" : ", chi odd") +
                (row.dim_exempt ? ", dim divisible" : ", dim not divisible") +
                (row.consistent ? " -> consistent" : " -> INCONSISTENT") + "\n";
    }
    doc["parity"] = rows;
    doc["all_consistent"] = all;
    emit(opt, doc, text);
    return 0;
}

int cmd_report(const Options& opt) {
    PresentationData data = load_manifest(opt.manifest);
    ordered doc = build_report(data, file_digest(opt.manifest), opt.threads);
    emit(opt, doc, report_to_text(doc));
    if (opt.golden_dir.empty()) return 0;

    std::string stem = std::filesystem::path(opt.manifest).stem().string();
    std::string gpath = opt.golden_dir + "/golden/" + stem + ".json";
    if (!std::filesystem::exists(gpath)) gpath = opt.golden_dir + "/" + stem + ".json";
    std::ifstream in(gpath, std::ios::binary);
    if (!in) throw ManifestError("no golden fixture for '" + stem + "' under " + opt.golden_dir);
    nlohmann::json golden;
    try {
        golden = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ManifestError(gpath + ": " + e.what());
    }
    auto mismatches =
        compare_with_golden(nlohmann::json::parse(doc.dump()),
                            golden.contains("report") ? golden.at("report") : golden);
    for (const auto& line : mismatches) std::cerr << "golden mismatch: " << line << "\n";
    return mismatches.empty() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steenrod squares, Wu classes, and orientability of finitely presented "
                 "cohomology rings"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Options opt;
    std::function<int(const Options&)> action;

    auto common = [&](CLI::App* cmd, bool threads = true) {
        cmd->add_option("manifest", opt.manifest, "manifest file")->required();
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        if (threads) cmd->add_option("--threads", opt.threads, "parallelism budget");
    };
    auto with_set = [&](CLI::App* cmd) {
        cmd->add_option("--set", opt.set, "fix parameters, e.g. --set a=1 b=0");
    };

    auto* basis = app.add_subcommand("basis", "additive basis of one degree or all");
    common(basis);
    basis->add_option("--degree", opt.degree, "degree to list");
    basis->add_flag("--all", opt.all, "whole profile");
    basis->callback([&] { action = cmd_basis; });

    auto* monomials = app.add_subcommand("monomials", "monomial-to-coordinates map of a degree");
    common(monomials);
    monomials->add_option("--degree", opt.degree, "degree to list")->required();
    monomials->callback([&] { action = cmd_monomials; });

    auto* sq = app.add_subcommand("sq", "evaluate a Steenrod square");
    common(sq);
    with_set(sq);
    sq->add_option("--class", opt.cls, "homogeneous class expression")->required();
    sq->add_option("--n", opt.n, "square index")->required();
    sq->callback([&] { action = cmd_sq; });

    auto* wu = app.add_subcommand("wu", "solve for all Wu classes");
    common(wu);
    with_set(wu);
    wu->callback([&] { action = cmd_wu; });

    auto* sw = app.add_subcommand("sw", "Stiefel-Whitney classes via the Wu formula");
    common(sw);
    with_set(sw);
    sw->callback([&] { action = cmd_sw; });

    auto* orient = app.add_subcommand("orient", "k-orientability verdict");
    common(orient);
    with_set(orient);
    orient->add_option("--k", opt.k, "orientability level")->required();
    orient->callback([&] { action = cmd_orient; });

    auto* euler = app.add_subcommand("euler", "Euler characteristic");
    common(euler);
    euler->callback([&] { action = cmd_euler; });

    auto* signature = app.add_subcommand("signature", "intersection form and signature");
    common(signature);
    signature->callback([&] { action = cmd_signature; });

    auto* check = app.add_subcommand("check", "parity constraint between chi, dimension, "
                                              "and orientability");
    common(check);
    with_set(check);
    check->callback([&] { action = cmd_check; });

    auto* report = app.add_subcommand("report", "full pipeline, one consolidated document");
    common(report);
    report->add_option("--golden", opt.golden_dir, "fixture directory to compare against");
    report->callback([&] { action = cmd_report; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return action(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
