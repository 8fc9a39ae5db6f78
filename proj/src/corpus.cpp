#include "sqtop/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>

#include "sqtop/manifest.hpp"
#include "sqtop/report.hpp"
#include "sqtop/snf.hpp"
#include "sqtop/steenrod.hpp"
#include "sqtop/wu.hpp"

namespace sqtop {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// F2[x]/(x^{m+1}) with |x| = gdeg.
PresentationData projective(const std::string& name, const std::string& gen, int gdeg, int m) {
    PresentationData d;
    d.name = name;
    d.mode = Mode::Gf2;
    d.dimension = gdeg * m;
    d.generators = {{gen, gdeg}};
    d.relations = {gen + "^" + std::to_string(m + 1)};
    d.assume_smooth = true;
    return d;
}

PresentationData eiii_data() {
    PresentationData d;
    d.name = "EIII";
    d.mode = Mode::Int;
    d.dimension = 32;
    d.generators = {{"t", 2}, {"w", 8}};
    d.relations = {"t^9 - 3*w^2*t", "w^3 + 15*w^2*t^4 - 9*w*t^8"};
    d.assume_smooth = true;
    return d;
}

PresentationData eiii_mod2_data() {
    PresentationData d;
    d.name = "EIII-mod2";
    d.mode = Mode::Gf2Param;
    d.dimension = 32;
    d.generators = {{"t", 2}, {"w", 8}};
    d.parameters = {"a", "b", "c", "d"};
    d.relations = {"t^9 + t*w^2", "w^3 + t^4*w^2 + t^8*w"};
    d.steenrod = {{"w", {{2, "a*t^5 + b*t*w"}, {4, "c*t^6 + d*t^2*w"}}}};
    d.assume_smooth = true;
    return d;
}

PresentationData evi_data() {
    PresentationData d;
    d.name = "EVI";
    d.mode = Mode::Gf2Param;
    d.dimension = 64;
    d.generators = {{"y2", 2}, {"y3", 3}, {"y12", 12}, {"y16", 16}, {"y20", 20}};
    d.parameters = {"a1", "a2", "b2", "c2", "d2", "m0", "n0", "m1", "n1", "l2", "m2", "n2"};
    d.relations = {
        "y3^3",
        "y2*y16 + y3^2*y12 + y2^6*y3^2",
        "y3*y16",
        "y2*y12^2 + y2^4*y3^2*y12 + y3^2*y20",
        "y3*y12^2",
        "y12*y16 + y2^14 + y2^5*y3^2*y12 + y2^11*y3^2",
        "y12^3 + y16*y20 + y2^5*y3^2*y20",
        "y12^2*y16 + y20^2 + y2^11*y3^2*y12",
        "y12^2*y20 + y2^13*y3^2*y12 + y2^3*y3^2*y12*y20",
        "y12*y16^2 + y2^13*y3^2*y12",
        "y16^3 + y12*y16*y20 + y2^5*y3^2*y12*y20",
        "y16^2*y20 + y2^13*y3^2*y20",
    };
    d.steenrod = {
        {"y2", {{1, "y3"}}},
        {"y12",
         {{1, "0"},
          {2, "y2^7 + y2*y12 + y2^4*y3^2"},
          {4, "y2^8 + y2^2*y12 + a1*y2^5*y3^2"},
          {8, "y20 + y2^4*y12 + a2*y2^7*y3^2 + b2*y2*y3^2*y12"}}},
        {"y16",
         {{1, "0"},
          {2, "0"},
          {4, "y2^7*y3^2"},
          {8, "y12^2 + c2*y2^9*y3^2 + d2*y2^3*y3^2*y12"}}},
        {"y20",
         {{1, "0"},
          {2, "y2^11 + y2*y20 + m0*y2^8*y3^2 + n0*y2^2*y3^2*y12"},
          {4, "y12^2 + y2^6*y12 + m1*y2^9*y3^2 + n1*y2^3*y3^2*y12"},
          {8, "y12*y16 + y2^8*y12 + l2*y2^11*y3^2 + m2*y2^5*y3^2*y12 + n2*y2*y3^2*y20"}}},
    };
    d.assume_smooth = true;
    return d;
}

void check_relation_degrees(const Presentation& p, std::multiset<long long> want) {
    std::multiset<long long> got;
    for (const auto& r : p.relations()) got.insert(*r.degree());
    if (got != want) throw Error(p.name() + ": relation degrees out of contract");
}

int suffix_number(const std::string& key, std::size_t prefix) {
    if (key.size() == prefix) return -1;
    int n = 0;
    for (std::size_t i = prefix; i < key.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(key[i]))) return -1;
        n = n * 10 + (key[i] - '0');
        if (n > 1000) return -1;
    }
    return n;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"rp2",  "rp15",    "cp2",  "cp4",
                                                   "hp2",  "op2",     "op2xop2",
                                                   "eiii", "eiii-mod2", "evi"};
    return names;
}

CorpusEntry builtin(const std::string& name) {
    std::string key = lower(name);
    if (key == "op2xop2") return op2_power(2);

    PresentationData data;
    std::map<std::string, std::map<std::string, bool>> inst;
    if (key.rfind("rp", 0) == 0 && suffix_number(key, 2) >= 1) {
        data = projective("RP" + key.substr(2), "x", 1, suffix_number(key, 2));
    } else if (key.rfind("cp", 0) == 0 && suffix_number(key, 2) >= 1) {
        data = projective("CP" + key.substr(2), "x", 2, suffix_number(key, 2));
    } else if (key.rfind("hp", 0) == 0 && suffix_number(key, 2) >= 1) {
        data = projective("HP" + key.substr(2), "x", 4, suffix_number(key, 2));
    } else if (key == "op2") {
        data = projective("OP2", "u", 8, 2);
    } else if (key == "eiii") {
        data = eiii_data();
    } else if (key == "eiii-mod2") {
        data = eiii_mod2_data();
        inst["ishitoya"] = {{"a", true}, {"b", true}, {"c", true}, {"d", false}};
    } else if (key == "evi") {
        data = evi_data();
    } else {
        throw UnknownName("no builtin presentation named '" + name + "'");
    }

    CorpusEntry entry{key, Presentation::make(data), std::move(inst)};
    if (key == "evi")
        check_relation_degrees(entry.presentation,
                               {9, 18, 19, 26, 27, 28, 36, 40, 44, 44, 48, 52});
    return entry;
}

namespace {

// Renders expressions of one factor against its renamed generator table.
std::vector<std::string> rerender(const std::vector<std::string>& exprs,
                                  const GeneratorTable& parsed_with,
                                  const GeneratorTable& renamed) {
    ParamTable no_params;
    std::vector<std::string> out;
    for (const auto& e : exprs)
        out.push_back(render(parse_class(e, parsed_with, no_params), renamed, no_params));
    return out;
}

}  // namespace

PresentationData tensor_product(const PresentationData& a, const PresentationData& b,
                                const std::string& name) {
    if (a.mode != Mode::Gf2 || b.mode != Mode::Gf2)
        throw DomainMismatch("tensor product needs parameter-free GF(2) factors");

    std::set<std::string> a_names, clashes;
    for (const auto& g : a.generators) a_names.insert(g.name);
    for (const auto& g : b.generators)
        if (a_names.count(g.name)) clashes.insert(g.name);

    std::vector<Generator> ga = a.generators, gb = b.generators;
    for (auto& g : ga)
        if (clashes.count(g.name)) g.name += "1";
    for (auto& g : gb)
        if (clashes.count(g.name)) g.name += "2";

    PresentationData out;
    out.name = name;
    out.mode = Mode::Gf2;
    out.dimension = a.dimension + b.dimension;
    out.generators = ga;
    out.generators.insert(out.generators.end(), gb.begin(), gb.end());
    GeneratorTable combined(out.generators);  // validates the renames are distinct
    (void)combined;

    GeneratorTable olda(a.generators), newa(ga), oldb(b.generators), newb(gb);
    out.relations = rerender(a.relations, olda, newa);
    auto brels = rerender(b.relations, oldb, newb);
    out.relations.insert(out.relations.end(), brels.begin(), brels.end());

    auto carry = [](const PresentationData& src, const GeneratorTable& oldt,
                    const GeneratorTable& newt, PresentationData& dst) {
        for (const auto& [gname, entries] : src.steenrod) {
            auto gi = oldt.find(gname);
            if (!gi) throw UnknownIdentifier("square table names unknown generator '" + gname + "'");
            const std::string& renamed = newt[*gi].name;
            for (const auto& [i, expr] : entries)
                dst.steenrod[renamed][i] =
                    rerender({expr}, oldt, newt).front();
        }
    };
    carry(a, olda, newa, out);
    carry(b, oldb, newb, out);
    out.assume_smooth = a.assume_smooth && b.assume_smooth;
    return out;
}

CorpusEntry op2_power(int m) {
    if (m == 1) return builtin("op2");
    if (m != 2) throw DomainMismatch("(OP2)^m is provided for m <= 2 only");
    PresentationData op2 = builtin("op2").presentation.data();
    return {"op2xop2", Presentation::make(tensor_product(op2, op2, "OP2xOP2")), {}};
}

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ManifestError("cannot open fixture '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ManifestError(path + ": " + e.what());
    }
}

// Lazily built GF(2) evaluation pipeline for one presentation.
struct Gf2Pipeline {
    Presentation pres;
    RingBasis rb;
    SquareTable table;
    std::optional<SqEvaluator> ev;

    explicit Gf2Pipeline(Presentation p)
        : pres(std::move(p)), rb(RingBasis::compute(pres)), table(SquareTable::build(rb)) {
        ev.emplace(rb, table);
    }
    Gf2Pipeline(const Gf2Pipeline&) = delete;
};

template <class T>
std::string join(const std::vector<T>& xs) {
    std::string out;
    for (const auto& x : xs) {
        if (!out.empty()) out += ", ";
        if constexpr (std::is_same_v<T, std::string>)
            out += x;
        else
            out += std::to_string(x);
    }
    return out;
}

GoldenCheck check_sq(const json& c, Gf2Pipeline& p) {
    GoldenCheck out{c.at("fixture"), c.value("citation", "derived"), c.at("expect"), "", false};
    Gf2Poly cls = parse_class(c.at("class"), p.pres.gens(), p.pres.params());
    Gf2Poly val = p.ev->sq_class(cls, c.at("n").get<long long>());
    out.actual = render(val, p.pres.gens(), p.pres.params());
    out.passed = out.actual == out.expected;
    if (c.contains("raw")) {
        Gf2Poly raw = parse_class(c.at("raw"), p.pres.gens(), p.pres.params());
        if (!(p.rb.normal_form_poly(raw) == val)) {
            out.passed = false;
            out.actual += " (quoted raw form disagrees)";
        }
    }
    return out;
}

GoldenCheck check_top_classes(const json& c, Gf2Pipeline& p) {
    GoldenCheck out{c.at("fixture"), c.value("citation", "derived"), "", "", false};
    long long d = c.at("degree");
    const auto& db = p.rb.at(d);
    std::vector<std::string> nonzero;
    for (const auto& m : db.monomials)
        if (!p.rb.normal_form(Gf2Poly::monomial(m)).is_zero())
            nonzero.push_back(m.render(p.pres.gens()));
    std::vector<std::string> want = c.at("nonzero").get<std::vector<std::string>>();
    out.expected = std::to_string(c.at("count").get<long long>()) + " monomials; nonzero: " + join(want);
    out.actual = std::to_string(db.monomials.size()) + " monomials; nonzero: " + join(nonzero);

    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    out.passed = db.monomials.size() == c.at("count").get<std::size_t>() &&
                 sorted(nonzero) == sorted(want);
    return out;
}

GoldenCheck check_coordinates(const json& c, const IntRingBasis& ib) {
    GoldenCheck out{c.at("fixture"), c.value("citation", "derived"), "", "", false};
    long long d = c.at("degree");
    const auto& db = ib.at(d);
    std::size_t want_rank = c.at("rank").get<std::size_t>();
    out.expected = "rank " + std::to_string(want_rank);
    out.actual = "rank " + std::to_string(db.free_rank);
    bool ok = db.free_rank == want_rank && db.torsion.empty();
    if (c.contains("magnitudes") && db.free_rank == 1) {
        std::vector<std::string> want, got;
        for (const auto& x : c.at("magnitudes")) want.push_back(x.dump());
        for (const auto& col : db.reduce) {
            BigInt m = col[0] < 0 ? BigInt(-col[0]) : col[0];
            got.push_back(m.str());
        }
        out.expected += "; magnitudes " + join(want);
        out.actual += "; magnitudes " + join(got);
        ok = ok && want == got;
    }
    out.passed = ok;
    return out;
}

GoldenCheck check_compositions(const json& c) {
    GoldenCheck out{c.at("fixture"), c.value("citation", "derived"), "", "", false};
    long long count = 0;
    for (WeakCompositions wc(c.at("n").get<long long>(), c.at("parts").get<std::size_t>());
         wc.valid(); wc.next())
        ++count;
    out.expected = std::to_string(c.at("count").get<long long>());
    out.actual = std::to_string(count);
    out.passed = out.expected == out.actual;
    return out;
}

GoldenCheck check_relation_degree_list(const json& c, const PresentationData& data) {
    GoldenCheck out{c.at("fixture"), c.value("citation", "derived"), "", "", false};
    Presentation p = Presentation::make(data);
    std::vector<long long> got;
    if (p.mode() == Mode::Int)
        for (const auto& r : p.int_relations()) got.push_back(*r.degree());
    else
        for (const auto& r : p.relations()) got.push_back(*r.degree());
    std::sort(got.begin(), got.end());
    std::vector<long long> want = c.at("degrees").get<std::vector<long long>>();
    out.expected = join(want);
    out.actual = join(got);
    out.passed = got == want;
    return out;
}

GoldenCheck check_verdict(const json& c, const PresentationData& data) {
    GoldenCheck out{c.at("fixture"), c.value("citation", "derived"), c.at("expect"), "", false};
    Presentation p = Presentation::make(data);
    if (c.contains("set")) {
        std::map<std::string, bool> vals;
        for (const auto& [k, v] : c.at("set").items()) vals[k] = v.get<int>() != 0;
        p = p.instantiate(vals);
    }
    RingBasis rb = RingBasis::compute(p);
    SquareTable table = SquareTable::build(rb);
    SqEvaluator ev(rb, table);
    Verdict v = orientability_verdict(ev, c.at("k").get<int>());
    std::string got = status_name(v.status);
    if (v.witness) got += " (witness degree " + std::to_string(v.witness->degree) + ")";
    if (!v.conditions.empty()) {
        std::vector<std::string> conds;
        for (const auto& cond : v.conditions) conds.push_back(cond.render(p.params()));
        got += " (" + join(conds) + ")";
    }
    out.actual = got;
    out.passed = out.actual == out.expected;
    return out;
}

}  // namespace

std::vector<GoldenCheck> golden_suite(const std::string& corpus_dir) {
    namespace fs = std::filesystem;
    std::vector<GoldenCheck> out;
    for (const auto& stem : builtin_names()) {
        std::string gpath = corpus_dir + "/golden/" + stem + ".json";
        if (!fs::exists(gpath)) continue;
        json golden = read_json(gpath);
        std::string mpath = corpus_dir + "/" + stem + ".json";
        PresentationData data = load_manifest(mpath);

        if (golden.contains("report")) {
            std::string cite = golden.value("report_citation", "derived");
            auto rep = build_report(data, file_digest(mpath), 1);
            auto bad = compare_with_golden(json::parse(rep.dump()), golden.at("report"));
            if (bad.empty())
                out.push_back({stem + ".report", cite, "match", "match", true});
            else
                for (const auto& line : bad)
                    out.push_back({stem + ".report", cite, "match", line, false});
        }

        if (!golden.contains("checks")) continue;
        std::optional<Gf2Pipeline> pipe;
        std::optional<IntRingBasis> ib;
        auto gf2 = [&]() -> Gf2Pipeline& {
            if (!pipe) pipe.emplace(Presentation::make(data));
            return *pipe;
        };
        auto integral = [&]() -> IntRingBasis& {
            if (!ib) ib = IntRingBasis::compute(Presentation::make(data));
            return *ib;
        };
        for (const auto& c : golden.at("checks")) {
            std::string kind = c.at("kind");
            if (kind == "sq")
                out.push_back(check_sq(c, gf2()));
            else if (kind == "top_classes")
                out.push_back(check_top_classes(c, gf2()));
            else if (kind == "coordinates")
                out.push_back(check_coordinates(c, integral()));
            else if (kind == "compositions")
                out.push_back(check_compositions(c));
            else if (kind == "relation_degrees")
                out.push_back(check_relation_degree_list(c, data));
            else if (kind == "verdict")
                out.push_back(check_verdict(c, data));
            else
                throw ManifestError(gpath + ": unknown check kind '" + kind + "'");
        }
    }
    return out;
}

}  // namespace sqtop
