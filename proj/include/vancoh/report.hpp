#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "vancoh/builtin_fixtures.hpp"
#include "vancoh/chern_euler.hpp"
#include "vancoh/json_io.hpp"
#include "vancoh/jordan.hpp"
#include "vancoh/milnor.hpp"

namespace vancoh {

// Reports are built as JSON documents whose numeric fields are all decimal
// strings (integers) or "p/q" strings; the table renderer reads the same
// document, so the two formats cannot disagree on a value.

namespace reportdetail {

inline std::string str(long long v) { return std::to_string(v); }
inline std::string str(const BigInt& v) { return v.str(); }

inline Json cyclo_json(const CycloProduct& p) {
    Json factors = Json::array();
    for (const auto& [c, e] : p.exponents())
        factors.push_back({{"c", str(c)}, {"exponent", str(e)}});
    return Json{{"display", p.to_string()}, {"factors", factors}};
}

inline Json betti_entry_json(const BettiEntry& e, int degree) {
    Json out;
    out["degree"] = str(degree);
    switch (e.kind) {
        case BettiEntry::Kind::Exact:
            out["kind"] = "exact";
            out["value"] = str(e.lo);
            break;
        case BettiEntry::Kind::Interval:
            out["kind"] = "interval";
            out["lo"] = str(e.lo);
            out["hi"] = str(e.hi);
            break;
        case BettiEntry::Kind::Undetermined:
            out["kind"] = "undetermined";
            break;
    }
    if (e.kind != BettiEntry::Kind::Undetermined) {
        if (e.hodge_jj)
            out["hodge_type"] = "(" + std::to_string(degree) + "," + std::to_string(degree) + ")";
        out["semisimple"] = e.semisimple;
    }
    return out;
}

inline Json betti_table_json(const BettiTable& t) {
    Json rows = Json::array();
    for (long long c : t.class_orders) {
        Json ranks = Json::array();
        for (int j = 0; j <= t.n; ++j) ranks.push_back(betti_entry_json(t.entry(c, j), j));
        rows.push_back({{"order", str(c)}, {"phi", str(euler_phi(c))}, {"ranks", ranks}});
    }
    return rows;
}

inline Json check_json(const std::string& name, bool pass, const std::string& detail) {
    return Json{{"name", name}, {"pass", pass}, {"detail", detail}};
}

inline std::string entry_display(const BettiEntry& e) {
    switch (e.kind) {
        case BettiEntry::Kind::Exact:
            return std::to_string(e.lo);
        case BettiEntry::Kind::Interval:
            return "[" + std::to_string(e.lo) + ", " + std::to_string(e.hi) + "]";
        default:
            return "?";
    }
}

}  // namespace reportdetail

inline Json build_cone_report(const ConeSingularityInput& in) {
    using namespace reportdetail;
    in.validate();
    const auto table = cone_betti_table(in);
    const auto polys = char_poly_per_degree(table);
    const auto zeta = zeta_function(table);

    Json doc;
    doc["mode"] = "cone";
    Json echo;
    echo["n"] = str(in.n);
    if (in.explicit_data) {
        echo["explicit"] = Json{{"e", str(in.explicit_data->e)},
                                {"d", str(in.explicit_data->d)},
                                {"chi_u", str(in.explicit_data->chi_u)},
                                {"m", str(in.explicit_data->m)}};
    } else {
        Json mult = Json::array(), deg = Json::array();
        for (long long a : in.multiplicities) mult.push_back(str(a));
        for (long long d : in.degrees) deg.push_back(str(d));
        echo["multiplicities"] = mult;
        echo["degrees"] = deg;
    }
    doc["input"] = echo;
    long long top_total = 0;
    for (long long c : table.class_orders)
        top_total += euler_phi(c) * table.entry(c, table.n).value();
    doc["derived"] = Json{{"m", str(table.m)},
                          {"e", str(*table.e)},
                          {"d", str(table.d)},
                          {"chi_u", str(*table.chi_u)},
                          {"top_degree_total_rank", str(top_total)}};

    Json classes = Json::array();
    for (long long c : table.class_orders)
        classes.push_back({{"order", str(c)},
                           {"phi", str(euler_phi(c))},
                           {"divides_d", table.d % c == 0},
                           {"divides_e", *table.e % c == 0}});
    doc["classes"] = classes;
    doc["betti"] = betti_table_json(table);

    Json char_polys = Json::array();
    for (int j = 0; j <= table.n; ++j) {
        Json p = cyclo_json(polys[static_cast<size_t>(j)]);
        p["degree"] = str(j);
        char_polys.push_back(p);
    }
    doc["char_polys"] = char_polys;
    Json zeta_json = cyclo_json(zeta);
    zeta_json["convention"] = "prod_j det(1 - t T | H^j)^((-1)^(j+1))";
    doc["zeta"] = zeta_json;

    Json checks = Json::array();
    {
        const auto expected = CycloProduct::factor(*table.e, -*table.chi_u);
        checks.push_back(check_json("zeta equals (1-t^e)^(-chi(U))", zeta == expected,
                                    zeta.to_string() + " vs " + expected.to_string()));
        bool columns_ok = true;
        for (long long c : table.class_orders)
            columns_ok = columns_ok && chi_lambda(table, c) == *table.chi_u;
        checks.push_back(check_json("chi_lambda = chi(U) for every c | e", columns_ok,
                                    "checked " + std::to_string(table.class_orders.size()) +
                                        " classes"));
        long long spot = 2;
        while (*table.e % spot == 0) ++spot;
        checks.push_back(check_json("columns vanish for c not dividing e",
                                    chi_lambda(table, spot) == 0,
                                    "spot-checked c = " + std::to_string(spot)));
    }
    doc["checks"] = checks;

    Json oracles;
    if (!in.explicit_data) {
        const DegreeProfile profile(in.n, in.degrees);
        const long long series = chi_open_series(profile);
        const long long incl = chi_open_inclusion_exclusion(profile);
        oracles["chi_series"] = str(series);
        oracles["chi_inclusion_exclusion"] = str(incl);
        oracles["agreement"] = series == incl;
        if (profile.degrees_distinct() && profile.m() > 1) {
            const Rat closed = chi_open_closed_form(profile);
            oracles["chi_closed_form"] = rat_to_string(closed);
            oracles["agreement"] = oracles["agreement"].get<bool>() && closed == Rat(series);
        } else {
            oracles["chi_closed_form"] = "n/a (repeated degrees or m = 1)";
        }
    } else {
        oracles["chi_series"] = "n/a (explicit input carries chi(U))";
    }
    doc["oracles"] = oracles;
    doc["warnings"] = Json::array();
    return doc;
}

inline Json build_snc_link_report(const SncLinkInput& in) {
    using namespace reportdetail;
    const auto table = link_betti_bounds(in);

    Json doc;
    doc["mode"] = "snc_link";
    Json mult = Json::array();
    for (long long a : in.multiplicities) mult.push_back(str(a));
    doc["input"] = Json{{"n", str(in.n)},
                        {"multiplicities", mult},
                        {"rational_homology_manifold", in.rhm_flag}};
    doc["derived"] = Json{{"m", str(table.m)}, {"d", str(table.d)}};

    Json classes = Json::array();
    for (long long c : table.class_orders)
        classes.push_back({{"order", str(c)},
                           {"phi", str(euler_phi(c))},
                           {"divides_d", table.d % c == 0}});
    doc["classes"] = classes;
    doc["betti"] = betti_table_json(table);

    Json warnings = Json::array();
    for (long long c : table.class_orders) {
        for (int j = 0; j <= table.n; ++j) {
            const auto& e = table.entry(c, j);
            if (e.kind == BettiEntry::Kind::Interval)
                warnings.push_back("class " + std::to_string(c) + ", degree " + std::to_string(j) +
                                   ": only the bound [" + std::to_string(e.lo) + ", " +
                                   std::to_string(e.hi) +
                                   "] is known without the rational-homology-manifold hypothesis");
            if (e.kind == BettiEntry::Kind::Undetermined)
                warnings.push_back("class " + std::to_string(c) + ", degree " + std::to_string(j) +
                                   ": not determined by the link bounds");
        }
    }
    doc["warnings"] = warnings;
    return doc;
}

inline Json build_jordan_report(const ResolutionGraph& g) {
    using namespace reportdetail;
    g.validate();

    Json doc;
    doc["mode"] = "jordan";
    Json comps = Json::array();
    for (const auto& c : g.components)
        comps.push_back({{"name", c.name},
                         {"multiplicity", str(c.multiplicity)},
                         {"exceptional", c.exceptional}});
    doc["input"] = Json{{"eigenvalue_order", str(g.target_order)}, {"components", comps}};

    Json jl = Json::array();
    for (int i : g.j_lambda()) jl.push_back(g.components[static_cast<size_t>(i)].name);
    doc["j_lambda"] = jl;

    auto set_json = [&](int a, int b) {
        const auto [family, family0] = strata_sets(g, a, b);
        auto names = [&](const std::vector<StratumKey>& keys) {
            Json arr = Json::array();
            for (const auto& k : keys) arr.push_back(g.stratum_name(k));
            return arr;
        };
        return Json{{"a", str(a)}, {"b", str(b)}, {"J", names(family)}, {"J0", names(family0)}};
    };
    doc["strata_sets"] =
        Json::array({set_json(1, 0), set_json(1, 1), set_json(2, 1), set_json(0, 0)});

    const auto witness = find_witness(g);
    if (witness) {
        Json coords = Json::array();
        for (const auto& [key, vals] : witness->coordinates) {
            Json names = Json::array();
            for (int i : key) names.push_back(g.components[static_cast<size_t>(i)].name);
            Json values = Json::array();
            for (const auto& v : vals) values.push_back(rat_to_string(v));
            coords.push_back(
                {{"stratum", g.stratum_name(key)}, {"components", names}, {"values", values}});
        }
        doc["witness"] = Json{{"found", true}, {"coordinates", coords}};
        doc["conditions"] = Json{{"condition_one", check_condition_one(g, *witness)},
                                 {"condition_two", check_condition_two(g, *witness)}};
    } else {
        doc["witness"] = Json{{"found", false}};
    }
    doc["caveat"] = "necessary conditions only";
    doc["warnings"] = Json::array();
    return doc;
}

// ---------------------------------------------------------------------------
// plain-text rendering

namespace reportdetail {

class TableWriter {
  public:
    explicit TableWriter(bool color) : color_(color) {}

    void section(const std::string& title) {
        if (color_)
            out_ << "\033[1m" << title << "\033[0m\n";
        else
            out_ << title << "\n";
    }

    void line(const std::string& text = "") { out_ << text << "\n"; }

    void grid(const std::vector<std::vector<std::string>>& rows) {
        if (rows.empty()) return;
        std::vector<size_t> width;
        for (const auto& row : rows) {
            if (width.size() < row.size()) width.resize(row.size(), 0);
            for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        }
        for (const auto& row : rows) {
            std::string text = "  ";
            for (size_t i = 0; i < row.size(); ++i) {
                text += row[i];
                if (i + 1 < row.size()) text += std::string(width[i] - row[i].size() + 2, ' ');
            }
            while (!text.empty() && text.back() == ' ') text.pop_back();
            out_ << text << "\n";
        }
    }

    std::string take() { return out_.str(); }

  private:
    bool color_;
    std::ostringstream out_;
};

inline std::string render_betti_grid(const Json& doc, TableWriter& w) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"class \\ degree"};
    const auto& betti = doc.at("betti");
    if (!betti.empty())
        for (const auto& r : betti.front().at("ranks"))
            header.push_back("j=" + r.at("degree").get<std::string>());
    rows.push_back(header);
    for (const auto& row : betti) {
        std::vector<std::string> cells = {"c=" + row.at("order").get<std::string>()};
        for (const auto& r : row.at("ranks")) {
            const std::string kind = r.at("kind").get<std::string>();
            if (kind == "exact")
                cells.push_back(r.at("value").get<std::string>());
            else if (kind == "interval")
                cells.push_back("[" + r.at("lo").get<std::string>() + ", " +
                                r.at("hi").get<std::string>() + "]");
            else
                cells.push_back("?");
        }
        rows.push_back(cells);
    }
    w.grid(rows);
    return {};
}

inline void render_warnings(const Json& doc, TableWriter& w) {
    if (!doc.contains("warnings") || doc.at("warnings").empty()) return;
    w.line();
    w.section("Warnings");
    for (const auto& warning : doc.at("warnings")) w.line("  - " + warning.get<std::string>());
}

inline std::string render_cone_table(const Json& doc, bool color) {
    TableWriter w(color);
    w.section("Betti ranks of the Milnor fiber per monodromy eigenvalue class (cone case)");
    const auto& derived = doc.at("derived");
    w.line("  derived: m = " + derived.at("m").get<std::string>() +
           ", e = " + derived.at("e").get<std::string>() +
           ", d = " + derived.at("d").get<std::string>() +
           ", chi(U) = " + derived.at("chi_u").get<std::string>());
    w.line("  total rank of H^n over all eigenvalues (the Milnor number when the "
           "singularity is isolated): " +
           derived.at("top_degree_total_rank").get<std::string>());
    w.line();
    w.section("Eigenvalue classes");
    {
        std::vector<std::vector<std::string>> rows = {{"c", "phi(c)", "c|d", "c|e"}};
        for (const auto& c : doc.at("classes"))
            rows.push_back({c.at("order").get<std::string>(), c.at("phi").get<std::string>(),
                            c.at("divides_d").get<bool>() ? "yes" : "no",
                            c.at("divides_e").get<bool>() ? "yes" : "no"});
        w.grid(rows);
    }
    w.line();
    w.section("Betti ranks b_c^j");
    render_betti_grid(doc, w);
    w.line("  (monodromy semisimple in every degree; degrees j < n carry Hodge type (j,j))");
    w.line();
    w.section("Characteristic polynomials det(1 - t T | H^j)");
    for (const auto& p : doc.at("char_polys"))
        w.line("  j=" + p.at("degree").get<std::string>() + ": " +
               p.at("display").get<std::string>());
    w.line();
    w.section("Zeta function");
    w.line("  convention: " + doc.at("zeta").at("convention").get<std::string>());
    w.line("  zeta(t) = " + doc.at("zeta").at("display").get<std::string>());
    w.line();
    w.section("Checks");
    for (const auto& c : doc.at("checks"))
        w.line(std::string("  [") + (c.at("pass").get<bool>() ? "pass" : "FAIL") + "] " +
               c.at("name").get<std::string>() + " (" + c.at("detail").get<std::string>() + ")");
    w.line();
    w.section("Oracles");
    for (const auto& [key, value] : doc.at("oracles").items()) {
        if (value.is_string())
            w.line("  " + key + " = " + value.get<std::string>());
        else
            w.line("  " + key + " = " + std::string(value.get<bool>() ? "yes" : "NO"));
    }
    render_warnings(doc, w);
    return w.take();
}

inline std::string render_snc_table(const Json& doc, bool color) {
    TableWriter w(color);
    w.section("Betti ranks and bounds per eigenvalue class (link case)");
    const auto& derived = doc.at("derived");
    w.line("  derived: m = " + derived.at("m").get<std::string>() +
           ", d = " + derived.at("d").get<std::string>());
    w.line();
    w.section("Eigenvalue classes");
    {
        std::vector<std::vector<std::string>> rows = {{"c", "phi(c)", "c|d"}};
        for (const auto& c : doc.at("classes"))
            rows.push_back({c.at("order").get<std::string>(), c.at("phi").get<std::string>(),
                            c.at("divides_d").get<bool>() ? "yes" : "no"});
        w.grid(rows);
    }
    w.line();
    w.section("Betti ranks b_c^j ('?' = not determined by the link bounds)");
    render_betti_grid(doc, w);
    render_warnings(doc, w);
    return w.take();
}

inline std::string render_jordan_table(const Json& doc, bool color) {
    TableWriter w(color);
    w.section("Non-semisimplicity detector (degree 1, n = 2)");
    w.line("  eigenvalue order: " + doc.at("input").at("eigenvalue_order").get<std::string>());
    {
        std::string names;
        for (const auto& n : doc.at("j_lambda")) {
            if (!names.empty()) names += ", ";
            names += n.get<std::string>();
        }
        w.line("  J(lambda) components: " + (names.empty() ? std::string("(none)") : names));
    }
    w.line();
    w.section("Strata families");
    {
        std::vector<std::vector<std::string>> rows = {{"(a, b)", "J(lambda;a,b)", "J0(lambda;a,b)"}};
        for (const auto& s : doc.at("strata_sets")) {
            auto join = [](const Json& arr) {
                std::string out;
                for (const auto& x : arr) {
                    if (!out.empty()) out += ", ";
                    out += x.get<std::string>();
                }
                return out.empty() ? std::string("(empty)") : out;
            };
            rows.push_back({"(" + s.at("a").get<std::string>() + ", " +
                                s.at("b").get<std::string>() + ")",
                            join(s.at("J")), join(s.at("J0"))});
        }
        w.grid(rows);
    }
    w.line();
    w.section("Witness");
    if (doc.at("witness").at("found").get<bool>()) {
        w.line("  a vector satisfying both necessary conditions exists:");
        for (const auto& c : doc.at("witness").at("coordinates")) {
            std::string vals;
            for (const auto& v : c.at("values")) {
                if (!vals.empty()) vals += ", ";
                vals += v.get<std::string>();
            }
            w.line("    " + c.at("stratum").get<std::string>() + ": " + vals);
        }
        w.line("  condition one: " +
               std::string(doc.at("conditions").at("condition_one").get<bool>() ? "holds"
                                                                                : "FAILS"));
        w.line("  condition two: " +
               std::string(doc.at("conditions").at("condition_two").get<bool>() ? "holds"
                                                                                : "FAILS"));
    } else {
        w.line("  no vector satisfies both necessary conditions");
    }
    w.line();
    w.line("  verdict vocabulary: " + doc.at("caveat").get<std::string>() +
           " (the conditions are necessary, not sufficient)");
    render_warnings(doc, w);
    return w.take();
}

}  // namespace reportdetail

inline std::string render_report_json(const Json& doc) { return doc.dump(2) + "\n"; }

inline std::string render_report_table(const Json& doc, bool color) {
    const std::string mode = doc.at("mode").get<std::string>();
    if (mode == "cone") return reportdetail::render_cone_table(doc, color);
    if (mode == "snc_link") return reportdetail::render_snc_table(doc, color);
    return reportdetail::render_jordan_table(doc, color);
}

}  // namespace vancoh
