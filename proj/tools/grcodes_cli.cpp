// Command-line front end: analyze code structure and distance, emit distance
// table sweeps, and run formula-vs-enumeration verification campaigns.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <grcodes/spec_io.hpp>
#include <grcodes/verify.hpp>

using namespace grcodes;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) fail(Err::ParseError, "cannot open output file: " + path);
    return file;
}

json component_json(const Ambient& amb, size_t c) {
    const Component& comp = amb.components()[c];
    json j;
    j["base"] = io::poly_to_json(comp.base);
    j["multiplicity"] = comp.t;
    j["factor"] = io::poly_to_json(comp.f_comp);
    j["chain"] = amb.component_is_chain(c);
    return j;
}

DistanceReport analyze_distance(const Code& code, bool force_oracle,
                                const EnumerationBudget& budget, unsigned threads) {
    DistanceReport rep;
    bool have_formula = false;
    try {
        if (code.ambient().num_components() == 1)
            rep = gr_distance_eta_ps(code);
        else if (code.ambient().num_components() == 2)
            rep = gr_distance_2eta_ps(code);
        else
            fail(Err::UnsupportedCase, "more than two primary blocks");
        have_formula = true;
    } catch (const Error& e) {
        if (e.kind() != Err::UnsupportedCase && e.kind() != Err::EvenPrime) throw;
        rep.theorem = "oracle";
        rep.case_tag = "enumeration";
        rep.distance = brute_min_weight(code, budget, threads);
        rep.oracle_checked = true;
    }
    if (have_formula && force_oracle) {
        auto brute = brute_min_weight(code, budget, threads);
        rep.oracle_checked = (brute == rep.distance);
    }
    return rep;
}

json analysis_report(const io::CodeSpec& spec, bool force_oracle, const EnumerationBudget& budget,
                     unsigned threads) {
    Ambient amb = Ambient::make(spec.ring, spec.modulus);
    Code code(amb, spec.generators);
    json rep;
    rep["ring"] = io::ring_to_json(spec.ring);
    rep["f"] = io::poly_to_json(spec.modulus);
    json comps = json::array();
    for (size_t c = 0; c < amb.num_components(); ++c) comps.push_back(component_json(amb, c));
    rep["components"] = comps;
    rep["chain"] = amb.is_chain_ring();
    rep["pir"] = amb.is_principal_ideal_ring();
    StructureReport sr = amb.structure_report();
    json maxi = json::array();
    for (auto& [p_poly, h] : sr.maximal_ideals)
        maxi.push_back({io::poly_to_json(p_poly), io::poly_to_json(h)});
    rep["maximal_ideals"] = maxi;
    rep["jacobson"] = {io::poly_to_json(sr.jacobson.first), io::poly_to_json(sr.jacobson.second)};
    rep["socle"] = io::poly_to_json(sr.socle_generator);

    rep["torsional_degrees"] = code.torsional_degrees().degrees;
    const StandardFormBasis& basis = code.standard_form_basis();
    json per_comp = json::array();
    for (const auto& gens : basis.per_component) {
        json list = json::array();
        for (const StdFormGen& g : gens)
            list.push_back({{"j", g.j}, {"k", g.k}, {"f", io::poly_to_json(g.f)}});
        per_comp.push_back(list);
    }
    json merged = json::array();
    for (const MergedGen& g : basis.merged)
        merged.push_back({{"j", g.j}, {"g", io::poly_to_json(g.g)}});
    rep["standard_form"] = {{"per_component", per_comp}, {"merged", merged}};

    auto lrg = code.last_residue_generator();
    rep["residue_distance_generator"] = lrg ? io::poly_to_json(*lrg) : json(nullptr);
    rep["distance"] = io::distance_report_to_json(analyze_distance(code, force_oracle, budget, threads));
    u64 card = code.cardinality_capped(u64(1) << 62);
    rep["cardinality"] = card;
    return rep;
}

void print_text_report(std::ostream& os, const json& rep) {
    os << "ring: GR(" << rep["ring"]["p"] << "^" << rep["ring"]["a"] << ", " << rep["ring"]["m"]
       << ")\n";
    os << "components: " << rep["components"].size() << "\n";
    os << "chain ring: " << (rep["chain"].get<bool>() ? "yes" : "no") << "\n";
    os << "principal ideal ring: " << (rep["pir"].get<bool>() ? "yes" : "no") << "\n";
    os << "torsional degrees:";
    for (const auto& comp : rep["torsional_degrees"]) {
        os << " (";
        for (size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << comp[i].get<u64>();
        os << ")";
    }
    os << "\n";
    os << "codewords: " << rep["cardinality"] << "\n";
    const json& d = rep["distance"];
    os << "distance: ";
    if (d["distance"].is_null())
        os << "none (zero code)";
    else
        os << d["distance"].get<u64>();
    os << "  [" << d["theorem"].get<std::string>() << " / " << d["case"].get<std::string>() << "]";
    if (d.contains("oracle_checked"))
        os << (d["oracle_checked"].get<bool>() ? " oracle-confirmed" : " ORACLE-MISMATCH");
    os << "\n";
}

struct TableRow {
    u64 i;
    std::optional<u64> j;
    DistanceReport rep;
};

int run_table(u64 p, u64 m, u64 s, u64 eta, const std::string& mode, const std::string& format,
              const std::string& out_path) {
    std::vector<TableRow> rows;
    u64 ps = ipow(p, s);
    if (mode == "eta_ps") {
        for (u64 i = 0; i <= ps; ++i) rows.push_back({i, std::nullopt, eta_ps_distance(p, m, s, eta, i)});
    } else if (mode == "two_eta_ps") {
        for (u64 i = 0; i <= ps; ++i)
            for (u64 j = 0; j <= ps; ++j)
                rows.push_back({i, j, two_eta_ps_distance(p, m, s, eta, i, j)});
    } else {
        fail(Err::ParseError, "mode must be eta_ps or two_eta_ps");
    }
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    if (format == "csv") {
        os << "p,m,s,eta,i,j,case,distance\n";
        for (const TableRow& r : rows) {
            os << p << "," << m << "," << s << "," << eta << "," << r.i << ",";
            if (r.j) os << *r.j;
            os << "," << r.rep.case_tag << ",";
            if (r.rep.distance)
                os << *r.rep.distance;
            else
                os << "none";
            os << "\n";
        }
    } else {
        json arr = json::array();
        for (const TableRow& r : rows) {
            json jr;
            jr["p"] = p;
            jr["m"] = m;
            jr["s"] = s;
            jr["eta"] = eta;
            jr["i"] = r.i;
            jr["j"] = r.j ? json(*r.j) : json(nullptr);
            jr["case"] = r.rep.case_tag;
            jr["distance"] = r.rep.distance ? json(*r.rep.distance) : json(nullptr);
            arr.push_back(jr);
        }
        os << arr.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure and Hamming distance of polycyclic codes over Galois rings"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "analyze a code given a JSON spec file");
    std::string spec_path, out_path, format = "json";
    bool force_oracle = false;
    u64 budget_words = u64(1) << 24;
    unsigned threads = 1;
    u64 seed = 12345;
    analyze->add_option("--spec", spec_path, "path to the code spec JSON")->required();
    analyze->add_option("--out", out_path, "output file (default stdout)");
    analyze->add_option("--format", format, "json|text");
    analyze->add_flag("--oracle", force_oracle, "cross-check the distance by enumeration");
    analyze->add_option("--budget", budget_words, "max enumerated codewords");
    analyze->add_option("--threads", threads, "worker threads for enumeration");

    // table
    auto* table = app.add_subcommand("table", "emit a distance table sweep");
    u64 tp = 3, tm = 1, ts = 1, teta = 1;
    std::string tmode = "eta_ps", tformat = "csv", tout;
    table->add_option("--p", tp, "prime")->required();
    table->add_option("--m", tm, "residue field extension degree");
    table->add_option("--s", ts, "exponent: block length p^s")->required();
    table->add_option("--eta", teta, "base degree eta");
    table->add_option("--mode", tmode, "eta_ps|two_eta_ps");
    table->add_option("--format", tformat, "csv|json");
    table->add_option("--out", tout, "output file (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run formula-vs-enumeration campaigns");
    bool v_tables = false, v_p2 = false, v_props = false, v_all = false;
    std::string vout, vformat = "json";
    verify_cmd->add_flag("--paper-tables", v_tables, "distance tables vs enumeration");
    verify_cmd->add_flag("--p2-cyclic", v_p2, "characteristic-p^2 cyclic distances");
    verify_cmd->add_flag("--properties", v_props, "weight formula and weight-retaining checks");
    verify_cmd->add_flag("--all", v_all, "every campaign, including the randomized structural ones");
    verify_cmd->add_option("--budget", budget_words, "max enumerated codewords");
    verify_cmd->add_option("--threads", threads, "worker threads");
    verify_cmd->add_option("--seed", seed, "seed for randomized campaigns");
    verify_cmd->add_option("--out", vout, "output file (default stdout)");
    verify_cmd->add_option("--format", vformat, "json|text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            EnumerationBudget budget;
            budget.max_codewords = budget_words;
            io::CodeSpec spec = io::load_code_spec(spec_path);
            json rep = analysis_report(spec, force_oracle, budget, threads);
            std::ofstream file;
            std::ostream& os = open_out(file, out_path);
            if (format == "text")
                print_text_report(os, rep);
            else
                os << rep.dump(2) << "\n";
            if (rep["distance"].contains("oracle_checked") &&
                !rep["distance"]["oracle_checked"].get<bool>())
                return kExitMismatch;
            return kExitOk;
        }
        if (*table) return run_table(tp, tm, ts, teta, tmode, tformat, tout);
        if (*verify_cmd) {
            EnumerationBudget budget;
            budget.max_codewords = budget_words;
            std::vector<verify::CheckResult> results;
            bool budget_hit = false;
            auto guard = [&](auto&& fn, const std::string& name) {
                try {
                    results.push_back(fn());
                } catch (const Error& e) {
                    if (e.kind() != Err::BudgetExceeded) throw;
                    verify::CheckResult skipped;
                    skipped.name = name;
                    skipped.pass = false;
                    skipped.note = std::string("skipped: ") + e.what();
                    results.push_back(skipped);
                    budget_hit = true;
                }
            };
            if (v_all || v_tables) {
                guard([&] { return verify::eta_ps_vs_oracle(budget, threads); }, "eta-ps tables");
                guard([&] { return verify::two_eta_ps_vs_oracle(budget, threads); },
                      "two-eta-ps tables");
            }
            if (v_all || v_p2)
                guard([&] { return verify::p2_cyclic_vs_oracle(budget, seed, threads); },
                      "p2 cyclic distances");
            if (v_all || v_props) {
                guard([&] { return verify::weight_formula_exact(); }, "weight formula");
                guard([&] { return verify::weight_retaining_random(1000, 200, seed); },
                      "weight retaining");
            }
            if (v_all) {
                guard([&] { return verify::standard_form_random(200, seed, budget); },
                      "standard form");
                guard([&] { return verify::uniqueness_fixed_point(200, seed + 1); },
                      "unique set fixed point");
                guard([&] { return verify::structure_predicates(budget); }, "structure predicates");
                guard([&] { return verify::distance_projection(100, seed + 3, budget); },
                      "distance projection");
                guard([&] { return verify::gr_lifting_vs_oracle(budget, seed + 4, threads); },
                      "distance lifting");
            }
            std::ofstream file;
            std::ostream& os = open_out(file, vout);
            bool any_fail = false;
            json arr = json::array();
            for (const verify::CheckResult& r : results) {
                bool skipped = r.note.rfind("skipped:", 0) == 0;
                if (!r.pass && !skipped) any_fail = true;
                json jr;
                jr["name"] = r.name;
                jr["match"] = r.pass;
                jr["checked"] = r.checked;
                jr["mismatches"] = r.mismatches;
                jr["millis"] = r.millis;
                if (!r.note.empty()) jr["note"] = r.note;
                arr.push_back(jr);
                if (vformat == "text")
                    os << (skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL")) << "  " << r.name << "  ("
                       << r.checked << " checks, " << r.mismatches << " mismatches, " << r.millis
                       << " ms)" << (r.note.empty() ? "" : "  " + r.note) << "\n";
            }
            if (vformat != "text") os << arr.dump(2) << "\n";
            if (any_fail) return kExitMismatch;
            if (budget_hit) return kExitBudget;
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.kind() == Err::BudgetExceeded) return kExitBudget;
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
