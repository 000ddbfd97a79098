#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "modclass.hpp"

using namespace modclass;
using nlohmann::json;

namespace {

struct Globals {
    std::optional<std::uint64_t> max_ring;
    std::optional<std::uint64_t> max_module;
    std::optional<std::uint64_t> max_homs;

    Limits limits() const
    {
        Limits l = Limits::from_env();
        if (max_ring) l.max_ring = *max_ring;
        if (max_module) l.max_module = *max_module;
        if (max_homs) l.max_homs = *max_homs;
        return l;
    }
};

void print_meta(const MetaReport& m, std::ostream& os)
{
    os << (m.passed() ? "PASS " : "FAIL ") << m.name << " (" << m.reports_checked << " checked, "
       << m.violations.size() << " violations)\n";
    for (const auto& v : m.violations) os << "  violation: " << v.ring << ": " << v.rule << (v.detail.empty() ? "" : ": ") << v.detail << "\n";
}

int cmd_classify(const Globals& g, const std::string& spec, const std::string& corpus, bool table)
{
    const Limits limits = g.limits();
    std::vector<RingPtr> rings;
    if (!corpus.empty()) {
        if (corpus != "builtin") throw ParseError("unknown corpus '" + corpus + "' (expected 'builtin')");
        for (const auto& s : builtin_corpus()) rings.push_back(build_ring(s, limits));
    } else {
        if (spec.empty()) throw ParseError("classify needs a ring spec or --corpus builtin");
        rings.push_back(build_ring(spec, limits));
    }
    const auto reports = classify_all(rings, limits);
    std::vector<MetaReport> meta;
    if (!corpus.empty()) {
        meta.push_back(verify_implication_chain(reports));
        meta.push_back(free_projective_check(reports));
    }
    if (table) {
        std::cout << render_table(reports);
        for (const auto& m : meta) print_meta(m, std::cout);
    } else {
        json out;
        out["reports"] = reports;
        if (!meta.empty()) out["meta"] = meta;
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_check(const Globals& g, std::size_t seeds, std::size_t random, bool inject, const std::string& library,
                    bool as_json)
{
    SuiteOptions opt;
    opt.seeds = seeds;
    opt.random_rings = random;
    opt.inject_corrupted = inject;
    if (!library.empty()) opt.pp_library = library;
    opt.limits = g.limits();
    const auto suites = run_all_suites(opt);
    bool ok = true;
    for (const auto& s : suites) ok = ok && s.passed();
    if (as_json) {
        std::cout << json{{"passed", ok}, {"suites", suites}}.dump(2) << "\n";
    } else {
        for (const auto& s : suites) {
            print_meta(s, std::cout);
            for (const auto& f : s.findings) std::cout << "  " << f << "\n";
        }
        std::cout << (ok ? "all suites passed" : "violations found") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_certificate(const Globals& g, std::size_t n, const std::string& field)
{
    const auto result = classify_matrix_family(n, parse_field(field), g.limits());
    json out = result.certificate;
    out["report"] = result.report;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_decompose(const Globals& g, const std::string& spec)
{
    const Limits limits = g.limits();
    const RingPtr ring = build_ring(spec, limits);
    const auto dec = primitive_decomposition(ring, std::nullopt, limits);
    IndecomposableRegistry registry(dec, limits);
    const auto ks = krull_schmidt(regular_module(ring, limits), registry, std::nullopt, limits);
    json classes = json::array();
    for (std::size_t i = 0; i < dec.class_count(); ++i)
        classes.push_back({{"id", i},
                           {"idempotents", dec.classes[i]},
                           {"size", dec.representatives[i]->size()},
                           {"multiplicity", dec.multiplicity(i)},
                           {"elements", dec.representative_elements[i]}});
    json sig = json::array();
    for (const auto& [id, m] : ks.signature.classes) sig.push_back({{"id", id}, {"multiplicity", m}});
    std::cout << json{{"ring_label", ring->label()},
                      {"idempotents", dec.idempotents},
                      {"classes", classes},
                      {"k", dec.class_count()},
                      {"regular_signature", sig}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_radical(const Globals& g, const std::string& spec)
{
    const Limits limits = g.limits();
    const RingPtr ring = build_ring(spec, limits);
    const auto rad = jacobson_radical_with_index(ring);
    const auto local = is_local(*ring);
    const RingPtr top = quotient_ring(ring, rad.ideal, limits);
    std::cout << json{{"ring_label", ring->label()},
                      {"size", rad.ideal.size()},
                      {"elements", rad.ideal.elements},
                      {"generators", rad.ideal.generators},
                      {"nilpotency_index", rad.nilpotency_index},
                      {"is_local", local.local},
                      {"quotient_size", top->size()},
                      {"quotient_simple", is_simple_ring(top).simple}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_ppval(const Globals& g, const std::string& spec, const std::string& path)
{
    const Limits limits = g.limits();
    const RingPtr ring = build_ring(spec, limits);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open formula file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    const PPFormula phi = pp_from_json(j);
    const ModulePtr M = regular_module(ring, limits);
    const auto sol = pp_evaluate(*M, phi, limits);
    json out{{"ring_label", ring->label()}, {"formula", to_json(phi)}, {"size", sol.size()}};
    if (phi.free_vars == 1) {
        const auto check = pp_subgroup_is_right_ideal(ring, phi, limits);
        out["elements"] = check.elements;
        out["right_ideal"] = check.right_ideal;
        out["right_ideal_generators"] = check.generators;
    } else {
        out["tuples"] = sol.tuples;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"modclass: finite rings, finite modules and elementarity verdicts"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--max-ring", g.max_ring, "largest ring carrier (env MODCLASS_MAX_SIZE)");
    app.add_option("--max-module", g.max_module, "largest module carrier");
    app.add_option("--max-homs", g.max_homs, "hom search candidate budget");

    std::string spec, corpus, field = "infinite", formula, library;
    bool table = false, as_json = false, inject = false;
    std::size_t seeds = 3, random = 100, n = 2;

    auto* classify = app.add_subcommand("classify", "classify a ring or the built-in corpus");
    classify->add_option("spec", spec, "ring spec");
    classify->add_option("--corpus", corpus, "corpus selector (builtin)");
    classify->add_flag("--json", as_json, "JSON output (default)");
    classify->add_flag("--table", table, "aligned table output");

    auto* check = app.add_subcommand("check-paper", "run every property suite over the built-in corpus");
    check->add_option("--seeds", seeds, "seeded search orders for the Krull-Schmidt suite");
    check->add_option("--random", random, "random structure-constant rings in the implication suite");
    check->add_flag("--inject-corrupted", inject, "add a ring with a corrupted multiplication table");
    check->add_option("--pp-library", library, "pp formula library JSON");
    check->add_flag("--json", as_json, "JSON output");

    auto* cert = app.add_subcommand("certificate", "matrix-ring certificate that projective need not be free");
    cert->add_option("--n", n, "matrix size, 1..4");
    cert->add_option("--field", field, "'infinite' or a field order q <= 9");

    auto* decompose = app.add_subcommand("decompose", "primitive idempotents and indecomposable projectives");
    decompose->add_option("spec", spec, "ring spec")->required();

    auto* radical = app.add_subcommand("radical", "Jacobson radical");
    radical->add_option("spec", spec, "ring spec")->required();

    auto* ppval = app.add_subcommand("ppval", "evaluate a pp formula on the regular module");
    ppval->add_option("spec", spec, "ring spec")->required();
    ppval->add_option("formula", formula, "formula JSON file")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify) return cmd_classify(g, spec, corpus, table);
        if (*check) return cmd_check(g, seeds, random, inject, library, as_json);
        if (*cert) return cmd_certificate(g, n, field);
        if (*decompose) return cmd_decompose(g, spec);
        if (*radical) return cmd_radical(g, spec);
        if (*ppval) return cmd_ppval(g, spec, formula);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
