#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "psiforge/classify.hpp"
#include "psiforge/errors.hpp"
#include "psiforge/lattice.hpp"
#include "psiforge/psi.hpp"
#include "psiforge/records.hpp"
#include "psiforge/spec_ast.hpp"
#include "psiforge/verify.hpp"

namespace {

using psiforge::Errc;
using psiforge::fail;
using Json = nlohmann::ordered_json;

// --budget beats PSI_FORGE_BUDGET beats the built-in default.
std::uint64_t resolve_budget(const std::optional<std::uint64_t>& cli_budget) {
    if (cli_budget) return *cli_budget;
    if (const char* env = std::getenv("PSI_FORGE_BUDGET")) {
        std::string s(env);
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(s, &used);
            if (used != s.size() || v == 0) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            fail(Errc::argument_error,
                 "PSI_FORGE_BUDGET must be a positive integer, got '" + s + "'");
        }
    }
    return psiforge::kDefaultLatticeBudget;
}

std::optional<psiforge::VerdictCache> open_cache(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return psiforge::VerdictCache(path);
}

psiforge::VerdictRecord evaluate_cached(const std::string& spec_text,
                                        const std::string& method_flag,
                                        std::uint64_t budget,
                                        std::optional<psiforge::VerdictCache>& cache,
                                        bool& from_cache) {
    from_cache = false;
    std::string canon = psiforge::canonical_spec(spec_text);
    if (cache) {
        if (auto hit = cache->lookup(canon, method_flag, budget)) {
            from_cache = true;
            return *hit;
        }
    }
    psiforge::VerdictRecord rec =
        psiforge::evaluate_spec(spec_text, method_flag, budget);
    if (cache) cache->store(method_flag, budget, rec);
    return rec;
}

void print_record_human(const psiforge::VerdictRecord& rec, bool from_cache,
                        std::ostream& out) {
    out << "spec: " << rec.spec << "\n";
    out << "order: " << rec.order << "\n";
    if (rec.psi) out << "psi: " << *rec.psi << "\n";
    out << "verdict: " << rec.verdict << "\n";
    out << "method: " << rec.method << "\n";
    if (rec.witness) {
        const char* label = rec.verdict == "false"
                                ? "witness (violating subgroup)"
                                : "witness (largest maximal subgroup)";
        out << label << ": order " << rec.witness->order << ", psi "
            << rec.witness->psi;
        if (!rec.witness->hint.empty()) out << ", generated by " << rec.witness->hint;
        out << "\n";
    }
    out << "elapsed_ms: " << rec.elapsed_ms << (from_cache ? " (cache hit)" : "")
        << "\n";
}

int cmd_psi(const std::string& spec_text, bool json) {
    psiforge::GroupSpec ast = psiforge::parse_spec(spec_text);
    psiforge::GroupPtr g = psiforge::build_group(ast);
    psiforge::PsiValue a = psiforge::psi_direct(g);
    psiforge::PsiValue b = psiforge::psi_via_classes(g);
    psiforge::PsiValue c = psiforge::psi_via_cyclic_subgroups(g);
    if (a.psi != b.psi || b.psi != c.psi)
        fail(Errc::internal_error,
             "psi methods disagree on " + g->name() + ": direct " + a.psi.str() +
                 ", classes " + b.psi.str() + ", cyclic subgroups " + c.psi.str());
    if (json) {
        Json j;
        j["spec"] = psiforge::print_spec(ast);
        j["order"] = g->size();
        j["psi"] = a.psi.convert_to<std::uint64_t>();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "spec: " << psiforge::print_spec(ast) << "\n";
        std::cout << "order: " << g->size() << "\n";
        std::cout << "psi: " << a.psi.str()
                  << " (direct = conjugacy classes = cyclic subgroups)\n";
    }
    return 0;
}

int cmd_bpsi(const std::string& spec_text, const std::string& method,
             const std::optional<std::uint64_t>& budget_opt,
             const std::string& cache_path, bool json, bool csv) {
    std::uint64_t budget = resolve_budget(budget_opt);
    auto cache = open_cache(cache_path);
    bool from_cache = false;
    psiforge::VerdictRecord rec =
        evaluate_cached(spec_text, method, budget, cache, from_cache);
    if (json)
        std::cout << psiforge::record_to_json(rec) << "\n";
    else if (csv)
        std::cout << psiforge::csv_header() << "\n"
                  << psiforge::record_to_csv(rec, "") << "\n";
    else
        print_record_human(rec, from_cache, std::cout);
    return 0;
}

int cmd_maximals(const std::string& spec_text,
                 const std::optional<std::uint64_t>& budget_opt, bool json) {
    std::uint64_t budget = resolve_budget(budget_opt);
    psiforge::GroupSpec ast = psiforge::parse_spec(spec_text);
    psiforge::GroupPtr g = psiforge::build_group(ast);
    auto lattice = psiforge::enumerate_subgroups(g, budget);
    auto maxes = psiforge::maximal_subgroups(lattice);
    if (json) {
        Json arr = Json::array();
        for (const auto& m : maxes) {
            Json j;
            j["order"] = m.count();
            j["psi"] = psiforge::psi_of_mask(m);
            arr.push_back(j);
        }
        Json out;
        out["spec"] = psiforge::print_spec(ast);
        out["order"] = g->size();
        out["psi"] = psiforge::psi_direct(g).psi.convert_to<std::uint64_t>();
        out["maximal_subgroups"] = arr;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "spec: " << psiforge::print_spec(ast) << " (order " << g->size()
                  << ", psi " << psiforge::psi_direct(g).psi.str() << ")\n";
        std::cout << "maximal subgroups: " << maxes.size() << "\n";
        for (const auto& m : maxes) {
            std::cout << "  order " << m.count() << ", psi "
                      << psiforge::psi_of_mask(m) << ", generated by ";
            auto gens = psiforge::small_generating_set(g, m);
            std::cout << "<";
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << g->element_label(gens[i]);
            }
            std::cout << ">\n";
        }
    }
    return 0;
}

int cmd_table(const std::string& tier, const std::optional<std::uint64_t>& budget_opt,
              const std::string& cache_path, bool json, bool csv) {
    std::uint64_t budget = resolve_budget(budget_opt);
    auto cache = open_cache(cache_path);
    auto rows = tier == "extended" ? psiforge::table_rows_extended()
                                   : psiforge::table_rows_core();
    bool all_ok = true;
    std::size_t ok_count = 0;
    if (csv) std::cout << psiforge::csv_header() << "\n";
    for (const auto& row : rows) {
        bool from_cache = false;
        psiforge::VerdictRecord rec =
            evaluate_cached(row.spec, "brute", budget, cache, from_cache);
        bool ok = rec.order == row.order && rec.verdict == "true";
        all_ok = all_ok && ok;
        if (ok) ++ok_count;
        if (json) {
            std::cout << psiforge::record_to_json(rec) << "\n";
        } else if (csv) {
            std::cout << psiforge::record_to_csv(rec, "true") << "\n";
        } else {
            std::cout << (ok ? "ok   " : "FAIL ") << rec.spec << "  order "
                      << rec.order << "  expected true, got " << rec.verdict
                      << "  (" << rec.method << ", " << rec.elapsed_ms << " ms"
                      << (from_cache ? ", cache hit" : "") << ")\n";
        }
    }
    if (!json && !csv)
        std::cout << "table " << tier << ": " << ok_count << "/" << rows.size()
                  << " rows as expected\n";
    if (!all_ok)
        fail(Errc::internal_error, "table " + tier + " has rows out of agreement");
    return 0;
}

int cmd_verify(const std::string& suite, const std::optional<std::uint64_t>& budget_opt) {
    std::uint64_t budget = resolve_budget(budget_opt);
    if (!psiforge::run_verify_suite(suite, std::cout, budget))
        fail(Errc::internal_error, "verify suite '" + suite + "' failed");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "psi-forge: sum-of-element-orders computations on finite groups.\n"
        "Specs use a small expression language, e.g. \"C9\", \"D10\" (dihedral of\n"
        "ORDER 10), \"Q8\", \"A5\", \"E(3,2)\", \"Schmidt(2,3)\", \"SL(2,5)\",\n"
        "\"C2 x C3\", \"File(\\\"gens.txt\\\")\"."};
    app.require_subcommand(1);

    std::string spec_text, method = "auto", cache_path, tier = "core", suite;
    std::optional<std::uint64_t> budget;
    bool json = false, csv = false;

    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", budget,
                        "subgroup enumeration budget (default: PSI_FORGE_BUDGET "
                        "or 2000000)");
    };

    CLI::App* psi = app.add_subcommand(
        "psi", "compute psi three independent ways and require agreement");
    psi->add_option("spec", spec_text, "group expression")->required();
    psi->add_flag("--json", json, "one JSON object on stdout");

    CLI::App* bpsi = app.add_subcommand(
        "bpsi", "decide whether every proper subgroup H has psi(H) < |G|");
    bpsi->add_option("spec", spec_text, "group expression")->required();
    bpsi->add_option("--method", method, "auto | brute | theorem")
        ->check(CLI::IsMember({"auto", "brute", "theorem"}));
    add_budget(bpsi);
    bpsi->add_option("--cache", cache_path, "JSON-lines verdict cache file");
    bpsi->add_flag("--json", json, "pinned JSON record on stdout");
    bpsi->add_flag("--csv", csv, "CSV header plus one row on stdout")
        ->excludes("--json");

    CLI::App* maximals = app.add_subcommand(
        "maximals", "list maximal subgroups with their orders and psi");
    maximals->add_option("spec", spec_text, "group expression")->required();
    add_budget(maximals);
    maximals->add_flag("--json", json, "one JSON object on stdout");

    CLI::App* table = app.add_subcommand(
        "table", "verify the catalogue of non-nilpotent psi-bounded groups");
    table->add_option("--tier", tier, "core (orders <= 504) | extended")
        ->check(CLI::IsMember({"core", "extended"}));
    add_budget(table);
    table->add_option("--cache", cache_path, "JSON-lines verdict cache file");
    table->add_flag("--json", json, "one pinned JSON record per row");
    table->add_flag("--csv", csv, "CSV report")->excludes("--json");

    CLI::App* verify = app.add_subcommand(
        "verify", "run a self-check suite against element-by-element computation");
    verify
        ->add_option("suite", suite,
                     "formulas | theorems | table-core | table-extended")
        ->required();
    add_budget(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (psi->parsed()) return cmd_psi(spec_text, json);
        if (bpsi->parsed())
            return cmd_bpsi(spec_text, method, budget, cache_path, json, csv);
        if (maximals->parsed()) return cmd_maximals(spec_text, budget, json);
        if (table->parsed()) return cmd_table(tier, budget, cache_path, json, csv);
        if (verify->parsed()) return cmd_verify(suite, budget);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const psiforge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
