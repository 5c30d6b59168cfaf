// tk -- tournament toolkit: enumeration, verification suites, analysis

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tk/canonical.hpp"
#include "tk/decomposition.hpp"
#include "tk/diamonds.hpp"
#include "tk/families.hpp"
#include "tk/hypomorphy.hpp"
#include "tk/io.hpp"
#include "tk/shape.hpp"
#include "tk/suites.hpp"

namespace {

int cmd_enumerate(int n, const std::string& out_path) {
    tk::Catalog catalog = tk::enumerate_canonical(n);
    if (out_path.empty())
        std::cout << tk::catalog_to_text(catalog);
    else
        tk::write_catalog_file(out_path, catalog);
    std::cerr << "n=" << n << ": " << catalog.codes.size() << " classes\n";
    return 0;
}

int cmd_gen(const std::string& name, int n, const std::string& out_path) {
    tk::NamedTournament named;
    if (name == "O_n" || name == "o_n") named = tk::NamedTournament::o_n;
    else if (name == "almost_transitive") named = tk::NamedTournament::almost_transitive;
    else if (name == "C3" || name == "c3") named = tk::NamedTournament::c3;
    else if (name == "C4" || name == "c4") named = tk::NamedTournament::c4;
    else if (name == "delta_plus") named = tk::NamedTournament::delta_plus;
    else if (name == "delta_minus") named = tk::NamedTournament::delta_minus;
    else throw CLI::ValidationError("gen", "unknown tournament name: " + name);
    tk::Tournament t = tk::gen_named(named, n);
    if (out_path.empty())
        std::cout << tk::to_tk_line(t) << "\n";
    else
        tk::write_tournament_file(out_path, t);
    return 0;
}

int cmd_analyze(const std::string& in_path) {
    tk::Tournament t = tk::read_tournament_file(in_path);
    int n = t.size();
    std::cout << tk::to_tk_line(t) << "\n";
    std::cout << "shape: " << tk::to_string(tk::classify_shape(t)) << "\n";
    std::cout << "strongly_connected: "
              << (tk::is_strongly_connected(t) ? "yes" : "no") << "\n";
    std::cout << "decomposable: " << (tk::is_decomposable(t) ? "yes" : "no") << "\n";
    std::cout << "scc_order:";
    for (tk::VertexSet c : tk::scc_order(t)) std::cout << " {" << tk::set_to_string(c) << "}";
    std::cout << "\n";
    if (n >= 2) {
        tk::Partition p = tk::gallai_partition(t);
        std::cout << "partition: " << p.to_string() << "\n";
        std::cout << "tilde_partition: " << tk::tilde_partition(t).to_string() << "\n";
        std::cout << "quotient: " << tk::to_tk_line(tk::quotient(t, p)) << "\n";
    }
    std::cout << "diamond_centers:\n";
    for (int v = 0; v < n; ++v) {
        auto [plus, minus] = tk::center_counts(t, v);
        std::cout << "  " << v << ": (" << plus << ", " << minus << ")\n";
    }
    int max_k = std::min(3, n);
    tk::SelfDualProfile profile = tk::self_dual_profile(t, max_k);
    std::cout << "self_dual: " << (profile.self_dual ? "yes" : "no") << "\n";
    for (const auto& [k, flag] : profile.minus_k)
        std::cout << "delete_" << k << "_self_dual: " << (flag ? "yes" : "no") << "\n";
    std::cout << "strongly_self_dual: "
              << (profile.strongly_self_dual ? "yes" : "no") << "\n";
    return 0;
}

int cmd_omega(int m, const std::string& catalog_dir, const std::string& out_path) {
    auto load = [&](int n) {
        std::string path = catalog_dir + "/cat" + std::to_string(n) + ".tkc";
        return tk::read_catalog_file(path);
    };
    tk::OmegaReport report = tk::omega(m, load(m - 2), load(m - 1));
    if (out_path.empty())
        std::cout << tk::omega_to_json(report);
    else {
        std::ofstream out(out_path, std::ios::binary);
        out << tk::omega_to_json(report);
    }
    return 0;
}

int cmd_verify(const std::string& suite_name, const tk::SuiteParams& params,
               const std::string& catalog_path, const std::string& format) {
    tk::CatalogCache cache;
    if (!catalog_path.empty()) cache.put(tk::read_catalog_file(catalog_path));
    tk::Report report = tk::run_suite(suite_name, params, cache);
    if (format == "json")
        std::cout << tk::report_to_json(report);
    else
        std::cout << tk::report_to_text(report);
    return report.passed() ? 0 : 1;
}

void print_suite_list() {
    for (const tk::SuiteInfo& info : tk::suite_registry())
        std::cout << info.name << "\n    " << info.statement << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tournament toolkit"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "enumerate isomorphism classes");
    int enum_n = 0;
    std::string enum_out;
    int jobs = 0;
    enumerate->add_option("--n", enum_n, "vertex count")->required();
    enumerate->add_option("--out", enum_out, "output .tkc file (stdout if absent)");
    enumerate->add_option("--jobs", jobs, "worker count (overrides TK_JOBS)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_name, catalog_path, format = "text";
    bool list_suites = false;
    int verify_n = -1, verify_m = -1, trials = -1, nmax = -1;
    std::uint64_t seed = std::uint64_t(-1);
    verify->add_option("suite", suite_name, "suite name");
    verify->add_flag("--list", list_suites, "list suites and the properties they check");
    verify->add_option("--n", verify_n, "vertex count");
    verify->add_option("--m", verify_m, "family size (corollary5)");
    verify->add_option("--catalog", catalog_path, "preloaded catalog .tkc file");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "randomized instance count");
    verify->add_option("--nmax", nmax, "largest random vertex count");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* analyze = app.add_subcommand("analyze", "decompose and profile one tournament");
    std::string analyze_in;
    analyze->add_option("--in", analyze_in, "input .tk file")->required();

    auto* omega_cmd = app.add_subcommand("omega", "compute the exceptional family");
    int omega_m = 0;
    std::string omega_dir = ".", omega_out;
    omega_cmd->add_option("--m", omega_m, "family size")->required();
    omega_cmd->add_option("--catalog-dir", omega_dir,
                          "directory holding cat<N>.tkc files");
    omega_cmd->add_option("--out", omega_out, "output JSON file (stdout if absent)");

    auto* gen = app.add_subcommand("gen", "emit a named tournament");
    std::string gen_name, gen_out;
    int gen_n = 0;
    gen->add_option("name", gen_name, "O_n | almost_transitive | C3 | C4 | delta_plus | delta_minus")
        ->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--out", gen_out, "output .tk file (stdout if absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) {
            if (jobs > 0) setenv("TK_JOBS", std::to_string(jobs).c_str(), 1);
            return cmd_enumerate(enum_n, enum_out);
        }
        if (verify->parsed()) {
            if (list_suites) {
                print_suite_list();
                return 0;
            }
            if (suite_name.empty()) {
                std::cerr << "verify: missing suite name (try --list)\n";
                return 2;
            }
            tk::SuiteParams params;
            if (verify_n >= 0) params.values["n"] = std::to_string(verify_n);
            if (verify_m >= 0) params.values["m"] = std::to_string(verify_m);
            if (trials >= 0) params.values["trials"] = std::to_string(trials);
            if (nmax >= 0) params.values["nmax"] = std::to_string(nmax);
            if (seed != std::uint64_t(-1)) params.values["seed"] = std::to_string(seed);
            return cmd_verify(suite_name, params, catalog_path, format);
        }
        if (analyze->parsed()) return cmd_analyze(analyze_in);
        if (omega_cmd->parsed()) return cmd_omega(omega_m, omega_dir, omega_out);
        if (gen->parsed()) return cmd_gen(gen_name, gen_n, gen_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
