// Command-line front end: single-family generating functions and the batch
// identity / bijection / particle-content sweeps.
//
// Exit codes: 0 all checks pass, 1 an identity check failed, 2 usage error.

#include "rsos/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

rsos::SweepConfig make_config(const std::vector<int>& pprimes, int max_L, int exact_L,
                              const std::vector<std::string>& models,
                              const std::vector<std::string>& methods,
                              const std::vector<int>& systems, const std::string& format,
                              int workers, const std::string& corrupt) {
    rsos::SweepConfig cfg;
    cfg.p_primes = pprimes;
    cfg.max_L = max_L;
    if (exact_L >= 0) cfg.exact_L = exact_L;
    for (const auto& m : models) cfg.models.push_back(rsos::parse_model(m));
    if (methods.empty()) {
        cfg.methods = {rsos::Method::Brute,      rsos::Method::Bosonic,
                       rsos::Method::Fermionic1, rsos::Method::Fermionic2,
                       rsos::Method::Recursion,  rsos::Method::Dfunction};
    } else {
        for (const auto& m : methods) cfg.methods.push_back(rsos::parse_method(m));
    }
    cfg.systems = systems;
    cfg.format = rsos::parse_format(format);
    cfg.workers = workers;
    if (!corrupt.empty()) {
        auto colon = corrupt.find(':');
        cfg.corrupt_method = rsos::parse_method(corrupt.substr(0, colon));
        if (colon != std::string::npos) cfg.corrupt_index = std::stoi(corrupt.substr(colon + 1));
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice-path generating functions and identity sweeps"};
    app.require_subcommand(1);

    // ---- gf ----
    int g_pp = 3, g_a = 1, g_b = 1, g_c = 2, g_L = 0;
    std::string g_method = "brute", g_model = "parafermion";
    auto* gf_cmd = app.add_subcommand("gf", "print one family's polynomial as JSON");
    gf_cmd->add_option("--pprime", g_pp)->required();
    gf_cmd->add_option("--a", g_a)->required();
    gf_cmd->add_option("--b", g_b)->required();
    gf_cmd->add_option("--c", g_c)->required();
    gf_cmd->add_option("--L", g_L)->required();
    gf_cmd->add_option("--method", g_method);
    gf_cmd->add_option("--model", g_model);

    // ---- shared sweep options ----
    std::vector<int> pprimes;
    int max_L = 0, exact_L = -1, workers = 1;
    std::vector<std::string> models{"abf", "parafermion"};
    std::vector<std::string> methods;
    std::vector<int> systems{1, 2};
    std::string format = "text", corrupt, fixture;

    auto add_sweep_opts = [&](CLI::App* cmd, bool with_methods, bool with_systems) {
        cmd->add_option("--pprime", pprimes, "p' values (repeatable)");
        cmd->add_option("--max-L", max_L);
        cmd->add_option("--L", exact_L, "restrict to one L");
        cmd->add_option("--model", models, "abf and/or parafermion");
        if (with_methods) cmd->add_option("--method", methods, "subset of methods");
        if (with_systems) cmd->add_option("--system", systems, "1 and/or 2");
        cmd->add_option("--format", format, "text|json|csv");
        cmd->add_option("--workers", workers);
        cmd->add_option("--fixture", fixture, "print the worked single-path example");
    };

    auto* verify_cmd = app.add_subcommand("verify", "compare methods over a family sweep");
    add_sweep_opts(verify_cmd, true, false);
    verify_cmd->add_option("--corrupt", corrupt,
                           "testing hook: method[:job-index] gets one coefficient bumped");

    auto* bij_cmd = app.add_subcommand("bijection", "path->partition checks over a sweep");
    add_sweep_opts(bij_cmd, false, false);

    auto* mn_cmd = app.add_subcommand("mn", "particle-content linear-system checks");
    add_sweep_opts(mn_cmd, false, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gf_cmd->parsed()) {
            rsos::FamilyParams family{g_pp, g_a, g_b, g_c, g_L};
            rsos::LaurentPoly p =
                rsos::compute_gf(rsos::parse_model(g_model), rsos::parse_method(g_method), family);
            std::cout << rsos::to_json(p) << "\n";
            return 0;
        }
        if (!fixture.empty()) return rsos::run_fixture(fixture, std::cout);
        rsos::SweepConfig cfg = make_config(pprimes, max_L, exact_L, models, methods, systems,
                                            format, workers, corrupt);
        if (verify_cmd->parsed()) return rsos::run_verify(cfg, std::cout);
        if (bij_cmd->parsed()) {
            cfg.methods = {rsos::Method::Dfunction};
            return rsos::run_bijection(cfg, std::cout);
        }
        if (mn_cmd->parsed()) {
            cfg.methods = {rsos::Method::Brute};
            return rsos::run_mn(cfg, std::cout);
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
