#include "ncdef/json_io.hpp"
#include "ncdef/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>

using namespace ncdef;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

unsigned thread_budget() {
    if (const char* env = std::getenv("NCDEF_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

int finish(const ToolReport& report, const std::string& json_out) {
    std::cout << report.summary();
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "cannot write " << json_out << "\n";
            return 2;
        }
        out << report.to_json().dump(2) << "\n";
    }
    return report.exit_code();
}

void run_families(ToolReport& report, const std::vector<FamilyId>& families,
                  const std::vector<std::uint64_t>& seeds, std::size_t max_degree,
                  bool exact_degree7) {
    struct Job {
        FamilyId id;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (FamilyId id : families)
        for (auto seed : seeds) jobs.push_back({id, seed});

    std::vector<FamilyReport> results(jobs.size());
    std::vector<double> times(jobs.size());
    unsigned budget = thread_budget();
    std::size_t next = 0;
    while (next < jobs.size()) {
        std::size_t batch = std::min<std::size_t>(budget, jobs.size() - next);
        std::vector<std::future<void>> futs;
        for (std::size_t k = 0; k < batch; ++k) {
            std::size_t idx = next + k;
            futs.push_back(std::async(std::launch::async, [&, idx] {
                auto t0 = std::chrono::steady_clock::now();
                results[idx] = verify_family(jobs[idx].id, jobs[idx].seed, max_degree,
                                             {jobs[idx].seed, exact_degree7});
                times[idx] = ms_since(t0);
            }));
        }
        for (auto& f : futs) f.get();
        next += batch;
    }
    // deterministic assembly: jobs were built sorted by family name, then seed
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        FamilyReport named = results[i];
        for (auto& c : named.checks) c.name = "seed" + std::to_string(jobs[i].seed) + "/" + c.name;
        report.add(named, times[i]);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for quadratic Poisson structures on four generators "
                 "and their graded quantizations"};
    app.require_subcommand(1);

    std::vector<std::uint64_t> seeds{1};
    std::size_t max_degree = 6;
    bool exact_degree7 = false;
    std::string json_out;

    auto add_common = [&](CLI::App* cmd, bool with_degree = true) {
        cmd->add_option("--seed,--seeds", seeds, "seeds for randomized parameter draws")
            ->delimiter(',');
        if (with_degree)
            cmd->add_option("--max-degree", max_degree, "largest graded degree to check (<= 7)")
                ->check(CLI::Range(std::size_t{0}, std::size_t{7}));
        cmd->add_flag("--exact-degree7", exact_degree7,
                      "confirm the degree-7 modular rank with exact arithmetic");
        cmd->add_option("--json", json_out, "write the JSON report to this file");
    };

    // verify family NAME | verify all
    auto* verify = app.add_subcommand("verify", "run the verification battery");
    verify->require_subcommand(1);
    std::string family_arg;
    auto* vfam = verify->add_subcommand("family", "verify one family");
    vfam->add_option("name", family_arg, "family name (L1111, L112, R22, R13, S23, E3)")
        ->required();
    add_common(vfam);
    auto* vall = verify->add_subcommand("all", "verify all six families");
    add_common(vall);

    // table1
    auto* table = app.add_subcommand("table1", "orbit dimensions of the six families");
    add_common(table, false);

    // hilbert
    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of a quadratic algebra");
    std::string relations_file;
    hilbert->add_option("--relations", relations_file, "algebra JSON file")->required();
    add_common(hilbert);

    // poisson check
    auto* poisson = app.add_subcommand("poisson", "Poisson structure checks");
    auto* pcheck = poisson->add_subcommand("check", "validate a bracket or one-form");
    std::string bracket_file, oneform_file;
    pcheck->add_option("--bracket", bracket_file, "bracket JSON file");
    pcheck->add_option("--oneform", oneform_file, "one-form JSON file");
    add_common(pcheck, false);

    // superpotential check
    auto* spot = app.add_subcommand("superpotential", "superpotential checks");
    auto* scheck = spot->add_subcommand("check", "run the Calabi-Yau criterion");
    std::string phi_file;
    scheck->add_option("--file", phi_file, "superpotential tensor JSON file")->required();
    add_common(scheck);

    // cgg
    auto* cgg_cmd = app.add_subcommand("cgg", "universal deformation formula checks");
    auto* ce3 = cgg_cmd->add_subcommand("e3", "print the exceptional presentation");
    std::string hbar_str = "1/1";
    ce3->add_option("--hbar", hbar_str, "deformation parameter as P/Q");
    add_common(ce3, false);
    auto* ccheck = cgg_cmd->add_subcommand("check", "validate a derivation pair");
    std::string pair_file;
    std::size_t cgg_degree = 2;
    ccheck->add_option("--pair", pair_file, "derivation pair JSON file")->required();
    ccheck->add_option("--degree", cgg_degree, "degree bound for the associativity sweep");
    add_common(ccheck, false);

    CLI11_PARSE(app, argc, argv);

    ToolReport report;
    try {
        if (vfam->parsed() || vall->parsed()) {
            std::vector<FamilyId> families =
                vall->parsed() ? all_families() : std::vector<FamilyId>{family_from_name(family_arg)};
            report.command = vall->parsed() ? "verify all" : "verify family " + family_arg;
            report.config = {{"seeds", seeds}, {"max_degree", max_degree},
                             {"exact_degree7", exact_degree7}};
            run_families(report, families, seeds, max_degree, exact_degree7);
        } else if (table->parsed()) {
            report.command = "table1";
            report.config = {{"seeds", seeds}};
            json dims = json::object();
            auto t0 = std::chrono::steady_clock::now();
            for (FamilyId id : all_families()) {
                std::size_t first = 0;
                bool stable = true;
                for (std::size_t s = 0; s < seeds.size(); ++s) {
                    std::size_t d = orbit_dimension(id, sample_params(id, seeds[s]));
                    if (s == 0)
                        first = d;
                    else if (d != first)
                        stable = false;
                }
                dims[family_name(id)] = first;
                report.add(std::string("orbit/") + family_name(id),
                           stable ? CheckStatus::Pass : CheckStatus::Fail,
                           std::to_string(first) + (stable ? "" : " (unstable across seeds)"),
                           ms_since(t0));
            }
            std::cout << dims.dump() << "\n";
            if (!json_out.empty()) {
                std::ofstream out(json_out);
                out << dims.dump(2) << "\n";
            }
            return report.failed() ? 1 : 0;
        } else if (hilbert->parsed()) {
            report.command = "hilbert";
            report.config = {{"relations", relations_file}, {"max_degree", max_degree}};
            QuadraticAlgebra a = algebra_from_json(load_json_file(relations_file));
            auto t0 = std::chrono::steady_clock::now();
            GradedDims d = hilbert_function(a, max_degree, {seeds[0], exact_degree7});
            json dims = json::array();
            for (auto v : d.dims) dims.push_back(v);
            std::cout << dims.dump() << "\n";
            report.add("hilbert", CheckStatus::Pass, dims.dump(), ms_since(t0));
        } else if (pcheck->parsed()) {
            report.command = "poisson check";
            if (bracket_file.empty() == oneform_file.empty())
                throw std::runtime_error("pass exactly one of --bracket / --oneform");
            auto t0 = std::chrono::steady_clock::now();
            if (!bracket_file.empty()) {
                QuadBracket b = bracket_from_json(load_json_file(bracket_file));
                report.config = {{"bracket", bracket_file}};
                report.add("jacobiator", is_poisson(b) ? CheckStatus::Pass : CheckStatus::Fail);
                report.add("unimodularity",
                           is_unimodular(b) ? CheckStatus::Pass : CheckStatus::Fail, "",
                           ms_since(t0));
            } else {
                OneForm f = oneform_from_json(load_json_file(oneform_file));
                report.config = {{"oneform", oneform_file}};
                auto rep = oneform_validate(f);
                report.add("cubic", rep.cubic ? CheckStatus::Pass : CheckStatus::Fail);
                report.add("euler_contraction",
                           rep.euler_zero ? CheckStatus::Pass : CheckStatus::Fail);
                report.add("integrability",
                           rep.integrable ? CheckStatus::Pass : CheckStatus::Fail, "",
                           ms_since(t0));
            }
        } else if (scheck->parsed()) {
            report.command = "superpotential check";
            report.config = {{"file", phi_file}, {"max_degree", max_degree}};
            Tensor<Rational> phi = tensor_from_json(load_json_file(phi_file));
            auto t0 = std::chrono::steady_clock::now();
            CyReport rep = cy_report(phi, max_degree, {seeds[0], exact_degree7});
            report.add("untwisted_cyclic",
                       rep.untwisted_cyclic ? CheckStatus::Pass : CheckStatus::Fail);
            report.add("top_derivative",
                       rep.dim_top_derivative == phi.n() ? CheckStatus::Pass : CheckStatus::Fail,
                       "dim " + std::to_string(rep.dim_top_derivative));
            report.add("hilbert", rep.hilbert_matches ? CheckStatus::Pass : CheckStatus::Fail, "",
                       ms_since(t0));
        } else if (ce3->parsed()) {
            report.command = "cgg e3";
            report.config = {{"hbar", hbar_str}};
            Rational hbar = Rational::parse(hbar_str);
            StarProduct s{e3_pair(), hbar};
            auto t0 = std::chrono::steady_clock::now();
            auto pres = star_presentation(s);
            for (const auto& r : pres.algebra.relations.basis())
                std::cout << r.pretty() << "\n";
            report.add("kernel_dimension",
                       !pres.degenerate ? CheckStatus::Pass : CheckStatus::Fail,
                       std::to_string(pres.algebra.relations.dim()));
            if (hbar == Rational(1)) {
                auto printed = instance(FamilyId::E3, E3Params{}).relations(Rational(1));
                report.add("matches_printed_relators",
                           pres.algebra.relations == printed ? CheckStatus::Pass
                                                             : CheckStatus::Fail,
                           "", ms_since(t0));
            }
        } else if (ccheck->parsed()) {
            report.command = "cgg check";
            report.config = {{"pair", pair_file}, {"degree", cgg_degree}};
            DerivationPair p = pair_from_json(load_json_file(pair_file));
            auto t0 = std::chrono::steady_clock::now();
            auto rep = validate_pair(p, cgg_degree);
            report.add("commutation", rep.commutation_ok ? CheckStatus::Pass : CheckStatus::Fail);
            report.add("nilpotency", rep.nilpotent ? CheckStatus::Pass : CheckStatus::Fail,
                       "index " + std::to_string(rep.nilpotency_index));
            if (rep.valid()) {
                StarProduct s{p, Rational(1)};
                bool assoc = true;
                for (const auto& d : associativity_defect(s, cgg_degree, seeds[0]))
                    if (!d.is_zero()) assoc = false;
                report.add("associativity", assoc ? CheckStatus::Pass : CheckStatus::Fail, "",
                           ms_since(t0));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return finish(report, json_out);
}
