#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oftt/cases.hpp"
#include "oftt/diagnostics.hpp"
#include "oftt/output.hpp"
#include "oftt/solver.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitAdmissibility = 3;

struct RunOptions {
    std::string case_name;
    int nx = 0, ny = 0;
    int order = 2;
    double cfl = -1.0;
    double t_final = -1.0;
    double gamma_e = -1.0, gamma_i = -1.0;
    bool ec_only = false;
    std::string entropy_log;
    std::string out;
};

oftt::CaseSpec resolve_case(const RunOptions& opt) {
    oftt::CaseSpec spec = oftt::case_spec(opt.case_name);
    if (opt.gamma_e > 0.0) spec.gas.gamma_e = opt.gamma_e;
    if (opt.gamma_i > 0.0) spec.gas.gamma_i = opt.gamma_i;
    if (opt.t_final > 0.0) spec.t_final = opt.t_final;
    return spec;
}

int do_run(const RunOptions& opt) {
    const oftt::CaseSpec spec = resolve_case(opt);
    const int nx = opt.nx > 0 ? opt.nx : spec.default_nx;
    const int ny = opt.ny > 0 ? opt.ny : (spec.two_dimensional ? spec.default_ny : 1);

    oftt::Field f = oftt::init_case(spec, nx, ny);
    oftt::SolverConfig cfg;
    cfg.scheme.k = opt.order;
    cfg.scheme.ec_only = opt.ec_only;
    cfg.cfl = opt.cfl;
    cfg.t_final = spec.t_final;
    cfg.entropy_log = !opt.entropy_log.empty();

    std::printf("case %s, %dx%d cells, order %d, t_final %g\n", spec.name.c_str(), nx, ny,
                opt.order, spec.t_final);
    oftt::SolverResult res = oftt::run_solver(std::move(f), spec.gas, cfg);
    std::printf("done: %ld steps to t = %.10g\n", res.steps, res.t);

    if (!opt.out.empty()) {
        if (res.field.grid().is_1d())
            oftt::write_csv_1d(opt.out, res.field, spec.gas);
        else
            oftt::write_vtk(opt.out, res.field, spec.gas);
        std::printf("wrote %s\n", opt.out.c_str());
    }
    if (!opt.entropy_log.empty()) {
        oftt::write_entropy_log(opt.entropy_log, res.entropy);
        std::printf("wrote %s\n", opt.entropy_log.c_str());
    }
    return 0;
}

int do_converge(const RunOptions& opt, int levels) {
    const oftt::CaseSpec spec = resolve_case(opt);
    if (!spec.smooth) {
        std::fprintf(stderr, "converge: %s has no exact solution\n", spec.name.c_str());
        return kExitUsage;
    }

    std::vector<oftt::PrimComponent> comps;
    std::vector<const char*> labels;
    if (spec.name == "accuracy1d_II") {
        comps = {oftt::PrimComponent::Pe, oftt::PrimComponent::Pi};
        labels = {"pe", "pi"};
    } else {
        comps = {oftt::PrimComponent::Rho};
        labels = {"rho"};
    }

    std::printf("%8s", "cells");
    for (const char* l : labels) std::printf("  %12s(%s) %8s", "L1", l, "order");
    std::printf("\n");

    std::vector<std::vector<double>> errors(comps.size());
    int nx = opt.nx > 0 ? opt.nx : spec.default_nx;
    for (int lvl = 0; lvl < levels; ++lvl, nx *= 2) {
        const int ny = spec.two_dimensional ? nx : 1;
        oftt::SolverConfig cfg;
        cfg.scheme.k = opt.order;
        cfg.scheme.ec_only = opt.ec_only;
        cfg.cfl = opt.cfl;
        cfg.t_final = spec.t_final;
        oftt::SolverResult res =
            oftt::run_solver(oftt::init_case(spec, nx, ny), spec.gas, cfg);

        std::printf("%8d", nx);
        for (std::size_t m = 0; m < comps.size(); ++m) {
            const double e = oftt::l1_error(res.field, spec, res.t, comps[m]);
            errors[m].push_back(e);
            std::printf("  %16.6e", e);
            if (lvl > 0)
                std::printf(" %8.3f", oftt::convergence_order(errors[m][lvl - 1], e));
            else
                std::printf(" %8s", "--");
        }
        std::printf("\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy-stable finite difference solver for the two-temperature Euler system"};
    app.require_subcommand(1);

    RunOptions opt;
    int levels = 4;

    CLI::App* run = app.add_subcommand("run", "advance a catalog case and write the solution");
    run->add_option("--case", opt.case_name, "case name (see list-cases)")->required();
    run->add_option("--nx", opt.nx, "cells in x (default: case resolution)");
    run->add_option("--ny", opt.ny, "cells in y (2D cases only)");
    run->add_option("--order", opt.order, "scheme order")->check(CLI::Range(2, 4));
    run->add_option("--cfl", opt.cfl, "CFL number (default 0.475 in 1D, 0.3 in 2D)");
    run->add_option("--tfinal", opt.t_final, "final time override");
    run->add_option("--gamma-e", opt.gamma_e, "electron heat ratio override");
    run->add_option("--gamma-i", opt.gamma_i, "ion heat ratio override");
    run->add_flag("--ec-only", opt.ec_only, "disable the dissipation operator");
    run->add_option("--entropy-log", opt.entropy_log, "per-step entropy CSV path");
    run->add_option("--out", opt.out, "solution output path (CSV in 1D, VTK in 2D)");

    CLI::App* conv = app.add_subcommand("converge", "refinement study on a smooth case");
    conv->add_option("--case", opt.case_name, "case name")->required();
    conv->add_option("--order", opt.order, "scheme order")->check(CLI::Range(2, 4));
    conv->add_option("--levels", levels, "number of refinement levels")->check(CLI::Range(1, 10));
    conv->add_option("--nx", opt.nx, "coarsest resolution");
    conv->add_option("--cfl", opt.cfl, "CFL number");
    conv->add_flag("--ec-only", opt.ec_only, "disable the dissipation operator");

    CLI::App* list = app.add_subcommand("list-cases", "print the case catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (list->parsed()) {
            for (const std::string& n : oftt::case_names()) std::printf("%s\n", n.c_str());
            return 0;
        }
        if (run->parsed()) return do_run(opt);
        return do_converge(opt, levels);
    } catch (const oftt::AdmissibilityError& e) {
        std::fprintf(stderr, "admissibility failure: %s\n", e.what());
        return kExitAdmissibility;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
