#include "oftt/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "oftt/time_integrator.hpp"

namespace oftt {

SolverResult run_solver(Field f, const GasParams& g, const SolverConfig& cfg,
                        const std::function<void(long, double, const Field&)>& on_step) {
    if (cfg.scheme.k < 2 || cfg.scheme.k > 4)
        throw std::invalid_argument("run_solver: order must be 2, 3 or 4");
    const double cfl = cfg.cfl > 0.0 ? cfg.cfl : default_cfl(!f.grid().is_1d());
    const double measure = f.grid().cell_measure();

    apply_boundary(f);
    check_admissible(f, g);

    SolverResult res;
    res.t = 0.0;
    const double t_end = cfg.t_final;
    while (res.t < t_end * (1.0 - 1e-14) && res.steps < cfg.max_steps) {
        double dt = cfl_dt(f, g, cfl);
        if (res.t + dt > t_end) dt = t_end - res.t;

        double ent_before = 0.0;
        if (cfg.entropy_log) ent_before = total_entropy(f, g);

        // The entropy flux divergence is sampled at the pre-step state, i.e.
        // on the first Runge-Kutta stage evaluation.
        double ent_div = 0.0;
        bool first_stage = true;
        std::vector<Vec5> dudt;
        const auto rhs = [&](const Field& stage) {
            double* monitor = nullptr;
            if (cfg.entropy_log && first_stage) monitor = &ent_div;
            first_stage = false;
            compute_rhs(stage, g, cfg.scheme, dudt, monitor);
            return dudt;
        };
        f = ssp_rk_step(f, rhs, dt, cfg.scheme.k, &g);
        res.t += dt;
        ++res.steps;

        if (cfg.entropy_log) {
            EntropyRecord rec;
            rec.step = static_cast<int>(res.steps);
            rec.t = res.t;
            rec.dt = dt;
            rec.total_entropy = total_entropy(f, g);
            rec.eq25_change = rec.total_entropy - ent_before + dt * ent_div * measure;
            res.entropy.push_back(rec);
        }
        if (on_step) on_step(res.steps, res.t, f);
    }
    apply_boundary(f);
    check_admissible(f, g);
    res.field = std::move(f);
    return res;
}

}  // namespace oftt
