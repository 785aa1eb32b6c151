#ifndef OFTT_SOLVER_HPP
#define OFTT_SOLVER_HPP

#include <functional>
#include <vector>

#include "oftt/diagnostics.hpp"
#include "oftt/grid.hpp"
#include "oftt/scheme.hpp"
#include "oftt/state.hpp"

namespace oftt {

struct SolverConfig {
    SchemeConfig scheme;
    double cfl = -1.0;  // negative: pick the dimensional default
    double t_final = 1.0;
    bool entropy_log = false;
    long max_steps = 1000000;
};

struct SolverResult {
    Field field;
    double t = 0.0;
    long steps = 0;
    std::vector<EntropyRecord> entropy;
};

// Advance the field to t_final with CFL-limited SSP-RK time stepping; the
// Runge-Kutta order matches the spatial order. The last step is clipped to
// land on t_final exactly. With entropy_log set, each step records the total
// entropy and the fully discrete entropy change (entropy difference plus the
// time-integrated numerical entropy flux divergence of the pre-step state).
// The optional callback runs after every step.
SolverResult run_solver(Field f, const GasParams& g, const SolverConfig& cfg,
                        const std::function<void(long, double, const Field&)>& on_step = {});

}  // namespace oftt

#endif
