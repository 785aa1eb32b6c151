#ifndef OFTT_TIME_INTEGRATOR_HPP
#define OFTT_TIME_INTEGRATOR_HPP

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oftt/grid.hpp"
#include "oftt/state.hpp"

namespace oftt {

// CFL time step: dt = cfl / max_cells(lam_x/dx + lam_y/dy), with
// lam_d = |v_d| + max of the two sound speeds (full-system and
// conservative-part), so the dissipation operator's spectral radius is
// always respected.
double cfl_dt(const Field& f, const GasParams& g, double cfl);

// Default CFL numbers: 0.475 in 1D, 0.3 in 2D.
double default_cfl(bool two_dimensional);

// SSP-RK stage coefficients for orders 2 and 3; each stage is
// U^(k) = sum_l mu[k][l] U^(l) + nu[k][l] dt L(U^(l)).
struct RKScheme {
    int order = 2;
    std::vector<std::vector<double>> mu, nu;
    static RKScheme make(int order);
};

// The ten constants of the 4th-order low-storage SSP-RK scheme.
namespace rk4 {
inline constexpr double c10 = 0.39175222700392;
inline constexpr double a20 = 0.44437049406734, a21 = 0.55562950593266, c21 = 0.36841059262959;
inline constexpr double a30 = 0.62010185138540, a32 = 0.37989814861460, c32 = 0.25189177424738;
inline constexpr double a40 = 0.17807995410773, a43 = 0.82192004589227, c43 = 0.54497475021237;
inline constexpr double b0 = 0.00683325884039, b2 = 0.51723167208978, b3 = 0.12759831133288;
inline constexpr double b4 = 0.34833675773694, d3 = 0.08460416338212, d4 = 0.22600748319395;
}  // namespace rk4

// One SSP-RK step of u' = L(u) over a generic state.
// Ops requirements:
//   Deriv d = ops.rhs(State&)          (may mutate the state to fill ghosts)
//   ops.combine(dst, a, src, b)        dst = a*dst + b*src
//   ops.add(dst, c, deriv)             dst += c*deriv
template <class State, class Ops>
State ssp_rk_generic(const State& u0, Ops&& ops, double dt, int order) {
    if (order == 2 || order == 3) {
        const RKScheme rk = RKScheme::make(order);
        std::vector<State> stages{u0};
        for (std::size_t k = 0; k < rk.mu.size(); ++k) {
            State next = stages[0];
            ops.combine(next, rk.mu[k][0], stages[0], 0.0);
            for (std::size_t l = 1; l < rk.mu[k].size(); ++l)
                ops.combine(next, 1.0, stages[l], rk.mu[k][l]);
            for (std::size_t l = 0; l < rk.nu[k].size(); ++l)
                if (rk.nu[k][l] != 0.0) ops.add(next, rk.nu[k][l] * dt, ops.rhs(stages[l]));
            stages.push_back(std::move(next));
        }
        return std::move(stages.back());
    }
    if (order != 4) throw std::invalid_argument("ssp_rk: order must be 2, 3 or 4");

    using namespace rk4;
    State work = u0;
    State u1 = u0;
    ops.add(u1, c10 * dt, ops.rhs(work));

    State u2 = u0;
    ops.combine(u2, a20, u2, 0.0);
    ops.combine(u2, 1.0, u1, a21);
    ops.add(u2, c21 * dt, ops.rhs(u1));

    State u3 = u0;
    ops.combine(u3, a30, u3, 0.0);
    ops.combine(u3, 1.0, u2, a32);
    ops.add(u3, c32 * dt, ops.rhs(u2));

    auto l3 = ops.rhs(u3);
    State u4 = u0;
    ops.combine(u4, a40, u4, 0.0);
    ops.combine(u4, 1.0, u3, a43);
    ops.add(u4, c43 * dt, l3);

    State un = u0;
    ops.combine(un, b0, un, 0.0);
    ops.combine(un, 1.0, u2, b2);
    ops.combine(un, 1.0, u3, b3);
    ops.combine(un, 1.0, u4, b4);
    ops.add(un, d3 * dt, l3);
    ops.add(un, d4 * dt, ops.rhs(u4));
    return un;
}

// SSP-RK step for a Field. The rhs callback receives a stage field whose
// ghost layers have been filled; admissibility of every stage is verified
// when g is supplied, reporting the failing stage index on error.
Field ssp_rk_step(const Field& f,
                  const std::function<std::vector<Vec5>(const Field&)>& rhs, double dt,
                  int order, const GasParams* g = nullptr);

}  // namespace oftt

#endif
