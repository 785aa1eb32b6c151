#include "oftt/time_integrator.hpp"

#include <algorithm>
#include <cmath>

#include "oftt/eigensystem.hpp"
#include "oftt/scheme.hpp"

namespace oftt {

double default_cfl(bool two_dimensional) { return two_dimensional ? 0.3 : 0.475; }

double cfl_dt(const Field& f, const GasParams& g, double cfl) {
    const Grid& grid = f.grid();
    double max_rate = 0.0;
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            const Prim w = cons_to_prim(f.at(i, j), g);
            const double lx = std::max(max_abs_speed_full(w, g, Axis::X),
                                       max_abs_speed_cons(w, g, Axis::X));
            double rate = lx / grid.dx();
            if (!grid.is_1d()) {
                const double ly = std::max(max_abs_speed_full(w, g, Axis::Y),
                                           max_abs_speed_cons(w, g, Axis::Y));
                rate += ly / grid.dy();
            }
            max_rate = std::max(max_rate, rate);
        }
    if (!(max_rate > 0.0) || !std::isfinite(max_rate))
        throw AdmissibilityError("cfl_dt: non-finite wave speeds");
    return cfl / max_rate;
}

RKScheme RKScheme::make(int order) {
    RKScheme rk;
    rk.order = order;
    if (order == 2) {
        rk.mu = {{1.0}, {0.5, 0.5}};
        rk.nu = {{1.0}, {0.0, 0.5}};
    } else if (order == 3) {
        rk.mu = {{1.0}, {0.75, 0.25}, {1.0 / 3.0, 0.0, 2.0 / 3.0}};
        rk.nu = {{1.0}, {0.0, 0.25}, {0.0, 0.0, 2.0 / 3.0}};
    } else {
        throw std::invalid_argument("RKScheme::make: tabulated orders are 2 and 3");
    }
    return rk;
}

namespace {

struct FieldOps {
    const std::function<std::vector<Vec5>(const Field&)>& rhs_fn;
    const GasParams* gas;
    int stage = 0;

    std::vector<Vec5> rhs(Field& f) {
        apply_boundary(f);
        if (gas) {
            try {
                check_admissible(f, *gas);
            } catch (const AdmissibilityError& e) {
                throw AdmissibilityError(std::string(e.what()) + " in RK stage " +
                                         std::to_string(stage));
            }
        }
        ++stage;
        return rhs_fn(f);
    }
    void combine(Field& dst, double a, const Field& src, double b) { dst.axpy(a, b, src); }
    void add(Field& dst, double c, const std::vector<Vec5>& d) { dst.add_scaled(c, d); }
};

}  // namespace

Field ssp_rk_step(const Field& f, const std::function<std::vector<Vec5>(const Field&)>& rhs,
                  double dt, int order, const GasParams* g) {
    FieldOps ops{rhs, g};
    return ssp_rk_generic(f, ops, dt, order);
}

}  // namespace oftt
