#include "oftt/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace oftt {

double prim_component(const Prim& w, PrimComponent c) {
    switch (c) {
        case PrimComponent::Rho: return w.rho;
        case PrimComponent::Vx: return w.vx;
        case PrimComponent::Vy: return w.vy;
        case PrimComponent::Pe: return w.pe;
        case PrimComponent::Pi: return w.pi;
    }
    throw std::invalid_argument("prim_component: bad component");
}

double l1_error(const Field& f, const CaseSpec& spec, double t, PrimComponent c) {
    const Grid& grid = f.grid();
    double err = 0.0;
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            const Prim w = cons_to_prim(f.at(i, j), spec.gas);
            const Prim ex = exact_solution(spec, grid.x_center(i), grid.y_center(j), t);
            err += std::abs(prim_component(w, c) - prim_component(ex, c));
        }
    // Mean absolute error: cell average of |w - exact| over the domain.
    return err / (static_cast<double>(grid.nx) * grid.ny);
}

double convergence_order(double e_coarse, double e_fine) {
    return std::log2(e_coarse / e_fine);
}

double total_entropy(const Field& f, const GasParams& g) {
    const Grid& grid = f.grid();
    double total = 0.0;
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            total += physical_entropy(cons_to_prim(f.at(i, j), g), g).ent;
    return total * grid.cell_measure();
}

}  // namespace oftt
