#include "oftt/state.hpp"

#include <cmath>

namespace oftt {

bool is_admissible(const Prim& w) {
    return w.rho > 0.0 && w.pe > 0.0 && w.pi > 0.0 &&
           std::isfinite(w.rho) && std::isfinite(w.vx) && std::isfinite(w.vy) &&
           std::isfinite(w.pe) && std::isfinite(w.pi);
}

void require_admissible(const Prim& w) {
    if (!is_admissible(w))
        throw AdmissibilityError("inadmissible state: rho=" + std::to_string(w.rho) +
                                 " pe=" + std::to_string(w.pe) + " pi=" + std::to_string(w.pi));
}

double velocity_component(const Prim& w, Axis d) {
    return d == Axis::X ? w.vx : w.vy;
}

Cons prim_to_cons(const Prim& w, const GasParams& g) {
    require_admissible(w);
    const double kin = 0.5 * w.rho * (w.vx * w.vx + w.vy * w.vy);
    Cons u;
    u.rho = w.rho;
    u.mx = w.rho * w.vx;
    u.my = w.rho * w.vy;
    u.E = w.pe / (g.gamma_e - 1.0) + w.pi / (g.gamma_i - 1.0) + kin;
    u.pi = w.pi;
    return u;
}

Prim cons_to_prim_unchecked(const Cons& u, const GasParams& g) {
    Prim w;
    w.rho = u.rho;
    w.vx = u.mx / u.rho;
    w.vy = u.my / u.rho;
    const double kin = 0.5 * (u.mx * u.mx + u.my * u.my) / u.rho;
    w.pe = (g.gamma_e - 1.0) * (u.E - kin - u.pi / (g.gamma_i - 1.0));
    w.pi = u.pi;
    return w;
}

Prim cons_to_prim(const Cons& u, const GasParams& g) {
    if (!(u.rho > 0.0)) throw AdmissibilityError("nonpositive density rho=" + std::to_string(u.rho));
    const Prim w = cons_to_prim_unchecked(u, g);
    require_admissible(w);
    return w;
}

EntropyPair physical_entropy(const Prim& w, const GasParams& g) {
    const double s = std::log(w.pe / std::pow(w.rho, g.gamma_e)) / (g.gamma_e - 1.0) +
                     std::log(w.pi / std::pow(w.rho, g.gamma_i)) / (g.gamma_i - 1.0);
    return {s, -w.rho * s};
}

double entropy_flux(const Prim& w, const GasParams& g, Axis d) {
    return -w.rho * velocity_component(w, d) * physical_entropy(w, g).s;
}

Vec5 entropy_vars(const Prim& w, const GasParams& g) {
    const double be = w.rho / w.pe;
    const double bi = w.rho / w.pi;
    const double s = physical_entropy(w, g).s;
    const double v2 = w.vx * w.vx + w.vy * w.vy;
    return {g.gamma_e / (g.gamma_e - 1.0) + g.gamma_i / (g.gamma_i - 1.0) - s - 0.5 * be * v2,
            be * w.vx,
            be * w.vy,
            -be,
            (be - bi) / (g.gamma_i - 1.0)};
}

double entropy_potential(const Prim& w, Axis d) {
    return 2.0 * w.rho * velocity_component(w, d);
}

Vec5 physical_flux(const Prim& w, const GasParams& g, Axis d) {
    const double E = prim_to_cons(w, g).E;
    const double vd = velocity_component(w, d);
    Vec5 f;
    f[0] = w.rho * vd;
    f[1] = w.rho * w.vx * vd;
    f[2] = w.rho * w.vy * vd;
    if (d == Axis::X)
        f[1] += 2.0 * w.pe;
    else
        f[2] += 2.0 * w.pe;
    f[3] = (E + 2.0 * w.pe) * vd;
    f[4] = w.pi * vd;
    return f;
}

}  // namespace oftt
